#include "glinfo/materials.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "glinfo/errors.hpp"

namespace glinfo {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool iequal(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": " << what;
  throw MaterialsError(msg.str());
}

}  // namespace

const Catalog& builtin_materials() {
  static const Catalog catalog = {
      {"Al", 13, 1600.0, 1.175}, {"Nb", 41, 38.0, 9.25}, {"In", 49, 360.0, 3.41},
      {"Sn", 50, 230.0, 3.72},   {"Ga", 64, 760.0, 1.083}, {"Ta", 73, 93.0, 4.47},
      {"Pb", 82, 83.0, 7.2},
  };
  return catalog;
}

Catalog parse_materials(std::istream& in, std::string_view source) {
  Catalog catalog;
  std::string raw;
  int line_no = 0;
  bool first_record = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line);
    if (fields.size() != 4) {
      fail(source, line_no,
           "expected 4 fields name,Z,xi0_nm,Tc_K, got " + std::to_string(fields.size()));
    }
    Material m;
    m.name = std::string(fields[0]);
    double z_value = 0.0;
    if (!parse_number(fields[1], z_value)) {
      if (first_record) {
        first_record = false;
        continue;  // header
      }
      fail(source, line_no, "Z is not a number: '" + std::string(fields[1]) + "'");
    }
    first_record = false;
    if (z_value != std::floor(z_value)) {
      fail(source, line_no, "Z must be an integer");
    }
    if (!parse_number(fields[2], m.xi0)) {
      fail(source, line_no, "xi0 is not a number: '" + std::string(fields[2]) + "'");
    }
    if (!parse_number(fields[3], m.Tc)) {
      fail(source, line_no, "Tc is not a number: '" + std::string(fields[3]) + "'");
    }
    if (m.name.empty()) fail(source, line_no, "invalid name: empty");
    if (z_value < 1.0) fail(source, line_no, "invalid Z: must be >= 1");
    m.Z = static_cast<int>(z_value);
    if (!(m.xi0 > 0.0)) fail(source, line_no, "invalid xi0: must be > 0");
    if (!(m.Tc > 0.0)) fail(source, line_no, "invalid Tc: must be > 0");
    for (const auto& other : catalog) {
      if (iequal(other.name, m.name)) {
        fail(source, line_no, "duplicate material name '" + m.name + "'");
      }
    }
    catalog.push_back(std::move(m));
  }
  return catalog;
}

Catalog load_materials(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MaterialsError("cannot open materials file " + path.string());
  return parse_materials(in, path.string());
}

void write_materials(std::ostream& out, const Catalog& catalog) {
  out << "name,Z,xi0_nm,Tc_K\n";
  for (const auto& m : catalog) {
    char xi_buf[32];
    char tc_buf[32];
    // Shortest representation round-trips exactly.
    auto xi_end = std::to_chars(xi_buf, xi_buf + sizeof xi_buf, m.xi0).ptr;
    auto tc_end = std::to_chars(tc_buf, tc_buf + sizeof tc_buf, m.Tc).ptr;
    out << m.name << ',' << m.Z << ',' << std::string_view(xi_buf, xi_end - xi_buf)
        << ',' << std::string_view(tc_buf, tc_end - tc_buf) << '\n';
  }
}

const Material& lookup(const Catalog& catalog, std::string_view name) {
  for (const auto& m : catalog) {
    if (iequal(m.name, name)) return m;
  }
  std::string names;
  for (const auto& m : catalog) {
    if (!names.empty()) names += ", ";
    names += m.name;
  }
  throw NotFoundError("unknown material '" + std::string(name) +
                      "'; available: " + names);
}

}  // namespace glinfo
