#include "glinfo/cli/output_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace glinfo::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string to_chars_string(double v, std::chars_format fmt, int precision) {
  char buf[64];
  auto res = precision < 0 ? std::to_chars(buf, buf + sizeof buf, v, fmt)
                           : std::to_chars(buf, buf + sizeof buf, v, fmt, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "tsv") return TableFormat::Tsv;
  if (name == "pretty") return TableFormat::Pretty;
  throw std::invalid_argument("unknown format '" + name + "' (csv, tsv, pretty)");
}

std::string format_scientific(double v) {
  if (std::isnan(v)) return "nan";
  return to_chars_string(v, std::chars_format::scientific, 5);
}

std::string format_fixed(double v, int decimals) {
  if (std::isnan(v)) return "nan";
  std::string s = to_chars_string(v, std::chars_format::fixed, decimals);
  // "-0.000" -> "0.000"
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_shortest(double v) {
  return to_chars_string(v, std::chars_format::general, -1);
}

OutputTable::OutputTable(std::vector<std::string> headers)
    : headers_(std::move(headers)), scales_(headers_.size()) {}

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != headers_.size()) {
    throw std::invalid_argument("OutputTable: row has " + std::to_string(row.size()) +
                                " cells, expected " + std::to_string(headers_.size()));
  }
  rows_.push_back(std::move(row));
}

void OutputTable::set_pretty_scale(std::size_t column, int exponent, int decimals) {
  scales_.at(column) = {exponent, decimals};
}

std::string OutputTable::render(TableFormat format) const {
  switch (format) {
    case TableFormat::Csv:
      return render_delimited(',');
    case TableFormat::Tsv:
      return render_delimited('\t');
    case TableFormat::Pretty:
      return render_pretty();
  }
  return {};
}

std::string OutputTable::render_delimited(char sep) const {
  std::string out;
  for (std::size_t c = 0; c < headers_.size(); ++c) {
    if (c) out += sep;
    out += headers_[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += sep;
      out += std::visit(Overloaded{[](const std::string& s) { return s; },
                                   [](double d) { return format_scientific(d); },
                                   [](std::int64_t i) { return std::to_string(i); }},
                        row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string OutputTable::render_pretty() const {
  std::vector<std::string> head = headers_;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < headers_.size(); ++c) {
    if (scales_[c].exponent != 0) {
      head[c] += " (x1e" + std::to_string(scales_[c].exponent) + ")";
    }
  }
  for (const auto& row : rows_) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& sc = scales_[c];
      line.push_back(std::visit(
          Overloaded{[](const std::string& s) { return s; },
                     [&](double d) {
                       if (sc.decimals < 0 && sc.exponent == 0) {
                         const double a = std::abs(d);
                         if (a != 0.0 && (a < 1e-3 || a >= 1e6)) return format_scientific(d);
                         return format_fixed(d, 4);
                       }
                       return format_fixed(d / std::pow(10.0, sc.exponent),
                                           sc.decimals < 0 ? 4 : sc.decimals);
                     },
                     [](std::int64_t i) { return std::to_string(i); }},
          row[c]));
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out += "  ";
      out += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    out += '\n';
  };
  emit(head);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
  for (const auto& line : cells) emit(line);
  return out;
}

}  // namespace glinfo::cli
