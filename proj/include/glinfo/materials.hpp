#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace glinfo {

struct Material {
  std::string name;
  int Z = 0;
  double xi0 = 0.0;  // nm
  double Tc = 0.0;   // K

  friend bool operator==(const Material&, const Material&) = default;
};

using Catalog = std::vector<Material>;

/// The seven elemental superconductors, ordered by Z.
const Catalog& builtin_materials();

/// Parses `name,Z,xi0_nm,Tc_K` lines. Blank lines and lines starting with '#'
/// are skipped; a first record whose Z field is not numeric is a header.
/// `source` is used in error messages. Throws MaterialsError.
Catalog parse_materials(std::istream& in, std::string_view source = "<input>");
Catalog load_materials(const std::filesystem::path& path);

/// Writes a catalog in the same format (with header), round-trippable.
void write_materials(std::ostream& out, const Catalog& catalog);

/// Case-insensitive exact name match. Throws NotFoundError listing names.
const Material& lookup(const Catalog& catalog, std::string_view name);

}  // namespace glinfo
