#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace glinfo::cli {

enum class TableFormat { Csv, Tsv, Pretty };

TableFormat parse_format(const std::string& name);

using Cell = std::variant<std::string, double, std::int64_t>;

/// Rectangular result table. Numbers are rendered locale-independently:
/// csv/tsv use 6 significant digits in scientific notation; pretty divides
/// scaled columns by 10^k and labels the header "(x1e-k)".
class OutputTable {
 public:
  OutputTable() = default;
  explicit OutputTable(std::vector<std::string> headers);

  /// Throws std::invalid_argument unless the row has one cell per header.
  void add_row(std::vector<Cell> row);

  /// Pretty-format column scaling: value / 10^exponent with `decimals` digits.
  void set_pretty_scale(std::size_t column, int exponent, int decimals = 3);

  const std::vector<std::string>& headers() const { return headers_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  std::string render(TableFormat format) const;

 private:
  struct PrettyScale {
    int exponent = 0;
    int decimals = -1;  // -1: automatic
  };
  std::string render_delimited(char sep) const;
  std::string render_pretty() const;

  std::vector<std::string> headers_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<PrettyScale> scales_;
};

/// Scientific notation with 6 significant digits ("1.23456e-05").
std::string format_scientific(double v);
/// Fixed notation with the given number of decimals.
std::string format_fixed(double v, int decimals);
/// Shortest round-trip representation ("0.95").
std::string format_shortest(double v);

}  // namespace glinfo::cli
