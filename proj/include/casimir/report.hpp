#pragma once

// Tabular output of energies and ratios: CSV or JSON, one record per point.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/ratios.hpp"

namespace casimir::report {

enum class Format { Csv, Json };

// Empty optionals print as NA (CSV) or null (JSON).
struct Row {
  std::string geometry;
  std::optional<double> eps0;
  std::optional<double> e_rel;
  std::optional<double> l_over_r;
  std::string method;
  std::optional<double> L;
  std::optional<double> value;
  std::optional<double> ratio;
  std::optional<double> quad_error;
  bool converged = true;

  bool operator==(const Row&) const = default;
};

inline constexpr const char* kCsvHeader =
    "geometry,eps0,e_rel,l_over_r,method,L,value,ratio,quad_error,converged";

Row from_ratio_point(const ratios::RatioPoint& p, const std::string& method);

// 12 significant digits; non-finite values print as inf, -inf or nan.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<Row>& rows);
void write_json(std::ostream& os, const std::vector<Row>& rows);
std::vector<Row> parse_json(const std::string& text);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to `dest`, or to `out` when dest is empty. An empty row set still
// produces the header (CSV) or [] (JSON) and a warning on `warn`.
void emit(const std::vector<Row>& rows, Format format,
          const std::optional<std::filesystem::path>& dest, std::ostream& out,
          std::ostream& warn);

}  // namespace casimir::report
