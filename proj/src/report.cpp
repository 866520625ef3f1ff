#include "casimir/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace casimir::report {

namespace {

using nlohmann::ordered_json;

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : "NA"; }

// Rounded to the printed precision; JSON has no inf or nan, so those become null.
ordered_json json_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return std::stod(format_number(*v));
}

std::optional<double> read_number(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

Row from_ratio_point(const ratios::RatioPoint& p, const std::string& method) {
  Row r;
  r.geometry = p.geometry;
  r.eps0 = p.eps0;
  r.e_rel = p.e_rel;
  r.l_over_r = p.l_over_r;
  r.method = method;
  r.L = p.L;
  r.value = p.pws_value;
  r.ratio = p.ratio;
  r.quad_error = p.quad_error;
  r.converged = p.converged;
  return r;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << kCsvHeader << '\n';
  for (const Row& r : rows) {
    os << r.geometry << ',' << cell(r.eps0) << ',' << cell(r.e_rel) << ',' << cell(r.l_over_r)
       << ',' << r.method << ',' << cell(r.L) << ',' << cell(r.value) << ',' << cell(r.ratio)
       << ',' << cell(r.quad_error) << ',' << (r.converged ? "true" : "false") << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<Row>& rows) {
  ordered_json arr = ordered_json::array();
  for (const Row& r : rows) {
    ordered_json j;
    j["geometry"] = r.geometry;
    j["eps0"] = json_number(r.eps0);
    j["e_rel"] = json_number(r.e_rel);
    j["l_over_r"] = json_number(r.l_over_r);
    j["method"] = r.method;
    j["L"] = json_number(r.L);
    j["value"] = json_number(r.value);
    j["ratio"] = json_number(r.ratio);
    j["quad_error"] = json_number(r.quad_error);
    j["converged"] = r.converged;
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

std::vector<Row> parse_json(const std::string& text) {
  const auto arr = ordered_json::parse(text);
  std::vector<Row> rows;
  for (const auto& j : arr) {
    Row r;
    r.geometry = j.at("geometry").get<std::string>();
    r.eps0 = read_number(j, "eps0");
    r.e_rel = read_number(j, "e_rel");
    r.l_over_r = read_number(j, "l_over_r");
    r.method = j.at("method").get<std::string>();
    r.L = read_number(j, "L");
    r.value = read_number(j, "value");
    r.ratio = read_number(j, "ratio");
    r.quad_error = read_number(j, "quad_error");
    r.converged = j.at("converged").get<bool>();
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit(const std::vector<Row>& rows, Format format,
          const std::optional<std::filesystem::path>& dest, std::ostream& out,
          std::ostream& warn) {
  if (rows.empty()) warn << "warning: no results to write\n";
  auto write = [&](std::ostream& os) {
    if (format == Format::Csv)
      write_csv(os, rows);
    else
      write_json(os, rows);
  };
  if (!dest) {
    write(out);
    return;
  }
  std::ofstream file(*dest, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + dest->string() + " for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("write to " + dest->string() + " failed");
}

}  // namespace casimir::report
