#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "casimir/report.hpp"

using namespace casimir::report;

namespace {

Row sample() {
  Row r;
  r.geometry = "plate-plate";
  r.eps0 = 11.87;
  r.method = "pws-long-range";
  r.L = 1.0;
  r.value = -0.0123456789012345;
  r.ratio = 1.6;
  r.quad_error = 3e-11;
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("csv layout") {
  std::ostringstream os;
  write_csv(os, {sample()});
  CHECK(lines(os.str()) == 2);
  CHECK(os.str().rfind(kCsvHeader, 0) == 0);
  CHECK(os.str().find("plate-plate,11.87,NA,NA,pws-long-range,1,-0.0123456789012,1.6,3e-11,true") !=
        std::string::npos);
}

TEST_CASE("json round trip") {
  Row a = sample();
  Row b = sample();
  b.geometry = "atom-slab";
  b.e_rel = 0.5;
  b.ratio.reset();
  b.converged = false;
  std::ostringstream os;
  write_json(os, {a, b});
  const auto back = parse_json(os.str());
  REQUIRE(back.size() == 2);
  a.value = std::stod(format_number(*a.value));
  b.value = a.value;
  CHECK(back[0] == a);
  CHECK(back[1] == b);

  Row pm = sample();
  pm.eps0 = INFINITY;
  std::ostringstream os2;
  write_json(os2, {pm});
  CHECK_FALSE(parse_json(os2.str())[0].eps0.has_value());
}

TEST_CASE("emit") {
  std::ostringstream out, warn;
  emit({}, Format::Csv, std::nullopt, out, warn);
  CHECK(lines(out.str()) == 1);
  CHECK(warn.str().find("warning") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "casimir_report_test.csv";
  std::ostringstream o2, w2;
  emit({sample()}, Format::Csv, path, o2, w2);
  CHECK(o2.str().empty());
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(emit({sample()}, Format::Csv, std::filesystem::path("/nonexistent/dir/x.csv"),
                       o2, w2),
                  IoError);
}
