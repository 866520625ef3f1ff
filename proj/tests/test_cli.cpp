#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "casimir/cli.hpp"
#include "casimir/report.hpp"

using casimir::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("energy") {
  const auto r = call({"energy", "--geometry", "atom-plate", "--L", "1", "--eps", "11.87",
                       "--method", "exact", "--ratio"});
  CHECK(r.code == casimir::cli::kOk);
  CHECK(lines(r.out) == 2);
  CHECK(r.out.find("atom-plate,11.87,NA,NA,exact,1,") != std::string::npos);
  CHECK(r.out.find("1.31939019") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({"energy", "--geometry", "donut", "--L", "1", "--eps", "2"}).code ==
        casimir::cli::kUsage);
  CHECK(call({"energy", "--geometry", "atom-plate", "--eps", "2"}).code == casimir::cli::kUsage);
  CHECK(call({"energy", "--geometry", "atom-plate", "--L", "-1", "--eps", "2"}).code ==
        casimir::cli::kUsage);
  CHECK(call({"sweep-eps", "--geometry", "plate-plate", "--eps-min", "10", "--eps-max", "5"}).code ==
        casimir::cli::kUsage);
  CHECK(call({}).code == casimir::cli::kUsage);
}

TEST_CASE("unwritable output is an I/O error") {
  CHECK(call({"energy", "--geometry", "plate-plate", "--L", "1", "--eps", "2", "--out",
              "/nonexistent/dir/out.csv"})
            .code == casimir::cli::kNumerical);
}

TEST_CASE("empty sweep writes only the header") {
  const auto r = call({"sweep-eps", "--geometry", "plate-plate", "--ratio", "--points", "0"});
  CHECK(r.code == casimir::cli::kOk);
  CHECK(r.out == std::string(casimir::report::kCsvHeader) + "\n");
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("single-point sweep") {
  const auto r = call({"sweep-eps", "--geometry", "atom-plate", "--ratio", "--points", "1",
                       "--eps-min", "11.87", "--eps-max", "20"});
  CHECK(r.code == casimir::cli::kOk);
  CHECK(lines(r.out) == 2);
}

TEST_CASE("plate-plate sweep crosses one between 901 and 966") {
  const auto r = call({"sweep-eps", "--geometry", "plate-plate", "--ratio", "--points", "2",
                       "--eps-min", "901", "--eps-max", "966", "--format", "json"});
  REQUIRE(r.code == casimir::cli::kOk);
  const auto rows = casimir::report::parse_json(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(*rows[0].ratio > 1.0);
  CHECK(*rows[1].ratio < 1.0);
  CHECK(rows[0].method == "pws-long-range");
}

TEST_CASE("find-max") {
  const auto r = call({"find-max", "--geometry", "plate-plate", "--format", "json"});
  REQUIRE(r.code == casimir::cli::kOk);
  const auto rows = casimir::report::parse_json(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(*rows[0].eps0 == doctest::Approx(9.4635).epsilon(1e-3));
  CHECK(*rows[0].ratio == doctest::Approx(1.61375).epsilon(1e-5));
}

TEST_CASE("unit conversion") {
  const auto reduced = call({"energy", "--geometry", "plate-plate", "--L", "1", "--eps", "2",
                             "--format", "json"});
  const auto si = call({"energy", "--geometry", "plate-plate", "--L", "1", "--eps", "2",
                        "--unit-length", "1e-6", "--format", "json"});
  const double a = *casimir::report::parse_json(reduced.out)[0].value;
  const double b = *casimir::report::parse_json(si.out)[0].value;
  CHECK(b == doctest::Approx(a * casimir::cli::kHbarC / 1e-18).epsilon(1e-10));
  CHECK(*casimir::report::parse_json(si.out)[0].L == doctest::Approx(1e-6));
}

TEST_CASE("validate exit code follows the checks") {
  CHECK(call({"validate", "--only", "2", "3"}).code == casimir::cli::kOk);
  const auto one = call({"validate", "--only", "1"});
  CHECK(one.out.find("[FAIL] 1") != std::string::npos);
  CHECK(one.code == casimir::cli::kValidationFailed);
}
