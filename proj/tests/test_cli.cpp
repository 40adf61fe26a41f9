#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using entpot::cli::run;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

entpot::cli::Table parse(const std::string& csv) {
  std::istringstream in(csv);
  return entpot::cli::read_csv(in);
}

double cell(const entpot::cli::Table& t, std::size_t row, const std::string& column) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == column) return std::stod(std::get<std::string>(t.rows.at(row).at(i)));
  FAIL("missing column " << column);
  return 0.0;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("cell formatting") {
  using entpot::cli::format_cell;
  CHECK(format_cell(0.1 + 0.2) == "0.3");
  CHECK(format_cell(1.0 / 3.0) == "0.333333333333");
  CHECK(format_cell(true) == "true");
  CHECK(format_cell(false) == "false");
  CHECK(format_cell(42LL) == "42");
  CHECK(format_cell(std::string("pdc")) == "pdc");
}

TEST_CASE("measures examples") {
  auto r = invoke({"measures", "--family", "horodecki", "--p", "0.5", "--no-timestamp"});
  REQUIRE(r.code == 0);
  auto t = parse(r.out);
  CHECK(cell(t, 0, "negativity") == doctest::Approx(0.20711).epsilon(1e-4));
  CHECK(cell(t, 0, "ree") == doctest::Approx(0.12256).epsilon(1e-4));

  r = invoke({"measures", "--family", "bell", "--lambda", "1,0,0,0", "--no-timestamp"});
  REQUIRE(r.code == 0);
  t = parse(r.out);
  for (const char* c : {"negativity", "concurrence", "eof", "ree"}) CHECK(cell(t, 0, c) == doctest::Approx(1.0));

  r = invoke({"measures", "--family", "werner", "--n", "0.5", "--no-timestamp"});
  REQUIRE(r.code == 0);
  t = parse(r.out);
  CHECK(cell(t, 0, "negativity") == doctest::Approx(0.5));
  CHECK(cell(t, 0, "ree") == doctest::Approx(0.18872).epsilon(1e-4));
}

TEST_CASE("potentials examples") {
  auto r = invoke({"potentials", "--p", "0.5", "--x", "0.5", "--no-timestamp"});
  REQUIRE(r.code == 0);
  auto t = parse(r.out);
  CHECK(cell(t, 0, "np") == doctest::Approx(0.5));
  CHECK(cell(t, 0, "cp") == doctest::Approx(0.5));
  CHECK(cell(t, 0, "reep") == doctest::Approx(0.35459).epsilon(1e-4));

  const auto a = invoke({"potentials", "--p", "0.5", "--x", "0", "--no-timestamp"});
  const auto b = invoke({"potentials", "--p", "0.5", "--x", "0", "--theta-deg", "90", "--no-timestamp"});
  CHECK(parse(a.out).rows == parse(b.out).rows);

  r = invoke({"potentials", "--p", "1", "--x", "0", "--pdc", "0.36,0", "--no-timestamp"});
  REQUIRE(r.code == 0);
  CHECK(cell(parse(r.out), 0, "np") == doctest::Approx(0.8));
}

TEST_CASE("curve output") {
  const auto r = invoke({"curve", "--kind", "pure", "--plane", "ree-n", "--n", "101", "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto t = parse(r.out);
  CHECK(t.columns == std::vector<std::string>{"abscissa", "ordinate", "param1", "param2"});
  REQUIRE(t.rows.size() == 101);
  CHECK(cell(t, 0, "abscissa") == 0.0);
  CHECK(cell(t, 0, "ordinate") == 0.0);
  CHECK(cell(t, 100, "abscissa") == 1.0);
  CHECK(cell(t, 100, "ordinate") == 1.0);

  const auto bad = invoke({"curve", "--kind", "rho_Z", "--plane", "n-c", "--n", "5"});
  CHECK(bad.code == 2);
}

TEST_CASE("channel output") {
  auto r = invoke({"channel", "--q", "0.5", "--pdc", "0.36,0", "--no-timestamp"});
  REQUIRE(r.code == 0);
  auto t = parse(r.out);
  CHECK(cell(t, 0, "n_out") == doctest::Approx(0.8));
  CHECK(cell(t, 0, "closed_form_deviation") <= 1e-12);

  r = invoke({"channel", "--q", "0.5", "--adc", "0.2,0.2", "--no-timestamp"});
  REQUIRE(r.code == 0);
  t = parse(r.out);
  CHECK(cell(t, 0, "closed_form_deviation") <= 1e-12);

  CHECK(invoke({"channel", "--q", "0.5"}).code == 2);
  CHECK(invoke({"channel", "--q", "0.5", "--pdc", "0.1,0.1", "--adc", "0.1,0.1"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"measures", "--family", "nonsense"}).code == 2);
  CHECK(invoke({"measures", "--family", "horodecki", "--p", "abc"}).code == 2);
  CHECK(invoke({"potentials", "--p", "0.5", "--x", "0.9"}).code == 2);
  CHECK(invoke({"measures", "--family", "bell", "--lambda", "1,0,0"}).code == 2);
  CHECK(invoke({"potentials", "--p", "0.5", "--format", "xml"}).code == 2);
}

TEST_CASE("output is byte-identical without a timestamp") {
  const std::vector<std::string> args{"scan", "--n", "20", "--seed", "5", "--no-containment", "--no-timestamp",
                                      "--format", "json"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("JSON envelope") {
  const auto r = invoke({"special-points", "--format", "json", "--no-timestamp", "--tol", "1e-2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == "1.0");
  CHECK(j.at("command") == "special-points");
  CHECK(j.at("produced_at").is_null());
  CHECK(j.at("parameters").at("tol") == "1e-2");
  CHECK(j.at("payload").at("columns").size() == 6);
  CHECK(j.at("payload").at("rows").size() == 1);

  const auto stamped = invoke({"potentials", "--p", "0.3", "--format", "json"});
  const auto s = nlohmann::json::parse(stamped.out);
  const std::string when = s.at("produced_at");
  CHECK(when.size() == 20);
  CHECK(when.back() == 'Z');
}

TEST_CASE("CSV round trips through the schema") {
  const auto r = invoke({"scan", "--n", "30", "--seed", "11", "--envelope-samples", "21", "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto t = parse(r.out);
  CHECK(t.columns == std::vector<std::string>{"p", "x_abs", "phi", "np", "cp", "reep", "converged"});
  CHECK(t.rows.size() == 30);
  std::ostringstream again;
  entpot::cli::write_csv(again, t);
  CHECK(again.str() == r.out);
  CHECK(r.err.find("ree-n: 0 violations") != std::string::npos);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_output.csv";
  const auto r = invoke({"special-points", "--tol", "1e-2", "--out", path, "--no-timestamp"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto t = entpot::cli::read_csv(in);
  CHECK(t.columns == std::vector<std::string>{"n1", "e1", "n2", "e2", "n3", "e3"});
  std::remove(path.c_str());
}

}  // TEST_SUITE
