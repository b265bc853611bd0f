#include <doctest.h>

#include "qgrass/commands.hpp"
#include "qgrass/report.hpp"

#include <filesystem>
#include <fstream>

using namespace qgrass;

TEST_SUITE("commands") {
  TEST_CASE("ranges") {
    auto a = IntRange::parse("3");
    CHECK(a.lo == 3);
    CHECK(a.hi == 3);
    auto b = IntRange::parse("2..4");
    CHECK(b.lo == 2);
    CHECK(b.hi == 4);
    CHECK_THROWS(IntRange::parse("4..2"));
    CHECK_THROWS(IntRange::parse("x"));
  }

  TEST_CASE("usage errors") {
    CheckConfig c;
    c.n = IntRange::parse("3");
    c.r = IntRange::parse("3");
    CHECK_THROWS_AS(run("borel-weil", c), UsageError);
    CHECK_THROWS_AS(run("no-such-command", CheckConfig{}), UsageError);
  }

  TEST_CASE("a passing run") {
    CheckConfig c;
    c.n = IntRange::parse("2");
    RunOutcome o = run("goodearl", c);
    CHECK(o.exit_code == 0);
    CHECK_FALSE(o.checks.empty());
    CHECK(o.report["pass"] == true);
    CHECK(o.report["schema"] == "qgrass-report/1");
  }

  TEST_CASE("reports are reproducible apart from timing") {
    CheckConfig c;
    c.n = IntRange::parse("2..3");
    c.r = IntRange::parse("1");
    c.k_max = 1;
    c.jobs = 2;
    auto a = run("borel-weil", c).report, b = run("borel-weil", c).report;
    CHECK(strip_timing(a).dump() == strip_timing(b).dump());
    for (const auto& ch : strip_timing(a)["checks"]) CHECK_FALSE(ch.contains("millis"));
  }

  TEST_CASE("atomic write") {
    auto p = std::filesystem::temp_directory_path() / "qgrass_report_test.json";
    write_atomically(p.string(), "{\"x\":1}\n");
    std::ifstream in(p);
    std::string s;
    std::getline(in, s);
    CHECK(s == "{\"x\":1}");
    CHECK_FALSE(std::filesystem::exists(p.string() + ".tmp"));
    std::filesystem::remove(p);
  }
}
