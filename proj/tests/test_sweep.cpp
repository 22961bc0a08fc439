#include <doctest.h>

#include <algorithm>
#include <clocale>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ccr/sweep.hpp"
#include "support.hpp"

using namespace ccr;
using ccr::test::check_near;
using ccr::test::check_throws_kind;

namespace {

constexpr double kPi = std::numbers::pi;

std::string csv(const SweepConfig& config) {
    std::ostringstream out;
    write_csv(out, run_sweep(config));
    return out.str();
}

SweepConfig grid(ScenarioId id) {
    SweepConfig c;
    c.scenario = id;
    c.theta_values = default_theta_grid();
    c.phi_values = default_phi_grid();
    return c;
}

std::string error_text(const SweepConfig& c) {
    try {
        run_sweep(c);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidConfig);
        return e.what();
    }
    FAIL("expected InvalidConfig");
    return {};
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(kPi) == "3.14159265359");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(-2.5) == "-2.5");
}

TEST_CASE("number formatting ignores the global locale") {
    const char* previous = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = previous ? previous : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8")) {
        CHECK(format_number(0.25) == "0.25");
    }
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("angle parsing") {
    check_near(parse_angle("0.25"), 0.25, 0.0);
    check_near(parse_angle("pi"), kPi, 0.0);
    check_near(parse_angle("pi/2"), kPi / 2.0, 0.0);
    check_near(parse_angle("3pi/8"), 3.0 * kPi / 8.0, 1e-16);
    check_near(parse_angle(" 3*pi/8 "), 3.0 * kPi / 8.0, 1e-16);
    check_throws_kind([] { parse_angle("two"); }, ErrorKind::InvalidConfig);
    check_throws_kind([] { parse_angle("pi/0"); }, ErrorKind::InvalidConfig);
    check_throws_kind([] { parse_angle(""); }, ErrorKind::InvalidConfig);
}

TEST_CASE("angle grids") {
    const auto list = parse_angle_grid("0, pi/4,pi/2");
    REQUIRE(list.size() == 3);
    check_near(list[1], kPi / 4.0, 0.0);

    const auto range = parse_angle_grid("0:pi/2:65");
    REQUIRE(range.size() == 65);
    CHECK(range.front() == 0.0);
    CHECK(range.back() == kPi / 2.0);
    check_near(range[32], kPi / 4.0, 1e-15);

    CHECK(parse_angle_grid("0.3:0.3:1") == std::vector<double>{0.3});
    check_throws_kind([] { parse_angle_grid("0:1"); }, ErrorKind::InvalidConfig);
    check_throws_kind([] { parse_angle_grid("0:1:0"); }, ErrorKind::InvalidConfig);
}

TEST_CASE("default grids") {
    CHECK(default_theta_grid().size() == 5);
    CHECK(default_phi_grid().size() == 65);
    CHECK(default_phi_grid().back() == kPi / 2.0);
}

TEST_CASE("config text") {
    std::istringstream in("# sweep\nscenario = xi\n\ntheta = 0, pi/2   # two angles\nphi=0:pi/2:3\n");
    const auto map = parse_config_text(in);
    CHECK(map.at("scenario") == "xi");
    CHECK(map.at("theta") == "0, pi/2");
    CHECK(map.at("phi") == "0:pi/2:3");

    std::istringstream dup("a = 1\nb = 2\na = 3\n");
    try {
        parse_config_text(dup);
        FAIL("duplicate key accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::istringstream junk("scenario xi\n");
    check_throws_kind([&] { parse_config_text(junk); }, ErrorKind::InvalidConfig);
}

TEST_CASE("building a sweep config") {
    const auto c = build_sweep_config({{"scenario", "upsilon"},
                                       {"theta", "pi/2"},
                                       {"phi", "0:pi/2:5"},
                                       {"subsystems", "1:spin, 0:momentum"},
                                       {"p_mag", "2"},
                                       {"mass", "0.5"},
                                       {"out", "x.csv"}});
    CHECK(c.scenario == ScenarioId::upsilon);
    CHECK(c.theta_values == std::vector<double>{kPi / 2.0});
    CHECK(c.phi_values.size() == 5);
    CHECK(c.subsystems == std::vector<SubsystemRef>{{1, Dof::spin}, {0, Dof::momentum}});
    CHECK(c.p_mag == 2.0);
    CHECK(c.mass == 0.5);
    CHECK(c.output_path == "x.csv");

    const auto defaults = build_sweep_config({});
    CHECK(defaults.theta_values == default_theta_grid());
    CHECK(defaults.phi_values == default_phi_grid());
    CHECK(defaults.subsystems.empty());
    CHECK(defaults.output_path == "-");
}

TEST_CASE("degrees convert only the angles given") {
    const auto c = build_sweep_config({{"theta", "90"}, {"phi", "0, 45"}, {"degrees", "true"}});
    check_near(c.theta_values[0], kPi / 2.0, 1e-15);
    check_near(c.phi_values[1], kPi / 4.0, 1e-15);
}

TEST_CASE("config errors are all reported together") {
    try {
        build_sweep_config({{"scenario", "omega"}, {"theta", "2"}, {"mass", "-1"}, {"colour", "red"}});
        FAIL("bad config accepted");
    } catch (const Error& e) {
        const std::string text = e.what();
        CHECK(e.kind() == ErrorKind::InvalidConfig);
        CHECK(text.find("omega") != std::string::npos);
        CHECK(text.find("theta") != std::string::npos);
        CHECK(text.find("mass") != std::string::npos);
        CHECK(text.find("colour") != std::string::npos);
    }
}

TEST_CASE("sweep validation") {
    auto c = grid(ScenarioId::psi);
    CHECK(validate(c).empty());
    c.theta_values.clear();
    c.phi_values = {-0.5};
    c.subsystems = {{1, Dof::spin}};
    const std::string text = error_text(c);
    CHECK(text.find("theta") != std::string::npos);
    CHECK(text.find("phi") != std::string::npos);
    CHECK(text.find("particle 1") != std::string::npos);
    CHECK(validate(c).size() == 3);
}

TEST_CASE("row count and order") {
    const auto rows = run_sweep(grid(ScenarioId::psi));
    CHECK(rows.size() == 325 * 2);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.theta, a.phi, a.particle, a.dof) < std::tie(b.theta, b.phi, b.particle, b.dof);
    }));
    const auto two = run_sweep(grid(ScenarioId::xi2));
    CHECK(two.size() == 325 * 4);
    CHECK(two[2].particle == 1);
    CHECK(two[2].dof == Dof::momentum);

    auto unsorted = grid(ScenarioId::phi);
    unsorted.theta_values = {kPi / 2.0, 0.0};
    unsorted.subsystems = {{0, Dof::spin}};
    const auto picked = run_sweep(unsorted);
    CHECK(picked.front().theta == 0.0);
    CHECK(picked.size() == 2 * 65);
}

TEST_CASE("every row satisfies the complementarity identity") {
    for (auto id : kAllScenarios) {
        const auto rows = run_sweep(grid(id));
        CHECK(max_residual(rows) < 1e-10);
        for (const auto& r : rows) CHECK(r.sum == r.predictability + r.coherence + r.entropy);
    }
}

TEST_CASE("psi curves: spin entropy rises and predictability falls for theta > 0") {
    auto c = grid(ScenarioId::psi);
    c.subsystems = {{0, Dof::spin}};
    const auto rows = run_sweep(c);
    for (std::size_t t = 1; t < 5; ++t) {
        const auto* first = &rows[t * 65];
        const auto* last = &rows[t * 65 + 64];
        CHECK(last->entropy > first->entropy);
        CHECK(last->predictability < first->predictability);
    }
    // theta = 0 leaves the spin alone
    CHECK(rows[64].entropy == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("xi curves: spin entropy falls and coherence rises for theta > 0") {
    auto c = grid(ScenarioId::xi);
    c.subsystems = {{0, Dof::spin}};
    const auto rows = run_sweep(c);
    for (std::size_t t = 1; t < 5; ++t) {
        CHECK(rows[t * 65 + 64].entropy < rows[t * 65].entropy);
        CHECK(rows[t * 65 + 64].coherence > rows[t * 65].coherence);
    }
}

TEST_CASE("CSV output") {
    auto c = grid(ScenarioId::xi);
    c.theta_values = {kPi / 2.0};
    c.phi_values = {0.0};
    c.subsystems = {{0, Dof::spin}};
    std::istringstream text(csv(c));
    std::string header, row, rest;
    std::getline(text, header);
    std::getline(text, row);
    CHECK(header == kCsvHeader);
    CHECK_FALSE(std::getline(text, rest));
    // identifying fields are exact; measures carry rounding-level noise
    CHECK(row.rfind("xi,1.57079632679,0,0,spin,", 0) == 0);
    std::vector<double> values;
    std::istringstream fields(row.substr(std::string("xi,1.57079632679,0,0,spin,").size()));
    for (std::string field; std::getline(fields, field, ',');) values.push_back(std::stod(field));
    REQUIRE(values.size() == 5);
    const double want[] = {0.0, 0.0, 0.5, 0.5, 0.0};
    for (std::size_t i = 0; i < 5; ++i) check_near(values[i], want[i], 1e-12);
}

TEST_CASE("CSV output is deterministic") {
    const auto c = grid(ScenarioId::upsilon);
    CHECK(csv(c) == csv(c));
}
