#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ccr/check.hpp"
#include "ccr/measures.hpp"

using namespace ccr;

namespace {

// Deliberately wrong: sums over every entry, diagonal included.
double coherence_with_diagonal(const DensityMatrix& rho) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i)
        for (std::size_t j = 0; j < rho.dimension(); ++j) sum += std::norm(rho(i, j));
    return sum;
}

const SuiteResult* find(const std::vector<SuiteResult>& results, const std::string& name) {
    const auto it = std::find_if(results.begin(), results.end(), [&](const SuiteResult& r) { return r.name == name; });
    return it == results.end() ? nullptr : &*it;
}

std::string report(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    print_results(out, results);
    return out.str();
}

}  // namespace

TEST_CASE("the invariant battery passes on the default seed") {
    const auto results = run_checks();
    for (const auto& r : results) {
        INFO(r.name << ": measured " << r.measured << " limit " << r.limit << " " << r.detail);
        CHECK(r.passed);
    }
    CHECK(all_passed(results));
    CHECK(results.size() >= 15);
}

TEST_CASE("the battery passes on other seeds") {
    for (std::uint64_t seed : {1ull, 42ull, 123456789ull}) {
        CAPTURE(seed);
        CHECK(all_passed(run_checks(seed)));
    }
}

TEST_CASE("a coherence measure that includes the diagonal is caught") {
    MeasureSet broken = MeasureSet::standard();
    broken.coherence = &coherence_with_diagonal;
    const auto results = run_checks(kDefaultSeed, broken);
    CHECK_FALSE(all_passed(results));
    const auto* identity = find(results, "ccr-identity");
    REQUIRE(identity != nullptr);
    CHECK_FALSE(identity->passed);
    CHECK(report(results).find("ccr-identity                FAIL") != std::string::npos);
}

TEST_CASE("reports are identical across runs") {
    CHECK(report(run_checks()) == report(run_checks()));
}

TEST_CASE("report lines") {
    const std::vector<SuiteResult> results{{"alpha", true, 0.0, 1e-12, true, ""},
                                           {"beta", false, 0.05, 0.1, false, "scenario psi"}};
    CHECK_FALSE(all_passed(results));
    const std::string text = report(results);
    CHECK(text.find("alpha                       PASS  measured 0") != std::string::npos);
    CHECK(text.find("<= 1e-12") != std::string::npos);
    CHECK(text.find(">  0.1  (scenario psi)") != std::string::npos);
}
