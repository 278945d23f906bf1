#include "doctest.h"

#include <string>

#include "json.hpp"
#include "unimodal/oracle.hpp"
#include "unimodal/statistics.hpp"
#include "unimodal/structure.hpp"

using namespace unimodal;
namespace oc = oracle_check;
namespace sc = split_check;

namespace {

Composition C(std::initializer_list<Int> v) { return Composition(v); }

bool only_omega_failures(const VerificationReport& rep) {
    for (const CheckResult& c : rep.checks) {
        if (c.waived || c.passed()) continue;
        if (c.name != std::string(oc::kSplitPrefix) + sc::kOmegaOrder &&
            c.name != std::string(oc::kSplitPrefix) + sc::kStrippedCover)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("partition-side statistics") {
    CHECK(spread_degree_via_partition(C({1, 0, 1})) == std::pair<Int, Int>{1, 1});
    CHECK(spread_degree_via_partition(C({2, 0, 1, 0, 0, 2})) == std::pair<Int, Int>{2, 2});
    CHECK(spread_degree_via_partition(C({2, 0, 2, 0, 1, 0})) == std::pair<Int, Int>{2, 2});
    CHECK(spread_degree_via_partition(C({0, 3})) == std::pair<Int, Int>{3, 1});
}

TEST_CASE("omega over every maximum family of pairs") {
    CHECK(omega_all_choices(C({1, 0, 1})) == std::vector<Composition>{C({1})});
    CHECK(omega_all_choices(C({2, 0, 2, 0, 1, 0})) == std::vector<Composition>{C({1, 0})});
    CHECK(omega_all_choices(C({1, 1, 1, 1})) == std::vector<Composition>{Composition(std::vector<Int>{})});
    CHECK(reference_signature(C({2, 0, 2, 0, 1, 0})) == signature(C({2, 0, 2, 0, 1, 0})));
}

TEST_CASE("reference signature over small boxes") {
    for (int n = 0; n <= 7; ++n)
        for (Int m = 0; m <= 5; ++m)
            for (const Composition& c : enumerate_A(n, m)) REQUIRE(reference_signature(c) == signature(c));
}

TEST_CASE("verify A_2(2)") {
    const VerificationReport rep = verify_instance(2, 2);
    CHECK(rep.passed());
    CHECK(rep.scope == "n=2 m=2");
    const CheckResult* census = rep.find(oc::kDegreeFormula);
    REQUIRE(census);
    CHECK(census->waived);
    CHECK(census->failures == 1);
    REQUIRE(rep.census.size() == 1);
    CHECK(rep.census[0].element == C({1, 0, 1}));
    CHECK(rep.census[0].degree == 1);
    CHECK(rep.census[0].formula_degree == 2);
    CHECK(rep.census[0].boundary);
    CHECK(census_text(rep.census) == "[1,0,1] (0,1) degree=1 formula=2 boundary=yes\n");

    OracleOptions strict;
    strict.waive_degree_formula = false;
    CHECK_FALSE(verify_instance(2, 2, strict).passed());
}

TEST_CASE("one- and two-entry instances pass") {
    for (Int m = 0; m <= 8; ++m) {
        CHECK(verify_instance(0, m).passed());
        CHECK(verify_instance(1, m).passed());
    }
}

TEST_CASE("the omega order checks are the only failures on A_3(3) and A_5(5)") {
    const VerificationReport small = verify_instance(3, 3);
    CHECK_FALSE(small.passed());
    CHECK(only_omega_failures(small));
    const CheckResult* omega = small.find(std::string(oc::kSplitPrefix) + sc::kOmegaOrder);
    REQUIRE(omega);
    REQUIRE_FALSE(omega->counterexamples.empty());
    CHECK(omega->counterexamples.front().reproduce == "unimodal-chains verify --n 3 --m 3");

    const VerificationReport big = verify_instance(5, 5);
    CHECK_FALSE(big.passed());
    CHECK(only_omega_failures(big));

    OracleOptions waive;
    waive.waive_omega_order = true;
    CHECK(verify_instance(5, 5, waive).passed());
}

TEST_CASE("counterexample lists are capped") {
    OracleOptions opts;
    opts.cap = 2;
    const VerificationReport rep = verify_instance(5, 5, opts);
    for (const CheckResult& c : rep.checks) CHECK(c.counterexamples.size() <= 2);
}

TEST_CASE("sweep pairs") {
    const auto pairs = sweep_pairs(200000, 20);
    CHECK(pairs.size() == 275);
    Int total = 0;
    for (const auto& [n, m] : pairs) total += count_A(n, m);
    CHECK(total == 4181539);
    CHECK(sweep_pairs(50000, 20).size() == 246);
    CHECK(sweep_pairs(1, 20).size() == 41);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
}

TEST_CASE("merge is associative") {
    const auto a = verify_instance(2, 2);
    const auto b = verify_instance(3, 1);
    const auto c = verify_instance(1, 4);
    VerificationReport left = a;
    left.merge(b, 10);
    left.merge(c, 10);
    VerificationReport bc = b;
    bc.merge(c, 10);
    VerificationReport right = a;
    right.merge(bc, 10);
    CHECK(left.checks == right.checks);
    CHECK(left.census == right.census);
}

TEST_CASE("sweeps are deterministic across job counts") {
    SweepOptions one;
    one.max_size = 600;
    one.max_dim = 8;
    one.jobs = 1;
    SweepOptions three = one;
    three.jobs = 3;
    const auto r1 = run_sweep(one);
    const auto r3 = run_sweep(three);
    CHECK(to_json(r1) == to_json(r3));
    CHECK(to_text(r1) == to_text(r3));
    CHECK(r1.census == r3.census);
}

TEST_CASE("report formats") {
    const VerificationReport rep = verify_instance(2, 2);
    const auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["scope"] == "n=2 m=2");
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == rep.checks.size());
    CHECK(j["census"].size() == 1);
    CHECK_FALSE(j.contains("seconds"));
    CHECK(nlohmann::json::parse(to_json(rep, true)).contains("seconds"));

    const std::string text = to_text(rep);
    CHECK(text.rfind("scope: n=2 m=2\n", 0) == 0);
    CHECK(text.find("WAIVED statistics.degree_formula") != std::string::npos);
    CHECK(text.ends_with("result: PASS\n"));
    CHECK(text.find("time:") == std::string::npos);
}
