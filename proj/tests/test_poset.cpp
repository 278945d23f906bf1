#include "doctest.h"

#include <set>

#include "unimodal/error.hpp"
#include "unimodal/poset.hpp"

using namespace unimodal;

namespace {

Composition C(std::initializer_list<Int> v) { return Composition(v); }

std::vector<Partition> all_partitions(Int parts, Int bound) {
    std::vector<Partition> out;
    for (const Composition& c : Compositions(static_cast<int>(parts), bound)) out.push_back(psi_inv(c));
    return out;
}

} // namespace

TEST_CASE("phi and phi_inv on fixed values") {
    CHECK(phi(Partition({0, 1, 1, 3}, 3)) == C({1, 2, 0, 1}));
    CHECK(phi(Partition({}, 2)) == C({0, 0, 0}));
    CHECK(phi(Partition({2, 2}, 2)) == C({0, 0, 2}));
    CHECK(phi_inv(C({1, 2, 0, 1})) == Partition({0, 1, 1, 3}, 3));
    CHECK(phi_inv(C({4})) == Partition({0, 0, 0, 0}, 0));
    CHECK(phi_inv(C({0, 0, 2})) == Partition({2, 2}, 2));
}

TEST_CASE("gamma and psi on fixed values") {
    CHECK(gamma(Partition({0, 1, 1, 3}, 3)) == Partition({1, 1, 3}, 4));
    CHECK(gamma(Partition({}, 3)) == Partition({0, 0, 0}, 0));
    CHECK(gamma(Partition({2, 2}, 2)) == Partition({2, 2}, 2));
    CHECK(psi(Partition({1, 1, 3}, 4)) == C({1, 2, 0, 1}));
    CHECK(psi(Partition({0, 0, 0}, 5)) == C({5, 0, 0, 0}));
    CHECK(psi(Partition({1, 1}, 2)) == C({1, 0, 1}));
}

TEST_CASE("tau rank weight") {
    CHECK(tau(C({2, 0, 1, 0, 0, 2})) == C({2, 0, 0, 1, 0, 2}));
    CHECK(tau(C({3, 0, 0})) == C({0, 0, 3}));
    CHECK(tau(C({1, 0, 1})) == C({1, 0, 1}));
    CHECK(rank(C({2, 0, 0})) == 0);
    CHECK(rank(C({0, 0, 2})) == 4);
    CHECK(rank(C({1, 2, 0, 1})) == 5);
    CHECK(weight(C({2, 0, 0})) == 4);
    CHECK(weight(C({0, 2, 0})) == 0);
    CHECK(weight(C({0, 0, 2})) == -4);
}

TEST_CASE("order and covers") {
    CHECK(leq(C({2, 0, 0}), C({0, 0, 2})));
    CHECK(leq(C({1, 0, 1}), C({1, 0, 1})));
    CHECK_FALSE(leq(C({1, 0, 1}), C({0, 2, 0})));
    CHECK_FALSE(leq(C({0, 2, 0}), C({1, 0, 1})));
    CHECK(covers(C({2, 0, 0}), C({1, 1, 0})) == 1);
    CHECK(covers(C({0, 2, 0}), C({0, 1, 1})) == 2);
    CHECK_FALSE(covers(C({2, 0, 0}), C({0, 2, 0})).has_value());
    CHECK_THROWS_AS(leq(C({1, 0}), C({1, 0, 0})), InvalidArgument);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_A(2, 2).size() == 6);
    CHECK(enumerate_A(0, 5) == std::vector<Composition>{C({5})});
    CHECK(enumerate_A(-1, 0) == std::vector<Composition>{Composition()});
    CHECK(enumerate_A(2, 1) == std::vector<Composition>{C({0, 0, 1}), C({0, 1, 0}), C({1, 0, 0})});
    CHECK(count_A(10, 10) == 184756);
    CHECK_THROWS_AS(check_box(1 << 16, Int{1} << 16), ResourceLimit);
    CHECK_THROWS_AS(Composition({1, -1}), InvalidArgument);
}

TEST_CASE("parsing") {
    CHECK(parse_composition("[2,0,1]") == C({2, 0, 1}));
    CHECK(parse_composition(" 2, 0 ,1 ") == C({2, 0, 1}));
    CHECK(parse_composition("[]") == Composition());
    CHECK_THROWS_AS(parse_composition("[2,x]"), InvalidArgument);
    CHECK(to_string(C({1, 0, 1})) == "[1,0,1]");
    CHECK(to_string(Partition({1, 1}, 2)) == "(1,1)");
}

TEST_CASE("bijections, isomorphism and the commutative diagram") {
    for (int n = 0; n <= 5; ++n) {
        for (Int m = 0; m <= 5; ++m) {
            const auto elems = enumerate_A(n, m);
            CHECK(static_cast<Int>(elems.size()) == count_A(n, m));
            CHECK(std::set<Composition>(elems.begin(), elems.end()).size() == elems.size());
            for (const Composition& x : elems) {
                const Partition p = phi_inv(x);
                CHECK(phi(p) == x);
                CHECK(rank(x) == p.sum());
                CHECK(psi(psi_inv(x)) == x);
                CHECK(tau(tau(x)) == x);
                CHECK(weight(tau(x)) == -weight(x));
                for (const Composition& y : elems) {
                    const bool le = leq(x, y);
                    CHECK(le == leq(p, phi_inv(y)));
                    CHECK(le == leq(tau(y), tau(x)));
                    const bool cov = covers(x, y).has_value();
                    CHECK(cov == (le && rank(y) == rank(x) + 1));
                }
                for (const CoverEdge& e : upper_covers(x)) CHECK(covers(x, e.upper) == e.color);
            }
            for (const Partition& lam : all_partitions(n, m)) CHECK(psi(lam) == phi(gamma(lam)));
        }
    }
}
