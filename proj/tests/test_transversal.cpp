#include "doctest.h"

#include <set>

#include "unimodal/error.hpp"
#include "unimodal/statistics.hpp"
#include "unimodal/transversal.hpp"

using namespace unimodal;

namespace {

Composition C(std::initializer_list<Int> v) { return Composition(v); }

} // namespace

TEST_CASE("initial and terminal") {
    CHECK(is_initial(C({2, 0, 1, 0, 0, 2})));
    CHECK(is_terminal(C({2, 0, 1, 0, 0, 2})));
    CHECK(is_initial(C({2, 0, 0})));
    CHECK_FALSE(is_terminal(C({2, 0, 0})));
    CHECK_FALSE(is_initial(C({0, 1, 1})));
    CHECK_FALSE(is_terminal(C({0, 1, 1})));
}

TEST_CASE("raising and lowering runs") {
    CHECK(raise_run(C({0, 1, 1}), 1) ==
          std::vector<Composition>{C({0, 1, 1}), C({0, 2, 0}), C({1, 1, 0}), C({2, 0, 0})});
    CHECK(raise_run(C({2, 0, 0}), 0) == std::vector<Composition>{C({2, 0, 0})});
    CHECK(raise_run(C({1, 0, 1}), 0) == std::vector<Composition>{C({1, 0, 1})});
    CHECK(lower_run(C({2, 0, 0}), 0) == std::vector<Composition>{C({2, 0, 0}), C({1, 1, 0}), C({0, 2, 0}),
                                                                   C({0, 1, 1}), C({0, 0, 2})});
    CHECK(lower_run(C({0, 0, 2}), 1) == std::vector<Composition>{C({0, 0, 2})});
    CHECK(lower_run(C({2, 0, 1, 0, 0, 2}), 4) == std::vector<Composition>{C({2, 0, 1, 0, 0, 2})});
    CHECK_THROWS_AS(raise_run(C({0, 1, 1}), 0), InvalidArgument);
    CHECK(raise_step(C({0, 1, 1}), 1) == C({0, 2, 0}));
    CHECK_FALSE(raise_step(C({2, 0, 0}), 0).has_value());
    CHECK(lower_by(C({2, 0, 0}), 0, 3) == C({0, 1, 1}));
    CHECK_THROWS_AS(lower_by(C({2, 0, 0}), 0, 5), InvalidArgument);
}

TEST_CASE("transversal chains") {
    const Chain t = transversal_chain(C({2, 0, 0}), 0);
    CHECK(t.top == C({2, 0, 0}));
    CHECK(t.colors == std::vector<int>{1, 1, 2, 2});
    CHECK(t.bottom() == C({0, 0, 2}));
    CHECK(transversal_chain(C({0, 2, 0}), 0) == t);
    CHECK(transversal_chain(C({0, 2, 0}), 1) == t);
    CHECK(transversal_chain(C({1, 0, 1}), 0).length() == 0);
    CHECK(chains_through(C({2, 0, 1, 0, 0, 2})).size() == 2);
    CHECK(chains_through(C({0, 2, 0})).size() == 1);
    CHECK(chains_through(C({2, 0, 2, 0, 1, 0})).size() == 1);
    CHECK(transversal_length(C({0, 1, 1}), 1) == 4);
}

TEST_CASE("closed-form colors and endpoints") {
    CHECK(color_sequence_closed_form(C({2, 0, 0})) == std::vector<int>{1, 1, 2, 2});
    CHECK(color_sequence_closed_form(C({1, 0, 1})).empty());
    CHECK(terminal_of_initial(C({2, 0, 0})) == C({0, 0, 2}));
    CHECK(terminal_of_initial(C({3, 0, 1, 2})) == C({1, 2, 0, 3}));
    CHECK_THROWS_AS(color_sequence_closed_form(C({0, 1, 1})), InvalidArgument);
}

TEST_CASE("chain_from_elements") {
    const Chain t = transversal_chain(C({2, 0, 0}), 0);
    CHECK(chain_from_elements(t.elements()) == t);
    CHECK_THROWS_AS(chain_from_elements({C({2, 0, 0}), C({0, 2, 0})}), InvalidArgument);
}

TEST_CASE("chain properties over small A_n(m)") {
    for (int n = 1; n <= 7; ++n) {
        for (Int m = 0; m <= 6; ++m) {
            for (const Composition& a : Compositions(n, m)) {
                const Signature d = signature(a);
                const MaximalStructure ms = maximal_structure(a);
                const auto chains = chains_through(a);
                REQUIRE(chains.size() == ms.components.size());
                for (std::size_t k = 0; k < chains.size(); ++k) {
                    const Chain& chain = chains[k];
                    CHECK(static_cast<Int>(chain.length()) == chain_length(n, d));
                    CHECK(is_initial(chain.top));
                    CHECK(is_terminal(chain.bottom()));
                    CHECK(chain.colors == color_sequence_closed_form(chain.top));
                    CHECK(chain.bottom() == terminal_of_initial(chain.top));
                    const auto elems = chain.elements();
                    CHECK(std::set<Composition>(elems.begin(), elems.end()).size() == elems.size());
                    CHECK(std::find(elems.begin(), elems.end(), a) != elems.end());
                    for (std::size_t e = 0; e + 1 < elems.size(); ++e) {
                        CHECK(covers(elems[e], elems[e + 1]).has_value());
                        CHECK(weight(elems[e + 1]) == weight(elems[e]) - 2);
                        CHECK(signature(elems[e + 1]) == d);
                    }
                    for (int i = ms.components[k].first; i <= ms.components[k].last; ++i)
                        CHECK(transversal_chain(a, i) == chain);
                    // tau T_0(top) = T_0(tau bottom)
                    CHECK(tau(chain) == transversal_chain(tau(chain.bottom()), 0));
                    const MaximalStructure bms = maximal_structure(chain.bottom());
                    CHECK(transversal_chain(chain.bottom(), bms.mset.back()) == chain);
                }
            }
        }
    }
}
