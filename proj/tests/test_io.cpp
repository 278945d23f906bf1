#include "doctest.h"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "unimodal/error.hpp"
#include "unimodal/io.hpp"
#include "unimodal/structure.hpp"

using namespace unimodal;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("chain JSON round trip") {
    const Chain c{Composition({2, 0, 0}), {1, 1, 2, 2}};
    const std::string text = chain_to_json(c);
    CHECK(chain_from_json(text) == c);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["colors"] == std::vector<int>{1, 1, 2, 2});
    CHECK_THROWS_AS(chain_from_json("{\"colors\": [1]}"), InvalidArgument);
    CHECK_THROWS_AS(chain_from_json("not json"), InvalidArgument);
}

TEST_CASE("decomposition JSON round trip") {
    for (const auto& [n, m] : std::vector<std::pair<int, Int>>{{0, 3}, {1, 4}, {2, 2}, {4, 3}, {5, 5}, {6, 4}}) {
        const Decomposition dec = decompose_all(n, m);
        const std::string text = to_json(dec);
        const Decomposition back = decomposition_from_json(text);
        CHECK(back == dec);
        CHECK(back.index() == dec.index());
        CHECK(to_json(back) == text);
    }
}

TEST_CASE("decomposition of A_2(2) as JSON and text") {
    const Decomposition dec = decompose_all(2, 2);
    const auto j = nlohmann::json::parse(to_json(dec));
    CHECK(j["n"] == 2);
    CHECK(j["m"] == 2);
    CHECK(to_text(dec) ==
          "chain 0 class (2,0) length 4 top [2,0,0] colors 1,1,2,2\n"
          "chain 1 class (0,1) length 0 top [1,0,1] colors \n");
}

TEST_CASE("DOT export") {
    const std::string one = to_dot(decompose_all(1, 4));
    CHECK(one.rfind("digraph A_1_4 {", 0) == 0);
    CHECK(count_of(one, "[label=") == 5);
    CHECK(count_of(one, " -> ") == 4);
    CHECK(count_of(one, "chain=0") == 4);
    CHECK(count_of(one, "style=dashed") == 0);

    const Decomposition dec = decompose_all(3, 3);
    const std::string three = to_dot(dec);
    CHECK(count_of(three, "[label=") == static_cast<std::size_t>(count_A(3, 3)));
    std::size_t covers = 0;
    std::size_t chain_edges = 0;
    for (const Composition& c : enumerate_A(3, 3)) covers += upper_covers(c).size();
    for (std::size_t id = 0; id < dec.chain_count(); ++id) chain_edges += dec.chain(id).length();
    CHECK(count_of(three, " -> ") == covers);
    CHECK(count_of(three, "style=bold") == chain_edges);
    CHECK(count_of(three, "style=dashed") == covers - chain_edges);
}
