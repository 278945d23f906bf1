#include "unimodal/io.hpp"

#include <sstream>

#include "json.hpp"
#include "unimodal/error.hpp"

namespace unimodal {

namespace {

using nlohmann::ordered_json;

ordered_json chain_json(const Chain& chain) {
    return {{"top", chain.top.vec()}, {"colors", chain.colors}};
}

Chain chain_of_json(const ordered_json& j) {
    return {Composition(j.at("top").get<std::vector<Int>>()), j.at("colors").get<std::vector<int>>()};
}

ordered_json parse(std::string_view text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_invalid(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string chain_to_json(const Chain& chain) { return chain_json(chain).dump(); }

Chain chain_from_json(std::string_view text) {
    try {
        return chain_of_json(parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw_invalid(std::string("not a chain: ") + e.what());
    }
}

std::string to_json(const Decomposition& dec) {
    ordered_json j;
    j["n"] = dec.n;
    j["m"] = dec.m;
    j["classes"] = ordered_json::array();
    for (const auto& cls : dec.classes) {
        ordered_json cj;
        cj["signature"] = cls.signature.vec();
        cj["r"] = cls.r;
        cj["ell"] = cls.ell;
        cj["chains"] = ordered_json::array();
        for (const Chain& chain : cls.chains) cj["chains"].push_back(chain_json(chain));
        j["classes"].push_back(std::move(cj));
    }
    return j.dump() + "\n";
}

Decomposition decomposition_from_json(std::string_view text) {
    const ordered_json j = parse(text);
    Decomposition dec;
    try {
        dec.n = j.at("n").get<int>();
        dec.m = j.at("m").get<Int>();
        for (const auto& cj : j.at("classes")) {
            ClassDecomposition cls;
            cls.signature = Signature(dec.n, cj.at("signature").get<std::vector<Int>>());
            cls.r = cj.at("r").get<Int>();
            cls.ell = cj.at("ell").get<Int>();
            for (const auto& ch : cj.at("chains")) cls.chains.push_back(chain_of_json(ch));
            dec.classes.push_back(std::move(cls));
        }
    } catch (const nlohmann::json::exception& e) {
        throw_invalid(std::string("not a decomposition: ") + e.what());
    }
    dec.build_index();
    return dec;
}

std::string to_dot(const Decomposition& dec) {
    std::ostringstream out;
    out << "digraph A_" << dec.n << "_" << dec.m << " {\n";
    out << "  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
    for (const Composition& c : Compositions(dec.n, dec.m))
        out << "  \"" << to_string(c) << "\" [label=\"" << to_string(c) << "\\nw=" << weight(c)
            << "\"];\n";
    for (const Composition& c : Compositions(dec.n, dec.m)) {
        const auto here = dec.chain_of(c);
        for (const CoverEdge& e : upper_covers(c)) {
            out << "  \"" << to_string(e.lower) << "\" -> \"" << to_string(e.upper) << "\" [cover="
                << e.color;
            const auto there = dec.chain_of(e.upper);
            bool on_chain = false;
            if (here && there && *here == *there) {
                const Chain& chain = dec.chain(*here);
                const Int depth = rank(c) - rank(chain.top);
                on_chain = depth >= 0 && depth < static_cast<Int>(chain.length()) &&
                           chain.colors[static_cast<std::size_t>(depth)] == e.color;
            }
            if (on_chain)
                out << ", chain=" << *here << ", style=bold, color=black";
            else
                out << ", style=dashed, color=gray";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_text(const Decomposition& dec) {
    std::ostringstream out;
    std::size_t id = 0;
    for (const auto& cls : dec.classes)
        for (const Chain& chain : cls.chains) {
            out << "chain " << id++ << " class " << to_string(cls.signature) << " length "
                << chain.length() << " top " << to_string(chain.top) << " colors ";
            for (std::size_t k = 0; k < chain.colors.size(); ++k)
                out << (k ? "," : "") << chain.colors[k];
            out << "\n";
        }
    return out.str();
}

} // namespace unimodal
