#include "unimodal/statistics.hpp"

#include <algorithm>
#include <numeric>

#include "unimodal/error.hpp"

namespace unimodal {

Signature::Signature(int n, std::vector<Int> d) : n_(n), d_(std::move(d)) {
    if (n < -1) throw_invalid("signature context n must be >= -1");
    const std::size_t want = n < 0 ? 0 : static_cast<std::size_t>(n / 2 + 1);
    if (d_.size() != want)
        throw_invalid("signature for n = " + std::to_string(n) + " needs " +
                      std::to_string(want) + " entries, got " + std::to_string(d_.size()));
    for (Int v : d_)
        if (v < 0) throw_invalid("signature entries must be nonnegative");
}

Int Signature::implied_m() const noexcept {
    Int m = 0;
    for (std::size_t j = 0; j < d_.size(); ++j) m += static_cast<Int>(j + 1) * d_[j];
    return m;
}

Int Signature::total() const noexcept {
    return std::accumulate(d_.begin(), d_.end(), Int{0});
}

int Signature::first_positive() const noexcept {
    for (std::size_t j = 0; j < d_.size(); ++j)
        if (d_[j] > 0) return static_cast<int>(j);
    return -1;
}

std::size_t SignatureHash::operator()(const Signature& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.n()) * 0x9e3779b97f4a7c15ull;
    for (Int v : s.d()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
}

Int spread(const Composition& c) {
    if (c.empty()) return 0;
    if (c.n() == 0) return c.m();
    Int best = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) best = std::max(best, c[i] + c[i + 1]);
    return best;
}

MaximalStructure maximal_structure(const Composition& c) {
    MaximalStructure ms;
    ms.spread = spread(c);
    if (c.n() < 1) return ms;
    ms.mset.reserve(c.size());
    ms.components.reserve(c.size() / 2 + 1);
    ms.active.reserve(c.size());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i] + c[i + 1] != ms.spread) continue;
        const int idx = static_cast<int>(i);
        ms.mset.push_back(idx);
        if (!ms.components.empty() && ms.components.back().last == idx - 1)
            ms.components.back().last = idx;
        else
            ms.components.push_back({idx, idx});
    }
    for (const Interval& comp : ms.components)
        for (int j = comp.first; j <= comp.last + 1; ++j) ms.active.push_back(j);
    return ms;
}

Int degree(const MaximalStructure& ms) {
    Int r = 0;
    for (const Interval& comp : ms.components) r += (comp.size() + 1) / 2;
    return r;
}

Int degree(const Composition& c) { return degree(maximal_structure(c)); }

Composition omega(const Composition& c, const MaximalStructure& ms) {
    if (c.n() < 1) return c;
    std::vector<bool> keep(c.size(), true);
    for (const Interval& comp : ms.components) {
        // the active block is (x,y,x,y,...) of length size+1; an odd number
        // of entries leaves one x behind
        for (int j = comp.first; j <= comp.last + 1; ++j) keep[static_cast<std::size_t>(j)] = false;
        if ((comp.last - comp.first) % 2 == 1) keep[static_cast<std::size_t>(comp.first)] = true;
    }
    std::vector<Int> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (keep[i]) out.push_back(c[i]);
    return Composition(std::move(out));
}

Composition omega(const Composition& c) {
    if (c.n() < 1) return c;
    const Int s = spread(c);
    std::vector<Int> out;
    out.reserve(c.size());
    std::size_t i = 0;
    while (i < c.size()) {
        if (i + 1 >= c.size() || c[i] + c[i + 1] != s) {
            out.push_back(c[i++]);
            continue;
        }
        std::size_t last = i;
        while (last + 2 < c.size() && c[last + 1] + c[last + 2] == s) ++last;
        if ((last - i) % 2 == 1) out.push_back(c[i]);
        i = last + 2;
    }
    return Composition(std::move(out));
}

namespace {

void signature_into(const Composition& c, std::vector<Int>& out) {
    if (c.empty()) return;
    if (c.n() <= 1) {
        out.push_back(c.m());
        return;
    }
    const MaximalStructure ms = maximal_structure(c);
    const Int r = degree(ms);
    const Composition w = omega(c, ms);
    out.insert(out.end(), static_cast<std::size_t>(r - 1), 0);
    out.push_back(ms.spread - spread(w));
    signature_into(w, out);
}

} // namespace

Signature signature(const Composition& c) {
    std::vector<Int> d;
    signature_into(c, d);
    const std::size_t want = c.empty() ? 0 : static_cast<std::size_t>(c.n() / 2 + 1);
    if (d.size() != want)
        throw_inconsistent("signature of " + to_string(c) + " has " + std::to_string(d.size()) +
                           " entries, expected " + std::to_string(want));
    for (Int v : d)
        if (v < 0) throw_inconsistent("negative signature entry for " + to_string(c));
    Signature sig(c.n(), std::move(d));
    if (sig.implied_m() != c.m())
        throw_inconsistent("signature of " + to_string(c) + " does not sum to m");
    return sig;
}

std::vector<Signature> enumerate_signatures(int n, Int m) {
    if (n < 0) {
        if (m != 0) return {};
        return {Signature(-1, {})};
    }
    const int k = n / 2;
    std::vector<Signature> out;
    std::vector<Int> d(static_cast<std::size_t>(k) + 1, 0);
    // choose d_k, d_{k-1}, ..., d_1 in increasing order; d_0 absorbs the rest
    auto rec = [&](auto&& self, int j, Int rest) -> void {
        if (j == 0) {
            d[0] = rest;
            out.emplace_back(n, d);
            return;
        }
        for (Int v = 0; v * (j + 1) <= rest; ++v) {
            d[static_cast<std::size_t>(j)] = v;
            self(self, j - 1, rest - v * (j + 1));
        }
        d[static_cast<std::size_t>(j)] = 0;
    };
    rec(rec, k, m);
    return out;
}

std::vector<Composition> q_class(int n, const Signature& d) {
    if (d.n() != n) throw_invalid("signature context does not match n");
    std::vector<Composition> out;
    for (const Composition& c : Compositions(n, d.implied_m()))
        if (signature(c) == d) out.push_back(c);
    return out;
}

Composition highest_weight_formula(int n, const Signature& d) {
    if (d.n() != n) throw_invalid("signature context does not match n");
    if (n < 0) return Composition();
    std::vector<Int> h(static_cast<std::size_t>(n) + 1, 0);
    Int suffix = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        suffix += d[i];
        h[2 * i] = suffix;
    }
    return Composition(std::move(h));
}

Composition highest_weight(int n, const Signature& d) {
    Composition h = highest_weight_formula(n, d);
    if (signature(h) != d)
        throw_inconsistent("highest weight formula " + to_string(h) + " leaves class " +
                           to_string(d));
    return h;
}

Int chain_length(int n, const Signature& d) {
    Int len = 0;
    for (std::size_t j = 0; j < d.size(); ++j) len += (n - 2 * static_cast<Int>(j)) * d[j];
    return len;
}

int degree_formula(const Signature& d) {
    const int j = d.first_positive();
    return j < 0 ? -1 : j + 1;
}

bool recursion_keeps_spread(const Composition& c) {
    Composition cur = c;
    while (cur.n() > 1) {
        const MaximalStructure ms = maximal_structure(cur);
        Composition w = omega(cur, ms);
        if (cur.m() > 0 && spread(w) == ms.spread) return true;
        cur = std::move(w);
    }
    return false;
}

std::string to_string(const Signature& s) {
    std::string out = "(";
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(s[j]);
    }
    return out + ")";
}

Signature parse_signature(int n, std::string_view text) {
    return Signature(n, parse_int_list(text));
}

} // namespace unimodal
