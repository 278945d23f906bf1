#include "unimodal/poset.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "unimodal/error.hpp"

namespace unimodal {

Composition::Composition(std::vector<Int> entries) : entries_(std::move(entries)) {
    for (Int v : entries_) {
        if (v < 0) throw_invalid("composition entries must be nonnegative");
        total_ += v;
    }
}

Composition::Composition(std::initializer_list<Int> entries)
    : Composition(std::vector<Int>(entries)) {}

std::size_t CompositionHash::operator()(const Composition& c) const noexcept {
    // FNV-1a over the entries
    std::uint64_t h = 1469598103934665603ull;
    for (Int v : c.entries()) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    h ^= c.size();
    return static_cast<std::size_t>(h);
}

Partition::Partition(std::vector<Int> parts, Int bound)
    : parts_(std::move(parts)), bound_(bound) {
    if (bound_ < 0) throw_invalid("partition bound must be nonnegative");
    Int prev = 0;
    for (Int v : parts_) {
        if (v < prev || v > bound_)
            throw_invalid("partition parts must be weakly increasing in [0, bound]");
        prev = v;
    }
}

Int Partition::sum() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Composition phi(const Partition& p) {
    std::vector<Int> a(static_cast<std::size_t>(p.bound()) + 1, 0);
    for (Int v : p.parts()) ++a[static_cast<std::size_t>(v)];
    return Composition(std::move(a));
}

Partition phi_inv(const Composition& c) {
    if (c.empty()) throw_invalid("phi_inv: empty composition has no partition model");
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(c.m()));
    for (std::size_t i = 0; i < c.size(); ++i)
        parts.insert(parts.end(), static_cast<std::size_t>(c[i]), static_cast<Int>(i));
    return Partition(std::move(parts), c.n());
}

Partition gamma(const Partition& p) {
    // lambda'_j = #{i : lambda_i >= n + 1 - j} keeps the result increasing
    const Int n = p.bound();
    const auto m = static_cast<Int>(p.size());
    std::vector<Int> conj(static_cast<std::size_t>(n), 0);
    for (Int j = 1; j <= n; ++j) {
        const Int threshold = n + 1 - j;
        const auto first = std::lower_bound(p.parts().begin(), p.parts().end(), threshold);
        conj[static_cast<std::size_t>(j - 1)] = p.parts().end() - first;
    }
    return Partition(std::move(conj), m);
}

Composition psi(const Partition& p) {
    const std::size_t n = p.size();
    std::vector<Int> a(n + 1);
    // extended with lambda_0 = 0 and lambda_{n+1} = m
    auto lam = [&](std::size_t i) -> Int {
        if (i == 0) return 0;
        if (i == n + 1) return p.bound();
        return p[i - 1];
    };
    for (std::size_t i = 0; i <= n; ++i) a[i] = lam(n + 1 - i) - lam(n - i);
    return Composition(std::move(a));
}

Partition psi_inv(const Composition& c) {
    if (c.empty()) return Partition({}, 0);
    const std::size_t n = static_cast<std::size_t>(c.n());
    std::vector<Int> parts(n);
    Int tail = 0;
    // lambda_i = a_{n-i+1} + ... + a_n
    for (std::size_t i = 1; i <= n; ++i) {
        tail += c[n - i + 1];
        parts[i - 1] = tail;
    }
    return Partition(std::move(parts), c.m());
}

Composition tau(const Composition& c) {
    std::vector<Int> r(c.entries().rbegin(), c.entries().rend());
    return Composition(std::move(r));
}

Int rank(const Composition& c) {
    Int r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r += static_cast<Int>(i) * c[i];
    return r;
}

Int rank(const Partition& p) { return p.sum(); }

Int weight(const Composition& c) {
    const Int n = std::max(c.n(), 0);
    return c.m() * n - 2 * rank(c);
}

namespace {

void require_same_poset(const Composition& x, const Composition& y) {
    if (x.size() != y.size() || x.m() != y.m())
        throw_invalid("compositions " + to_string(x) + " and " + to_string(y) +
                      " lie in different posets");
}

} // namespace

bool leq(const Composition& x, const Composition& y) {
    require_same_poset(x, y);
    // #{parts >= j} is the tail sum from index j; sorted sequences compare
    // componentwise exactly when every tail count does.
    Int tx = 0;
    Int ty = 0;
    for (std::size_t i = x.size(); i-- > 1;) {
        tx += x[i];
        ty += y[i];
        if (tx > ty) return false;
    }
    return true;
}

bool leq(const Partition& x, const Partition& y) {
    if (x.size() != y.size()) throw_invalid("partitions have different part counts");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

std::optional<int> covers(const Composition& lower, const Composition& upper) {
    require_same_poset(lower, upper);
    std::size_t first = lower.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (lower[i] != upper[i]) {
            if (count == 0) first = i;
            ++count;
        }
    }
    if (count != 2 || first + 1 >= lower.size()) return std::nullopt;
    if (upper[first] != lower[first] - 1 || upper[first + 1] != lower[first + 1] + 1)
        return std::nullopt;
    return static_cast<int>(first) + 1;
}

bool covers(const Partition& lower, const Partition& upper) {
    if (lower.size() != upper.size()) return false;
    int diffs = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (upper[i] == lower[i]) continue;
        if (upper[i] != lower[i] + 1) return false;
        ++diffs;
    }
    return diffs == 1;
}

std::optional<Composition> move_up(const Composition& c, int color) {
    if (color < 1 || color > c.n()) return std::nullopt;
    const auto i = static_cast<std::size_t>(color);
    if (c[i - 1] == 0) return std::nullopt;
    std::vector<Int> a = c.vec();
    --a[i - 1];
    ++a[i];
    return Composition(std::move(a));
}

std::vector<CoverEdge> upper_covers(const Composition& c) {
    std::vector<CoverEdge> out;
    for (int color = 1; color <= c.n(); ++color)
        if (auto up = move_up(c, color)) out.push_back({c, std::move(*up), color});
    return out;
}

void check_box(int n, Int m) {
    if (n < -1 || m < 0) throw_invalid("need n >= -1 and m >= 0");
    if (n > 0 && m > kMaxBoxArea / n)
        throw ResourceLimit("m*n exceeds the supported limit 2^31");
}

Compositions::Compositions(int n, Int m) : n_(n), m_(m) {
    check_box(n, m);
    if (n == -1 && m > 0) throw_invalid("A_{-1}(m) is empty unless m = 0");
}

Compositions::iterator Compositions::begin() const {
    iterator it;
    it.done_ = false;
    if (n_ < 0) {
        it.current_ = Composition();
        return it;
    }
    std::vector<Int> a(static_cast<std::size_t>(n_) + 1, 0);
    a.back() = m_;
    it.current_ = Composition(std::move(a));
    return it;
}

Compositions::iterator& Compositions::iterator::operator++() {
    if (done_) return *this;
    std::vector<Int> a = current_.vec();
    // last nonzero index j; the successor bumps a_{j-1} and pushes the
    // remaining a_j - 1 units to the end
    std::size_t j = a.size();
    while (j > 0 && a[j - 1] == 0) --j;
    if (j <= 1) {
        done_ = true;
        return *this;
    }
    const std::size_t last = j - 1;
    const Int rest = a[last] - 1;
    ++a[last - 1];
    a[last] = 0;
    a.back() += rest;
    current_ = Composition(std::move(a));
    return *this;
}

std::vector<Composition> enumerate_A(int n, Int m) {
    Compositions range(n, m);
    std::vector<Composition> out;
    const Int count = count_A(n, m);
    if (count < (Int{1} << 26)) out.reserve(static_cast<std::size_t>(count));
    for (const auto& c : range) out.push_back(c);
    return out;
}

Int count_A(int n, Int m) {
    if (n < 0) return m == 0 ? 1 : 0;
    // C(m+n, k) built incrementally with k = min(m, n); each prefix is exact
    const Int k = std::min<Int>(m, n);
    const Int top = m + n;
    unsigned __int128 c = 1;
    for (Int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned __int128>(top - k + i) / static_cast<unsigned __int128>(i);
        if (c > static_cast<unsigned __int128>(std::numeric_limits<Int>::max()))
            return std::numeric_limits<Int>::max();
    }
    return static_cast<Int>(c);
}

namespace {

template <class Range>
std::string join(const Range& values, char open, char close) {
    std::string s(1, open);
    bool first = true;
    for (Int v : values) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    }
    s += close;
    return s;
}

} // namespace

std::string to_string(const Composition& c) { return join(c.entries(), '[', ']'); }

std::string to_string(const Partition& p) { return join(p.parts(), '(', ')'); }

std::vector<Int> parse_int_list(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty() && (text.front() == '[' || text.front() == '(')) {
        const char close = text.front() == '[' ? ']' : ')';
        if (text.size() < 2 || text.back() != close)
            throw_invalid("unbalanced brackets in '" + std::string(text) + "'");
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<Int> out;
    if (text.empty()) return out;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        Int v = 0;
        const auto* end = item.data() + item.size();
        const auto res = std::from_chars(item.data(), end, v);
        if (item.empty() || res.ec != std::errc{} || res.ptr != end)
            throw_invalid("not an integer: '" + std::string(item) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

Composition parse_composition(std::string_view text) {
    return Composition(parse_int_list(text));
}

} // namespace unimodal
