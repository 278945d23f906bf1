#include "unimodal/qpoly.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

#include "unimodal/error.hpp"

namespace unimodal {

namespace {

std::atomic<Int> g_area_limit{kDefaultGaussianAreaLimit};

struct GaussianCache {
    std::mutex mutex;
    std::map<std::pair<Int, Int>, std::unique_ptr<const CoefficientVector>> values;
};

GaussianCache& cache() {
    static GaussianCache c;
    return c;
}

CoefficientVector compute_gaussian(Int m, Int n) {
    // row[j] holds G(i, j) for the current i; G(0, j) = 1
    std::vector<CoefficientVector> row(static_cast<std::size_t>(n) + 1, CoefficientVector{1});
    for (Int i = 1; i <= m; ++i) {
        std::vector<CoefficientVector> next(static_cast<std::size_t>(n) + 1);
        next[0] = CoefficientVector{1};
        for (Int j = 1; j <= n; ++j) {
            const auto& above = row[static_cast<std::size_t>(j)];     // G(i-1, j)
            const auto& left = next[static_cast<std::size_t>(j) - 1]; // G(i, j-1)
            CoefficientVector g(static_cast<std::size_t>(i * j) + 1);
            for (std::size_t t = 0; t < above.size(); ++t) g[t] += above[t];
            for (std::size_t t = 0; t < left.size(); ++t) g[t + static_cast<std::size_t>(i)] += left[t];
            next[static_cast<std::size_t>(j)] = std::move(g);
        }
        row = std::move(next);
    }
    return std::move(row[static_cast<std::size_t>(n)]);
}

} // namespace

void set_gaussian_area_limit(Int limit) { g_area_limit.store(limit); }

Int gaussian_area_limit() { return g_area_limit.load(); }

const CoefficientVector& gaussian(Int m, Int n) {
    if (m < 0 || n < 0) throw_invalid("gaussian needs m, n >= 0");
    if (n > 0 && m > gaussian_area_limit() / n)
        throw ResourceLimit("gaussian(" + std::to_string(m) + ", " + std::to_string(n) +
                            ") exceeds the area limit " + std::to_string(gaussian_area_limit()));
    auto& c = cache();
    {
        std::lock_guard lock(c.mutex);
        if (auto it = c.values.find({m, n}); it != c.values.end()) return *it->second;
    }
    auto value = std::make_unique<const CoefficientVector>(compute_gaussian(m, n));
    std::lock_guard lock(c.mutex);
    auto [it, inserted] = c.values.try_emplace({m, n}, std::move(value));
    return *it->second;
}

CoefficientVector rank_gf(std::span<const Composition> elements) {
    CoefficientVector out;
    for (const Composition& c : elements) {
        if (!elements.empty() && c.size() != elements.front().size())
            throw_invalid("rank_gf needs compositions of equal length");
        const auto r = static_cast<std::size_t>(rank(c));
        if (out.size() <= r) out.resize(r + 1);
        out[r] += 1;
    }
    return out;
}

std::string to_string(const CoefficientVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s;
}

} // namespace unimodal
