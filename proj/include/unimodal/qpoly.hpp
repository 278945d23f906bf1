#ifndef UNIMODAL_QPOLY_HPP
#define UNIMODAL_QPOLY_HPP

// Exact Gaussian binomial coefficients and rank generating functions.

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

#include "unimodal/poset.hpp"

namespace unimodal {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients indexed by q-degree (rank), lowest first.
using CoefficientVector = std::vector<BigInt>;

/// Default guard on m*n for gaussian().
inline constexpr Int kDefaultGaussianAreaLimit = 10000;

void set_gaussian_area_limit(Int limit);
Int gaussian_area_limit();

/// Coefficients of [m+n choose m]_q via the additive q-Pascal recurrence
/// G(m,n) = G(m-1,n) + q^m G(m,n-1). Length m*n + 1. Memoized. Throws
/// ResourceLimit when m*n exceeds the configured limit.
const CoefficientVector& gaussian(Int m, Int n);

/// Histogram of rank over a set of compositions of equal length. Empty for
/// an empty set; otherwise trimmed after the largest occurring rank.
CoefficientVector rank_gf(std::span<const Composition> elements);

template <class T>
bool is_symmetric(const std::vector<T>& v) {
    for (std::size_t i = 0, j = v.size(); i < j--; ++i)
        if (!(v[i] == v[j])) return false;
    return true;
}

/// No strict descent is followed by a strict ascent.
template <class T>
bool is_unimodal(const std::vector<T>& v) {
    bool descended = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i + 1] < v[i]) descended = true;
        else if (v[i] < v[i + 1] && descended) return false;
    }
    return true;
}

/// Comma-separated decimal coefficients, lowest degree first.
std::string to_string(const CoefficientVector& v);

} // namespace unimodal

#endif // UNIMODAL_QPOLY_HPP
