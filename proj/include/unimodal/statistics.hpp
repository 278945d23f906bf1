#ifndef UNIMODAL_STATISTICS_HPP
#define UNIMODAL_STATISTICS_HPP

// Spread, degree and signature on A_n(m).
//
// A maximal pair of a = (a_0, ..., a_n) is a pair of neighbours whose sum
// attains the spread. The set M(a) of their left indices splits into runs of
// consecutive integers; the degree counts the edges of a minimal covering of
// those runs. Removing a maximum number of disjoint maximal pairs gives
// omega(a), and recording how the spread drops along that recursion gives the
// signature (d_0, ..., d_k), k = floor(n/2).

#include <string>
#include <vector>

#include "unimodal/poset.hpp"

namespace unimodal {

class Signature {
public:
    Signature() = default;
    /// Requires d.size() == floor(n/2) + 1 for n >= 0, or empty for n = -1.
    Signature(int n, std::vector<Int> d);

    int n() const noexcept { return n_; }
    int k() const noexcept { return n_ < 0 ? -1 : n_ / 2; }
    std::span<const Int> d() const noexcept { return d_; }
    const std::vector<Int>& vec() const noexcept { return d_; }
    Int operator[](std::size_t j) const { return d_[j]; }
    std::size_t size() const noexcept { return d_.size(); }

    /// sum (j+1) d_j
    Int implied_m() const noexcept;
    /// sum d_j; equals the spread of every member when m > 0.
    Int total() const noexcept;
    /// Index of the first positive entry, or -1.
    int first_positive() const noexcept;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    int n_ = -1;
    std::vector<Int> d_;
};

struct SignatureHash {
    std::size_t operator()(const Signature& s) const noexcept;
};

struct Interval {
    int first = 0;
    int last = 0;
    int size() const noexcept { return last - first + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct MaximalStructure {
    Int spread = 0;
    std::vector<int> mset;
    std::vector<Interval> components;
    std::vector<int> active;
};

/// max_i (a_i + a_{i+1}) for n >= 1; m for n = 0; 0 for the empty vector.
Int spread(const Composition& c);
MaximalStructure maximal_structure(const Composition& c);
/// Sum over components of ceil(size/2); 0 for n <= 0.
Int degree(const Composition& c);
Int degree(const MaximalStructure& ms);
/// Removes a maximum set of disjoint maximal pairs, component by component.
Composition omega(const Composition& c);
Composition omega(const Composition& c, const MaximalStructure& ms);

/// Throws InconsistencyError if the recursion produces a vector of the wrong
/// length or violating sum (j+1) d_j = m.
Signature signature(const Composition& c);

/// Solutions of sum_{j<=k} (j+1) d_j = m, k = floor(n/2), in colex order
/// (last coordinate varies slowest).
std::vector<Signature> enumerate_signatures(int n, Int m);

/// Members of Q_n(d), by filtering the enumeration of A_n(m).
std::vector<Composition> q_class(int n, const Signature& d);

/// h_{2i} = d_i + ... + d_k, zeros at odd indices. Throws
/// InconsistencyError if signature(h) != d.
Composition highest_weight(int n, const Signature& d);
/// The unchecked formula; used by the oracle to census failures.
Composition highest_weight_formula(int n, const Signature& d);

/// sum_j (n - 2j) d_j
Int chain_length(int n, const Signature& d);

/// 1 + min{j : d_j > 0}; -1 when d is identically zero.
int degree_formula(const Signature& d);

/// True when some level of the omega recursion keeps the spread unchanged
/// (spr(omega(b)) == spr(b) with m(b) > 0). These are the boundary cases
/// of the degree formula.
bool recursion_keeps_spread(const Composition& c);

std::string to_string(const Signature& s);
/// Parses "d0,d1,..." or "(d0,d1,...)" for the given n.
Signature parse_signature(int n, std::string_view text);

} // namespace unimodal

#endif // UNIMODAL_STATISTICS_HPP
