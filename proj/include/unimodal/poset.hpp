#ifndef UNIMODAL_POSET_HPP
#define UNIMODAL_POSET_HPP

// Young's lattice L(m,n) and its multiplicity model A_n(m).
//
// A Composition (a_0, ..., a_n) with a_i >= 0 and sum m is an element of
// A_n(m). The empty vector is admitted as the single element of A_{-1}(0).
// A Partition is a weakly increasing vector of m parts bounded by n and is
// an element of L(m,n). Both types are immutable values.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unimodal {

using Int = std::int64_t;

/// Largest supported m*n. Ranks and weights stay well inside 64 bits.
inline constexpr Int kMaxBoxArea = Int{1} << 31;

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Int> entries);
    Composition(std::initializer_list<Int> entries);

    std::span<const Int> entries() const noexcept { return entries_; }
    const std::vector<Int>& vec() const noexcept { return entries_; }
    Int operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Index of the last entry; -1 for the empty vector.
    int n() const noexcept { return static_cast<int>(entries_.size()) - 1; }
    Int m() const noexcept { return total_; }

    friend bool operator==(const Composition& a, const Composition& b) noexcept {
        return a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const Composition& a,
                                            const Composition& b) noexcept {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<Int> entries_;
    Int total_ = 0;
};

struct CompositionHash {
    std::size_t operator()(const Composition& c) const noexcept;
};

class Partition {
public:
    Partition() = default;
    /// Parts must satisfy 0 <= p_1 <= ... <= p_m <= bound.
    Partition(std::vector<Int> parts, Int bound);

    std::span<const Int> parts() const noexcept { return parts_; }
    const std::vector<Int>& vec() const noexcept { return parts_; }
    Int operator[](std::size_t i) const { return parts_[i]; }
    std::size_t size() const noexcept { return parts_.size(); }
    Int bound() const noexcept { return bound_; }
    Int sum() const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Int> parts_;
    Int bound_ = 0;
};

/// One Hasse edge of A_n(m). `upper` is `lower` with one unit moved from
/// index color-1 to index color, so rank(upper) = rank(lower) + 1.
struct CoverEdge {
    Composition lower;
    Composition upper;
    int color = 0;
};

// Structure maps.

Composition phi(const Partition& p);
Partition phi_inv(const Composition& c);
Partition gamma(const Partition& p);
/// p has n parts bounded by m; result lies in A_n(m).
Composition psi(const Partition& p);
Partition psi_inv(const Composition& c);
Composition tau(const Composition& c);

Int rank(const Composition& c);
Int rank(const Partition& p);
/// m*n - 2*rank. Highest weight is lowest rank.
Int weight(const Composition& c);

/// Young's order transported to A_n(m). Throws InvalidArgument on a
/// dimension or total mismatch.
bool leq(const Composition& x, const Composition& y);
/// Componentwise order on partitions with equal part counts.
bool leq(const Partition& x, const Partition& y);

/// Color c if `upper` is `lower` with one unit moved from index c-1 to c.
std::optional<int> covers(const Composition& lower, const Composition& upper);
/// Componentwise cover in L(m,n): exactly one part larger by one.
bool covers(const Partition& lower, const Partition& upper);

/// All upward covers of c (increasing rank by one), ordered by color.
std::vector<CoverEdge> upper_covers(const Composition& c);
/// Apply a single colored move: unit from index color-1 to color.
std::optional<Composition> move_up(const Composition& c, int color);

/// Lexicographically ordered weak compositions of m into n+1 parts. The
/// range is cheap to copy and each iteration restarts from the beginning.
class Compositions {
public:
    Compositions(int n, Int m);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Composition*;
        using reference = const Composition&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) noexcept {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        friend class Compositions;
        Composition current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return {}; }
    int n() const noexcept { return n_; }
    Int m() const noexcept { return m_; }

private:
    int n_;
    Int m_;
};

/// Materialized enumeration; size is C(m+n, n).
std::vector<Composition> enumerate_A(int n, Int m);

/// Exact C(m+n, n), saturating at the maximum of Int.
Int count_A(int n, Int m);

/// Throws ResourceLimit when m*n exceeds kMaxBoxArea.
void check_box(int n, Int m);

std::string to_string(const Composition& c);
std::string to_string(const Partition& p);
/// Accepts "[2,0,1]", "2,0,1" and "[]"; surrounding blanks are ignored.
std::vector<Int> parse_int_list(std::string_view text);
Composition parse_composition(std::string_view text);

} // namespace unimodal

template <>
struct std::hash<unimodal::Composition> : unimodal::CompositionHash {};

#endif // UNIMODAL_POSET_HPP
