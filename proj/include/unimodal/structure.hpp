#ifndef UNIMODAL_STRUCTURE_HPP
#define UNIMODAL_STRUCTURE_HPP

// Split extensions of the signature classes and the recursive chain
// decomposition built from them.
//
// A class Q_n(d) with edge-cover degree r and spread s fibres over the base
// class Q_{n-2r}(d_r, ..., d_k) through omega. Each fibre is identified with
// the partitions L(r, ell) (r parts bounded by the transversal chain length
// ell) by counting raising steps (delta) and undoing them (delta_inv). The
// section beta_r prepends r copies of (s, 0).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "unimodal/poset.hpp"
#include "unimodal/qpoly.hpp"
#include "unimodal/statistics.hpp"
#include "unimodal/transversal.hpp"

namespace unimodal {

/// Bookkeeping of one class, read off its highest-weight element.
struct ClassShape {
    Signature signature;
    Composition top;          // highest-weight element
    Int size = 0;             // |Q_n(d)|, 0 if not computed
    Int r = 0;                // edge-cover degree of top
    Int ell = 0;              // length of T_0(top)
    Int spread = 0;
    Signature base;           // signature of omega(top), context n - 2r
    int formula_r = -1;       // 1 + min{j : d_j > 0}
    Int formula_ell = 0;      // sum (n - 2j) d_j
    /// The omega recursion keeps the spread at some level; formula_r may
    /// differ from r here.
    bool boundary = false;
};

ClassShape class_shape(int n, const Signature& d);

/// ((s,0)^r, b). Throws InvalidArgument when r >= 1 and s <= spread(b).
Composition beta_r(const Composition& b, Int r, Int s);
/// ((s,0)^r, b) without the spread precondition; boundary classes need it.
Composition prepend_pairs(const Composition& b, Int r, Int s);

/// omega restricted to a class.
Composition omega_r(const Composition& a);

/// (delta_1, ..., delta_r) in L(r, ell): delta_1 counts the raising steps
/// from the leftmost maximal pair up to an initial (s, 0, a'), and the rest
/// is delta(a', b). Throws InvalidArgument when omega(a) != b and
/// InconsistencyError when the result is not weakly increasing or exceeds
/// ell.
Partition delta(const Composition& a, const Composition& b);

/// (i+1)s - a_i - 2(a_0 + ... + a_{i-1}) with i the leftmost maximal pair.
Int delta1_closed_form(const Composition& a);

/// Inverse of delta on the fibre over b: start at ((s,0)^r, b) and for
/// i = 1..r follow T_0 of the current element for lam_{r+1-i} steps.
Composition delta_inv(const Partition& lam, const Composition& b, Int s);

struct NamedCheck {
    std::string name;
    bool passed = true;
    Int examined = 0;
    Int failures = 0;
    std::string first_failure;
};

struct SplitExtensionReport {
    int n = 0;
    Signature d;
    Int r = 0;
    Int ell = 0;
    Signature base_class;
    Int fiber_count = 0;
    Int class_size = 0;
    Int fiber_size = 0;
    bool boundary = false;
    int formula_r = -1;
    /// Every pair of fibre elements was compared, not just covers.
    bool pairwise_fiber_order = false;
    bool pairwise_section_order = false;
    std::vector<NamedCheck> checks;

    bool passed() const;
    const NamedCheck* find(const std::string& name) const;
};

/// Check names used in SplitExtensionReport.
namespace split_check {
inline constexpr const char* kSurjectivity = "omega_surjective";
inline constexpr const char* kSection = "beta_section";
inline constexpr const char* kSectionOrder = "beta_order_preserving";
inline constexpr const char* kFiberCardinality = "fiber_cardinality";
inline constexpr const char* kDeltaRoundTrip = "delta_inv_after_delta";
inline constexpr const char* kDeltaInvRoundTrip = "delta_after_delta_inv";
inline constexpr const char* kDeltaMonotone = "delta_monotone";
inline constexpr const char* kDelta1ClosedForm = "delta1_closed_form";
inline constexpr const char* kFiberRank = "fiber_rank_shift";
inline constexpr const char* kBaseRankShift = "base_cover_rank_shift";
inline constexpr const char* kDeltaCovers = "delta_preserves_covers";
inline constexpr const char* kDeltaInvCovers = "delta_inv_preserves_covers";
inline constexpr const char* kFiberOrder = "fiber_order_isomorphism";
inline constexpr const char* kOmegaOrder = "omega_order_preserving";
inline constexpr const char* kStrippedCover = "stripped_residue_covers";
} // namespace split_check

/// Exhaustive check of the split extension Q_n(d) -> Q_{n-2r}(d_r..d_k).
/// Failures are recorded, never thrown.
SplitExtensionReport verify_split_extension(int n, const Signature& d);

struct ClassDecomposition {
    Signature signature;
    Int r = 0;
    Int ell = 0;
    std::vector<Chain> chains;

    friend bool operator==(const ClassDecomposition&, const ClassDecomposition&) = default;
};

struct ChainRef {
    std::size_t class_index = 0;
    std::size_t chain_index = 0;
};

class Decomposition {
public:
    int n = 0;
    Int m = 0;
    std::vector<ClassDecomposition> classes;

    std::size_t chain_count() const;
    /// Flat chain ids follow class order, then chain order.
    const Chain& chain(std::size_t id) const;
    /// Maps every covered element to its flat chain id. Throws
    /// InconsistencyError if two chains share an element.
    void build_index();
    std::optional<std::size_t> chain_of(const Composition& c) const;
    const std::unordered_map<Composition, std::size_t, CompositionHash>& index() const {
        return index_;
    }

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.n == b.n && a.m == b.m && a.classes == b.classes;
    }

private:
    std::vector<ChainRef> refs_;
    std::unordered_map<Composition, std::size_t, CompositionHash> index_;
};

/// Signature classes of A_n(m) with their members, in
/// enumerate_signatures order (empty classes omitted).
using ClassTable = std::vector<std::pair<Signature, std::vector<Composition>>>;

/// Shared read-mostly memo of class tables and decompositions keyed by
/// (n, m). Safe for concurrent use.
class DecompositionCache {
public:
    DecompositionCache();
    ~DecompositionCache();
    DecompositionCache(const DecompositionCache&) = delete;
    DecompositionCache& operator=(const DecompositionCache&) = delete;

    std::shared_ptr<const ClassTable> classes(int n, Int m);
    std::shared_ptr<const Decomposition> decomposition(int n, Int m);
    /// Drops the entries for (n, m); outstanding shared_ptrs stay valid.
    void erase(int n, Int m);
    void clear();

    static DecompositionCache& global();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Saturated chains partitioning Q_n(d). ell = 0 gives singletons; r = 1
/// gives T_0(beta_1(b)) per base element; r >= 2 transports the
/// decomposition of A_r(ell) through psi_inv and delta_inv into every fibre.
ClassDecomposition decompose_class(int n, const Signature& d);
ClassDecomposition decompose_class(int n, const Signature& d, DecompositionCache& cache);

/// All classes of A_n(m), index built. Throws InconsistencyError on overlap
/// or a coverage gap.
Decomposition decompose_all(int n, Int m);
Decomposition decompose_all(int n, Int m, DecompositionCache& cache);

struct LengthGroup {
    Int length = 0;
    std::vector<Int> top_weights;   // sorted
    /// counts of each top weight, from the smallest to the largest in steps of 2
    std::vector<Int> profile;
    bool symmetric = false;         // about the chain length
    bool unimodal = false;
};

struct UnimodalityCertificate {
    int n = 0;
    Int m = 0;
    std::vector<LengthGroup> groups;      // by increasing length
    CoefficientVector rank_function;      // rebuilt from the chains
    bool matches_gaussian = false;
    bool rank_function_symmetric = false;
    bool rank_function_unimodal = false;

    bool passed() const;
};

UnimodalityCertificate unimodality_certificate(const Decomposition& dec);

} // namespace unimodal

#endif // UNIMODAL_STRUCTURE_HPP
