#ifndef UNIMODAL_ORACLE_HPP
#define UNIMODAL_ORACLE_HPP

// Brute-force recomputation of the statistics and exhaustive checks of the
// chain and split-extension claims over A_n(m).
//
// The reference routines here work on the partition side or by plain
// search and share no code with the walkers and recursions they check.

#include <string>
#include <utility>
#include <vector>

#include "unimodal/poset.hpp"
#include "unimodal/statistics.hpp"

namespace unimodal {

/// spread and degree of c computed on psi_inv(c) with lambda_0 = 0 and
/// lambda_{n+1} = m. Requires n >= 1.
std::pair<Int, Int> spread_degree_via_partition(const Composition& c);

/// Every vector obtained by deleting a maximum family of disjoint maximal
/// pairs (found by exhaustive search), sorted and deduplicated. Empty for
/// n < 1 means nothing to remove.
std::vector<Composition> omega_all_choices(const Composition& c);

/// Signature recomputed from spread_degree_via_partition and
/// omega_all_choices.
Signature reference_signature(const Composition& c);

struct Counterexample {
    std::string input;
    std::string detail;
    std::string reproduce;   // CLI invocation that shows the input

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckResult {
    std::string name;
    Int examined = 0;
    Int failures = 0;
    bool waived = false;
    std::vector<Counterexample> counterexamples;

    bool passed() const { return failures == 0; }
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// One entry of the degree-formula census: the edge-cover degree of the
/// element differs from 1 + min{j : d_j > 0}.
struct CensusEntry {
    Composition element;
    Signature signature;
    Int degree = 0;
    int formula_degree = 0;
    /// recursion_keeps_spread(element)
    bool boundary = false;

    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct OracleOptions {
    std::size_t cap = 10;
    bool waive_degree_formula = true;
    bool waive_omega_order = false;
    /// check_structure decomposes A_n(m) only up to this many elements
    Int decompose_max_size = 50000;
};

struct VerificationReport {
    std::string scope;
    std::vector<CheckResult> checks;     // sorted by name
    std::vector<CensusEntry> census;
    double seconds = 0;

    /// All non-waived checks passed.
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
    /// Adds counts, appends counterexamples up to the cap, concatenates
    /// census entries. Associative.
    void merge(const VerificationReport& other, std::size_t cap);
};

/// Check names.
namespace oracle_check {
inline constexpr const char* kSpread = "statistics.spread_partition_side";
inline constexpr const char* kDegree = "statistics.degree_partition_side";
inline constexpr const char* kOmegaChoices = "statistics.omega_order_independent";
inline constexpr const char* kSignature = "statistics.signature_reference";
inline constexpr const char* kSignatureSums = "statistics.signature_sums";
inline constexpr const char* kOmegaTau = "statistics.omega_tau";
inline constexpr const char* kOmegaContainment = "statistics.omega_containment";
/// spr(omega(a)) < spr(a) when omega(a) has n >= 2; reported, never fails a run
inline constexpr const char* kSpreadDecrease = "statistics.spread_decrease";
inline constexpr const char* kSignatureTau = "statistics.signature_tau";
inline constexpr const char* kDegreeFormula = "statistics.degree_formula";
inline constexpr const char* kGeneratingFunction = "statistics.rank_gf_gaussian";
inline constexpr const char* kClassPartition = "classes.partition";
inline constexpr const char* kClassTau = "classes.tau_stable";
inline constexpr const char* kHighestWeight = "classes.highest_weight";
inline constexpr const char* kClassNonempty = "classes.nonempty";
inline constexpr const char* kClassDegree = "classes.uniform_degree";
inline constexpr const char* kInvariance = "chains.signature_invariance";
inline constexpr const char* kChainLength = "chains.length_formula";
inline constexpr const char* kChainCount = "chains.count_components";
inline constexpr const char* kChainShape = "chains.initial_top_terminal_bottom";
inline constexpr const char* kComponentChoice = "chains.component_choice";
inline constexpr const char* kClosedForm = "chains.closed_form_colors";
inline constexpr const char* kTauDuality = "chains.tau_duality";
inline constexpr const char* kEndpointDuality = "chains.endpoint_duality";
inline constexpr const char* kDecomposition = "decomposition.partition";
inline constexpr const char* kSaturated = "decomposition.saturated";
inline constexpr const char* kDecompositionTau = "decomposition.tau_stable";
inline constexpr const char* kCertificate = "decomposition.certificate";
/// prefix for the SplitExtensionReport checks
inline constexpr const char* kSplitPrefix = "split.";
} // namespace oracle_check

VerificationReport check_statistics(int n, Int m, const OracleOptions& opts = {});
VerificationReport check_chains(int n, Int m, const OracleOptions& opts = {});
VerificationReport check_structure(int n, Int m, const OracleOptions& opts = {});
/// The three checks above merged.
VerificationReport verify_instance(int n, Int m, const OracleOptions& opts = {});

struct SweepOptions {
    Int max_size = 200000;
    int max_dim = 20;
    unsigned jobs = 1;
    OracleOptions oracle;
};

/// (n, m) with 0 <= n, m <= max_dim and C(m+n, m) <= max_size, sorted.
std::vector<std::pair<int, Int>> sweep_pairs(Int max_size, int max_dim);

/// verify_instance over sweep_pairs, merged in pair order.
VerificationReport run_sweep(const SweepOptions& opts);

std::string reproduce_element(const Composition& c);
std::string reproduce_instance(int n, Int m);

/// Pretty-printed JSON; timing only when requested.
std::string to_json(const VerificationReport& report, bool with_timing = false);
std::string to_text(const VerificationReport& report, bool with_timing = false);
/// One census entry per line: "[a_0,...] (d_0,...) degree formula boundary".
std::string census_text(const std::vector<CensusEntry>& census);

} // namespace unimodal

#endif // UNIMODAL_ORACLE_HPP
