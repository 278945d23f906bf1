#ifndef UNIMODAL_TRANSVERSAL_HPP
#define UNIMODAL_TRANSVERSAL_HPP

// The raising and lowering algorithms and the transversal chains they trace.
//
// Both algorithms start from a maximal pair given by its left index i. The
// raising algorithm moves units leftward across the current pair, drifting
// one pair to the left whenever the neighbours balance, and stops at an
// initial element (a_1 = 0). The lowering algorithm mirrors it and stops at a
// terminal element (a_{n-1} = 0). Every step is a Hasse cover and leaves the
// signature unchanged.

#include <optional>
#include <vector>

#include "unimodal/poset.hpp"

namespace unimodal {

/// A saturated chain stored as its highest-weight element and the colors of
/// the covers met walking down from it.
struct Chain {
    Composition top;
    std::vector<int> colors;

    std::size_t length() const noexcept { return colors.size(); }
    /// top first, lowest weight last
    std::vector<Composition> elements() const;
    Composition bottom() const;

    friend bool operator==(const Chain&, const Chain&) = default;
};

/// Builds a chain from consecutive elements ordered by decreasing weight.
/// Throws InvalidArgument if a consecutive pair is not a cover.
Chain chain_from_elements(const std::vector<Composition>& elements);

bool is_initial(const Composition& c);
bool is_terminal(const Composition& c);

/// Trajectory of the raising algorithm from c (inclusive) to an initial
/// element, weight increasing. Throws InvalidArgument unless i is in M(c).
std::vector<Composition> raise_run(const Composition& c, int i);
/// Trajectory of the lowering algorithm from c to a terminal element.
std::vector<Composition> lower_run(const Composition& c, int i);

struct RunEnd {
    Composition end;
    Int steps = 0;
};

/// Endpoint and step count of raise_run without materializing it.
RunEnd raise_to_initial(const Composition& c, int i);
/// Endpoint and step count of lower_run without materializing it.
RunEnd lower_to_terminal(const Composition& c, int i);
/// First move of the raising (lowering) algorithm from maximal pair i, or
/// nullopt when c is already initial (terminal).
std::optional<Composition> raise_step(const Composition& c, int i);
std::optional<Composition> lower_step(const Composition& c, int i);

/// The element `steps` lowering moves below c. Throws InvalidArgument when
/// the run ends first.
Composition lower_by(const Composition& c, int i, Int steps);

/// T_i(c): the chain through c from an initial top to a terminal bottom.
Chain transversal_chain(const Composition& c, int i);
/// Length of T_i(c) without materializing it.
Int transversal_length(const Composition& c, int i);

/// One chain per component of M(c), in left-to-right component order.
std::vector<Chain> chains_through(const Composition& c);

/// Colors of T_0(c) for initial c: color j repeated a_0 - a_j - a_{j+1}
/// times (a_{n+1} = 0). Throws InvalidArgument when c is not initial and
/// InconsistencyError on a negative multiplicity.
std::vector<int> color_sequence_closed_form(const Composition& c);
/// (a_2, ..., a_n, 0, a_0) for initial c.
Composition terminal_of_initial(const Composition& c);

/// Image of a chain under tau: top is tau(bottom), colors reversed and
/// mapped j -> n+1-j.
Chain tau(const Chain& chain);

} // namespace unimodal

#endif // UNIMODAL_TRANSVERSAL_HPP
