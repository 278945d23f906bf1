#ifndef UNIMODAL_IO_HPP
#define UNIMODAL_IO_HPP

// Text, JSON and Graphviz renderings of chains and decompositions.

#include <string>
#include <string_view>

#include "unimodal/structure.hpp"
#include "unimodal/transversal.hpp"

namespace unimodal {

/// {"top":[...],"colors":[...]}
std::string chain_to_json(const Chain& chain);
Chain chain_from_json(std::string_view text);

/// {"n":..,"m":..,"classes":[{"signature":[..],"r":..,"ell":..,"chains":[..]}]}
std::string to_json(const Decomposition& dec);
/// Inverse of to_json; the index is rebuilt. Throws InvalidArgument on
/// malformed input.
Decomposition decomposition_from_json(std::string_view text);

/// Hasse diagram of A_n(m). Nodes are compositions labeled by weight;
/// edges on a chain carry chain=<id> and are drawn bold, the rest dashed.
std::string to_dot(const Decomposition& dec);

/// One line per chain: "chain <id> class (d) length L top [..] colors c,c,..".
std::string to_text(const Decomposition& dec);

} // namespace unimodal

#endif // UNIMODAL_IO_HPP
