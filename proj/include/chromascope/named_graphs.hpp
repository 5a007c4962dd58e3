#pragma once

#include <string>

#include "chromascope/graph.hpp"

namespace chromascope {

/// Resolves a graph argument: an existing file path (edge list or DIMACS),
/// or one of the built-in names
///
///   K<n>  complete      C<n>  cycle          M<k>  Mycielski graph
///   E<n>  edgeless      KG<n>,<k> Kneser     G1..G10 four-triangle catalog
///   petersen            grotzsch
Graph resolve_graph(const std::string& spec);

}  // namespace chromascope
