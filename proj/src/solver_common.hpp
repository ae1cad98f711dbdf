#pragma once

#include <optional>
#include <string>

#include "diamaug/solvers.hpp"

namespace diamaug::detail {

void require_connected(const Graph& g);

/// Yes-solution deleting `f`, with achieved diameter and diametral pair of
/// G - F filled in.
Solution with_deletion(const Graph& g, EdgeSet f, std::string method);
Solution without_solution(Verdict verdict, std::string method);

/// Smaller first, then lexicographically smaller.
bool better(const EdgeSet& candidate, const std::optional<EdgeSet>& incumbent);

}  // namespace diamaug::detail
