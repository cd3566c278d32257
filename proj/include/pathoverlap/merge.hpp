#pragma once

#include <vector>

#include "pathoverlap/model.hpp"

namespace pathoverlap {

/// Disjoint union; every id is prefixed with `g<index>:` so documents never
/// collide and nothing is unified. Merging an empty list gives an empty
/// graph.
PathwayGraph merge_graphs(const std::vector<PathwayGraph>& graphs);

} // namespace pathoverlap
