#pragma once

// Shared test instances.

#include "uso/outmap.hpp"

namespace fixtures {

// Reference 3-cube USO: sink {1,3}, source {} (outmap {1,2,3}), and the
// orbit of {} runs {} -> {1,2,3} -> {2} -> {1,3} -> {} with period 4.
inline uso::Outmap reference3() { return uso::Outmap{3, {7, 6, 5, 4, 3, 0, 1, 2}}; }

// Orientation of the square whose four edges form a directed cycle: valid
// orientation, no sink in the full square, so not a USO.
inline uso::Outmap cyclic_square() { return uso::Outmap{2, {1, 2, 2, 1}}; }

// One-dimensional non-orientation: both vertices claim the edge incoming.
inline uso::Outmap two_sink_edge() { return uso::Outmap{1, {0, 0}}; }

// 3-cube USO whose {}-orbit has length 3 ({} -> {1,3} -> {1,2} -> {}).
// With a 2-qubit counting register its convergent denominators are all
// powers of two, so period recovery can never validate: a deterministic
// exhaustion case.
inline uso::Outmap orbit3_uso3() { return uso::Outmap{3, {5, 6, 7, 0, 2, 3, 1, 4}}; }

}  // namespace fixtures
