#pragma once

// Definitional checks: sink listings per subcube, the unique-sink property
// by exhaustive scan, bijectivity of the outmap table, and exhaustive
// enumeration in small dimension.

#include <vector>

#include "uso/cube.hpp"
#include "uso/outmap.hpp"

namespace uso {

// is_uso walks all 3^n subcubes.
inline constexpr int kMaxVerifyDim = 12;
// enumerate_usos walks all 2^(n 2^(n-1)) orientations.
inline constexpr int kMaxEnumDim = 3;

class NotUsoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Vertices of [lo:hi] with no outgoing edge inside the subcube, i.e.
// s(w) disjoint from carrier, in ascending vertex order.
std::vector<Mask> subcube_sinks(const Outmap& m, const Subcube& c);

// Exactly one sink in every subcube.  Throws std::invalid_argument above
// kMaxVerifyDim.
bool is_uso(const Outmap& m);

// The unique vertex with s(v) = 0, found by linear scan.  Throws
// NotUsoError when the sink count differs from one.
Mask global_sink(const Outmap& m);

// True iff the sink of the whole cube lies in the subcube.  Requires a USO
// (unchecked); the sink is located via scan.
bool decide(const Outmap& m, const Subcube& c);

// True iff the table is a permutation of the vertex set.
bool is_bijection(const Outmap& m);

// Every USO of the n-cube exactly once, in ascending order of the packed
// edge-direction assignment.
std::vector<Outmap> enumerate_usos(int n);

}  // namespace uso
