#pragma once

// Outmap tables: s(v) = set of directions pointing out of vertex v.
// Constructors, generators, the flip/combine algebra, and the "uso-map v1"
// text format.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uso/cube.hpp"

namespace uso {

// Dense tables hold 2^n entries; generation is capped here.
inline constexpr int kMaxGenDim = 20;

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Outmap {
  public:
    // Takes ownership of a full table: table.size() == 2^n and every entry
    // a subset of [n], else std::invalid_argument.
    Outmap(int n, std::vector<Mask> table);

    int dim() const { return n_; }
    std::size_t size() const { return table_.size(); }

    Mask eval(Mask v) const {
        if (v >= table_.size()) throw std::out_of_range("vertex outside cube");
        return table_[v];
    }

    const std::vector<Mask>& table() const { return table_; }

    bool operator==(const Outmap&) const = default;

  private:
    int n_;
    std::vector<Mask> table_;
};

// True iff every edge gets exactly one direction: for each direction
// lambda and each edge {v, v + lambda}, lambda lies in exactly one of the
// two endpoint outmap values.
bool is_orientation(const Outmap& m);

// Reverses every edge along directions in lambda: s'(v) = lambda xor s(v).
// Maps orientations to orientations and preserves the unique-sink property.
Outmap flip(const Outmap& m, Mask lambda);

enum class StackDir { up, down };

// Product construction on dimension n+1 from two n-dimensional maps: the
// lower facet carries `lower`, the upper facet carries `upper`, and all
// connecting edges point in `dir`.
Outmap combine(const Outmap& lower, const Outmap& upper, StackDir dir);

// Uniform orientation u_{n,a}: s(v) = v xor a.  A USO with sink a.
Outmap uniform(int n, Mask a);

// The first-flip family: psi(1) = [1, 0] and
// psi(n+1) = combine(psi(n), uniform(n, 0), up).
// Its outmap permutation moves the empty set on an orbit of length 2^n.
Outmap psi(int n);

// Random USO built as a seeded product of combines and flips.  Spans a
// strict (and non-uniformly sampled) subset of all USOs; adequate as a
// test-instance generator, not as a uniform sampler.
Outmap random_uso(int n, std::uint64_t seed);

// "uso-map v1" text format: header, dimension line, 2^n entries in vertex
// order, trailing newline.
std::string serialize(const Outmap& m);

// Strict parser: rejects bad header or dimension, entry count mismatch,
// out-of-range entries, and a missing trailing newline.
Outmap deserialize(std::string_view text);

}  // namespace uso
