#pragma once

// Subset/bitmask arithmetic and hypercube interval combinatorics.
//
// Vertices of the n-cube are subsets of [n] = {1,...,n}, stored as bit
// masks with element i on bit i-1.  The same encoding serves as vertex
// label, direction set, and outmap value throughout the library.

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uso {

using Mask = std::uint32_t;

// Core mask operations support dimensions up to 30; dense-table modules
// document their own tighter caps.
inline constexpr int kMaxDim = 30;

inline void check_dim(int n, int cap = kMaxDim) {
    if (n < 1 || n > cap) {
        throw std::invalid_argument("dimension " + std::to_string(n) +
                                    " outside supported range [1, " + std::to_string(cap) + "]");
    }
}

inline Mask full_mask(int n) {
    check_dim(n);
    return (Mask{1} << n) - 1;
}

// Mask of the single element i (1-based).
inline Mask element(int i) { return Mask{1} << (i - 1); }

inline Mask sym_diff(Mask a, Mask b) { return a ^ b; }

inline bool is_subset(Mask a, Mask b) { return (a & b) == a; }

inline int set_size(Mask m) { return std::popcount(m); }

// Interval [lo:hi] = { w | lo subseteq w subseteq hi }.
struct Subcube {
    Mask lo = 0;
    Mask hi = 0;

    Subcube() = default;
    Subcube(Mask lo_, Mask hi_) : lo(lo_), hi(hi_) {
        if (!is_subset(lo, hi)) {
            throw std::invalid_argument("subcube interval requires lo subseteq hi");
        }
    }

    bool operator==(const Subcube&) const = default;
};

inline Subcube vertex_cube(Mask v) { return Subcube{v, v}; }

inline Subcube full_cube(int n) { return Subcube{0, full_mask(n)}; }

// Free directions of the interval.
inline Mask carrier(const Subcube& c) { return c.hi ^ c.lo; }

inline int subcube_dim(const Subcube& c) { return set_size(carrier(c)); }

inline bool contains(const Subcube& c, Mask w) {
    return is_subset(c.lo, w) && is_subset(w, c.hi);
}

// Lower facet [0 : [n]\{lambda}] and upper facet [{lambda} : [n]] of the
// full n-cube, for the direction lambda in [1, n].
inline std::pair<Subcube, Subcube> lambda_facets(int n, int lambda) {
    Mask full = full_mask(n);
    if (lambda < 1 || lambda > n) {
        throw std::invalid_argument("facet direction out of range");
    }
    Mask bit = element(lambda);
    return {Subcube{0, full & ~bit}, Subcube{bit, full}};
}

// Visits every subset of `mask` exactly once, in ascending numeric order.
template <typename Fn>
void for_each_subset(Mask mask, Fn&& fn) {
    Mask s = 0;
    while (true) {
        fn(s);
        if (s == mask) break;
        s = (s - mask) & mask;  // next subset of mask, ascending
    }
}

// Visits each of the 3^n subcubes exactly once: lo over all vertices,
// carrier over subsets of the complement of lo.
template <typename Fn>
void for_each_subcube(int n, Fn&& fn) {
    check_dim(n);
    Mask full = full_mask(n);
    for (Mask lo = 0;; ++lo) {
        for_each_subset(full & ~lo, [&](Mask carr) { fn(Subcube{lo, lo | carr}); });
        if (lo == full) break;
    }
}

inline std::vector<Subcube> all_subcubes(int n) {
    std::vector<Subcube> out;
    for_each_subcube(n, [&](const Subcube& c) { out.push_back(c); });
    return out;
}

// Renders a mask in set notation, e.g. 5 -> "{1,3}", 0 -> "{}".
inline std::string set_notation(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 1; m != 0; ++i) {
        if (m & 1) {
            if (!first) out += ',';
            out += std::to_string(i);
            first = false;
        }
        m >>= 1;
    }
    out += '}';
    return out;
}

// Parses a mask from either decimal ("5") or set notation ("{1,3}").
inline Mask parse_mask(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty mask");
    if (text.front() == '{') {
        if (text.back() != '}') throw std::invalid_argument("unterminated set notation: " + text);
        Mask m = 0;
        std::size_t pos = 1;
        while (pos + 1 < text.size()) {
            std::size_t used = 0;
            int elem = std::stoi(text.substr(pos), &used);
            if (elem < 1 || elem > kMaxDim) throw std::invalid_argument("set element out of range: " + text);
            m |= element(elem);
            pos += used;
            if (pos + 1 < text.size()) {
                if (text[pos] != ',') throw std::invalid_argument("malformed set notation: " + text);
                ++pos;
            }
        }
        return m;
    }
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used != text.size() || v > full_mask(kMaxDim)) {
        throw std::invalid_argument("malformed mask: " + text);
    }
    return static_cast<Mask>(v);
}

}  // namespace uso
