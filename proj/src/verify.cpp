#include "uso/verify.hpp"

#include "uso/kernels.hpp"

namespace uso {

std::vector<Mask> subcube_sinks(const Outmap& m, const Subcube& c) {
    if (!is_subset(c.hi, full_mask(m.dim()))) {
        throw std::invalid_argument("subcube outside the cube");
    }
    const Mask carr = carrier(c);
    std::vector<Mask> sinks;
    for_each_subset(carr, [&](Mask s) {
        const Mask w = c.lo | s;
        if ((m.eval(w) & carr) == 0) sinks.push_back(w);
    });
    return sinks;
}

bool is_uso(const Outmap& m) {
    check_dim(m.dim(), kMaxVerifyDim);
    if (!is_orientation(m)) return false;
    bool ok = true;
    for_each_subcube(m.dim(), [&](const Subcube& c) {
        if (!ok) return;
        // One sink per subcube, checked definitionally.
        const Mask carr = carrier(c);
        int sinks = 0;
        for_each_subset(carr, [&](Mask s) {
            if ((m.table()[c.lo | s] & carr) == 0) ++sinks;
        });
        if (sinks != 1) ok = false;
    });
    return ok;
}

Mask global_sink(const Outmap& m) {
    const kernels::ZeroScan scan =
        kernels::active().masked_zero_scan(m.table().data(), m.size(), full_mask(m.dim()));
    if (scan.count != 1) {
        throw NotUsoError("expected exactly one global sink, found " +
                          std::to_string(scan.count));
    }
    return static_cast<Mask>(scan.first);
}

bool decide(const Outmap& m, const Subcube& c) {
    if (!is_subset(c.hi, full_mask(m.dim()))) {
        throw std::invalid_argument("subcube outside the cube");
    }
    return contains(c, global_sink(m));
}

bool is_bijection(const Outmap& m) {
    std::vector<bool> seen(m.size(), false);
    for (Mask v : m.table()) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<Outmap> enumerate_usos(int n) {
    check_dim(n, kMaxEnumDim);
    // One bit per edge: edge (v, v + 2^b) with b-th bit clear in v, set
    // when the edge points downward (toward v).  Walk all assignments.
    const std::size_t verts = std::size_t{1} << n;
    std::vector<std::pair<Mask, Mask>> edges;  // (lower endpoint, direction bit)
    for (Mask v = 0; v < verts; ++v) {
        for (int b = 0; b < n; ++b) {
            if ((v & (Mask{1} << b)) == 0) edges.emplace_back(v, Mask{1} << b);
        }
    }
    std::vector<Outmap> out;
    std::vector<Mask> table(verts);
    const std::uint64_t assignments = std::uint64_t{1} << edges.size();
    for (std::uint64_t bits = 0; bits < assignments; ++bits) {
        std::fill(table.begin(), table.end(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [v, dir] = edges[e];
            if (bits >> e & 1) {
                table[v | dir] |= dir;  // points toward v: out at upper endpoint
            } else {
                table[v] |= dir;
            }
        }
        Outmap m{n, table};
        if (is_uso(m)) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace uso
