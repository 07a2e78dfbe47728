#include "uso/outmap.hpp"

#include <charconv>

#include "uso/kernels.hpp"
#include "uso/rng.hpp"

namespace uso {

Outmap::Outmap(int n, std::vector<Mask> table) : n_(n), table_(std::move(table)) {
    check_dim(n, kMaxGenDim);
    if (table_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("outmap table must hold 2^n entries");
    }
    const Mask full = full_mask(n);
    for (Mask v : table_) {
        if (!is_subset(v, full)) {
            throw std::invalid_argument("outmap entry is not a subset of the ground set");
        }
    }
}

bool is_orientation(const Outmap& m) {
    return kernels::active().orientation_ok(m.table().data(), m.dim());
}

Outmap flip(const Outmap& m, Mask lambda) {
    if (!is_subset(lambda, full_mask(m.dim()))) {
        throw std::invalid_argument("flip set must be a subset of the ground set");
    }
    std::vector<Mask> out(m.size());
    kernels::active().xor_table(m.table().data(), out.data(), out.size(), lambda);
    return Outmap{m.dim(), std::move(out)};
}

Outmap combine(const Outmap& lower, const Outmap& upper, StackDir dir) {
    const int n = lower.dim();
    if (upper.dim() != n) {
        throw std::invalid_argument("combine requires equal dimensions");
    }
    check_dim(n + 1, kMaxGenDim);
    const Mask top = element(n + 1);
    const std::size_t half = std::size_t{1} << n;
    std::vector<Mask> out(half << 1);
    // Vertices without the new element evaluate through `lower`, the rest
    // through `upper`; the connecting edges all point toward the chosen
    // facet, so exactly one side gains the new direction.
    for (std::size_t v = 0; v < half; ++v) {
        out[v] = lower.table()[v] | (dir == StackDir::up ? top : 0);
        out[v | top] = upper.table()[v] | (dir == StackDir::down ? top : 0);
    }
    return Outmap{n + 1, std::move(out)};
}

Outmap uniform(int n, Mask a) {
    check_dim(n, kMaxGenDim);
    if (!is_subset(a, full_mask(n))) {
        throw std::invalid_argument("uniform target must be a subset of the ground set");
    }
    std::vector<Mask> out(std::size_t{1} << n);
    kernels::active().iota_xor(out.data(), out.size(), a);
    return Outmap{n, std::move(out)};
}

Outmap psi(int n) {
    check_dim(n, kMaxGenDim);
    // Unfolds the first-flip recursion directly:
    //   s_{n+1}(v) = {n+1} union s_n(v)   if n+1 not in v,
    //   s_{n+1}(v) = v \ {n+1}            otherwise.
    std::vector<Mask> table{1, 0};
    for (int k = 1; k < n; ++k) {
        const Mask top = element(k + 1);
        const std::size_t half = table.size();
        std::vector<Mask> next(half << 1);
        for (std::size_t v = 0; v < half; ++v) {
            next[v] = top | table[v];
            next[v | top] = static_cast<Mask>(v);
        }
        table = std::move(next);
    }
    return Outmap{n, std::move(table)};
}

Outmap random_uso(int n, std::uint64_t seed) {
    check_dim(n, kMaxGenDim);
    Rng rng(seed);
    // Build upward by combining two independently generated USOs of the
    // next-lower dimension, then flip a random direction set.  Flips and
    // combines both preserve the unique-sink property, so the result is a
    // USO by construction; the sampling is not uniform over all USOs.
    struct Builder {
        Rng& rng;
        Outmap build(int dim) {
            if (dim == 1) {
                Mask a = rng.coin() ? 1 : 0;
                return uniform(1, a);
            }
            Outmap lower = build(dim - 1);
            Outmap upper = build(dim - 1);
            StackDir dir = rng.coin() ? StackDir::up : StackDir::down;
            Outmap stacked = combine(lower, upper, dir);
            Mask lambda = static_cast<Mask>(rng.below(std::uint64_t{1} << dim));
            return flip(stacked, lambda);
        }
    };
    return Builder{rng}.build(n);
}

std::string serialize(const Outmap& m) {
    std::string out = "uso-map v1\nn=" + std::to_string(m.dim()) + "\n";
    const std::vector<Mask>& t = m.table();
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += std::to_string(t[i]);
        out += (i % 16 == 15 || i + 1 == t.size()) ? '\n' : ' ';
    }
    return out;
}

Outmap deserialize(std::string_view text) {
    constexpr std::string_view header = "uso-map v1\n";
    if (text.substr(0, header.size()) != header) {
        throw ParseError("missing 'uso-map v1' header");
    }
    text.remove_prefix(header.size());
    if (text.substr(0, 2) != "n=") throw ParseError("missing dimension line");
    text.remove_prefix(2);
    std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos) throw ParseError("unterminated dimension line");
    int n = 0;
    {
        auto [p, ec] = std::from_chars(text.data(), text.data() + eol, n);
        if (ec != std::errc{} || p != text.data() + eol) {
            throw ParseError("malformed dimension");
        }
    }
    if (n < 1 || n > kMaxGenDim) throw ParseError("dimension out of range");
    text.remove_prefix(eol + 1);

    if (text.empty() || text.back() != '\n') throw ParseError("missing trailing newline");

    const std::size_t want = std::size_t{1} << n;
    const Mask full = full_mask(n);
    std::vector<Mask> table;
    table.reserve(want);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t' || text[pos] == '\r') {
            ++pos;
            continue;
        }
        unsigned long v = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc{} || p == text.data() + pos) {
            throw ParseError("malformed table entry");
        }
        if (v > full) throw ParseError("table entry out of range for dimension");
        if (table.size() == want) throw ParseError("too many table entries");
        table.push_back(static_cast<Mask>(v));
        pos = static_cast<std::size_t>(p - text.data());
    }
    if (table.size() != want) throw ParseError("too few table entries");
    return Outmap{n, std::move(table)};
}

}  // namespace uso
