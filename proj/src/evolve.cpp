#include "ecainfo/evolve.hpp"

#include <stdexcept>

namespace ecainfo {

Configuration transform_config(const Configuration& cfg, Symmetry s) {
    switch (s) {
    case Symmetry::identity: return cfg;
    case Symmetry::conjugate: return cfg.conjugated();
    case Symmetry::reflect: return cfg.reflected();
    case Symmetry::conjugate_reflect: return cfg.reflected().conjugated();
    }
    return cfg;
}

namespace {

// result bit i = src bit (i-1 mod W): each cell sees its left neighbor.
void rotate_up_one(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                   std::uint32_t width) {
    const std::size_t n = src.size();
    const std::uint64_t wrap = (src[(width - 1) >> 6] >> ((width - 1) & 63)) & 1;
    for (std::size_t j = n; j-- > 1;) dst[j] = (src[j] << 1) | (src[j - 1] >> 63);
    dst[0] = (src[0] << 1) | wrap;
    const std::uint32_t top = width & 63;
    if (top != 0) dst[n - 1] &= (std::uint64_t{1} << top) - 1;
}

// result bit i = src bit (i+1 mod W): each cell sees its right neighbor.
void rotate_down_one(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst,
                     std::uint32_t width) {
    const std::size_t n = src.size();
    const std::uint64_t wrap = src[0] & 1;
    for (std::size_t j = 0; j + 1 < n; ++j) dst[j] = (src[j] >> 1) | (src[j + 1] << 63);
    dst[n - 1] = src[n - 1] >> 1;
    dst[(width - 1) >> 6] |= wrap << ((width - 1) & 63);
}

} // namespace

Configuration step(const Configuration& cfg, Rule rule) {
    const std::uint32_t w = cfg.width();
    if (w < 3) throw std::invalid_argument("step requires width >= 3");

    // Bit-parallel update: OR together the minterms of the rule's truth table
    // over the left/center/right neighbor masks. Semantics are identical to a
    // per-cell rule_output lookup; this form touches each word 8 times instead
    // of each cell once.
    const std::size_t n = cfg.words().size();
    std::vector<std::uint64_t> left(n), right(n);
    rotate_up_one(cfg.words(), left, w);
    rotate_down_one(cfg.words(), right, w);

    Configuration out(w);
    const std::span<const std::uint64_t> c = cfg.words();
    std::span<std::uint64_t> o = out.words();
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t L = left[j], C = c[j], R = right[j];
        std::uint64_t acc = 0;
        for (int idx = 0; idx < 8; ++idx) {
            if (((rule.code >> idx) & 1) == 0) continue;
            acc |= ((idx & 4) ? L : ~L) & ((idx & 2) ? C : ~C) & ((idx & 1) ? R : ~R);
        }
        o[j] = acc;
    }
    const std::uint32_t top = w & 63;
    if (top != 0) o[n - 1] &= (std::uint64_t{1} << top) - 1;
    return out;
}

SpacetimeField evolve(const Configuration& input, Rule rule, std::uint32_t steps,
                      std::uint32_t burn_in) {
    if (steps < 1) throw std::invalid_argument("evolve requires steps >= 1");
    if (burn_in >= steps) throw std::invalid_argument("burn_in must be < steps");

    SpacetimeField field;
    field.rule = rule;
    field.burn_in = burn_in;
    field.rows.reserve(steps + 1);
    field.rows.push_back(input);
    for (std::uint32_t t = 0; t < steps; ++t) field.rows.push_back(step(field.rows.back(), rule));
    return field;
}

} // namespace ecainfo
