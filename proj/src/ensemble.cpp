#include "ecainfo/ensemble.hpp"

#include <numeric>
#include <stdexcept>

#include "ecainfo/rng.hpp"

namespace ecainfo {

const char* input_kind_name(InputKind k) {
    switch (k) {
    case InputKind::single_cell: return "single";
    case InputKind::random_uniform: return "random";
    case InputKind::structured_density: return "density";
    }
    return "?";
}

Configuration single_cell_input(std::uint32_t width) {
    if (width % 2 == 0) throw std::invalid_argument("single-cell input requires odd width");
    Configuration cfg(width);
    cfg.set(width / 2, true);
    return cfg;
}

Configuration random_input(std::uint32_t width, std::uint64_t seed) {
    Configuration cfg(width);
    SplitMix64 rng(seed);
    auto words = cfg.words();
    for (std::uint64_t& w : words) w = rng.next();
    const std::uint32_t top = width & 63;
    if (top != 0) words.back() &= (std::uint64_t{1} << top) - 1;
    return cfg;
}

Configuration structured_input(std::uint32_t width, std::uint32_t n_black, std::uint64_t seed) {
    if (n_black > width) throw std::invalid_argument("n_black exceeds width");
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> pos(width);
    std::iota(pos.begin(), pos.end(), 0);
    Configuration cfg(width);
    for (std::uint32_t i = 0; i < n_black; ++i) {
        const std::uint32_t j = i + static_cast<std::uint32_t>(rng.next_below(width - i));
        std::swap(pos[i], pos[j]);
        cfg.set(pos[i], true);
    }
    return cfg;
}

std::vector<std::uint32_t> structured_density_counts(int n_inputs) {
    std::vector<std::uint32_t> counts;
    counts.reserve(n_inputs);
    std::uint32_t v = 2;
    for (int i = 0; i < n_inputs; ++i) {
        counts.push_back(v);
        v += (i % 2 == 0) ? 3 : 2;
    }
    return counts;
}

std::vector<EnsembleInput> make_ensemble(InputKind kind, std::uint32_t width, int n_inputs,
                                         std::uint64_t master_seed, int representative) {
    if (n_inputs < 1) throw std::invalid_argument("ensemble needs at least one input");
    std::vector<EnsembleInput> out;
    out.reserve(n_inputs);
    const auto counts =
        kind == InputKind::structured_density ? structured_density_counts(n_inputs)
                                              : std::vector<std::uint32_t>{};
    for (int i = 0; i < n_inputs; ++i) {
        EnsembleInput in;
        in.kind = kind;
        in.index = i;
        in.seed = derive_seed(master_seed, representative, i, 0);
        switch (kind) {
        case InputKind::single_cell: in.cfg = single_cell_input(width); break;
        case InputKind::random_uniform: in.cfg = random_input(width, in.seed); break;
        case InputKind::structured_density:
            in.cfg = structured_input(width, counts[i], in.seed);
            break;
        }
        in.n_black = in.cfg.count_ones();
        out.push_back(std::move(in));
    }
    return out;
}

} // namespace ecainfo
