#pragma once

#include <cstdint>
#include <vector>

#include "ecainfo/configuration.hpp"

namespace ecainfo {

enum class InputKind {
    single_cell,
    random_uniform,     ///< each cell i.i.d. uniform
    structured_density, ///< fixed black-cell count, random positions
};

const char* input_kind_name(InputKind k);

/// One black cell at index W/2 on an otherwise white ring. W must be odd.
Configuration single_cell_input(std::uint32_t width);

/// Every cell drawn i.i.d. uniform from splitmix64(seed), 64 cells per word.
Configuration random_input(std::uint32_t width, std::uint64_t seed);

/// Exactly n_black black cells at distinct uniform positions
/// (seeded partial Fisher-Yates). Throws if n_black > width.
Configuration structured_input(std::uint32_t width, std::uint32_t n_black, std::uint64_t seed);

/// Black-cell counts of the structured-density ensemble: 2, 5, 7, 10, 12,
/// ... 47, 50 (alternating +3/+2 increments, twenty values).
std::vector<std::uint32_t> structured_density_counts(int n_inputs = 20);

/// An ensemble input together with its provenance.
struct EnsembleInput {
    Configuration cfg;
    InputKind kind = InputKind::random_uniform;
    std::uint64_t seed = 0;
    std::uint32_t n_black = 0; ///< black-cell count of cfg
    int index = 0;
};

/// The per-representative input ensemble. Seeds come from
/// derive_seed(master_seed, representative, index, 0), so any work item can
/// be regenerated independently.
std::vector<EnsembleInput> make_ensemble(InputKind kind, std::uint32_t width, int n_inputs,
                                         std::uint64_t master_seed, int representative);

} // namespace ecainfo
