#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecainfo/evolve.hpp"

namespace ecainfo {

/// History lengths for the plug-in transfer-entropy estimator; log base is
/// fixed at 2 (results in bits).
struct TEConfig {
    int k = 1; ///< target history length
    int l = 1; ///< source history length
};

/// Plug-in (maximum-likelihood frequency) transfer entropy source -> target,
/// in bits. Series entries must be 0/1. One sample per time index
/// t in [max(k,l), n): next state x[t], target history x[t-1..t-k], source
/// history y[t-1..t-l]. Zero-count terms contribute nothing; the result is
/// clamped at 0.
///
/// Throws std::invalid_argument on length mismatch, non-bit values,
/// k or l < 1, or fewer than max(k,l)+1 entries.
double transfer_entropy(std::span<const std::uint8_t> target,
                        std::span<const std::uint8_t> source, const TEConfig& cfg = {});

/// W x W directed transfer entropies; source y = row, target x = column.
struct TEMatrix {
    std::uint32_t width = 0;
    std::vector<double> values; // row-major, values[y*width + x] = TE(y -> x)

    double at(std::uint32_t y, std::uint32_t x) const { return values[y * width + x]; }
    double& at(std::uint32_t y, std::uint32_t x) { return values[y * width + x]; }
};

enum class TEMatrixMode {
    automatic, ///< bit-packed batch path when k=l=1, per-pair otherwise
    per_pair,  ///< reference path: one histogram loop per ordered pair
};

/// All W^2 ordered pairwise TEs over a block of rows (time-major). Self-pairs
/// included. The batch and per-pair paths produce bit-identical results.
TEMatrix te_matrix_rows(std::span<const Configuration> rows, const TEConfig& cfg = {},
                        TEMatrixMode mode = TEMatrixMode::automatic);

/// te_matrix_rows applied to the field's post-burn-in analysis window.
TEMatrix te_matrix(const SpacetimeField& field, const TEConfig& cfg = {},
                   TEMatrixMode mode = TEMatrixMode::automatic);

/// Arithmetic mean of all W^2 entries, summed in fixed row-major order.
double mean_te(const TEMatrix& m);

namespace detail {
/// Shared final step of both estimator paths: TE in bits from the joint
/// histogram over symbols (x_next << (k+l)) | (x_hist << l) | y_hist.
double te_from_counts(std::span<const std::uint32_t> counts, int k, int l);
} // namespace detail

} // namespace ecainfo
