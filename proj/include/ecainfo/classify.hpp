#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecainfo/ensemble.hpp"
#include "ecainfo/transfer_entropy.hpp"
#include "ecainfo/wolfram.hpp"

namespace ecainfo {

/// Decision constants for class assignment. te_threshold is re-computed per
/// run (max single-cell <TE> over Wolfram I/II representatives); 0.024 bits
/// is the published reference value, kept here as the pre-run default.
struct ClassificationThresholds {
    double te_threshold = 0.024;  ///< bits; boundary between "low" and "high" <TE>
    double change_threshold = 10; ///< one order of magnitude
    double zero_floor = 1e-6;     ///< bits; denominator floor for the normalized change
};

/// Full experiment parameters. Defaults reproduce the reference setup:
/// width 101, 250 steps, 50-step burn-in, twenty ensemble inputs, k=l=1.
struct ExperimentConfig {
    std::uint32_t width = 101;
    std::uint32_t steps = 250;
    std::uint32_t burn_in = 50;
    int n_inputs = 20;
    TEConfig te{};
    std::uint64_t master_seed = 42;
    InputKind ensemble = InputKind::random_uniform;
    ClassificationThresholds thresholds{};

    /// Rows in the analysis window (after burn-in).
    std::uint32_t window_rows() const { return steps - burn_in; }
    /// Transitions per cell pair available to the estimator.
    std::uint32_t usable_samples() const {
        return window_rows() - static_cast<std::uint32_t>(std::max(te.k, te.l));
    }

    void validate() const; ///< throws std::invalid_argument
};

/// <TE>: mean of the W^2 pairwise TEs over the burned-in patch.
double patch_mean_te(Rule rule, const Configuration& input, const ExperimentConfig& cfg);

struct SymmetryMaxTE {
    double te = 0.0;
    Symmetry symmetry = Symmetry::identity;
};

/// Max of patch_mean_te over the allowed input transforms; ties break in
/// variant order identity < conjugate < reflect < conjugate_reflect.
SymmetryMaxTE symmetry_max_te(Rule rule, const Configuration& input, const ExperimentConfig& cfg,
                              std::span<const Symmetry> allowed);

/// max over r of |te_r - te1| / max(te1, zero_floor).
double max_normalized_change(double te1, std::span<const double> te_r, double zero_floor);

/// te1 above the TE threshold -> I3; else change at or above the change
/// threshold -> I2; else I1.
InfoClass assign_class(double te1, double max_change, const ClassificationThresholds& thresholds);

struct SingleCellRecord {
    Rule representative;
    double te1 = 0.0;
    Symmetry symmetry = Symmetry::identity;
};

/// Highest single-cell <TE> over representatives labeled Wolfram I or II.
/// Throws if a record's representative has no label.
double compute_te_threshold(std::span<const SingleCellRecord> records, const WolframLabels& labels);

struct ClassificationRecord {
    Rule representative;
    WolframClass wolfram_class = WolframClass::II;
    double te1 = 0.0;
    Symmetry te1_symmetry = Symmetry::identity;
    std::vector<double> te_r;          ///< one per ensemble input
    std::vector<Symmetry> te_r_symmetries;
    double te_r_min = 0.0;
    double te_r_max = 0.0;
    double max_change = 0.0;
    InfoClass info_class = InfoClass::I1;
};

struct ClassificationResult {
    ExperimentConfig config;
    double te_threshold = 0.0; ///< computed, not the reference default
    std::vector<ClassificationRecord> records; ///< one per representative, ascending
};

/// The full experiment: single-cell pass (identity/conjugate variants),
/// threshold from the Wolfram I/II labels, ensemble pass (all four
/// variants), normalized change and class per representative.
/// Deterministic for a fixed master seed regardless of n_threads.
ClassificationResult run_classification(const ExperimentConfig& cfg, int n_threads = 0);

/// Representatives violating the empty-region property (te1 above threshold
/// AND change at/above the change threshold). Expected empty on every run.
std::vector<Rule> l_shape_violations(const ClassificationResult& result);

} // namespace ecainfo
