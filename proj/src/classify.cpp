#include "ecainfo/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ecainfo/parallel.hpp"
#include "ecainfo/rng.hpp"

namespace ecainfo {

void ExperimentConfig::validate() const {
    if (width < 3) throw std::invalid_argument("width must be >= 3");
    if (width % 2 == 0) throw std::invalid_argument("width must be odd (centered single cell)");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (burn_in >= steps) throw std::invalid_argument("burn_in must be < steps");
    if (n_inputs < 1) throw std::invalid_argument("n_inputs must be >= 1");
    if (te.k < 1 || te.l < 1) throw std::invalid_argument("history lengths must be >= 1");
    if (window_rows() <= static_cast<std::uint32_t>(std::max(te.k, te.l)))
        throw std::invalid_argument("analysis window too short for history length");
    if (thresholds.te_threshold <= 0 || thresholds.change_threshold <= 1 ||
        thresholds.zero_floor <= 0)
        throw std::invalid_argument("invalid thresholds");
}

double patch_mean_te(Rule rule, const Configuration& input, const ExperimentConfig& cfg) {
    const SpacetimeField field = evolve(input, rule, cfg.steps, cfg.burn_in);
    return mean_te(te_matrix(field, cfg.te));
}

SymmetryMaxTE symmetry_max_te(Rule rule, const Configuration& input, const ExperimentConfig& cfg,
                              std::span<const Symmetry> allowed) {
    if (allowed.empty()) throw std::invalid_argument("no symmetry variants allowed");
    SymmetryMaxTE best{-1.0, Symmetry::identity};
    for (Symmetry s : allowed) {
        const double te = patch_mean_te(rule, transform_config(input, s), cfg);
        if (te > best.te) best = {te, s};
    }
    return best;
}

double max_normalized_change(double te1, std::span<const double> te_r, double zero_floor) {
    if (te_r.empty()) throw std::invalid_argument("ensemble values required");
    const double denom = std::max(te1, zero_floor);
    double best = 0.0;
    for (double v : te_r) best = std::max(best, std::abs(v - te1) / denom);
    return best;
}

InfoClass assign_class(double te1, double max_change, const ClassificationThresholds& thresholds) {
    if (te1 > thresholds.te_threshold) return InfoClass::I3;
    if (max_change >= thresholds.change_threshold) return InfoClass::I2;
    return InfoClass::I1;
}

double compute_te_threshold(std::span<const SingleCellRecord> records,
                            const WolframLabels& labels) {
    double best = 0.0;
    for (const SingleCellRecord& rec : records) {
        const WolframClass c = labels.at(rec.representative); // throws if unlabeled
        if (c == WolframClass::I || c == WolframClass::II) best = std::max(best, rec.te1);
    }
    return best;
}

namespace {

constexpr std::array<Symmetry, 2> kSingleCellSymmetries{Symmetry::identity, Symmetry::conjugate};

} // namespace

ClassificationResult run_classification(const ExperimentConfig& cfg, int n_threads) {
    cfg.validate();
    const unsigned workers = resolve_thread_count(n_threads);
    const std::vector<Rule>& reps = representatives();
    const WolframLabels& labels = WolframLabels::bundled();

    // Single-cell pass. The centered input is reflection-symmetric, so only
    // the identity and conjugate variants can differ.
    std::vector<SingleCellRecord> single(reps.size());
    const Configuration single_input = single_cell_input(cfg.width);
    parallel_for_index(reps.size(), workers, [&](std::size_t i) {
        const SymmetryMaxTE r = symmetry_max_te(reps[i], single_input, cfg, kSingleCellSymmetries);
        single[i] = {reps[i], r.te, r.symmetry};
    });

    ClassificationResult result;
    result.config = cfg;
    result.te_threshold = compute_te_threshold(single, labels);

    // Ensemble pass: one task per (representative, input), all four variants.
    struct EnsembleCell {
        double te = 0.0;
        Symmetry symmetry = Symmetry::identity;
    };
    const std::size_t n_inputs = static_cast<std::size_t>(cfg.n_inputs);
    std::vector<EnsembleCell> cells(reps.size() * n_inputs);
    parallel_for_index(reps.size() * n_inputs, workers, [&](std::size_t task) {
        const std::size_t i = task / n_inputs;
        const int input_index = static_cast<int>(task % n_inputs);
        const std::uint64_t seed = derive_seed(cfg.master_seed, reps[i].code, input_index, 0);
        Configuration input;
        if (cfg.ensemble == InputKind::structured_density) {
            const auto counts = structured_density_counts(cfg.n_inputs);
            input = structured_input(cfg.width, counts[input_index], seed);
        } else {
            input = random_input(cfg.width, seed);
        }
        const SymmetryMaxTE r = symmetry_max_te(reps[i], input, cfg, kAllSymmetries);
        cells[task] = {r.te, r.symmetry};
    });

    ClassificationThresholds thresholds = cfg.thresholds;
    thresholds.te_threshold = result.te_threshold;

    result.records.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        ClassificationRecord rec;
        rec.representative = reps[i];
        rec.wolfram_class = labels.at(reps[i]);
        rec.te1 = single[i].te1;
        rec.te1_symmetry = single[i].symmetry;
        rec.te_r.reserve(n_inputs);
        rec.te_r_symmetries.reserve(n_inputs);
        for (std::size_t r = 0; r < n_inputs; ++r) {
            rec.te_r.push_back(cells[i * n_inputs + r].te);
            rec.te_r_symmetries.push_back(cells[i * n_inputs + r].symmetry);
        }
        rec.te_r_min = *std::min_element(rec.te_r.begin(), rec.te_r.end());
        rec.te_r_max = *std::max_element(rec.te_r.begin(), rec.te_r.end());
        rec.max_change = max_normalized_change(rec.te1, rec.te_r, thresholds.zero_floor);
        rec.info_class = assign_class(rec.te1, rec.max_change, thresholds);
        result.records.push_back(std::move(rec));
    }
    return result;
}

std::vector<Rule> l_shape_violations(const ClassificationResult& result) {
    std::vector<Rule> out;
    for (const ClassificationRecord& rec : result.records)
        if (rec.te1 > result.te_threshold &&
            rec.max_change >= result.config.thresholds.change_threshold)
            out.push_back(rec.representative);
    return out;
}

} // namespace ecainfo
