#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecainfo/configuration.hpp"
#include "ecainfo/rules.hpp"

namespace ecainfo {

/// conjugate flips every cell; reflect reverses cell order; the composite
/// applies both. Mirrors transform_rule so that dynamics are equivariant.
Configuration transform_config(const Configuration& cfg, Symmetry s);

/// One synchronous update on the ring. Throws std::invalid_argument for
/// width < 3 (the neighborhood would touch a cell twice).
Configuration step(const Configuration& cfg, Rule rule);

/// A T-step history: rows[0] is the input, rows[t+1] = step(rows[t], rule).
///
/// The analysis window drops the input row and the first `burn_in` generated
/// rows, leaving the last T - burn_in rows. With the reference settings
/// (T=250, burn_in=50) the window is 200 rows, i.e. 199 transitions at k=l=1.
struct SpacetimeField {
    Rule rule;
    std::uint32_t burn_in = 0;
    std::vector<Configuration> rows;

    std::uint32_t width() const { return rows.empty() ? 0 : rows.front().width(); }
    std::uint32_t steps() const { return static_cast<std::uint32_t>(rows.size()) - 1; }

    std::span<const Configuration> analysis_window() const {
        return {rows.data() + burn_in + 1, rows.size() - burn_in - 1};
    }
};

/// Evolve `input` for `steps` steps. Requires steps >= 1 and burn_in < steps.
SpacetimeField evolve(const Configuration& input, Rule rule, std::uint32_t steps,
                      std::uint32_t burn_in = 0);

} // namespace ecainfo
