#include <doctest.h>

#include <random>

#include "ecainfo/ensemble.hpp"
#include "ecainfo/evolve.hpp"

using namespace ecainfo;

namespace {

// independent scalar oracle for step()
Configuration step_naive(const Configuration& cfg, Rule rule) {
    const std::uint32_t w = cfg.width();
    Configuration out(w);
    for (std::uint32_t i = 0; i < w; ++i) {
        const int l = cfg.get((i + w - 1) % w);
        const int c = cfg.get(i);
        const int r = cfg.get((i + 1) % w);
        out.set(i, rule.output(l, c, r) != 0);
    }
    return out;
}

Configuration random_cfg(std::uint32_t w, std::mt19937& gen) {
    Configuration cfg(w);
    for (std::uint32_t i = 0; i < w; ++i) cfg.set(i, gen() & 1);
    return cfg;
}

} // namespace

TEST_CASE("step rejects rings narrower than 3") {
    CHECK_THROWS_AS(step(Configuration(2), Rule{30}), std::invalid_argument);
    CHECK_NOTHROW(step(Configuration(3), Rule{30}));
}

TEST_CASE("known rules behave on any configuration") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t w = 3 + gen() % 120;
        const Configuration cfg = random_cfg(w, gen);
        CHECK(step(cfg, Rule{0}) == Configuration(w));       // annihilates
        CHECK(step(cfg, Rule{204}) == cfg);                  // identity
        CHECK(step(cfg, Rule{170}) == cfg.rotated(-1));      // output = right neighbor
    }
}

TEST_CASE("bit-parallel step equals the scalar oracle") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t w = 3 + gen() % 150;
        const Rule rule{static_cast<std::uint8_t>(gen() & 0xFF)};
        const Configuration cfg = random_cfg(w, gen);
        CHECK(step(cfg, rule) == step_naive(cfg, rule));
    }
}

TEST_CASE("step is pure") {
    const Configuration cfg = Configuration::from_string("01101001110");
    CHECK(step(cfg, Rule{110}) == step(cfg, Rule{110}));
}

TEST_CASE("evolve produces a consistent field and window") {
    const Configuration input = single_cell_input(101);
    const SpacetimeField field = evolve(input, Rule{30}, 250, 50);
    REQUIRE(field.rows.size() == 251);
    CHECK(field.steps() == 250);
    CHECK(field.rows.front() == input);
    for (std::size_t t = 0; t + 1 < field.rows.size(); ++t)
        CHECK(field.rows[t + 1] == step(field.rows[t], field.rule));
    CHECK(field.analysis_window().size() == 200);
    CHECK(field.analysis_window().front() == field.rows[51]);

    CHECK_THROWS_AS(evolve(input, Rule{30}, 0), std::invalid_argument);
    CHECK_THROWS_AS(evolve(input, Rule{30}, 10, 10), std::invalid_argument);
}

TEST_CASE("rule 0 and rule 204 trivial evolutions") {
    const Configuration input = single_cell_input(11);
    const SpacetimeField zero = evolve(input, Rule{0}, 3);
    for (std::size_t t = 1; t < zero.rows.size(); ++t) CHECK(zero.rows[t].count_ones() == 0);
    const SpacetimeField ident = evolve(input, Rule{204}, 5);
    for (const Configuration& row : ident.rows) CHECK(row == input);
}

TEST_CASE("rule 90 third row is the XOR triangle") {
    // hand simulation: row 2 of the single-cell evolution has exactly two
    // black cells, at center-2 and center+2; the center itself is white
    const std::uint32_t w = 101, c = 50;
    const SpacetimeField field = evolve(single_cell_input(w), Rule{90}, 2);
    const Configuration& row2 = field.rows[2];
    CHECK(row2.count_ones() == 2);
    CHECK(row2.get(c - 2));
    CHECK(row2.get(c + 2));
    CHECK(!row2.get(c));
}

TEST_CASE("dynamics are equivariant under the symmetry group") {
    std::mt19937 gen(37);
    const std::uint32_t w = 8, T = 8;
    for (int code = 0; code < 256; ++code) {
        const Rule rule{static_cast<std::uint8_t>(code)};
        const Configuration cfg = random_cfg(w, gen);
        const SpacetimeField base = evolve(cfg, rule, T);
        for (Symmetry s : kAllSymmetries) {
            const SpacetimeField transformed =
                evolve(transform_config(cfg, s), transform_rule(rule, s), T);
            for (std::size_t t = 0; t < base.rows.size(); ++t)
                CHECK(transformed.rows[t] == transform_config(base.rows[t], s));
        }
    }
}
