#include <doctest.h>

#include <set>

#include "ecainfo/ensemble.hpp"
#include "ecainfo/rng.hpp"

using namespace ecainfo;

TEST_CASE("single-cell input is one centered black cell") {
    const Configuration cfg = single_cell_input(101);
    CHECK(cfg.count_ones() == 1);
    CHECK(cfg.get(50));
    CHECK(single_cell_input(3).to_string() == "010");
    CHECK_THROWS_AS(single_cell_input(100), std::invalid_argument);
    // centered input is its own reflection
    CHECK(cfg.reflected() == cfg);
}

TEST_CASE("random inputs are reproducible and seed-sensitive") {
    CHECK(random_input(101, 12345) == random_input(101, 12345));
    CHECK(random_input(101, 12345) != random_input(101, 12346));
}

TEST_CASE("random input density is binomial around one half") {
    double total = 0;
    const int draws = 1000;
    for (int i = 0; i < draws; ++i) total += random_input(101, derive_seed(9, 0, i, 0)).count_ones();
    const double mean = total / draws;
    // mean count ~ Binomial(101, 1/2); 1000 draws put a >6-sigma band at +-1
    CHECK(mean > 49.5);
    CHECK(mean < 51.5);
}

TEST_CASE("structured inputs have exact black-cell counts") {
    CHECK(structured_input(101, 2, 7).count_ones() == 2);
    CHECK(structured_input(101, 0, 7).count_ones() == 0);
    CHECK(structured_input(101, 101, 7).count_ones() == 101);
    CHECK_THROWS_AS(structured_input(101, 102, 7), std::invalid_argument);
    CHECK(structured_input(101, 50, 3) == structured_input(101, 50, 3));
}

TEST_CASE("density count sequence matches the 2,5,7,...,50 pattern") {
    const auto counts = structured_density_counts();
    REQUIRE(counts.size() == 20);
    CHECK(counts.front() == 2);
    CHECK(counts[1] == 5);
    CHECK(counts[2] == 7);
    CHECK(counts[3] == 10);
    CHECK(counts[4] == 12);
    CHECK(counts.back() == 50);
    for (std::size_t i = 1; i < counts.size(); ++i) {
        const std::uint32_t inc = counts[i] - counts[i - 1];
        CHECK(inc == (i % 2 == 1 ? 3u : 2u));
    }
}

TEST_CASE("ensembles carry provenance and exact counts") {
    const auto ens = make_ensemble(InputKind::structured_density, 101, 20, 42, 30);
    REQUIRE(ens.size() == 20);
    const auto counts = structured_density_counts();
    for (std::size_t i = 0; i < ens.size(); ++i) {
        CHECK(ens[i].cfg.width() == 101);
        CHECK(ens[i].n_black == counts[i]);
        CHECK(ens[i].seed == derive_seed(42, 30, static_cast<int>(i), 0));
    }
    const auto rnd = make_ensemble(InputKind::random_uniform, 101, 20, 42, 30);
    CHECK(rnd.size() == 20);
    // same master seed, different representative -> different inputs
    const auto rnd2 = make_ensemble(InputKind::random_uniform, 101, 20, 42, 45);
    CHECK(rnd[0].cfg != rnd2[0].cfg);
}

TEST_CASE("derived seeds never collide across the run index space") {
    std::set<std::uint64_t> seen;
    for (int rep = 0; rep < 256; ++rep)
        for (int input = 0; input < 21; ++input)
            for (int sym = 0; sym < 4; ++sym)
                CHECK(seen.insert(derive_seed(42, rep, input, sym)).second);
    CHECK(seen.size() == 256u * 21u * 4u);
    CHECK(derive_seed(1, 2, 3, 0) == derive_seed(1, 2, 3, 0));
    CHECK(derive_seed(1, 2, 3, 0) != derive_seed(2, 2, 3, 0));
}
