#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <random>
#include <vector>

#include "ecainfo/ensemble.hpp"
#include "ecainfo/transfer_entropy.hpp"

using namespace ecainfo;

namespace {

// Independent oracle: explicit probability tables and the textbook
// sum p(xn,xh,yh) log2[ p(xn|xh,yh) / p(xn|xh) ], generic in k and l.
double brute_force_te(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y,
                      int k, int l) {
    struct Key {
        int xn;
        std::vector<int> xh, yh;
        bool operator<(const Key& o) const {
            return std::tie(xn, xh, yh) < std::tie(o.xn, o.xh, o.yh);
        }
    };
    std::map<Key, double> joint;
    std::map<std::pair<std::vector<int>, std::vector<int>>, double> cond_hist_src;
    std::map<std::pair<int, std::vector<int>>, double> cond_next_hist;
    std::map<std::vector<int>, double> hist;
    const int m = std::max(k, l);
    int n = 0;
    for (std::size_t t = static_cast<std::size_t>(m); t < x.size(); ++t) {
        Key key;
        key.xn = x[t];
        for (int j = 1; j <= k; ++j) key.xh.push_back(x[t - j]);
        for (int j = 1; j <= l; ++j) key.yh.push_back(y[t - j]);
        joint[key] += 1;
        cond_hist_src[{key.xh, key.yh}] += 1;
        cond_next_hist[{key.xn, key.xh}] += 1;
        hist[key.xh] += 1;
        ++n;
    }
    double te = 0;
    for (const auto& [key, count] : joint) {
        const double p = count / n;
        const double p_next_given_full = count / cond_hist_src[{key.xh, key.yh}];
        const double p_next_given_hist = cond_next_hist[{key.xn, key.xh}] / hist[key.xh];
        te += p * std::log2(p_next_given_full / p_next_given_hist);
    }
    return te;
}

std::vector<std::uint8_t> random_bits(std::size_t n, std::mt19937& gen) {
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = gen() & 1;
    return v;
}

} // namespace

TEST_CASE("constant target gives exactly zero") {
    const std::vector<std::uint8_t> target(40, 1);
    std::mt19937 gen(5);
    const auto source = random_bits(40, gen);
    CHECK(transfer_entropy(target, source) == 0.0);
}

TEST_CASE("copy process on a balanced cycle gives exactly one bit") {
    // y repeats the de Bruijn cycle 0011; x copies y with lag one. All four
    // (prev, next) source pairs appear equally often, so the estimate is
    // exactly 1 bit, with no tolerance needed.
    const std::size_t n = 4 * 12 + 1;
    std::vector<std::uint8_t> y(n), x(n);
    const std::uint8_t pattern[4] = {0, 0, 1, 1};
    for (std::size_t t = 0; t < n; ++t) y[t] = pattern[t % 4];
    for (std::size_t t = 0; t < n; ++t) x[t] = y[(t + n - 1) % n];
    CHECK(transfer_entropy(x, y) == 1.0);
}

TEST_CASE("input validation") {
    const std::vector<std::uint8_t> a(10, 0), b(9, 0);
    CHECK_THROWS_AS(transfer_entropy(a, b), std::invalid_argument);
    CHECK_THROWS_AS(transfer_entropy({}, {}), std::invalid_argument);
    const std::vector<std::uint8_t> one{1};
    CHECK_THROWS_AS(transfer_entropy(one, one), std::invalid_argument);
    const std::vector<std::uint8_t> bad{0, 2, 1};
    CHECK_THROWS_AS(transfer_entropy(bad, bad), std::invalid_argument);
    CHECK_THROWS_AS(transfer_entropy(a, a, TEConfig{0, 1}), std::invalid_argument);
    const std::vector<std::uint8_t> three(3, 0);
    CHECK_THROWS_AS(transfer_entropy(three, three, TEConfig{3, 3}), std::invalid_argument);
}

TEST_CASE("estimator equals the brute-force oracle on short series") {
    // exhaustive at n=8 for k=l=1
    for (std::uint32_t xa = 0; xa < 256; ++xa) {
        for (std::uint32_t ya = 0; ya < 256; ya += 7) { // stride keeps runtime low
            std::vector<std::uint8_t> x(8), y(8);
            for (int t = 0; t < 8; ++t) {
                x[t] = (xa >> t) & 1;
                y[t] = (ya >> t) & 1;
            }
            const double got = transfer_entropy(x, y);
            const double expected = std::max(brute_force_te(x, y, 1, 1), 0.0);
            CHECK(std::abs(got - expected) <= 1e-12);
        }
    }
    // random series at length 12 for deeper histories
    std::mt19937 gen(17);
    for (const auto [k, l] : {std::pair{2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = random_bits(12, gen);
            const auto y = random_bits(12, gen);
            const double got = transfer_entropy(x, y, TEConfig{k, l});
            const double expected = std::max(brute_force_te(x, y, k, l), 0.0);
            CHECK(std::abs(got - expected) <= 1e-12);
        }
    }
}

TEST_CASE("estimates are non-negative") {
    std::mt19937 gen(29);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = random_bits(30, gen);
        const auto y = random_bits(30, gen);
        CHECK(transfer_entropy(x, y) >= 0.0);
    }
}

TEST_CASE("symbol relabeling leaves the estimate unchanged exactly") {
    std::mt19937 gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_bits(50, gen);
        auto y = random_bits(50, gen);
        const double base = transfer_entropy(x, y, TEConfig{2, 1});
        for (auto& b : x) b ^= 1;
        for (auto& b : y) b ^= 1;
        CHECK(transfer_entropy(x, y, TEConfig{2, 1}) == base);
    }
}

TEST_CASE("self transfer entropy vanishes exactly when k >= l") {
    std::mt19937 gen(41);
    for (const auto [k, l] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto x = random_bits(60, gen);
            CHECK(transfer_entropy(x, x, TEConfig{k, l}) == 0.0);
        }
    }
}

TEST_CASE("time-shuffled sources carry only estimator bias") {
    // 100 shuffles of an unrelated series against a fixed 200-row target:
    // the mean plug-in estimate stays within the small-sample bias bound.
    std::mt19937 gen(43);
    const auto x = random_bits(200, gen);
    auto y = random_bits(200, gen);
    double sum = 0;
    for (int s = 0; s < 100; ++s) {
        std::shuffle(y.begin(), y.end(), gen);
        sum += transfer_entropy(x, y);
    }
    CHECK(sum / 100 <= 0.05);
}

TEST_CASE("degenerate fields give an all-zero TE matrix") {
    const Configuration input = single_cell_input(31);
    for (const std::uint8_t code : {0, 204}) {
        const SpacetimeField field = evolve(input, Rule{code}, 60, 10);
        const TEMatrix m = te_matrix(field);
        for (double v : m.values) CHECK(v == 0.0);
        CHECK(mean_te(m) == 0.0);
    }
}

TEST_CASE("shift dynamics concentrate TE on the driving neighbor") {
    // rule 170: each cell copies its right neighbor, so column x+1 is the
    // maximal source for target x
    const Configuration input = random_input(31, 99);
    const SpacetimeField field = evolve(input, Rule{170}, 80, 10);
    const TEMatrix m = te_matrix(field);
    const std::uint32_t w = m.width;
    for (std::uint32_t x = 0; x < w; ++x) {
        double col_max = 0;
        for (std::uint32_t y = 0; y < w; ++y) col_max = std::max(col_max, m.at(y, x));
        CHECK(m.at((x + 1) % w, x) == col_max);
        CHECK(col_max > 0.5);
    }
}

TEST_CASE("batch and per-pair paths are bit-identical") {
    std::mt19937 gen(53);
    for (const auto [k, l] : {std::pair{1, 1}, {2, 1}, {3, 2}}) {
        std::vector<Configuration> rows;
        for (int t = 0; t < 40; ++t) {
            Configuration row(17);
            for (std::uint32_t i = 0; i < 17; ++i) row.set(i, gen() & 1);
            rows.push_back(row);
        }
        const TEMatrix fast = te_matrix_rows(rows, TEConfig{k, l}, TEMatrixMode::automatic);
        const TEMatrix ref = te_matrix_rows(rows, TEConfig{k, l}, TEMatrixMode::per_pair);
        REQUIRE(fast.values.size() == ref.values.size());
        CHECK(std::memcmp(fast.values.data(), ref.values.data(),
                          fast.values.size() * sizeof(double)) == 0);
    }
}

TEST_CASE("permuting cells permutes the matrix and keeps the mean") {
    std::mt19937 gen(59);
    const std::uint32_t w = 8;
    std::vector<Configuration> rows;
    for (int t = 0; t < 30; ++t) {
        Configuration row(w);
        for (std::uint32_t i = 0; i < w; ++i) row.set(i, gen() & 1);
        rows.push_back(row);
    }
    std::vector<std::uint32_t> perm(w);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);

    std::vector<Configuration> permuted;
    for (const Configuration& row : rows) {
        Configuration p(w);
        for (std::uint32_t i = 0; i < w; ++i) p.set(perm[i], row.get(i));
        permuted.push_back(p);
    }
    const TEMatrix base = te_matrix_rows(rows);
    const TEMatrix shuffled = te_matrix_rows(permuted);
    for (std::uint32_t y = 0; y < w; ++y)
        for (std::uint32_t x = 0; x < w; ++x)
            CHECK(shuffled.at(perm[y], perm[x]) == base.at(y, x));
    CHECK(mean_te(shuffled) == doctest::Approx(mean_te(base)).epsilon(1e-12));
}

TEST_CASE("mean_te arithmetic") {
    TEMatrix m{101, std::vector<double>(101 * 101, 0.0)};
    CHECK(mean_te(m) == 0.0);
    m.at(3, 5) = 1.0;
    CHECK(mean_te(m) == doctest::Approx(1.0 / (101.0 * 101.0)).epsilon(1e-15));
}
