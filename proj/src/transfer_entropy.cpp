#include "ecainfo/transfer_entropy.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ecainfo {

namespace detail {

double te_from_counts(std::span<const std::uint32_t> counts, int k, int l) {
    const int kh = 1 << k;          // target-history states
    const int lh = 1 << l;          // source-history states
    const std::size_t n_sym = std::size_t{2} * kh * lh;
    if (counts.size() != n_sym) throw std::invalid_argument("histogram size mismatch");

    // Marginal scratch reused across calls; the all-pairs loop calls this
    // W^2 times per patch.
    thread_local std::vector<std::uint64_t> c_hist, c_hist_src, c_next_hist;
    c_hist.assign(kh, 0);          // (x_hist)
    c_hist_src.assign(kh * lh, 0); // (x_hist, y_hist)
    c_next_hist.assign(2 * kh, 0); // (x_next, x_hist)
    std::uint64_t total = 0;

    for (std::size_t s = 0; s < n_sym; ++s) {
        const std::uint32_t c = counts[s];
        if (c == 0) continue;
        const std::uint32_t yh = s & (lh - 1);
        const std::uint32_t xh = (s >> l) & (kh - 1);
        const std::uint32_t xn = s >> (k + l);
        c_hist[xh] += c;
        c_hist_src[xh * lh + yh] += c;
        c_next_hist[xn * kh + xh] += c;
        total += c;
    }
    if (total == 0) return 0.0;

    // TE = (1/N) sum c * log2( (c * c_hist) / (c_hist_src * c_next_hist) ).
    // Products stay integral (and below 2^53 for any realistic sample count),
    // so ratio-1 terms are detected exactly and contribute exactly zero; a
    // constant target or a self-pair with k >= l therefore yields 0.0, not
    // an accumulation of rounding noise.
    double sum = 0.0;
    for (std::size_t s = 0; s < n_sym; ++s) {
        const std::uint32_t c = counts[s];
        if (c == 0) continue;
        const std::uint32_t yh = s & (lh - 1);
        const std::uint32_t xh = (s >> l) & (kh - 1);
        const std::uint32_t xn = s >> (k + l);
        const std::uint64_t num = static_cast<std::uint64_t>(c) * c_hist[xh];
        const std::uint64_t den = c_hist_src[xh * lh + yh] * c_next_hist[xn * kh + xh];
        if (num == den) continue;
        sum += static_cast<double>(c) *
               std::log2(static_cast<double>(num) / static_cast<double>(den));
    }
    const double te = sum / static_cast<double>(total);
    return te < 0.0 ? 0.0 : te;
}

} // namespace detail

namespace {

void check_bits(std::span<const std::uint8_t> s) {
    for (std::uint8_t v : s)
        if (v > 1) throw std::invalid_argument("series entries must be 0 or 1");
}

std::vector<std::uint32_t> pair_histogram(std::span<const std::uint8_t> target,
                                          std::span<const std::uint8_t> source, int k, int l) {
    const std::size_t n = target.size();
    const int m = std::max(k, l);
    std::vector<std::uint32_t> counts(std::size_t{2} << (k + l), 0);
    for (std::size_t t = static_cast<std::size_t>(m); t < n; ++t) {
        std::uint32_t xh = 0;
        for (int j = 1; j <= k; ++j) xh = (xh << 1) | target[t - j];
        std::uint32_t yh = 0;
        for (int j = 1; j <= l; ++j) yh = (yh << 1) | source[t - j];
        const std::uint32_t sym =
            (static_cast<std::uint32_t>(target[t]) << (k + l)) | (xh << l) | yh;
        ++counts[sym];
    }
    return counts;
}

} // namespace

namespace {

void check_history_lengths(const TEConfig& cfg) {
    if (cfg.k < 1 || cfg.l < 1) throw std::invalid_argument("history lengths must be >= 1");
    if (cfg.k > 12 || cfg.l > 12 || cfg.k + cfg.l > 15)
        throw std::invalid_argument("history lengths too large for a binary joint histogram");
}

} // namespace

double transfer_entropy(std::span<const std::uint8_t> target,
                        std::span<const std::uint8_t> source, const TEConfig& cfg) {
    check_history_lengths(cfg);
    if (target.size() != source.size()) throw std::invalid_argument("series length mismatch");
    const std::size_t min_len = static_cast<std::size_t>(std::max(cfg.k, cfg.l)) + 1;
    if (target.size() < min_len) throw std::invalid_argument("series too short for history length");
    check_bits(target);
    check_bits(source);
    return detail::te_from_counts(pair_histogram(target, source, cfg.k, cfg.l), cfg.k, cfg.l);
}

namespace {

std::vector<std::vector<std::uint8_t>> extract_columns(std::span<const Configuration> rows) {
    const std::uint32_t w = rows.front().width();
    std::vector<std::vector<std::uint8_t>> cols(w, std::vector<std::uint8_t>(rows.size()));
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].width() != w) throw std::invalid_argument("row widths differ");
        for (std::uint32_t x = 0; x < w; ++x) cols[x][t] = rows[t].get(x);
    }
    return cols;
}

TEMatrix te_matrix_per_pair(std::span<const Configuration> rows, const TEConfig& cfg) {
    const auto cols = extract_columns(rows);
    const std::uint32_t w = rows.front().width();
    TEMatrix m{w, std::vector<double>(std::size_t{w} * w, 0.0)};
    for (std::uint32_t x = 0; x < w; ++x)
        for (std::uint32_t y = 0; y < w; ++y)
            m.at(y, x) = detail::te_from_counts(pair_histogram(cols[x], cols[y], cfg.k, cfg.l),
                                                cfg.k, cfg.l);
    return m;
}

// Generic fast path. The (x_next, x_hist) part of the joint symbol depends
// only on the target and the y_hist part only on the source, so both are
// precomputed per cell; each ordered pair then just merges two streams into
// a joint histogram. Counts are identical to pair_histogram's by
// construction, hence so is every TE value.
TEMatrix te_matrix_streams(std::span<const Configuration> rows, const TEConfig& cfg) {
    const auto cols = extract_columns(rows);
    const std::uint32_t w = rows.front().width();
    const int k = cfg.k, l = cfg.l;
    const int m_hist = std::max(k, l);
    const std::size_t S = rows.size() - static_cast<std::size_t>(m_hist);
    const std::uint32_t k_mask = (1u << k) - 1;
    const std::uint32_t l_mask = (1u << l) - 1;

    std::vector<std::uint16_t> target_sym(w * S); // (x_next << k) | x_hist
    std::vector<std::uint16_t> source_sym(w * S); // y_hist
    for (std::uint32_t c = 0; c < w; ++c) {
        const auto& col = cols[c];
        std::uint32_t xh = 0, yh = 0;
        for (int j = m_hist - k; j < m_hist; ++j) xh = (xh << 1) | col[j];
        for (int j = m_hist - l; j < m_hist; ++j) yh = (yh << 1) | col[j];
        for (std::size_t i = 0; i < S; ++i) {
            const std::size_t t = i + m_hist;
            target_sym[c * S + i] =
                static_cast<std::uint16_t>((static_cast<std::uint32_t>(col[t]) << k) | xh);
            source_sym[c * S + i] = static_cast<std::uint16_t>(yh);
            xh = ((xh << 1) | col[t]) & k_mask;
            yh = ((yh << 1) | col[t]) & l_mask;
        }
    }

    const std::size_t n_sym = std::size_t{2} << (k + l);
    std::vector<std::uint32_t> hist(n_sym, 0);
    std::vector<std::uint32_t> touched;
    touched.reserve(n_sym);

    TEMatrix m{w, std::vector<double>(std::size_t{w} * w, 0.0)};
    for (std::uint32_t x = 0; x < w; ++x) {
        const std::uint16_t* tx = &target_sym[x * S];
        for (std::uint32_t y = 0; y < w; ++y) {
            const std::uint16_t* sy = &source_sym[y * S];
            for (std::size_t i = 0; i < S; ++i) {
                const std::uint32_t sym = (static_cast<std::uint32_t>(tx[i]) << l) | sy[i];
                if (hist[sym]++ == 0) touched.push_back(sym);
            }
            m.at(y, x) = detail::te_from_counts(hist, k, l);
            for (std::uint32_t sym : touched) hist[sym] = 0;
            touched.clear();
        }
    }
    return m;
}

// k=l=1 fast path. Per cell, the time series over the window is packed into
// words; the three sample components are then just shifted views:
//   hist bits  i = series[i]      (i = 0 .. S-1, S = L-1 samples)
//   next bits  i = series[i+1]
// Joint counts come from popcounts of mask intersections, so they match the
// per-pair histogram exactly and te_from_counts sees identical input.
TEMatrix te_matrix_batch(std::span<const Configuration> rows) {
    const std::uint32_t w = rows.front().width();
    const std::size_t L = rows.size();
    const std::size_t S = L - 1;
    const std::size_t nw = (S + 63) / 64;

    std::vector<std::uint64_t> hist(static_cast<std::size_t>(w) * nw, 0);
    std::vector<std::uint64_t> next(static_cast<std::size_t>(w) * nw, 0);
    for (std::size_t t = 0; t < L; ++t) {
        if (rows[t].width() != w) throw std::invalid_argument("row widths differ");
        for (std::uint32_t x = 0; x < w; ++x) {
            if (!rows[t].get(x)) continue;
            if (t < S) hist[x * nw + (t >> 6)] |= std::uint64_t{1} << (t & 63);
            if (t >= 1) next[x * nw + ((t - 1) >> 6)] |= std::uint64_t{1} << ((t - 1) & 63);
        }
    }

    std::vector<std::uint64_t> valid(nw, ~std::uint64_t{0});
    if ((S & 63) != 0) valid[nw - 1] = (std::uint64_t{1} << (S & 63)) - 1;

    TEMatrix m{w, std::vector<double>(std::size_t{w} * w, 0.0)};
    std::vector<std::uint64_t> combo(4 * nw);
    std::array<std::uint32_t, 4> combo_pc{};
    std::array<std::uint32_t, 8> counts{};

    for (std::uint32_t x = 0; x < w; ++x) {
        const std::uint64_t* xp = &next[x * nw];
        const std::uint64_t* xh = &hist[x * nw];
        for (int ab = 0; ab < 4; ++ab) {
            std::uint64_t pc = 0;
            for (std::size_t j = 0; j < nw; ++j) {
                const std::uint64_t a = (ab & 2) ? xp[j] : ~xp[j];
                const std::uint64_t b = (ab & 1) ? xh[j] : ~xh[j];
                const std::uint64_t v = a & b & valid[j];
                combo[ab * nw + j] = v;
                pc += std::popcount(v);
            }
            combo_pc[ab] = static_cast<std::uint32_t>(pc);
        }
        for (std::uint32_t y = 0; y < w; ++y) {
            const std::uint64_t* yh = &hist[y * nw];
            for (int ab = 0; ab < 4; ++ab) {
                std::uint64_t c1 = 0;
                for (std::size_t j = 0; j < nw; ++j) c1 += std::popcount(combo[ab * nw + j] & yh[j]);
                // symbol = x_next<<2 | x_hist<<1 | y_hist, ab = x_next<<1 | x_hist
                counts[(ab << 1) | 1] = static_cast<std::uint32_t>(c1);
                counts[ab << 1] = combo_pc[ab] - static_cast<std::uint32_t>(c1);
            }
            m.at(y, x) = detail::te_from_counts(counts, 1, 1);
        }
    }
    return m;
}

} // namespace

TEMatrix te_matrix_rows(std::span<const Configuration> rows, const TEConfig& cfg,
                        TEMatrixMode mode) {
    check_history_lengths(cfg);
    const std::size_t min_len = static_cast<std::size_t>(std::max(cfg.k, cfg.l)) + 1;
    if (rows.size() < min_len)
        throw std::invalid_argument("analysis window shorter than history length + 1");
    if (rows.front().width() == 0) throw std::invalid_argument("empty configuration");

    if (mode == TEMatrixMode::automatic) {
        if (cfg.k == 1 && cfg.l == 1) return te_matrix_batch(rows);
        return te_matrix_streams(rows, cfg);
    }
    return te_matrix_per_pair(rows, cfg);
}

TEMatrix te_matrix(const SpacetimeField& field, const TEConfig& cfg, TEMatrixMode mode) {
    return te_matrix_rows(field.analysis_window(), cfg, mode);
}

double mean_te(const TEMatrix& m) {
    double sum = 0.0;
    for (double v : m.values) sum += v;
    return sum / static_cast<double>(m.values.size());
}

} // namespace ecainfo
