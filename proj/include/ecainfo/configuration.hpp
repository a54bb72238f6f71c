#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecainfo {

/// A width-W ring of binary cells, bit-packed 64 cells per word.
/// Cell i lives at bit i%64 of word i/64; bits at and above W stay zero.
class Configuration {
  public:
    Configuration() = default;
    explicit Configuration(std::uint32_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    /// Parse a string of '0'/'1' characters, leftmost character = cell 0.
    static Configuration from_string(std::string_view s);

    std::uint32_t width() const { return width_; }

    bool get(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::uint32_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    /// Number of black cells.
    std::uint32_t count_ones() const;

    /// Every bit flipped.
    Configuration conjugated() const;

    /// Cell order reversed (cell i <-> cell W-1-i).
    Configuration reflected() const;

    /// Ring rotation: result cell i = this cell (i - delta) mod W.
    Configuration rotated(int delta) const;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool operator==(const Configuration&) const = default;

  private:
    std::uint32_t width_ = 0;
    std::vector<std::uint64_t> words_;

    void mask_top();
};

} // namespace ecainfo
