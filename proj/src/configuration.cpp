#include "ecainfo/configuration.hpp"

#include <bit>
#include <stdexcept>

namespace ecainfo {

void Configuration::mask_top() {
    if (width_ == 0) return;
    const std::uint32_t top = width_ & 63;
    if (top != 0) words_.back() &= (std::uint64_t{1} << top) - 1;
}

Configuration Configuration::from_string(std::string_view s) {
    Configuration cfg(static_cast<std::uint32_t>(s.size()));
    for (std::uint32_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c != '0' && c != '1') throw std::invalid_argument("configuration string must be 0/1");
        if (c == '1') cfg.set(i, true);
    }
    return cfg;
}

std::uint32_t Configuration::count_ones() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return static_cast<std::uint32_t>(n);
}

Configuration Configuration::conjugated() const {
    Configuration out = *this;
    for (std::uint64_t& w : out.words_) w = ~w;
    out.mask_top();
    return out;
}

Configuration Configuration::reflected() const {
    Configuration out(width_);
    for (std::uint32_t i = 0; i < width_; ++i)
        if (get(i)) out.set(width_ - 1 - i, true);
    return out;
}

Configuration Configuration::rotated(int delta) const {
    if (width_ == 0) return *this;
    const std::uint32_t w = width_;
    const std::uint32_t d = static_cast<std::uint32_t>(((delta % static_cast<int>(w)) + w) % w);
    if (d == 0) return *this;
    Configuration out(w);
    for (std::uint32_t i = 0; i < w; ++i) {
        const std::uint32_t src = (i + w - d) % w;
        if (get(src)) out.set(i, true);
    }
    return out;
}

std::string Configuration::to_string() const {
    std::string s(width_, '0');
    for (std::uint32_t i = 0; i < width_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

} // namespace ecainfo
