#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace ecainfo {

/// An elementary CA rule under Wolfram numbering: the output bit for
/// neighborhood (l,c,r) is bit number 4l+2c+r of the code.
struct Rule {
    std::uint8_t code = 0;

    constexpr int output(int l, int c, int r) const {
        return (code >> (4 * l + 2 * c + r)) & 1;
    }

    auto operator<=>(const Rule&) const = default;
};

/// The Klein four-group acting on rules and configurations: black/white
/// conjugation, left/right reflection, and their composition.
enum class Symmetry : int {
    identity = 0,
    conjugate = 1,
    reflect = 2,
    conjugate_reflect = 3,
};

inline constexpr std::array<Symmetry, 4> kAllSymmetries{
    Symmetry::identity, Symmetry::conjugate, Symmetry::reflect, Symmetry::conjugate_reflect};

// One-letter tags used in CSV output: I, C, R, X.
char symmetry_letter(Symmetry s);

// conjugate: new(l,c,r) = !old(!l,!c,!r); reflect: new(l,c,r) = old(r,c,l).
Rule transform_rule(Rule rule, Symmetry s);

/// All rules equivalent to `rule` under conjugation/reflection,
/// sorted ascending and deduplicated (size 1, 2 or 4).
std::vector<Rule> equivalence_set(Rule rule);

/// Lowest-numbered member of the equivalence set.
Rule representative(Rule rule);

/// The 88 equivalence-class representatives, sorted ascending.
const std::vector<Rule>& representatives();

} // namespace ecainfo
