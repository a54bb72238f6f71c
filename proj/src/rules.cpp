#include "ecainfo/rules.hpp"

#include <algorithm>

namespace ecainfo {

char symmetry_letter(Symmetry s) {
    switch (s) {
    case Symmetry::identity: return 'I';
    case Symmetry::conjugate: return 'C';
    case Symmetry::reflect: return 'R';
    case Symmetry::conjugate_reflect: return 'X';
    }
    return '?';
}

namespace {

Rule conjugate_rule(Rule r) {
    // Neighborhood (l,c,r) has index i = 4l+2c+r; its bitwise complement has
    // index 7-i, so bit i of the conjugate is the negation of bit 7-i.
    std::uint8_t out = 0;
    for (int i = 0; i < 8; ++i) {
        const int bit = 1 - ((r.code >> (7 - i)) & 1);
        out |= static_cast<std::uint8_t>(bit << i);
    }
    return Rule{out};
}

Rule reflect_rule(Rule r) {
    std::uint8_t out = 0;
    for (int l = 0; l < 2; ++l)
        for (int c = 0; c < 2; ++c)
            for (int rr = 0; rr < 2; ++rr) {
                const int bit = r.output(rr, c, l);
                out |= static_cast<std::uint8_t>(bit << (4 * l + 2 * c + rr));
            }
    return Rule{out};
}

} // namespace

Rule transform_rule(Rule rule, Symmetry s) {
    switch (s) {
    case Symmetry::identity: return rule;
    case Symmetry::conjugate: return conjugate_rule(rule);
    case Symmetry::reflect: return reflect_rule(rule);
    case Symmetry::conjugate_reflect: return conjugate_rule(reflect_rule(rule));
    }
    return rule;
}

std::vector<Rule> equivalence_set(Rule rule) {
    std::vector<Rule> set;
    set.reserve(4);
    for (Symmetry s : kAllSymmetries) set.push_back(transform_rule(rule, s));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

Rule representative(Rule rule) {
    Rule best = rule;
    for (Symmetry s : kAllSymmetries) best = std::min(best, transform_rule(rule, s));
    return best;
}

const std::vector<Rule>& representatives() {
    static const std::vector<Rule> reps = [] {
        std::vector<Rule> out;
        for (int code = 0; code < 256; ++code) {
            const Rule r{static_cast<std::uint8_t>(code)};
            if (representative(r) == r) out.push_back(r);
        }
        return out; // already ascending by construction
    }();
    return reps;
}

} // namespace ecainfo
