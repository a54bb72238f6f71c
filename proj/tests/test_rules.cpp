#include <doctest.h>

#include <algorithm>
#include <set>

#include "ecainfo/rules.hpp"

using namespace ecainfo;

TEST_CASE("rule_output reads the Wolfram code bit 4l+2c+r") {
    CHECK(Rule{110}.output(1, 1, 0) == 1);
    CHECK(Rule{110}.output(0, 0, 0) == 0);
    CHECK(Rule{30}.output(1, 0, 0) == 1);

    // independent bit-arithmetic cross-check over a sample of rules
    for (int code : {0, 1, 30, 90, 110, 184, 255}) {
        for (int n = 0; n < 8; ++n) {
            const int expected = (code / (1 << n)) % 2;
            CHECK(Rule{static_cast<std::uint8_t>(code)}.output((n >> 2) & 1, (n >> 1) & 1, n & 1)
                  == expected);
        }
    }
}

TEST_CASE("conjugation and reflection act as expected on known rules") {
    CHECK(transform_rule(Rule{18}, Symmetry::conjugate) == Rule{183});
    CHECK(transform_rule(Rule{0}, Symmetry::conjugate) == Rule{255});
    CHECK(transform_rule(Rule{110}, Symmetry::reflect) == Rule{124});
    CHECK(transform_rule(Rule{90}, Symmetry::identity) == Rule{90});
}

TEST_CASE("symmetries are involutions and commute on every rule") {
    for (int code = 0; code < 256; ++code) {
        const Rule r{static_cast<std::uint8_t>(code)};
        const Rule c = transform_rule(r, Symmetry::conjugate);
        const Rule f = transform_rule(r, Symmetry::reflect);
        CHECK(transform_rule(c, Symmetry::conjugate) == r);
        CHECK(transform_rule(f, Symmetry::reflect) == r);
        CHECK(transform_rule(c, Symmetry::reflect) == transform_rule(f, Symmetry::conjugate));
        CHECK(transform_rule(r, Symmetry::conjugate_reflect)
              == transform_rule(f, Symmetry::conjugate));
    }
}

TEST_CASE("equivalence sets match the known families") {
    const auto set30 = equivalence_set(Rule{30});
    CHECK(set30 == std::vector<Rule>{Rule{30}, Rule{86}, Rule{135}, Rule{149}});
    CHECK(equivalence_set(Rule{204}) == std::vector<Rule>{Rule{204}});
    CHECK(equivalence_set(Rule{0}) == std::vector<Rule>{Rule{0}, Rule{255}});
    CHECK(representative(Rule{183}) == Rule{18});
    CHECK(representative(Rule{86}) == Rule{30});
}

TEST_CASE("the 88 representatives partition the 256 rules") {
    const auto& reps = representatives();
    REQUIRE(reps.size() == 88);
    CHECK(std::is_sorted(reps.begin(), reps.end()));

    std::set<std::uint8_t> covered;
    std::size_t total = 0;
    for (const Rule rep : reps) {
        const auto set = equivalence_set(rep);
        CHECK(set.front() == rep); // representative is the minimum
        total += set.size();
        for (const Rule r : set) CHECK(covered.insert(r.code).second); // disjoint
    }
    CHECK(total == 256);
    CHECK(covered.size() == 256);

    const auto has = [&](int code) {
        return std::find(reps.begin(), reps.end(), Rule{static_cast<std::uint8_t>(code)})
               != reps.end();
    };
    CHECK(has(110));
    CHECK(!has(183));
}
