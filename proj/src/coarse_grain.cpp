#include "ecainfo/coarse_grain.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ecainfo/ensemble.hpp"
#include "ecainfo/evolve.hpp"
#include "ecainfo/parallel.hpp"

namespace ecainfo {

Projection Projection::identity() { return Projection{1, {0, 1}}; }

Projection Projection::from_code(int n, std::uint32_t code) {
    if (n < 1 || n > 4) throw std::invalid_argument("supercell size must be in [1,4]");
    Projection p{n, std::vector<std::uint8_t>(std::size_t{1} << n, 0)};
    for (std::size_t i = 0; i < p.table.size(); ++i) p.table[i] = (code >> i) & 1;
    return p;
}

Projection Projection::from_bits(int n, std::string_view bits) {
    if (bits.size() != (std::size_t{1} << n))
        throw std::invalid_argument("projection bit string has wrong length");
    Projection p{n, {}};
    p.table.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("projection bits must be 0/1");
        p.table.push_back(c == '1');
    }
    return p;
}

bool Projection::surjective() const {
    bool has0 = false, has1 = false;
    for (std::uint8_t v : table) (v ? has1 : has0) = true;
    return has0 && has1;
}

std::uint32_t Projection::code() const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < table.size(); ++i) c |= static_cast<std::uint32_t>(table[i]) << i;
    return c;
}

std::string Projection::bits_string() const {
    std::string s(table.size(), '0');
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i]) s[i] = '1';
    return s;
}

Configuration coarse_project(const Configuration& cfg, const Projection& p) {
    const std::uint32_t n = static_cast<std::uint32_t>(p.n);
    if (cfg.width() % n != 0)
        throw std::invalid_argument("width not divisible by supercell size");
    const std::uint32_t cw = cfg.width() / n;
    Configuration out(cw);
    for (std::uint32_t j = 0; j < cw; ++j) {
        std::uint32_t pattern = 0;
        for (std::uint32_t b = 0; b < n; ++b)
            pattern = (pattern << 1) | cfg.get(j * n + b);
        if (p.table[pattern]) out.set(j, true);
    }
    return out;
}

namespace {

// Middle-supercell results of the N-step open-block evolution, indexed by the
// 3N-cell block (leftmost cell = most significant bit). The evolution window
// shrinks by one cell per side per step; after N steps exactly the middle N
// cells remain determined by the block alone.
std::vector<std::uint16_t> middle_result_table(Rule rule, int n) {
    const int cells = 3 * n;
    const std::size_t n_blocks = std::size_t{1} << cells;
    std::vector<std::uint16_t> result(n_blocks);
    std::array<std::uint8_t, 12> cur{}, nxt{};
    for (std::size_t block = 0; block < n_blocks; ++block) {
        for (int j = 0; j < cells; ++j) cur[j] = (block >> (cells - 1 - j)) & 1;
        for (int s = 1; s <= n; ++s) {
            for (int i = s; i <= cells - 1 - s; ++i)
                nxt[i] = static_cast<std::uint8_t>(rule.output(cur[i - 1], cur[i], cur[i + 1]));
            std::swap(cur, nxt);
        }
        std::uint16_t mid = 0;
        for (int j = n; j < 2 * n; ++j) mid = static_cast<std::uint16_t>((mid << 1) | cur[j]);
        result[block] = mid;
    }
    return result;
}

InducedOutcome induced_from_table(const std::vector<std::uint16_t>& mid_result,
                                  const Projection& p) {
    const int n = p.n;
    const std::uint32_t mask = (1u << n) - 1;
    const std::size_t n_blocks = std::size_t{1} << (3 * n);

    // seen[nbhd]: -1 while unconstrained, else the required output bit.
    std::array<int, 8> seen;
    std::array<std::uint32_t, 8> first_block{};
    seen.fill(-1);

    for (std::uint32_t block = 0; block < n_blocks; ++block) {
        const std::uint32_t left = block >> (2 * n);
        const std::uint32_t mid = (block >> n) & mask;
        const std::uint32_t right = block & mask;
        const int nbhd = 4 * p.table[left] + 2 * p.table[mid] + p.table[right];
        const int out = p.table[mid_result[block]];
        if (seen[nbhd] == -1) {
            seen[nbhd] = out;
            first_block[nbhd] = block;
        } else if (seen[nbhd] != out) {
            return Inconsistency{first_block[nbhd], block};
        }
    }

    std::uint8_t code = 0;
    for (int nbhd = 0; nbhd < 8; ++nbhd) {
        if (seen[nbhd] == -1) {
            // Unreachable for surjective projections. A constant projection
            // pins every realizable neighborhood to its constant, so complete
            // the code with that value (rule 0 or rule 255).
            seen[nbhd] = p.table[0];
        }
        code |= static_cast<std::uint8_t>(seen[nbhd] << nbhd);
    }
    return Rule{code};
}

} // namespace

InducedOutcome induced_coarse_rule(Rule rule_a, const Projection& p, ProjectionPolicy policy) {
    if (p.n < 1 || p.n > 4) throw std::invalid_argument("supercell size must be in [1,4]");
    if (p.table.size() != (std::size_t{1} << p.n))
        throw std::invalid_argument("projection table size mismatch");
    if (policy == ProjectionPolicy::strict && !p.surjective())
        throw std::invalid_argument("projection must be surjective onto {0,1}");
    return induced_from_table(middle_result_table(rule_a, p.n), p);
}

bool verify_coarse_graining(Rule rule_a, Rule rule_b, const Projection& p,
                            ProjectionPolicy policy) {
    const InducedOutcome outcome = induced_coarse_rule(rule_a, p, policy);
    const Rule* induced = std::get_if<Rule>(&outcome);
    return induced != nullptr && *induced == rule_b;
}

bool dynamic_commute_check(Rule rule_a, Rule rule_b, const Projection& p, std::uint32_t width,
                           std::uint32_t fine_steps, std::uint64_t seed) {
    const std::uint32_t n = static_cast<std::uint32_t>(p.n);
    if (width % n != 0 || width / n < 3 || width < 3)
        throw std::invalid_argument("width must be a multiple of N with at least 3 supercells");
    const std::uint32_t coarse_steps = fine_steps / n;
    if (coarse_steps < 1) throw std::invalid_argument("fine_steps must cover one coarse step");

    const Configuration fine0 = random_input(width, seed);
    Configuration fine = fine0;
    Configuration coarse = coarse_project(fine0, p);
    for (std::uint32_t m = 1; m <= coarse_steps; ++m) {
        for (std::uint32_t s = 0; s < n; ++s) fine = step(fine, rule_a);
        coarse = step(coarse, rule_b);
        if (coarse_project(fine, p) != coarse) return false;
    }
    return true;
}

std::vector<CoarseGrainingMap> search_transitions(Rule rule_a, int n_min, int n_max,
                                                  ProjectionPolicy policy) {
    if (n_min < 1 || n_max > 4 || n_min > n_max)
        throw std::invalid_argument("supercell range must lie inside [1,4]");
    std::vector<CoarseGrainingMap> maps;
    for (int n = n_min; n <= n_max; ++n) {
        const auto mid_result = middle_result_table(rule_a, n);
        const std::uint32_t n_tables = 1u << (1 << n);
        for (std::uint32_t code = 0; code < n_tables; ++code) {
            const Projection p = Projection::from_code(n, code);
            if (policy == ProjectionPolicy::strict && !p.surjective()) continue;
            const InducedOutcome outcome = induced_from_table(mid_result, p);
            if (const Rule* induced = std::get_if<Rule>(&outcome))
                maps.push_back({rule_a, *induced, p});
        }
    }
    return maps;
}

TransitionGraph build_transition_graph(int n_max, int n_threads, ProjectionPolicy policy) {
    const std::vector<Rule>& reps = representatives();
    std::vector<std::vector<CoarseGrainingMap>> found(reps.size());
    parallel_for_index(reps.size(), resolve_thread_count(n_threads), [&](std::size_t i) {
        found[i] = search_transitions(reps[i], 2, n_max, policy);
    });

    TransitionGraph graph;
    graph.nodes.reserve(reps.size());
    for (const Rule r : reps) graph.nodes.push_back(r.code);

    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const CoarseGrainingMap& map : found[i]) {
            const std::uint8_t rep_b = representative(map.rule_b).code;
            auto it = std::find_if(graph.edges.begin(), graph.edges.end(),
                                   [&](const TransitionEdge& e) {
                                       return e.rep_a == reps[i].code && e.rep_b == rep_b;
                                   });
            if (it == graph.edges.end()) {
                TransitionEdge edge;
                edge.rep_a = reps[i].code;
                edge.rep_b = rep_b;
                edge.witness = map;
                edge.witness_count = 1;
                edge.self_loop = edge.rep_a == edge.rep_b;
                edge.to_zero = rep_b == 0;
                graph.edges.push_back(std::move(edge));
            } else {
                ++it->witness_count;
            }
        }
    }
    return graph;
}

std::string edge_list_csv(const TransitionGraph& graph, bool show_zero) {
    std::string out = "rep_a,rep_b,N,projection_bits\n";
    for (const TransitionEdge& e : graph.edges) {
        if (e.to_zero && !show_zero) continue;
        out += std::to_string(e.rep_a);
        out += ',';
        out += std::to_string(e.rep_b);
        out += ',';
        out += std::to_string(e.witness.projection.n);
        out += ',';
        out += e.witness.projection.bits_string();
        out += '\n';
    }
    return out;
}

std::vector<HierarchyViolation> validate_hierarchy(const TransitionGraph& graph,
                                                   const std::map<std::uint8_t, InfoClass>& classes) {
    std::vector<HierarchyViolation> violations;
    for (const TransitionEdge& e : graph.edges) {
        if (e.self_loop) continue;
        const auto a = classes.find(e.rep_a);
        const auto b = classes.find(e.rep_b);
        if (a == classes.end() || b == classes.end())
            throw std::invalid_argument("classification does not cover all representatives");
        if (static_cast<int>(b->second) > static_cast<int>(a->second))
            violations.push_back({e, a->second, b->second});
    }
    return violations;
}

} // namespace ecainfo
