#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ecainfo/configuration.hpp"
#include "ecainfo/rules.hpp"
#include "ecainfo/wolfram.hpp"

namespace ecainfo {

/// Supercell projection: maps each of the 2^N patterns of an N-cell block to
/// one coarse bit. Pattern index reads the block left to right, leftmost
/// cell in the most significant bit.
struct Projection {
    int n = 1;
    std::vector<std::uint8_t> table; // size 2^n, entries 0/1

    static Projection identity();                       ///< N=1, [0,1]
    static Projection from_code(int n, std::uint32_t code); ///< table[p] = bit p of code
    static Projection from_bits(int n, std::string_view bits);

    bool surjective() const;
    std::uint32_t code() const;       ///< inverse of from_code
    std::string bits_string() const;  ///< pattern-index order, '0'/'1'
};

/// Blockwise projection of a fine ring onto a ring of width W/N.
/// Throws if W is not divisible by N.
Configuration coarse_project(const Configuration& cfg, const Projection& p);

/// Conflicting pair of fine 3N-cell blocks: same projected neighborhood,
/// different projected outputs.
struct Inconsistency {
    std::uint32_t block_a = 0;
    std::uint32_t block_b = 0;
};

using InducedOutcome = std::variant<Rule, Inconsistency>;

enum class ProjectionPolicy {
    strict,       ///< non-surjective projections are an error
    allow_trivial ///< constant projections induce rule 0 / rule 255
};

/// The coarse rule induced by running rule_a for N steps on every width-3N
/// open block and projecting the middle supercell. After N radius-1 steps
/// the middle N cells depend on exactly those 3N inputs, so the enumeration
/// over all 2^(3N) blocks is an exact test.
InducedOutcome induced_coarse_rule(Rule rule_a, const Projection& p,
                                   ProjectionPolicy policy = ProjectionPolicy::strict);

/// True iff induced_coarse_rule(rule_a, p) yields exactly rule_b.
bool verify_coarse_graining(Rule rule_a, Rule rule_b, const Projection& p,
                            ProjectionPolicy policy = ProjectionPolicy::strict);

/// Trajectory cross-check of the commuting square: project every N-th fine
/// row of a random width-`width` evolution and compare against the coarse
/// evolution of the projected input, for floor(fine_steps/N) coarse steps.
/// Must agree whenever the static check passes.
bool dynamic_commute_check(Rule rule_a, Rule rule_b, const Projection& p, std::uint32_t width,
                           std::uint32_t fine_steps, std::uint64_t seed);

struct CoarseGrainingMap {
    Rule rule_a;
    Rule rule_b; ///< induced rule, as found (not canonicalized)
    Projection projection;
};

/// All consistent coarse-grainings of rule_a with supercell sizes in
/// [n_min, n_max], projections enumerated in code order. n range [1,4]
/// (search defaults start at 2; 2^(2^N) tables bound feasibility).
std::vector<CoarseGrainingMap> search_transitions(Rule rule_a, int n_min = 2, int n_max = 3,
                                                  ProjectionPolicy policy = ProjectionPolicy::strict);

struct TransitionEdge {
    std::uint8_t rep_a = 0;
    std::uint8_t rep_b = 0; ///< representative of the induced rule
    CoarseGrainingMap witness; ///< first witness in (N, projection-code) order
    std::size_t witness_count = 0;
    bool self_loop = false;
    bool to_zero = false; ///< hidden by default when rendering (Fig. 3 convention)
};

struct TransitionGraph {
    std::vector<std::uint8_t> nodes; ///< the 88 representatives
    std::vector<TransitionEdge> edges;
};

/// search_transitions over all 88 representatives, edges canonicalized to
/// representatives and assembled in (rule, N, projection-code) order.
TransitionGraph build_transition_graph(int n_max, int n_threads = 0,
                                       ProjectionPolicy policy = ProjectionPolicy::strict);

/// Edge-list text form, one `rep_a,rep_b,N,projection_bits` line per edge.
/// Self-loops are kept; rule-0 targets are dropped unless show_zero.
std::string edge_list_csv(const TransitionGraph& graph, bool show_zero);

struct HierarchyViolation {
    TransitionEdge edge;
    InfoClass class_a = InfoClass::I1;
    InfoClass class_b = InfoClass::I1;
};

/// Edges that climb the I1 < I2 < I3 hierarchy (class of target above class
/// of source). Self-loops are skipped. Expected empty.
std::vector<HierarchyViolation> validate_hierarchy(const TransitionGraph& graph,
                                                   const std::map<std::uint8_t, InfoClass>& classes);

} // namespace ecainfo
