#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "imagebin/automaton.hpp"
#include "imagebin/graph.hpp"

namespace imagebin {

/// Nondeterministic Büchi automaton. delta[q][a] lists successors, sorted and unique.
struct Nba {
    Alphabet alphabet;
    std::size_t states = 0;
    std::vector<std::vector<std::vector<std::size_t>>> delta;
    std::vector<bool> initial;
    std::vector<bool> accepting;

    void validate() const;

    friend bool operator==(const Nba&, const Nba&) = default;
};

/// Weighted Büchi automaton over Q with a final state set. The weight of an
/// infinite path is the limit of its weight products; L(w) sums the weights
/// of final paths (those visiting an accepting state infinitely often).
struct Iba {
    Alphabet alphabet;
    std::vector<Matrix> trans;
    Matrix init;  // 1 × n
    std::vector<bool> accepting;

    std::size_t states() const { return init.cols(); }
    /// Throws ValidationError on shape or field mismatches. Rational field only.
    void validate() const;

    friend bool operator==(const Iba&, const Iba&) = default;
};

/// The ultimately periodic word stem · cycle^ω. The cycle is nonempty.
struct Lasso {
    Word stem;
    Word cycle;

    friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// Throws InputError unless the cycle is nonempty and every letter is below alphabet_size.
void validate_lasso(const Lasso& l, std::size_t alphabet_size);

/// The nonzero-edge graph of a weighted automaton: q → q' when M(a)[q][q'] ≠ 0 for some a.
Graph support_graph(const std::vector<Matrix>& trans);

/// States reachable from supp(init) that can reach a cycle through an accepting state.
std::vector<bool> useful_states(const Iba& a);
/// The automaton restricted to the states with keep[q] set, plus their old indices.
std::pair<Iba, std::vector<std::size_t>> restrict_states(const Iba& a, const std::vector<bool>& keep);
/// restrict_states(a, useful_states(a)). An automaton with no useful state
/// becomes a single non-accepting state with zero initial weight.
std::pair<Iba, std::vector<std::size_t>> trim(const Iba& a);

/// Every edge of weight ∉ {0, 1} leaves its SCC in the nonzero-edge graph,
/// so no path returns from its target to its source.
bool is_ultimately_stable(const Iba& a);

/// Embedding of an NBA as an IBA with 0/1 weights.
Iba nba_to_iba(const Nba& a);

bool nba_lasso_accepts(const Nba& a, const Lasso& l);
/// Number of final runs over the lasso word; nullopt when it is infinite or exceeds cap.
std::optional<Integer> nba_lasso_count_final(const Nba& a, const Lasso& l, const Integer& cap);

/// Sum of path weights over the final paths of the lasso word. Requires
/// finitely many final paths (SemanticError otherwise) and weight 1 on the
/// cycle edges those paths repeat forever (SemanticError otherwise).
Rational iba_lasso_eval(const Iba& a, const Lasso& l);
/// Number of final paths starting at a state of nonzero initial weight; nullopt when infinite.
std::optional<Integer> iba_lasso_count_final(const Iba& a, const Lasso& l);

/// Every lasso with stem length <= max_stem and cycle length 1..max_cycle.
/// Order: stem length, then stem lexicographically, then cycle likewise.
std::vector<Lasso> lassos_up_to(std::size_t alphabet_size, std::size_t max_stem, std::size_t max_cycle);

struct AmbiguityReport {
    bool within_bound = true;
    /// First lasso (in lassos_up_to order) with more than k final runs.
    std::optional<Lasso> witness;
    std::size_t lassos_checked = 0;
};

/// Bounded check that every lasso within the bounds has at most k final runs.
/// Lassos are examined in parallel; the result does not depend on scheduling.
AmbiguityReport check_ambiguity_on_lassos(const Nba& a, unsigned k, std::size_t max_stem, std::size_t max_cycle);

/// Sufficient structural sign of unbounded ambiguity: in the self-product
/// restricted to useful states, some diagonal pair (s, s) shares an SCC with
/// a pair (p, q), p ≠ q. Returns that pair.
std::optional<std::pair<std::size_t, std::size_t>> find_diamond_on_loop(const Nba& a);

}  // namespace imagebin
