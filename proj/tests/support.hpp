#pragma once

// Sample automata and independent oracles shared by the test binaries. The
// oracles avoid the library's algorithms: they evaluate with plain loops,
// decide lasso acceptance with boolean relations and solve Markov chains with
// their own elimination.

#include <cstddef>
#include <map>
#include <vector>

#include "imagebin/automaton.hpp"
#include "imagebin/buchi.hpp"
#include "imagebin/fixtures.hpp"
#include "imagebin/ifa.hpp"
#include "imagebin/kdis.hpp"
#include "imagebin/mc.hpp"

namespace imagebin::testing {

/// Three-state IFA with a -1 self-loop recognising words that start with an
/// even positive number of a's.
WeightedAutomaton even_a_prefix_ifa();
/// Three-state UFA for the same language.
WeightedAutomaton even_a_prefix_ufa();
/// Base F with F·M_ufa(x) = M_ifa(x)·F.
Matrix ufa_to_ifa_base();
bool starts_with_even_positive_a(const Word& w);

/// Unary NBA q1,q2 → q3 → {q4, q5}, accepting self-loops on q4 and q5; four final runs on a^ω.
Nba four_run_nba();
/// Two-state deterministic automaton for "infinitely many a" over {a, b}.
Nba infinitely_many_a_nba();
/// One-state chain labelled "a".
MarkovChain unary_chain();
/// One-state automaton accepting every word over the alphabet.
Iba accept_all_iba(const Alphabet& alphabet);

/// Deterministic Büchi automata are stored as complete Dfa values.
Nba dba_as_nba(const Dfa& d);
/// Ten deterministic Büchi languages over {a, b}.
std::vector<Dfa> handcrafted_dbas();

/// α M(w₁)…M(w_k) η with plain loops; GF(2) automata are evaluated over the integers and reduced mod 2.
Rational oracle_eval(const WeightedAutomaton& a, const Word& w);
/// Acceptance of stem·cycle^ω via reachability and boolean relation closure.
bool oracle_lasso_accepts(const Nba& a, const Lasso& l);
/// Probability that the chain's label sequence is accepted by a complete DBA:
/// mass reaching bottom SCCs of the product that contain an accepting state.
Rational oracle_dba_probability(const Dfa& dba, const MarkovChain& m);

/// A concrete set of runs: distinct state sequences, each with a bit.
struct RunSet {
    std::vector<std::vector<std::size_t>> runs;
    std::vector<int> bits;
};
/// A run set with last-state/bit counts r. `variant` selects the prefixes and the order of the runs.
RunSet witness_runs(const CountVector& r, int variant);
/// Number of successor run sets of `p` on `letter` with last-state/bit counts r2, by enumeration.
Integer oracle_successor_count(const Nba& a, const RunSet& p, std::size_t letter, const CountVector& r2);
/// Every successor count vector of `p` with its multiplicity.
std::map<CountVector, Integer> oracle_successors(const Nba& a, const RunSet& p, std::size_t letter);

/// All count vectors over `states` states with total size in [1, max_size].
std::vector<CountVector> count_vectors_up_to(std::size_t states, unsigned max_size);

}  // namespace imagebin::testing
