#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imagebin/buchi.hpp"
#include "imagebin/graph.hpp"

namespace imagebin {

/// Finite Markov chain whose states carry letters.
struct MarkovChain {
    std::size_t states = 0;
    Alphabet alphabet;
    Matrix transition;               // states × states, rows sum to 1
    std::vector<Rational> initial;   // sums to 1
    std::vector<std::string> labels; // letter of each state, drawn from alphabet

    /// Throws ValidationError naming the violated invariant.
    void validate() const;

    friend bool operator==(const MarkovChain&, const MarkovChain&) = default;
};

struct SccClass {
    bool recurrent = false;
    bool accepting = false;
    /// Product nodes of one cut fiber when recurrent.
    std::vector<std::size_t> cut;
};

/// Product of a trimmed IBA with a Markov chain, restricted to nodes that can
/// reach a cycle through an accepting automaton state.
/// B[(q,s),(q',s')] = P[s,s'] · M(λ(s))[q,q'].
struct ProductSystem {
    /// The trimmed automaton the nodes refer to, and the original index of each of its states.
    Iba automaton;
    std::vector<std::size_t> automaton_original;
    MarkovChain chain;
    /// Letter index of each chain state in the automaton alphabet.
    std::vector<std::size_t> letter_of;

    std::vector<std::pair<std::size_t, std::size_t>> nodes;  // (q, s)
    /// node_index[q * chain.states + s] is the node id of (q, s), or npos.
    std::vector<std::size_t> node_index;
    Matrix b;
    Graph graph;
    SccDecomposition scc;
    std::vector<SccClass> classes;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Node id of (q, s), or nullopt if it was removed.
    std::optional<std::size_t> node_of(std::size_t q, std::size_t s) const;
};

/// A set of automaton states paired with one chain state inside one SCC.
struct Fiber {
    std::size_t scc = 0;
    std::size_t chain_state = 0;
    std::vector<std::size_t> automaton_states;  // sorted; empty is the empty fiber

    auto operator<=>(const Fiber&) const = default;
};

/// Builds the product and classifies every SCC.
ProductSystem build_product(const Iba& a, const MarkovChain& m);

/// Fiber f ▷ t: the automaton successors under λ(s) of f's states, paired
/// with t and kept when inside f's SCC. nullopt when P[s,t] = 0.
std::optional<Fiber> fiber_step(const ProductSystem& ps, const Fiber& f, std::size_t t);

/// An SCC is recurrent iff some fiber reachable from a singleton never steps
/// to the empty fiber; that fiber is returned as the cut. Accepting iff it
/// holds a node whose automaton state is accepting.
SccClass classify_scc(const ProductSystem& ps, std::size_t component);

/// Solves ζ = Bζ with μ·ζ_D = 1 on accepting recurrent SCCs and ζ_D = 0 on
/// non-accepting recurrent ones. Throws InvariantError when the system is
/// singular or inconsistent, SemanticError when some value leaves [0, 1].
std::vector<Rational> solve_values(const ProductSystem& ps);

struct ModelCheckResult {
    Rational probability;
    ProductSystem product;
    std::vector<Rational> values;
};

/// Σ_s ι(s) Σ_q α(q) z_{q,s}.
ModelCheckResult model_check_detailed(const Iba& a, const MarkovChain& m);
Rational model_check(const Iba& a, const MarkovChain& m);

/// Collatz–Wielandt bounds on the spectral radius of the SCC's block of B,
/// from power iteration on (B_D + I) / 2 in double precision.
std::pair<double, double> spectral_radius_bounds(const ProductSystem& ps, std::size_t component,
                                                 double tolerance = 1e-10, std::size_t max_iterations = 200000);

}  // namespace imagebin
