#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "imagebin/automaton.hpp"

namespace imagebin {

/// Complete DFA. delta[q][a] is the successor of q on letter a.
struct Dfa {
    Alphabet alphabet;
    std::size_t states = 0;
    std::vector<std::vector<std::size_t>> delta;
    std::size_t initial = 0;
    std::vector<bool> accepting;

    bool accepts(const Word& w) const;
    /// Throws ValidationError unless delta is total and every index is in range.
    void validate() const;

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// NFA with a set of initial states. delta[q][a] lists successors, sorted and unique.
struct Nfa {
    Alphabet alphabet;
    std::size_t states = 0;
    std::vector<std::vector<std::vector<std::size_t>>> delta;
    std::vector<bool> initial;
    std::vector<bool> accepting;

    bool accepts(const Word& w) const;
    void validate() const;

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

/// Finite block of the Hankel matrix: values(i, j) = L(row_words[i] · col_words[j]).
struct HankelBlock {
    std::vector<Word> row_words;
    std::vector<Word> col_words;
    Matrix values;
};

struct BinarinessResult {
    bool image_binary = true;
    /// A word whose value lies outside {0, 1}, with that value.
    std::optional<Word> witness;
    std::optional<Scalar> value;
};

/// Decides whether L_A(w) ∈ {0,1} for every word by testing A against A ⊙ A.
/// Rational automata only.
BinarinessResult is_image_binary(const WeightedAutomaton& a);

/// L = 1 - L_A, n + 1 states.
WeightedAutomaton complement(const WeightedAutomaton& a);
/// L = L_A · L_B, n_A · n_B states.
WeightedAutomaton intersect(const WeightedAutomaton& a, const WeightedAutomaton& b);
/// L = L_A + L_B - L_A · L_B, n_A + n_B + n_A · n_B states.
WeightedAutomaton union_of(const WeightedAutomaton& a, const WeightedAutomaton& b);

/// Equivalent DFA with at most 2^n states. Reachable forward vectors are
/// identified by their inner products with a basis of the backward space.
Dfa ifa_to_dfa(const WeightedAutomaton& a);

WeightedAutomaton dfa_to_ifa(const Dfa& d, Field field = Field::Rational);
/// Reachable subsets only; the empty subset appears as a sink when reached.
Dfa subset_construction(const Nfa& n);
WeightedAutomaton nfa_to_ifa(const Nfa& n);

HankelBlock hankel_block(const WeightedAutomaton& a, std::size_t row_len, std::size_t col_len);
/// Exact rank over `field`. Over GF(2) every entry must be 0 or 1.
std::size_t block_rank(const HankelBlock& h, Field field);

}  // namespace imagebin
