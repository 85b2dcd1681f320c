#pragma once

// Seeded generators for tests, benchmarks and the `gen` command. Draws use
// std::mt19937_64 reduced with `%`, so a seed yields the same objects on
// every platform.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "imagebin/automaton.hpp"
#include "imagebin/buchi.hpp"
#include "imagebin/ifa.hpp"
#include "imagebin/mc.hpp"

namespace imagebin {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    bool coin() { return below(2) == 1; }
    /// Uniform in [lo, hi].
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 engine_;
};

/// "a", "b", ... (at most 26 letters).
Alphabet letters(std::size_t count);

/// Inverse over the matrix's field, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Dfa random_dfa(Rng& rng, std::size_t states, std::size_t alphabet_size);
Nfa random_nfa(Rng& rng, std::size_t states, std::size_t alphabet_size);

/// Unit lower-triangular integer matrix with off-diagonal entries in [-range, range].
Matrix random_unit_lower_triangular(Rng& rng, std::size_t n, long range);

/// Automaton with M'(a) = F M(a) F⁻¹, α' = α F⁻¹, η' = F η; F must be invertible.
/// check_forward_conjugate(a, result, f) holds.
WeightedAutomaton conjugate(const WeightedAutomaton& a, const Matrix& f);

struct ConjugatedIfa {
    Dfa source;
    Matrix base;
    WeightedAutomaton ifa;
};
/// A random DFA embedded as an IFA and conjugated by a random unit lower-triangular base.
ConjugatedIfa random_conjugated_ifa(Rng& rng, std::size_t states, std::size_t alphabet_size);

/// Complete deterministic Büchi automaton with a random accepting set.
Nba random_dba(Rng& rng, std::size_t states, std::size_t alphabet_size);
/// Disjoint union of `components` random complete DBAs; at most `components`-ambiguous.
Nba random_union_of_dbas(Rng& rng, std::size_t components, std::size_t states_per_component,
                         std::size_t alphabet_size);
/// Random NBA: each (q, a, q') is an edge with probability 1/3, at least one
/// initial and one accepting state.
Nba random_nba(Rng& rng, std::size_t states, std::size_t alphabet_size);

/// Random chain with rational rows, every row supported on 1..states entries,
/// labels drawn uniformly from `alphabet`.
MarkovChain random_markov_chain(Rng& rng, std::size_t states, const Alphabet& alphabet);

}  // namespace imagebin
