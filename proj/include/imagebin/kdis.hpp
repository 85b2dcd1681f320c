#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "imagebin/buchi.hpp"

namespace imagebin {

/// Run counts per (state, bit). bit 0 (⊥) marks runs that have not visited
/// an accepting state since the last reset, bit 1 (⊤) those that have.
struct CountVector {
    std::vector<unsigned> counts;  // counts[2 * q + bit]

    CountVector() = default;
    explicit CountVector(std::size_t states) : counts(2 * states, 0) {}

    std::size_t states() const { return counts.size() / 2; }
    unsigned& at(std::size_t q, int bit) { return counts[2 * q + static_cast<std::size_t>(bit)]; }
    unsigned at(std::size_t q, int bit) const { return counts[2 * q + static_cast<std::size_t>(bit)]; }
    /// Total number of tracked runs.
    unsigned size() const;
    bool any_bottom() const;
    /// "(1,bot):2 (4,top):1" with 1-based states, state-major, ⊥ before ⊤, zero entries omitted.
    std::string to_string() const;

    auto operator<=>(const CountVector&) const = default;
};

/// Number of ways n distinguishable runs can each pick a nonempty set of
/// successors so that successor x is picked by exactly g[x] runs:
/// Σ_j (-1)^j C(n, j) Π_x C(n - j, g[x]).
Integer num_succ(unsigned n, std::span<const unsigned> g);

/// All count vectors of size <= max_size reachable from r on `letter`, with
/// their multiplicities w(r, letter, r'). Runs at (q, b) move to
/// δ(q, letter) with bit ((q ∈ F) ∨ b) ∧ b'', where b'' = ⊤ iff r has a
/// nonzero ⊥ count.
std::map<CountVector, Integer> kdis_successors(const Nba& a, const CountVector& r, std::size_t letter,
                                               unsigned max_size);
/// w(r, letter, r'); zero when r' is not a successor.
Integer kdis_weight_w(const Nba& a, const CountVector& r, std::size_t letter, const CountVector& r2);

struct KdisResult {
    /// The trimmed automaton; state i is labels[i].
    Iba iba;
    std::vector<CountVector> labels;
    std::size_t untrimmed_states = 0;
};

/// Disambiguates a k-ambiguous NBA into an IBA over count vectors of size
/// <= k. Initial weight (-1)^{size-1} on nonempty subsets of Q0 × {⊥},
/// transition weight (-1)^{size(r')-size(r)} w(r, a, r'), final states are
/// those without ⊥ runs. The result is trimmed to useful states.
KdisResult kdis(const Nba& a, unsigned k);

}  // namespace imagebin
