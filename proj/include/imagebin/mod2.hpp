#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "imagebin/automaton.hpp"
#include "imagebin/ifa.hpp"

namespace imagebin {

/// Linear feedback shift register a_n = c_1 a_{n-1} + ... + c_d a_{n-d} mod 2
/// with initial bits a_0 .. a_{d-1}.
struct LfsrSpec {
    std::size_t d = 0;
    std::vector<int> taps;  // c_1 .. c_d
    std::vector<int> init;  // a_0 .. a_{d-1}

    /// Throws InputError unless d >= 1, both bit strings have length d and c_d = 1.
    void validate() const;
    /// Builds a spec from bit strings such as "011" and "100".
    static LfsrSpec from_strings(std::size_t d, std::string_view taps, std::string_view init);
};

/// First `length` terms; length must be at least d.
std::vector<int> lfsr_sequence(const LfsrSpec& spec, std::size_t length);
/// Least p with a_n = a_{n mod p} for all n. The all-zero register has period 1.
std::size_t lfsr_period(const LfsrSpec& spec);

/// d-state GF(2) automaton over {#} with L(#^n) = a_n. The state is the
/// window (a_n, ..., a_{n+d-1}) and the transition is the companion matrix.
WeightedAutomaton lfsr_to_mod2ma(const LfsrSpec& spec);
/// Cycle DFA over {#} accepting #^n iff a_n = 1, one state per period position.
Dfa lfsr_cycle_dfa(const LfsrSpec& spec);

/// GF(2) automaton with the same 0/1 language and at most as many states.
/// Throws InputError if `a` is not image-binary.
WeightedAutomaton ifa_to_mod2(const WeightedAutomaton& a);

struct ShiftRegisterReport {
    std::size_t period = 0;
    /// H[i][j] = a_{(i+j) mod p}, p = 2^d - 1.
    Matrix hankel;
    std::size_t rank = 0;
    /// (H²)[0][0] and (H²)[0][1].
    Rational diagonal;
    Rational off_diagonal;
    /// Every diagonal entry of H² is 2^{d-1} and every other entry is 2^{d-2}.
    bool square_matches;
    /// H² · H' = I for H' with diagonal 2^{-d+2} - 2^{-2d+2} and the given
    /// sign on the off-diagonal value 2^{-2d+2}.
    bool inverse_negative_off_diagonal;
    bool inverse_positive_off_diagonal;
};

/// Requires a maximal-period register; throws InputError naming the observed period otherwise.
ShiftRegisterReport shift_register_rank_report(const LfsrSpec& spec);

}  // namespace imagebin
