#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imagebin/basis.hpp"
#include "imagebin/matrix.hpp"

namespace imagebin {

using Alphabet = std::vector<std::string>;
/// A finite word as letter indices into an alphabet.
using Word = std::vector<std::size_t>;

/// Splits text into letters. Whitespace- or comma-separated tokens when any
/// separator is present; otherwise one letter per character, which requires
/// an alphabet of single-character letters. Empty text is the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);
/// Inverse of parse_word: letters concatenated when all are single
/// characters, space-separated otherwise.
std::string format_word(const Alphabet& alphabet, const Word& w);
std::size_t letter_index(const Alphabet& alphabet, std::string_view letter);

/// All words of length <= max_len in length-lexicographic order (letters in alphabet order).
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_len);

/// Weighted automaton (Q, Σ, M, α, η) over Q or GF(2): L(w) = α M(w) η.
class WeightedAutomaton {
public:
    WeightedAutomaton(Alphabet alphabet, std::vector<Matrix> trans, Matrix init, Matrix final);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t states() const { return init_.cols(); }
    Field field() const { return init_.field(); }

    const Matrix& trans(std::size_t letter) const { return trans_.at(letter); }
    const std::vector<Matrix>& transitions() const { return trans_; }
    const Matrix& init() const { return init_; }
    const Matrix& final() const { return final_; }

    Vector init_vector() const;
    Vector final_vector() const;

    friend bool operator==(const WeightedAutomaton&, const WeightedAutomaton&) = default;

private:
    Alphabet alphabet_;
    std::vector<Matrix> trans_;
    Matrix init_;
    Matrix final_;
};

Scalar eval_word(const WeightedAutomaton& a, const Word& w);

struct EquivalenceResult {
    bool equivalent = true;
    /// Shortest distinguishing word when not equivalent.
    std::optional<Word> witness;
};

/// Decides L_A = L_B by exploring the forward space of the difference
/// automaton breadth-first (letters in alphabet order).
EquivalenceResult equivalent(const WeightedAutomaton& a, const WeightedAutomaton& b);

/// Equivalent automaton with Hankel-rank many states: forward reduction then
/// backward reduction. The constant-zero language yields the canonical
/// 1-state zero automaton.
WeightedAutomaton minimize(const WeightedAutomaton& a);

/// F·M_A(a) = M_A2(a)·F for every letter, α_A = α_A2·F and η_A2 = F·η_A.
/// F must be n_A2 × n_A.
bool check_forward_conjugate(const WeightedAutomaton& a, const WeightedAutomaton& a2, const Matrix& f);

/// Block-diagonal union: L = L_A + L_B.
WeightedAutomaton add(const WeightedAutomaton& a, const WeightedAutomaton& b);
/// Negated initial vector: L = -L_A.
WeightedAutomaton negate(const WeightedAutomaton& a);
/// Kronecker product: L = L_A · L_B pointwise.
WeightedAutomaton hadamard(const WeightedAutomaton& a, const WeightedAutomaton& b);
/// One state, every weight 1: L ≡ 1.
WeightedAutomaton const_one(const Alphabet& alphabet, Field field = Field::Rational);
/// One state, α = 0: L ≡ 0.
WeightedAutomaton zero_automaton(const Alphabet& alphabet, Field field = Field::Rational);

/// Same automaton with every weight reinterpreted in `target`.
WeightedAutomaton convert_field(const WeightedAutomaton& a, Field target);

namespace detail {

/// Breadth-first exploration of span{ start·M(w) } (or M(w)·start when
/// `backward`), returning the basis together with the original vector and
/// word for every basis element, in discovery order.
struct SpanExploration {
    LinearBasis basis;
    std::vector<Vector> vectors;
    std::vector<Word> words;
};
SpanExploration explore_span(const Vector& start, const std::vector<Matrix>& trans, bool backward);

void require_compatible(const WeightedAutomaton& a, const WeightedAutomaton& b, const char* op);

}  // namespace detail

}  // namespace imagebin
