#include "imagebin/ifa.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "imagebin/errors.hpp"
#include "imagebin/kernels.hpp"

namespace imagebin {

bool Dfa::accepts(const Word& w) const {
    std::size_t q = initial;
    for (std::size_t a : w) q = delta.at(q).at(a);
    return accepting.at(q);
}

void Dfa::validate() const {
    if (states == 0) throw ValidationError("DFA needs at least one state");
    if (delta.size() != states || accepting.size() != states) throw ValidationError("DFA tables have wrong size");
    if (initial >= states) throw ValidationError("DFA initial state out of range");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw ValidationError("DFA transition function is not total");
        for (std::size_t t : row)
            if (t >= states) throw ValidationError("DFA transition target out of range");
    }
}

bool Nfa::accepts(const Word& w) const {
    std::vector<bool> cur = initial;
    for (std::size_t a : w) {
        std::vector<bool> next(states, false);
        for (std::size_t q = 0; q < states; ++q)
            if (cur[q])
                for (std::size_t t : delta[q][a]) next[t] = true;
        cur = std::move(next);
    }
    for (std::size_t q = 0; q < states; ++q)
        if (cur[q] && accepting[q]) return true;
    return false;
}

void Nfa::validate() const {
    if (states == 0) throw ValidationError("NFA needs at least one state");
    if (delta.size() != states || initial.size() != states || accepting.size() != states)
        throw ValidationError("NFA tables have wrong size");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw ValidationError("NFA transition table has wrong width");
        for (const auto& targets : row)
            for (std::size_t t : targets)
                if (t >= states) throw ValidationError("NFA transition target out of range");
    }
}

BinarinessResult is_image_binary(const WeightedAutomaton& a) {
    if (a.field() != Field::Rational) throw InputError("image-binariness is only defined for rational automata");
    // Minimizing first keeps the Kronecker square small; L and L² are unchanged.
    const WeightedAutomaton m = minimize(a);
    auto eq = equivalent(m, hadamard(m, m));
    if (eq.equivalent) return {};
    return {false, eq.witness, eval_word(a, *eq.witness)};
}

WeightedAutomaton complement(const WeightedAutomaton& a) {
    return add(const_one(a.alphabet(), a.field()), negate(a));
}

WeightedAutomaton intersect(const WeightedAutomaton& a, const WeightedAutomaton& b) {
    return hadamard(a, b);
}

WeightedAutomaton union_of(const WeightedAutomaton& a, const WeightedAutomaton& b) {
    return add(add(a, b), negate(hadamard(a, b)));
}

Dfa ifa_to_dfa(const WeightedAutomaton& a) {
    const std::size_t n = a.states();
    auto bwd = detail::explore_span(a.final_vector(), a.transitions(), true);
    const auto& backward = bwd.vectors;  // backward[0] is η itself when η ≠ 0

    auto signature = [&](const Vector& v) {
        std::vector<bool> sig;
        sig.reserve(backward.size());
        for (const auto& b : backward) {
            Scalar s = dot(v, b);
            if (!s.is_zero() && !s.is_one())
                throw InvariantError("forward vector yields value " + s.to_string() +
                                     "; the automaton is not image-binary");
            sig.push_back(s.is_one());
        }
        return sig;
    };

    const std::size_t limit = n >= 63 ? std::size_t(-1) : (std::size_t(1) << n);
    Dfa d;
    d.alphabet = a.alphabet();
    std::map<std::vector<bool>, std::size_t> ids;
    std::vector<Vector> reps;
    std::deque<std::size_t> work;

    auto intern = [&](const Vector& v) {
        auto sig = signature(v);
        auto [it, fresh] = ids.emplace(sig, reps.size());
        if (fresh) {
            if (reps.size() + 1 > limit)
                throw InvariantError("more than 2^n distinct signatures; the automaton is not image-binary");
            reps.push_back(v);
            d.accepting.push_back(!sig.empty() && sig.front());
            d.delta.emplace_back(d.alphabet.size(), 0);
            work.push_back(it->second);
        }
        return it->second;
    };

    d.initial = intern(a.init_vector());
    while (!work.empty()) {
        std::size_t q = work.front();
        work.pop_front();
        for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
            std::size_t t = intern(times(reps[q], a.trans(l)));
            d.delta[q][l] = t;
        }
    }
    d.states = reps.size();
    return d;
}

WeightedAutomaton dfa_to_ifa(const Dfa& d, Field field) {
    d.validate();
    std::vector<Matrix> trans;
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
        Matrix m(d.states, d.states, field);
        for (std::size_t q = 0; q < d.states; ++q) m(q, d.delta[q][l]) = Scalar::one(field);
        trans.push_back(std::move(m));
    }
    Matrix init(1, d.states, field), final(d.states, 1, field);
    init(0, d.initial) = Scalar::one(field);
    for (std::size_t q = 0; q < d.states; ++q)
        if (d.accepting[q]) final(q, 0) = Scalar::one(field);
    return WeightedAutomaton(d.alphabet, std::move(trans), std::move(init), std::move(final));
}

Dfa subset_construction(const Nfa& n) {
    n.validate();
    Dfa d;
    d.alphabet = n.alphabet;
    std::map<std::vector<bool>, std::size_t> ids;
    std::vector<std::vector<bool>> sets;
    auto intern = [&](const std::vector<bool>& s) {
        auto [it, fresh] = ids.emplace(s, sets.size());
        if (fresh) {
            sets.push_back(s);
            bool acc = false;
            for (std::size_t q = 0; q < n.states; ++q) acc = acc || (s[q] && n.accepting[q]);
            d.accepting.push_back(acc);
            d.delta.emplace_back(n.alphabet.size(), 0);
        }
        return it->second;
    };
    d.initial = intern(n.initial);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t l = 0; l < n.alphabet.size(); ++l) {
            std::vector<bool> next(n.states, false);
            for (std::size_t q = 0; q < n.states; ++q)
                if (sets[i][q])
                    for (std::size_t t : n.delta[q][l]) next[t] = true;
            std::size_t t = intern(next);
            d.delta[i][l] = t;
        }
    }
    d.states = sets.size();
    return d;
}

WeightedAutomaton nfa_to_ifa(const Nfa& n) {
    return dfa_to_ifa(subset_construction(n));
}

HankelBlock hankel_block(const WeightedAutomaton& a, std::size_t row_len, std::size_t col_len) {
    const std::size_t k = a.alphabet().size();
    const std::size_t n = a.states();
    const Field f = a.field();
    HankelBlock h;
    h.row_words = words_up_to(k, row_len);
    h.col_words = words_up_to(k, col_len);

    // words_up_to lists a complete k-ary tree breadth-first, so dropping the
    // last letter of word i gives word (i - 1) / k.
    Matrix fwd(h.row_words.size(), n, f);
    for (std::size_t j = 0; j < n; ++j) fwd(0, j) = a.init()(0, j);
    for (std::size_t i = 1; i < h.row_words.size(); ++i) {
        std::size_t parent = (i - 1) / k;
        Vector v(fwd.row(parent).begin(), fwd.row(parent).end());
        v = times(v, a.trans(h.row_words[i].back()));
        for (std::size_t j = 0; j < n; ++j) fwd(i, j) = v[j];
    }

    // Dropping the first letter has no such closed form; look the suffix up.
    std::map<Word, std::size_t> col_index;
    for (std::size_t i = 0; i < h.col_words.size(); ++i) col_index[h.col_words[i]] = i;
    Matrix bwd(n, h.col_words.size(), f);
    for (std::size_t j = 0; j < n; ++j) bwd(j, 0) = a.final()(j, 0);
    for (std::size_t i = 1; i < h.col_words.size(); ++i) {
        const Word& y = h.col_words[i];
        Word tail(y.begin() + 1, y.end());
        std::size_t t = col_index.at(tail);
        Vector v(n, Scalar::zero(f));
        for (std::size_t j = 0; j < n; ++j) v[j] = bwd(j, t);
        v = times(a.trans(y.front()), v);
        for (std::size_t j = 0; j < n; ++j) bwd(j, i) = v[j];
    }

    h.values = kernels::multiply(fwd, bwd);
    return h;
}

std::size_t block_rank(const HankelBlock& h, Field field) {
    if (h.values.field() == field) return rank(h.values);
    if (field == Field::GF2) {
        for (const auto& s : h.values.entries())
            if (!s.is_zero() && !s.is_one())
                throw InputError("Hankel entry " + s.to_string() + " is not binary; GF(2) rank undefined");
    }
    return rank(h.values.converted(field));
}

}  // namespace imagebin
