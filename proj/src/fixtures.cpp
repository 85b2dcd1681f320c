#include "imagebin/fixtures.hpp"

#include <algorithm>

#include "imagebin/errors.hpp"

namespace imagebin {

Alphabet letters(std::size_t count) {
    if (count > 26) throw InputError("at most 26 generated letters");
    Alphabet a;
    for (std::size_t i = 0; i < count; ++i) a.push_back(std::string(1, static_cast<char>('a' + i)));
    return a;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw InputError("only square matrices have inverses");
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Dfa random_dfa(Rng& rng, std::size_t states, std::size_t alphabet_size) {
    Dfa d;
    d.alphabet = letters(alphabet_size);
    d.states = states;
    d.initial = 0;
    for (std::size_t q = 0; q < states; ++q) {
        std::vector<std::size_t> row;
        for (std::size_t a = 0; a < alphabet_size; ++a) row.push_back(rng.below(states));
        d.delta.push_back(std::move(row));
        d.accepting.push_back(rng.coin());
    }
    return d;
}

Nfa random_nfa(Rng& rng, std::size_t states, std::size_t alphabet_size) {
    Nfa n;
    n.alphabet = letters(alphabet_size);
    n.states = states;
    n.delta.assign(states, std::vector<std::vector<std::size_t>>(alphabet_size));
    for (std::size_t q = 0; q < states; ++q)
        for (std::size_t a = 0; a < alphabet_size; ++a)
            for (std::size_t t = 0; t < states; ++t)
                if (rng.below(3) == 0) n.delta[q][a].push_back(t);
    for (std::size_t q = 0; q < states; ++q) {
        n.initial.push_back(rng.below(3) == 0);
        n.accepting.push_back(rng.coin());
    }
    n.initial[rng.below(states)] = true;
    return n;
}

Matrix random_unit_lower_triangular(Rng& rng, std::size_t n, long range) {
    Matrix f = Matrix::identity(n, Field::Rational);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) f(i, j) = Scalar::rational(rng.between(-range, range), 1);
    return f;
}

WeightedAutomaton conjugate(const WeightedAutomaton& a, const Matrix& f) {
    auto finv = inverse(f);
    if (!finv) throw InputError("conjugation base is singular");
    std::vector<Matrix> trans;
    for (const auto& m : a.transitions()) trans.push_back(f * m * *finv);
    return WeightedAutomaton(a.alphabet(), std::move(trans), a.init() * *finv, f * a.final());
}

ConjugatedIfa random_conjugated_ifa(Rng& rng, std::size_t states, std::size_t alphabet_size) {
    Dfa d = random_dfa(rng, states, alphabet_size);
    Matrix f = random_unit_lower_triangular(rng, states, 2);
    WeightedAutomaton ifa = conjugate(dfa_to_ifa(d), f);
    return {std::move(d), std::move(f), std::move(ifa)};
}

Nba random_dba(Rng& rng, std::size_t states, std::size_t alphabet_size) {
    Nba a;
    a.alphabet = letters(alphabet_size);
    a.states = states;
    a.delta.assign(states, std::vector<std::vector<std::size_t>>(alphabet_size));
    for (std::size_t q = 0; q < states; ++q)
        for (std::size_t l = 0; l < alphabet_size; ++l) a.delta[q][l] = {static_cast<std::size_t>(rng.below(states))};
    a.initial.assign(states, false);
    a.initial[0] = true;
    for (std::size_t q = 0; q < states; ++q) a.accepting.push_back(rng.coin());
    return a;
}

Nba random_union_of_dbas(Rng& rng, std::size_t components, std::size_t states_per_component,
                         std::size_t alphabet_size) {
    Nba out;
    out.alphabet = letters(alphabet_size);
    out.states = components * states_per_component;
    for (std::size_t c = 0; c < components; ++c) {
        Nba part = random_dba(rng, states_per_component, alphabet_size);
        const std::size_t offset = c * states_per_component;
        for (std::size_t q = 0; q < states_per_component; ++q) {
            std::vector<std::vector<std::size_t>> row;
            for (const auto& targets : part.delta[q]) {
                std::vector<std::size_t> shifted;
                for (std::size_t t : targets) shifted.push_back(t + offset);
                row.push_back(std::move(shifted));
            }
            out.delta.push_back(std::move(row));
            out.initial.push_back(part.initial[q]);
            out.accepting.push_back(part.accepting[q]);
        }
    }
    return out;
}

Nba random_nba(Rng& rng, std::size_t states, std::size_t alphabet_size) {
    Nba a;
    a.alphabet = letters(alphabet_size);
    a.states = states;
    a.delta.assign(states, std::vector<std::vector<std::size_t>>(alphabet_size));
    for (std::size_t q = 0; q < states; ++q)
        for (std::size_t l = 0; l < alphabet_size; ++l)
            for (std::size_t t = 0; t < states; ++t)
                if (rng.below(3) == 0) a.delta[q][l].push_back(t);
    for (std::size_t q = 0; q < states; ++q) {
        a.initial.push_back(rng.below(3) == 0);
        a.accepting.push_back(rng.below(3) == 0);
    }
    a.initial[rng.below(states)] = true;
    a.accepting[rng.below(states)] = true;
    return a;
}

MarkovChain random_markov_chain(Rng& rng, std::size_t states, const Alphabet& alphabet) {
    if (alphabet.empty()) throw InputError("Markov chain labels need a nonempty alphabet");
    MarkovChain m;
    m.states = states;
    m.alphabet = alphabet;
    m.transition = Matrix(states, states, Field::Rational);
    auto random_distribution = [&]() {
        std::vector<long> w(states, 0);
        long total = 0;
        for (auto& x : w) {
            x = rng.below(2) == 0 ? 0 : rng.between(1, 4);
            total += x;
        }
        if (total == 0) {
            const std::size_t i = rng.below(states);
            w[i] = 1;
            total = 1;
        }
        std::vector<Rational> p;
        for (long x : w) {
            Rational r(x, total);
            r.canonicalize();
            p.push_back(r);
        }
        return p;
    };
    for (std::size_t s = 0; s < states; ++s) {
        auto row = random_distribution();
        for (std::size_t t = 0; t < states; ++t) m.transition(s, t) = Scalar::rational(row[t]);
    }
    m.initial = random_distribution();
    for (std::size_t s = 0; s < states; ++s) m.labels.push_back(alphabet[rng.below(alphabet.size())]);
    return m;
}

}  // namespace imagebin
