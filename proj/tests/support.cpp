#include "support.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace imagebin::testing {

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix bool_identity(std::size_t n) {
    BoolMatrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    return m;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    const std::size_t n = a.size();
    BoolMatrix c(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (b[k][j]) c[i][j] = true;
    return c;
}

BoolMatrix bool_or(BoolMatrix a, const BoolMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = a[i][j] || b[i][j];
    return a;
}

/// Reflexive transitive closure.
BoolMatrix bool_star(const BoolMatrix& r) {
    BoolMatrix c = bool_or(bool_identity(r.size()), r);
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (c[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (c[k][j]) c[i][j] = true;
    return c;
}

/// Reachability over a word: `reach` holds the pairs joined by a run, `visit`
/// those joined by a run that leaves an accepting state at least once.
struct WordRelation {
    BoolMatrix reach;
    BoolMatrix visit;
};

WordRelation letter_relation(const Nba& a, std::size_t letter) {
    const std::size_t n = a.states;
    WordRelation r{BoolMatrix(n, std::vector<bool>(n, false)), BoolMatrix(n, std::vector<bool>(n, false))};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q : a.delta[p][letter]) {
            r.reach[p][q] = true;
            if (a.accepting[p]) r.visit[p][q] = true;
        }
    return r;
}

WordRelation word_relation(const Nba& a, const Word& w) {
    WordRelation r{bool_identity(a.states), BoolMatrix(a.states, std::vector<bool>(a.states, false))};
    for (std::size_t x : w) {
        WordRelation l = letter_relation(a, x);
        r = {bool_product(r.reach, l.reach), bool_or(bool_product(r.visit, l.reach), bool_product(r.reach, l.visit))};
    }
    return r;
}

/// Solves the square system m·x = rhs by Gauss-Jordan elimination; the system must be nonsingular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("oracle system is singular");
        std::swap(m[p], m[c]);
        std::swap(rhs[p], rhs[c]);
        const Rational inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        rhs[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    return rhs;
}

}  // namespace

WeightedAutomaton even_a_prefix_ifa() {
    return WeightedAutomaton({"a", "b"},
                             {Matrix::of_ints({{-1, 1, 0}, {0, 0, 1}, {0, 0, 1}}),
                              Matrix::of_ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})},
                             Matrix::of_ints({{1, 0, 0}}), Matrix::of_ints({{0}, {0}, {1}}));
}

WeightedAutomaton even_a_prefix_ufa() {
    return WeightedAutomaton({"a", "b"},
                             {Matrix::of_ints({{0, 1, 0}, {1, 0, 1}, {0, 0, 0}}),
                              Matrix::of_ints({{0, 0, 0}, {0, 0, 0}, {1, 1, 1}})},
                             Matrix::of_ints({{1, 0, 0}}), Matrix::of_ints({{0}, {0}, {1}}));
}

Matrix ufa_to_ifa_base() { return Matrix::of_ints({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}); }

bool starts_with_even_positive_a(const Word& w) {
    std::size_t n = 0;
    while (n < w.size() && w[n] == 0) ++n;
    return n > 0 && n % 2 == 0;
}

Nba four_run_nba() {
    Nba a;
    a.alphabet = {"a"};
    a.states = 5;
    a.delta = {{{2}}, {{2}}, {{3, 4}}, {{3}}, {{4}}};
    a.initial = {true, true, false, false, false};
    a.accepting = {false, false, false, true, true};
    return a;
}

Nba infinitely_many_a_nba() {
    Nba a;
    a.alphabet = {"a", "b"};
    a.states = 2;
    a.delta = {{{1}, {0}}, {{1}, {0}}};
    a.initial = {true, false};
    a.accepting = {false, true};
    return a;
}

MarkovChain unary_chain() {
    MarkovChain m;
    m.states = 1;
    m.alphabet = {"a"};
    m.transition = Matrix::of_ints({{1}});
    m.initial = {Rational(1)};
    m.labels = {"a"};
    return m;
}

Iba accept_all_iba(const Alphabet& alphabet) {
    Iba a;
    a.alphabet = alphabet;
    a.trans.assign(alphabet.size(), Matrix::of_ints({{1}}));
    a.init = Matrix::of_ints({{1}});
    a.accepting = {true};
    return a;
}

Nba dba_as_nba(const Dfa& d) {
    Nba a;
    a.alphabet = d.alphabet;
    a.states = d.states;
    for (std::size_t q = 0; q < d.states; ++q) {
        std::vector<std::vector<std::size_t>> row;
        for (std::size_t t : d.delta[q]) row.push_back({t});
        a.delta.push_back(std::move(row));
    }
    a.initial.assign(d.states, false);
    a.initial[d.initial] = true;
    a.accepting = d.accepting;
    return a;
}

std::vector<Dfa> handcrafted_dbas() {
    auto make = [](std::vector<std::vector<std::size_t>> delta, std::vector<bool> accepting) {
        Dfa d;
        d.alphabet = {"a", "b"};
        d.states = delta.size();
        d.delta = std::move(delta);
        d.accepting = std::move(accepting);
        return d;
    };
    return {
        make({{1, 0}, {1, 0}}, {false, true}),                          // infinitely many a
        make({{0, 1}, {0, 1}}, {false, true}),                          // infinitely many b
        make({{0, 0}}, {true}),                                         // every word
        make({{1, 2}, {1, 1}, {2, 2}}, {false, true, false}),           // starts with a
        make({{1, 3}, {3, 2}, {2, 2}, {3, 3}}, {false, false, true, false}),  // starts with ab
        make({{0, 1}, {1, 1}}, {true, false}),                          // a^ω
        make({{0, 1}, {0, 2}, {2, 2}}, {true, true, false}),            // never bb
        make({{1, 0}, {1, 2}, {1, 0}}, {false, false, true}),           // infinitely many ab
        make({{2, 1}, {0, 0}, {0, 0}}, {false, false, true}),           // infinitely many a at even positions
        make({{1, 0}, {2, 0}, {2, 0}}, {false, false, true}),           // infinitely many aa
    };
}

Rational oracle_eval(const WeightedAutomaton& a, const Word& w) {
    const std::size_t n = a.states();
    std::vector<Rational> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = a.init()(0, j).value();
    for (std::size_t x : w) {
        const Matrix& m = a.trans(x);
        std::vector<Rational> next(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0)
                for (std::size_t j = 0; j < n; ++j) next[j] += v[i] * m(i, j).value();
        v = std::move(next);
    }
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) total += v[j] * a.final()(j, 0).value();
    if (a.field() == Field::GF2) {
        Integer z = total.get_num() % 2;
        if (z < 0) z += 2;
        return Rational(z);
    }
    return total;
}

bool oracle_lasso_accepts(const Nba& a, const Lasso& l) {
    const std::size_t n = a.states;
    std::vector<bool> current = a.initial;
    const WordRelation stem = word_relation(a, l.stem);
    std::vector<bool> after_stem(n, false);
    for (std::size_t p = 0; p < n; ++p)
        if (current[p])
            for (std::size_t q = 0; q < n; ++q)
                if (stem.reach[p][q]) after_stem[q] = true;
    const WordRelation cycle = word_relation(a, l.cycle);
    const BoolMatrix star = bool_star(cycle.reach);
    const BoolMatrix visiting = bool_product(bool_product(star, cycle.visit), star);
    for (std::size_t p = 0; p < n; ++p) {
        if (!after_stem[p]) continue;
        for (std::size_t q = 0; q < n; ++q)
            if (star[p][q] && visiting[q][q]) return true;
    }
    return false;
}

Rational oracle_dba_probability(const Dfa& dba, const MarkovChain& m) {
    const std::size_t s_count = m.states;
    const std::size_t n = dba.states * s_count;
    auto id = [&](std::size_t q, std::size_t s) { return q * s_count + s; };
    std::vector<std::size_t> letter(s_count);
    for (std::size_t s = 0; s < s_count; ++s)
        letter[s] = static_cast<std::size_t>(
            std::find(dba.alphabet.begin(), dba.alphabet.end(), m.labels[s]) - dba.alphabet.begin());

    BoolMatrix edge(n, std::vector<bool>(n, false));
    for (std::size_t q = 0; q < dba.states; ++q)
        for (std::size_t s = 0; s < s_count; ++s)
            for (std::size_t t = 0; t < s_count; ++t)
                if (m.transition(s, t).value() != 0) edge[id(q, s)][id(dba.delta[q][letter[s]], t)] = true;
    const BoolMatrix reach = bool_star(edge);

    std::vector<bool> bottom(n, true), good(n, false);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (reach[v][u] && !reach[u][v]) bottom[v] = false;
    for (std::size_t v = 0; v < n; ++v) {
        if (!bottom[v]) continue;
        for (std::size_t u = 0; u < n; ++u)
            if (reach[v][u] && dba.accepting[u / s_count]) good[v] = true;
    }
    std::vector<bool> live(n, false);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (good[u] && reach[v][u]) live[v] = true;

    std::vector<std::size_t> unknown, slot(n, n);
    for (std::size_t v = 0; v < n; ++v)
        if (live[v] && !good[v]) {
            slot[v] = unknown.size();
            unknown.push_back(v);
        }
    std::vector<std::vector<Rational>> sys(unknown.size(), std::vector<Rational>(unknown.size(), Rational(0)));
    std::vector<Rational> rhs(unknown.size(), Rational(0));
    for (std::size_t i = 0; i < unknown.size(); ++i) {
        const std::size_t q = unknown[i] / s_count, s = unknown[i] % s_count;
        sys[i][i] += 1;
        const std::size_t q2 = dba.delta[q][letter[s]];
        for (std::size_t t = 0; t < s_count; ++t) {
            const Rational& p = m.transition(s, t).value();
            if (p == 0) continue;
            const std::size_t u = id(q2, t);
            if (good[u]) rhs[i] += p;
            else if (live[u]) sys[i][slot[u]] -= p;
        }
    }
    const auto x = solve_exact(sys, rhs);
    Rational total = 0;
    for (std::size_t s = 0; s < s_count; ++s) {
        const std::size_t v = id(dba.initial, s);
        const Rational value = good[v] ? Rational(1) : live[v] ? x[slot[v]] : Rational(0);
        total += m.initial[s] * value;
    }
    return total;
}

RunSet witness_runs(const CountVector& r, int variant) {
    RunSet p;
    std::size_t serial = 0;
    for (std::size_t q = 0; q < r.states(); ++q)
        for (int bit = 0; bit < 2; ++bit)
            for (unsigned i = 0; i < r.at(q, bit); ++i, ++serial) {
                std::vector<std::size_t> run;
                if (variant == 0) {
                    run = {serial, q};
                } else {
                    run.assign(serial + 1, q);
                    run.push_back(q);
                }
                p.runs.push_back(std::move(run));
                p.bits.push_back(bit);
            }
    if (variant != 0) {
        std::reverse(p.runs.begin(), p.runs.end());
        std::reverse(p.bits.begin(), p.bits.end());
    }
    return p;
}

std::map<CountVector, Integer> oracle_successors(const Nba& a, const RunSet& p, std::size_t letter) {
    const bool reset_pending = std::any_of(p.bits.begin(), p.bits.end(), [](int b) { return b == 0; });
    std::vector<std::vector<std::vector<std::size_t>>> choices;
    for (const auto& run : p.runs) {
        const auto& targets = a.delta[run.back()][letter];
        std::vector<std::vector<std::size_t>> subsets;
        for (std::size_t mask = 1; mask < (std::size_t(1) << targets.size()); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < targets.size(); ++i)
                if (mask >> i & 1) s.push_back(targets[i]);
            subsets.push_back(std::move(s));
        }
        choices.push_back(std::move(subsets));
    }
    std::map<CountVector, Integer> out;
    std::vector<std::size_t> pick(p.runs.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == p.runs.size()) {
            CountVector c(a.states);
            for (std::size_t i = 0; i < p.runs.size(); ++i) {
                const std::size_t last = p.runs[i].back();
                const int bit = ((a.accepting[last] || p.bits[i] == 1) && reset_pending) ? 1 : 0;
                for (std::size_t t : choices[i][pick[i]]) ++c.at(t, bit);
            }
            out[c] += 1;
            return;
        }
        for (pick[j] = 0; pick[j] < choices[j].size(); ++pick[j]) go(j + 1);
    };
    go(0);
    return out;
}

Integer oracle_successor_count(const Nba& a, const RunSet& p, std::size_t letter, const CountVector& r2) {
    auto all = oracle_successors(a, p, letter);
    auto it = all.find(r2);
    return it == all.end() ? Integer(0) : it->second;
}

std::vector<CountVector> count_vectors_up_to(std::size_t states, unsigned max_size) {
    std::vector<CountVector> out;
    CountVector c(states);
    std::function<void(std::size_t, unsigned)> go = [&](std::size_t slot, unsigned used) {
        if (slot == c.counts.size()) {
            if (used > 0) out.push_back(c);
            return;
        }
        for (unsigned x = 0; used + x <= max_size; ++x) {
            c.counts[slot] = x;
            go(slot + 1, used + x);
        }
        c.counts[slot] = 0;
    };
    go(0, 0);
    return out;
}

}  // namespace imagebin::testing
