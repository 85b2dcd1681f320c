#include "imagebin/buchi.hpp"

#include <algorithm>

#include "imagebin/errors.hpp"
#include "imagebin/kernels.hpp"

namespace imagebin {

void Nba::validate() const {
    if (states == 0) throw ValidationError("NBA needs at least one state");
    if (delta.size() != states || initial.size() != states || accepting.size() != states)
        throw ValidationError("NBA tables have wrong size");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw ValidationError("NBA transition table has wrong width");
        for (const auto& targets : row)
            for (std::size_t t : targets)
                if (t >= states) throw ValidationError("NBA transition target out of range");
    }
}

void Iba::validate() const {
    const std::size_t n = init.cols();
    if (init.rows() != 1 || n == 0) throw ValidationError("initial vector must be a nonempty row vector");
    if (init.field() != Field::Rational) throw ValidationError("IBA weights must be rational");
    if (accepting.size() != n) throw ValidationError("final set has wrong size");
    if (trans.size() != alphabet.size()) throw ValidationError("need exactly one transition matrix per letter");
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet.size(); ++j)
            if (alphabet[i] == alphabet[j]) throw ValidationError("duplicate letter '" + alphabet[i] + "'");
    for (const auto& m : trans) {
        if (m.rows() != n || m.cols() != n)
            throw ValidationError("transition matrices must be " + std::to_string(n) + "x" + std::to_string(n));
        if (m.field() != Field::Rational) throw ValidationError("IBA weights must be rational");
    }
}

void validate_lasso(const Lasso& l, std::size_t alphabet_size) {
    if (l.cycle.empty()) throw InputError("lasso cycle must be nonempty");
    for (const Word* w : {&l.stem, &l.cycle})
        for (std::size_t a : *w)
            if (a >= alphabet_size) throw InputError("lasso letter outside the alphabet");
}

Graph support_graph(const std::vector<Matrix>& trans) {
    if (trans.empty()) return {};
    const std::size_t n = trans.front().rows();
    Graph g(n);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t t = 0; t < n; ++t)
            for (const auto& m : trans)
                if (!m(q, t).is_zero()) {
                    g[q].push_back(t);
                    break;
                }
    }
    return g;
}

namespace {

std::vector<bool> coreachable_to_accepting_cycle(const Graph& g, const std::vector<bool>& accepting) {
    auto scc = strongly_connected_components(g);
    std::vector<std::size_t> targets;
    for (std::size_t c = 0; c < scc.count(); ++c) {
        if (!is_nontrivial(g, scc, c)) continue;
        const auto& m = scc.members[c];
        if (std::any_of(m.begin(), m.end(), [&](std::size_t v) { return accepting[v]; }))
            targets.insert(targets.end(), m.begin(), m.end());
    }
    return reachable_from(reversed(g), targets);
}

}  // namespace

std::vector<bool> useful_states(const Iba& a) {
    const std::size_t n = a.states();
    Graph g = a.trans.empty() ? Graph(n) : support_graph(a.trans);
    std::vector<std::size_t> sources;
    for (std::size_t q = 0; q < n; ++q)
        if (!a.init(0, q).is_zero()) sources.push_back(q);
    auto reach = reachable_from(g, sources);
    auto coreach = coreachable_to_accepting_cycle(g, a.accepting);
    std::vector<bool> useful(n);
    for (std::size_t q = 0; q < n; ++q) useful[q] = reach[q] && coreach[q];
    return useful;
}

std::pair<Iba, std::vector<std::size_t>> restrict_states(const Iba& a, const std::vector<bool>& keep) {
    std::vector<std::size_t> kept;
    for (std::size_t q = 0; q < a.states(); ++q)
        if (keep[q]) kept.push_back(q);
    Iba out;
    out.alphabet = a.alphabet;
    if (kept.empty()) {
        out.init = Matrix(1, 1, Field::Rational);
        out.trans.assign(a.alphabet.size(), Matrix(1, 1, Field::Rational));
        out.accepting = {false};
        return {std::move(out), kept};
    }
    const std::size_t m = kept.size();
    out.init = Matrix(1, m, Field::Rational);
    for (std::size_t i = 0; i < m; ++i) {
        out.init(0, i) = a.init(0, kept[i]);
        out.accepting.push_back(a.accepting[kept[i]]);
    }
    for (const auto& t : a.trans) {
        Matrix r(m, m, Field::Rational);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) r(i, j) = t(kept[i], kept[j]);
        out.trans.push_back(std::move(r));
    }
    return {std::move(out), kept};
}

std::pair<Iba, std::vector<std::size_t>> trim(const Iba& a) {
    return restrict_states(a, useful_states(a));
}

bool is_ultimately_stable(const Iba& a) {
    Graph g = support_graph(a.trans);
    if (g.empty()) return true;
    auto scc = strongly_connected_components(g);
    for (const auto& m : a.trans)
        for (std::size_t q = 0; q < m.rows(); ++q)
            for (std::size_t t = 0; t < m.cols(); ++t) {
                const Scalar& x = m(q, t);
                if (!x.is_zero() && !x.is_one() && scc.component[q] == scc.component[t]) return false;
            }
    return true;
}

Iba nba_to_iba(const Nba& a) {
    a.validate();
    Iba out;
    out.alphabet = a.alphabet;
    out.init = Matrix(1, a.states, Field::Rational);
    for (std::size_t q = 0; q < a.states; ++q)
        if (a.initial[q]) out.init(0, q) = Scalar::one(Field::Rational);
    for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
        Matrix m(a.states, a.states, Field::Rational);
        for (std::size_t q = 0; q < a.states; ++q)
            for (std::size_t t : a.delta[q][l]) m(q, t) = Scalar::one(Field::Rational);
        out.trans.push_back(std::move(m));
    }
    out.accepting = a.accepting;
    return out;
}

namespace {

// Product of an automaton with the lasso shape: node (q, i) means "in state q
// before reading position i". Positions run over stem then cycle; the
// successor of the last position is the first cycle position.
struct LassoProduct {
    Graph g;
    std::vector<std::vector<Rational>> weight;  // parallel to g
    std::vector<bool> accepting;
    std::vector<std::pair<std::size_t, Rational>> sources;
};

LassoProduct build_lasso_product(const Iba& a, const Lasso& l) {
    validate_lasso(l, a.alphabet.size());
    const std::size_t n = a.states();
    const std::size_t u = l.stem.size();
    const std::size_t p = u + l.cycle.size();
    LassoProduct prod;
    prod.g.resize(n * p);
    prod.weight.resize(n * p);
    prod.accepting.resize(n * p);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t i = 0; i < p; ++i) {
            const std::size_t v = q * p + i;
            prod.accepting[v] = a.accepting[q];
            const Matrix& m = a.trans[i < u ? l.stem[i] : l.cycle[i - u]];
            const std::size_t next = i + 1 < p ? i + 1 : u;
            for (std::size_t t = 0; t < n; ++t)
                if (!m(q, t).is_zero()) {
                    prod.g[v].push_back(t * p + next);
                    prod.weight[v].push_back(m(q, t).value());
                }
        }
    for (std::size_t q = 0; q < n; ++q)
        if (!a.init(0, q).is_zero()) prod.sources.emplace_back(q * p, a.init(0, q).value());
    return prod;
}

struct FinalPaths {
    bool infinite = false;
    bool accepts = false;
    Integer count = 0;
    Rational value = 0;
};

// Counts and weighs the infinite paths from the sources that visit accepting
// nodes infinitely often. There are infinitely many exactly when some
// reachable nontrivial SCC can leave towards an accepting SCC, or is itself
// accepting without being a simple cycle. Otherwise every final path ends
// by circling one accepting simple cycle and the sums follow the
// condensation in reverse topological order.
FinalPaths analyze(const LassoProduct& prod, bool weighted) {
    const Graph& g = prod.g;
    std::vector<std::size_t> source_nodes;
    for (const auto& s : prod.sources) source_nodes.push_back(s.first);
    const auto reach = reachable_from(g, source_nodes);
    const auto scc = strongly_connected_components(g);
    const std::size_t c_count = scc.count();

    std::vector<bool> nontrivial(c_count), accepting(c_count), reach_acc(c_count);
    std::vector<std::size_t> inner_edges(c_count, 0);
    for (std::size_t c = 0; c < c_count; ++c) {
        nontrivial[c] = is_nontrivial(g, scc, c);
        for (std::size_t v : scc.members[c]) {
            if (nontrivial[c] && prod.accepting[v]) accepting[c] = true;
            for (std::size_t w : g[v]) {
                if (scc.component[w] == c) ++inner_edges[c];
                else if (reach_acc[scc.component[w]]) reach_acc[c] = true;
            }
        }
        if (accepting[c]) reach_acc[c] = true;
    }

    FinalPaths out;
    for (std::size_t c = 0; c < c_count; ++c) {
        if (!reach[scc.members[c].front()] || !nontrivial[c]) continue;
        if (accepting[c]) out.accepts = true;
        if (accepting[c] && inner_edges[c] > scc.members[c].size()) out.infinite = true;
        for (std::size_t v : scc.members[c])
            for (std::size_t w : g[v])
                if (scc.component[w] != c && reach_acc[scc.component[w]]) out.infinite = true;
    }
    if (out.infinite) return out;

    std::vector<Rational> value(g.size(), 0);
    std::vector<Integer> count(g.size(), 0);
    for (std::size_t c = 0; c < c_count; ++c) {
        if (!reach[scc.members[c].front()]) continue;
        if (accepting[c]) {
            for (std::size_t v : scc.members[c]) {
                if (weighted)
                    for (std::size_t e = 0; e < g[v].size(); ++e)
                        if (scc.component[g[v][e]] == c && prod.weight[v][e] != 1)
                            throw SemanticError("a final path repeats an edge of weight " +
                                                rational_to_string(prod.weight[v][e]) +
                                                "; the automaton is not ultimately stable");
                value[v] = 1;
                count[v] = 1;
            }
            continue;
        }
        if (nontrivial[c]) continue;
        const std::size_t v = scc.members[c].front();
        for (std::size_t e = 0; e < g[v].size(); ++e) {
            const std::size_t w = g[v][e];
            if (count[w] == 0) continue;
            value[v] += prod.weight[v][e] * value[w];
            count[v] += count[w];
        }
    }
    for (const auto& [v, wt] : prod.sources) {
        out.value += wt * value[v];
        out.count += count[v];
    }
    return out;
}

}  // namespace

bool nba_lasso_accepts(const Nba& a, const Lasso& l) {
    return analyze(build_lasso_product(nba_to_iba(a), l), false).accepts;
}

std::optional<Integer> nba_lasso_count_final(const Nba& a, const Lasso& l, const Integer& cap) {
    auto r = analyze(build_lasso_product(nba_to_iba(a), l), false);
    if (r.infinite || r.count > cap) return std::nullopt;
    return r.count;
}

Rational iba_lasso_eval(const Iba& a, const Lasso& l) {
    auto r = analyze(build_lasso_product(a, l), true);
    if (r.infinite) throw SemanticError("infinitely many final paths; not an IBA on this word");
    return r.value;
}

std::optional<Integer> iba_lasso_count_final(const Iba& a, const Lasso& l) {
    auto r = analyze(build_lasso_product(a, l), false);
    if (r.infinite) return std::nullopt;
    return r.count;
}

std::vector<Lasso> lassos_up_to(std::size_t alphabet_size, std::size_t max_stem, std::size_t max_cycle) {
    std::vector<Lasso> out;
    if (alphabet_size == 0) return out;
    const auto stems = words_up_to(alphabet_size, max_stem);
    const auto cycles = words_up_to(alphabet_size, max_cycle);
    for (const auto& u : stems)
        for (std::size_t i = 1; i < cycles.size(); ++i) out.push_back({u, cycles[i]});
    return out;
}

AmbiguityReport check_ambiguity_on_lassos(const Nba& a, unsigned k, std::size_t max_stem, std::size_t max_cycle) {
    a.validate();
    if (max_stem < 1 || max_cycle < 1) throw InputError("lasso bounds must be at least 1");
    const auto lassos = lassos_up_to(a.alphabet.size(), max_stem, max_cycle);
    const Iba iba = nba_to_iba(a);
    const Integer cap = k;
    std::vector<char> over(lassos.size(), 0);
    kernels::for_each_index(lassos.size(), [&](std::size_t i) {
        auto r = analyze(build_lasso_product(iba, lassos[i]), false);
        over[i] = r.infinite || r.count > cap;
    });
    AmbiguityReport rep;
    rep.lassos_checked = lassos.size();
    auto it = std::find(over.begin(), over.end(), 1);
    if (it != over.end()) {
        rep.within_bound = false;
        rep.witness = lassos[static_cast<std::size_t>(it - over.begin())];
    }
    return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> find_diamond_on_loop(const Nba& a) {
    const auto useful = useful_states(nba_to_iba(a));
    const std::size_t n = a.states;
    Graph g(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (!useful[p] || !useful[q]) continue;
            auto& out = g[p * n + q];
            for (std::size_t l = 0; l < a.alphabet.size(); ++l)
                for (std::size_t p2 : a.delta[p][l])
                    for (std::size_t q2 : a.delta[q][l])
                        if (useful[p2] && useful[q2]) out.push_back(p2 * n + q2);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
    auto scc = strongly_connected_components(g);
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (const auto& m : scc.members) {
        bool diagonal = false;
        std::optional<std::size_t> off;
        for (std::size_t v : m) {
            if (v / n == v % n) diagonal = true;
            else if (!off) off = v;
        }
        if (diagonal && off) {
            std::pair<std::size_t, std::size_t> cand{*off / n, *off % n};
            if (!best || cand < *best) best = cand;
        }
    }
    return best;
}

}  // namespace imagebin
