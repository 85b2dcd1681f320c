#include "imagebin/mc.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "imagebin/errors.hpp"

namespace imagebin {

void MarkovChain::validate() const {
    if (states == 0) throw ValidationError("Markov chain needs at least one state");
    if (transition.rows() != states || transition.cols() != states)
        throw ValidationError("transition matrix must be " + std::to_string(states) + "x" + std::to_string(states));
    if (transition.field() != Field::Rational) throw ValidationError("transition probabilities must be rational");
    if (initial.size() != states) throw ValidationError("initial distribution has wrong length");
    if (labels.size() != states) throw ValidationError("every state needs exactly one label");
    for (std::size_t s = 0; s < states; ++s) {
        Rational sum = 0;
        for (std::size_t t = 0; t < states; ++t) {
            const Rational& p = transition(s, t).value();
            if (p < 0) throw ValidationError("row " + std::to_string(s + 1) + " has a negative entry");
            sum += p;
        }
        if (sum != 1)
            throw ValidationError("row " + std::to_string(s + 1) + " sums to " + rational_to_string(sum) + ", not 1");
        if (std::find(alphabet.begin(), alphabet.end(), labels[s]) == alphabet.end())
            throw ValidationError("label '" + labels[s] + "' of state " + std::to_string(s + 1) +
                                  " is not in the alphabet");
    }
    Rational sum = 0;
    for (const auto& p : initial) {
        if (p < 0) throw ValidationError("initial distribution has a negative entry");
        sum += p;
    }
    if (sum != 1) throw ValidationError("initial distribution sums to " + rational_to_string(sum) + ", not 1");
}

std::optional<std::size_t> ProductSystem::node_of(std::size_t q, std::size_t s) const {
    const std::size_t id = node_index.at(q * chain.states + s);
    if (id == npos) return std::nullopt;
    return id;
}

ProductSystem build_product(const Iba& a, const MarkovChain& m) {
    a.validate();
    m.validate();
    ProductSystem ps;
    auto [trimmed, kept] = trim(a);
    ps.automaton = std::move(trimmed);
    ps.automaton_original = std::move(kept);
    ps.chain = m;
    for (const auto& l : m.labels) ps.letter_of.push_back(letter_index(a.alphabet, l));

    const std::size_t nq = ps.automaton_original.empty() ? 0 : ps.automaton.states();
    const std::size_t ns = m.states;
    const std::size_t full = nq * ns;
    auto weight = [&](std::size_t u, std::size_t v) {
        const std::size_t q = u / ns, s = u % ns, q2 = v / ns, s2 = v % ns;
        return m.transition(s, s2) * ps.automaton.trans[ps.letter_of[s]](q, q2);
    };

    Graph g(full);
    for (std::size_t u = 0; u < full; ++u) {
        const std::size_t q = u / ns, s = u % ns;
        const Matrix& mq = ps.automaton.trans[ps.letter_of[s]];
        for (std::size_t q2 = 0; q2 < nq; ++q2) {
            if (mq(q, q2).is_zero()) continue;
            for (std::size_t s2 = 0; s2 < ns; ++s2)
                if (!m.transition(s, s2).is_zero()) g[u].push_back(q2 * ns + s2);
        }
    }
    std::vector<bool> accepting(full);
    for (std::size_t u = 0; u < full; ++u) accepting[u] = ps.automaton.accepting[u / ns];

    // Keep nodes that can reach a cycle through an accepting node.
    auto scc_full = strongly_connected_components(g);
    std::vector<std::size_t> targets;
    for (std::size_t c = 0; c < scc_full.count(); ++c) {
        const auto& mem = scc_full.members[c];
        if (is_nontrivial(g, scc_full, c) &&
            std::any_of(mem.begin(), mem.end(), [&](std::size_t u) { return accepting[u]; }))
            targets.insert(targets.end(), mem.begin(), mem.end());
    }
    const auto keep = reachable_from(reversed(g), targets);

    ps.node_index.assign(full, ProductSystem::npos);
    for (std::size_t u = 0; u < full; ++u)
        if (keep[u]) {
            ps.node_index[u] = ps.nodes.size();
            ps.nodes.emplace_back(u / ns, u % ns);
        }
    const std::size_t n = ps.nodes.size();
    ps.b = Matrix(n, n, Field::Rational);
    ps.graph.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t u = ps.nodes[i].first * ns + ps.nodes[i].second;
        for (std::size_t v : g[u]) {
            const std::size_t j = ps.node_index[v];
            if (j == ProductSystem::npos) continue;
            ps.b(i, j) = weight(u, v);
            ps.graph[i].push_back(j);
        }
    }
    ps.scc = strongly_connected_components(ps.graph);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : ps.graph[i])
            if (ps.scc.component[i] == ps.scc.component[j]) {
                const auto [q, s] = ps.nodes[i];
                const Scalar& w = ps.automaton.trans[ps.letter_of[s]](q, ps.nodes[j].first);
                if (!w.is_one())
                    throw SemanticError("automaton edge of weight " + w.to_string() +
                                        " lies on a cycle; the automaton is not ultimately stable");
            }
    for (std::size_t c = 0; c < ps.scc.count(); ++c) ps.classes.push_back(classify_scc(ps, c));
    return ps;
}

std::optional<Fiber> fiber_step(const ProductSystem& ps, const Fiber& f, std::size_t t) {
    if (ps.chain.transition(f.chain_state, t).is_zero()) return std::nullopt;
    const Matrix& m = ps.automaton.trans[ps.letter_of[f.chain_state]];
    Fiber out{f.scc, t, {}};
    for (std::size_t q : f.automaton_states)
        for (std::size_t q2 = 0; q2 < m.cols(); ++q2) {
            if (m(q, q2).is_zero()) continue;
            auto node = ps.node_of(q2, t);
            if (node && ps.scc.component[*node] == f.scc) out.automaton_states.push_back(q2);
        }
    std::sort(out.automaton_states.begin(), out.automaton_states.end());
    out.automaton_states.erase(std::unique(out.automaton_states.begin(), out.automaton_states.end()),
                               out.automaton_states.end());
    return out;
}

SccClass classify_scc(const ProductSystem& ps, std::size_t component) {
    SccClass cls;
    const auto& members = ps.scc.members.at(component);
    for (std::size_t i : members)
        if (ps.automaton.accepting[ps.nodes[i].first]) cls.accepting = true;

    std::map<Fiber, std::size_t> ids;
    std::vector<Fiber> fibers;
    Graph edges;
    std::deque<std::size_t> work;
    auto intern = [&](Fiber f) {
        auto [it, fresh] = ids.emplace(f, fibers.size());
        if (fresh) {
            fibers.push_back(std::move(f));
            edges.emplace_back();
            work.push_back(it->second);
        }
        return it->second;
    };
    for (std::size_t i : members) intern(Fiber{component, ps.nodes[i].second, {ps.nodes[i].first}});
    while (!work.empty()) {
        const std::size_t id = work.front();
        work.pop_front();
        if (fibers[id].automaton_states.empty()) continue;
        for (std::size_t t = 0; t < ps.chain.states; ++t) {
            auto next = fiber_step(ps, fibers[id], t);
            if (!next) continue;
            const std::size_t to = intern(std::move(*next));
            edges[id].push_back(to);
        }
    }

    std::vector<std::size_t> empty;
    for (std::size_t id = 0; id < fibers.size(); ++id)
        if (fibers[id].automaton_states.empty()) empty.push_back(id);
    const auto dies = reachable_from(reversed(edges), empty);
    for (std::size_t id = 0; id < fibers.size(); ++id) {
        if (dies[id]) continue;
        cls.recurrent = true;
        for (std::size_t q : fibers[id].automaton_states)
            cls.cut.push_back(*ps.node_of(q, fibers[id].chain_state));
        std::sort(cls.cut.begin(), cls.cut.end());
        break;
    }
    return cls;
}

std::vector<Rational> solve_values(const ProductSystem& ps) {
    const std::size_t n = ps.nodes.size();
    if (n == 0) return {};
    std::vector<std::vector<std::pair<std::size_t, Rational>>> extra;
    for (std::size_t c = 0; c < ps.scc.count(); ++c) {
        const SccClass& cls = ps.classes[c];
        if (!cls.recurrent) continue;
        if (cls.accepting) {
            std::vector<std::pair<std::size_t, Rational>> row;
            for (std::size_t i : cls.cut) row.emplace_back(i, Rational(1));
            row.emplace_back(n, Rational(1));
            extra.push_back(std::move(row));
        } else {
            for (std::size_t i : ps.scc.members[c]) extra.push_back({{i, Rational(1)}});
        }
    }

    Matrix sys(n + extra.size(), n + 1, Field::Rational);
    for (std::size_t i = 0; i < n; ++i) {
        sys(i, i) = Scalar::one(Field::Rational);
        for (std::size_t j : ps.graph[i]) sys(i, j) -= ps.b(i, j);
    }
    for (std::size_t r = 0; r < extra.size(); ++r)
        for (const auto& [col, v] : extra[r]) sys(n + r, col) = Scalar::rational(v);

    const auto pivots = row_reduce(sys);
    if (!pivots.empty() && pivots.back() == n) throw InvariantError("value system is inconsistent");
    if (pivots.size() != n) throw InvariantError("value system is singular");
    std::vector<Rational> z(n);
    for (std::size_t r = 0; r < n; ++r) z[pivots[r]] = sys(r, n).value();

    for (std::size_t i = 0; i < n; ++i) {
        Rational bz = 0;
        for (std::size_t j : ps.graph[i]) bz += ps.b(i, j).value() * z[j];
        if (bz != z[i]) throw InvariantError("solution violates z = Bz");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (z[i] < 0 || z[i] > 1)
            throw SemanticError("value " + rational_to_string(z[i]) + " outside [0,1]; input not image-binary");
    return z;
}

ModelCheckResult model_check_detailed(const Iba& a, const MarkovChain& m) {
    ModelCheckResult res{Rational(0), build_product(a, m), {}};
    res.values = solve_values(res.product);
    const ProductSystem& ps = res.product;
    for (std::size_t i = 0; i < ps.nodes.size(); ++i) {
        const auto [q, s] = ps.nodes[i];
        res.probability += m.initial[s] * ps.automaton.init(0, q).value() * res.values[i];
    }
    if (res.probability < 0 || res.probability > 1)
        throw SemanticError("probability " + rational_to_string(res.probability) +
                            " outside [0,1]; input not image-binary");
    return res;
}

Rational model_check(const Iba& a, const MarkovChain& m) {
    return model_check_detailed(a, m).probability;
}

std::pair<double, double> spectral_radius_bounds(const ProductSystem& ps, std::size_t component, double tolerance,
                                                 std::size_t max_iterations) {
    const auto& members = ps.scc.members.at(component);
    const std::size_t d = members.size();
    std::vector<std::size_t> local(ps.nodes.size(), ProductSystem::npos);
    for (std::size_t i = 0; i < d; ++i) local[members[i]] = i;
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j : ps.graph[members[i]])
            if (local[j] != ProductSystem::npos)
                rows[i].emplace_back(local[j], ps.b(members[i], j).value().get_d());

    std::vector<double> x(d, 1.0), y(d);
    double lo = 0, hi = 0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        for (std::size_t i = 0; i < d; ++i) {
            double acc = x[i];
            for (const auto& [j, w] : rows[i]) acc += w * x[j];
            y[i] = acc / 2;
        }
        lo = INFINITY;
        hi = 0;
        double scale = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            scale = std::max(scale, y[i]);
        }
        for (std::size_t i = 0; i < d; ++i) x[i] = y[i] / scale;
        if (hi - lo < tolerance) break;
    }
    return {2 * lo - 1, 2 * hi - 1};
}

}  // namespace imagebin
