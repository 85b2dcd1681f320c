#include "imagebin/kdis.hpp"

#include <deque>
#include <numeric>

#include "imagebin/errors.hpp"

namespace imagebin {

unsigned CountVector::size() const {
    return std::accumulate(counts.begin(), counts.end(), 0u);
}

bool CountVector::any_bottom() const {
    for (std::size_t q = 0; q < states(); ++q)
        if (at(q, 0) != 0) return true;
    return false;
}

std::string CountVector::to_string() const {
    std::string out;
    for (std::size_t q = 0; q < states(); ++q)
        for (int b = 0; b < 2; ++b) {
            if (at(q, b) == 0) continue;
            if (!out.empty()) out += ' ';
            out += "(" + std::to_string(q + 1) + (b ? ",top):" : ",bot):") + std::to_string(at(q, b));
        }
    return out;
}

Integer num_succ(unsigned n, std::span<const unsigned> g) {
    Integer total = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Integer term;
        mpz_bin_uiui(term.get_mpz_t(), n, j);
        for (unsigned gx : g) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), n - j, gx);
            term *= c;
            if (term == 0) break;
        }
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

namespace {

struct RunClass {
    unsigned runs;
    const std::vector<std::size_t>* targets;
    int new_bit;
};

// Enumerates, class by class, how many runs of each class pick each target,
// multiplying the per-class counts of admissible successor choices.
class SuccessorEnumerator {
public:
    SuccessorEnumerator(std::vector<RunClass> classes, std::size_t states, unsigned max_size)
        : classes_(std::move(classes)), max_size_(max_size), acc_(states) {}

    std::map<CountVector, Integer> run() {
        next_class(0, Integer(1), 0);
        return std::move(out_);
    }

private:
    void next_class(std::size_t ci, const Integer& weight, unsigned size) {
        if (ci == classes_.size()) {
            out_[acc_] += weight;
            return;
        }
        g_.assign(classes_[ci].targets->size(), 0);
        pick(ci, 0, weight, size);
    }

    void pick(std::size_t ci, std::size_t ti, const Integer& weight, unsigned size) {
        const RunClass& rc = classes_[ci];
        const auto& targets = *rc.targets;
        if (ti == targets.size()) {
            Integer ways = num_succ(rc.runs, g_);
            if (ways == 0) return;
            std::vector<unsigned> saved = g_;
            next_class(ci + 1, weight * ways, size);
            g_ = std::move(saved);
            return;
        }
        for (unsigned c = 0; c <= rc.runs && size + c <= max_size_; ++c) {
            g_[ti] = c;
            acc_.at(targets[ti], rc.new_bit) += c;
            pick(ci, ti + 1, weight, size + c);
            acc_.at(targets[ti], rc.new_bit) -= c;
        }
        g_[ti] = 0;
    }

    std::vector<RunClass> classes_;
    unsigned max_size_;
    CountVector acc_;
    std::vector<unsigned> g_;
    std::map<CountVector, Integer> out_;
};

}  // namespace

std::map<CountVector, Integer> kdis_successors(const Nba& a, const CountVector& r, std::size_t letter,
                                               unsigned max_size) {
    if (r.states() != a.states) throw InputError("count vector has the wrong number of states");
    if (letter >= a.alphabet.size()) throw InputError("letter index outside the alphabet");
    const bool reset_guard = r.any_bottom();
    std::vector<RunClass> classes;
    for (std::size_t q = 0; q < a.states; ++q)
        for (int b = 0; b < 2; ++b) {
            if (r.at(q, b) == 0) continue;
            const auto& targets = a.delta[q][letter];
            if (targets.empty()) return {};
            const bool bit = (a.accepting[q] || b == 1) && reset_guard;
            classes.push_back({r.at(q, b), &targets, bit ? 1 : 0});
        }
    if (classes.empty()) return {};
    return SuccessorEnumerator(std::move(classes), a.states, max_size).run();
}

Integer kdis_weight_w(const Nba& a, const CountVector& r, std::size_t letter, const CountVector& r2) {
    auto succ = kdis_successors(a, r, letter, r2.size());
    auto it = succ.find(r2);
    return it == succ.end() ? Integer(0) : it->second;
}

KdisResult kdis(const Nba& a, unsigned k) {
    a.validate();
    if (k == 0) throw InputError("ambiguity bound k must be at least 1");
    const std::size_t n = a.states;

    std::vector<std::size_t> q0;
    for (std::size_t q = 0; q < n; ++q)
        if (a.initial[q]) q0.push_back(q);
    if (q0.size() >= 8 * sizeof(unsigned long long) - 1) throw InputError("too many initial states");

    std::map<CountVector, std::size_t> ids;
    std::vector<CountVector> labels;
    std::deque<std::size_t> work;
    auto intern = [&](const CountVector& r) {
        auto [it, fresh] = ids.emplace(r, labels.size());
        if (fresh) {
            labels.push_back(r);
            work.push_back(it->second);
        }
        return it->second;
    };

    std::vector<std::pair<std::size_t, Integer>> initial;
    for (unsigned long long mask = 1; mask < (1ull << q0.size()); ++mask) {
        CountVector r(n);
        for (std::size_t i = 0; i < q0.size(); ++i)
            if (mask >> i & 1) r.at(q0[i], 0) = 1;
        if (r.size() > k) continue;
        initial.emplace_back(intern(r), r.size() % 2 == 1 ? Integer(1) : Integer(-1));
    }

    struct Edge {
        std::size_t from, letter, to;
        Integer weight;
    };
    std::vector<Edge> edges;
    while (!work.empty()) {
        const std::size_t i = work.front();
        work.pop_front();
        const CountVector r = labels[i];
        for (std::size_t l = 0; l < a.alphabet.size(); ++l)
            for (auto& [r2, w] : kdis_successors(a, r, l, k)) {
                const std::size_t j = intern(r2);
                Integer signed_w = (r2.size() - r.size()) % 2 ? Integer(-w) : w;
                edges.push_back({i, l, j, std::move(signed_w)});
            }
    }

    KdisResult res;
    res.untrimmed_states = labels.size();
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), k + 1, 2 * n);
    if (Integer(static_cast<unsigned long>(labels.size())) > bound)
        throw InvariantError("kdis explored more than (k+1)^(2n) states");

    const std::size_t m = labels.size();
    Iba full;
    full.alphabet = a.alphabet;
    full.init = Matrix(1, m, Field::Rational);
    for (const auto& [i, w] : initial) full.init(0, i) = Scalar::rational(Rational(w));
    full.trans.assign(a.alphabet.size(), Matrix(m, m, Field::Rational));
    for (const auto& e : edges) full.trans[e.letter](e.from, e.to) = Scalar::rational(Rational(e.weight));
    for (const auto& r : labels) full.accepting.push_back(!r.any_bottom());

    auto [trimmed, kept] = trim(full);
    res.iba = std::move(trimmed);
    for (std::size_t q : kept) res.labels.push_back(labels[q]);
    if (kept.empty()) res.labels.push_back(CountVector(n));
    return res;
}

}  // namespace imagebin
