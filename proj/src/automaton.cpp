#include "imagebin/automaton.hpp"

#include <cctype>
#include <deque>

#include "imagebin/errors.hpp"

namespace imagebin {

std::size_t letter_index(const Alphabet& alphabet, std::string_view letter) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == letter) return i;
    throw InputError("unknown letter '" + std::string(letter) + "'");
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    bool separated = text.find_first_of(" \t,") != std::string_view::npos;
    if (separated) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
            if (j > i) w.push_back(letter_index(alphabet, text.substr(i, j - i)));
            i = j;
        }
        return w;
    }
    for (std::size_t i = 0; i < text.size(); ++i) w.push_back(letter_index(alphabet, text.substr(i, 1)));
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    bool single = true;
    for (const auto& l : alphabet) single = single && l.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i) out += ' ';
        out += alphabet.at(w[i]);
    }
    return out;
}

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len && alphabet_size > 0; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t a = 0; a < alphabet_size; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

WeightedAutomaton::WeightedAutomaton(Alphabet alphabet, std::vector<Matrix> trans, Matrix init, Matrix final)
    : alphabet_(std::move(alphabet)), trans_(std::move(trans)), init_(std::move(init)), final_(std::move(final)) {
    const std::size_t n = init_.cols();
    if (init_.rows() != 1 || n == 0) throw ValidationError("initial vector must be a nonempty row vector");
    if (final_.rows() != n || final_.cols() != 1)
        throw ValidationError("final vector must be a column vector of length " + std::to_string(n));
    if (trans_.size() != alphabet_.size())
        throw ValidationError("need exactly one transition matrix per letter");
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet_.size(); ++j)
            if (alphabet_[i] == alphabet_[j]) throw ValidationError("duplicate letter '" + alphabet_[i] + "'");
    const Field f = init_.field();
    if (final_.field() != f) throw ValidationError("initial and final vectors use different fields");
    for (const auto& m : trans_) {
        if (m.rows() != n || m.cols() != n)
            throw ValidationError("transition matrices must be " + std::to_string(n) + "x" + std::to_string(n));
        if (m.field() != f) throw ValidationError("transition matrix uses a different field");
    }
}

Vector WeightedAutomaton::init_vector() const {
    return Vector(init_.entries().begin(), init_.entries().end());
}

Vector WeightedAutomaton::final_vector() const {
    return Vector(final_.entries().begin(), final_.entries().end());
}

Scalar eval_word(const WeightedAutomaton& a, const Word& w) {
    Vector v = a.init_vector();
    for (std::size_t letter : w) {
        if (letter >= a.alphabet().size())
            throw InputError("letter index " + std::to_string(letter) + " outside the alphabet");
        v = times(v, a.trans(letter));
    }
    return dot(v, a.final_vector());
}

namespace detail {

void require_compatible(const WeightedAutomaton& a, const WeightedAutomaton& b, const char* op) {
    if (a.alphabet() != b.alphabet())
        throw InputError(std::string(op) + ": automata have different alphabets");
    if (a.field() != b.field()) throw InputError(std::string(op) + ": automata have different fields");
}

SpanExploration explore_span(const Vector& start, const std::vector<Matrix>& trans, bool backward) {
    SpanExploration ex{LinearBasis(start.size(), trans.empty() ? start.front().field() : trans.front().field()),
                       {}, {}};
    if (!ex.basis.insert(start)) return ex;
    ex.vectors.push_back(start);
    ex.words.push_back({});
    for (std::size_t next = 0; next < ex.vectors.size(); ++next) {
        for (std::size_t a = 0; a < trans.size(); ++a) {
            Vector v = backward ? times(trans[a], ex.vectors[next]) : times(ex.vectors[next], trans[a]);
            if (!ex.basis.insert(v)) continue;
            Word w;
            if (backward) {
                w.push_back(a);
                w.insert(w.end(), ex.words[next].begin(), ex.words[next].end());
            } else {
                w = ex.words[next];
                w.push_back(a);
            }
            ex.vectors.push_back(std::move(v));
            ex.words.push_back(std::move(w));
        }
    }
    return ex;
}

}  // namespace detail

EquivalenceResult equivalent(const WeightedAutomaton& a, const WeightedAutomaton& b) {
    detail::require_compatible(a, b, "equivalent");
    WeightedAutomaton diff = add(a, negate(b));
    Vector eta = diff.final_vector();
    auto ex = detail::explore_span(diff.init_vector(), diff.transitions(), false);
    // Discovery order is length-lexicographic and the basis words of length
    // <= l span every forward vector of length <= l, so the first hit is a
    // shortest counterexample.
    for (std::size_t i = 0; i < ex.vectors.size(); ++i)
        if (!dot(ex.vectors[i], eta).is_zero()) return {false, ex.words[i]};
    return {true, std::nullopt};
}

WeightedAutomaton minimize(const WeightedAutomaton& a) {
    const Field f = a.field();
    const std::size_t letters = a.alphabet().size();

    auto fwd = detail::explore_span(a.init_vector(), a.transitions(), false);
    const std::size_t r = fwd.basis.size();
    if (r == 0) return zero_automaton(a.alphabet(), f);

    const auto& fb = fwd.basis.vectors();
    std::vector<Matrix> m1(letters, Matrix(r, r, f));
    for (std::size_t l = 0; l < letters; ++l)
        for (std::size_t i = 0; i < r; ++i) {
            Vector c = fwd.basis.coordinates(times(fb[i], a.trans(l)));
            for (std::size_t j = 0; j < r; ++j) m1[l](i, j) = c[j];
        }
    Vector alpha1 = fwd.basis.coordinates(a.init_vector());
    Vector eta1 = zero_vector(r, f);
    Vector eta = a.final_vector();
    for (std::size_t i = 0; i < r; ++i) eta1[i] = dot(fb[i], eta);

    auto bwd = detail::explore_span(eta1, m1, true);
    const std::size_t s = bwd.basis.size();
    if (s == 0) return zero_automaton(a.alphabet(), f);

    const auto& gb = bwd.basis.vectors();
    std::vector<Matrix> m2(letters, Matrix(s, s, f));
    for (std::size_t l = 0; l < letters; ++l)
        for (std::size_t j = 0; j < s; ++j) {
            Vector c = bwd.basis.coordinates(times(m1[l], gb[j]));
            for (std::size_t i = 0; i < s; ++i) m2[l](i, j) = c[i];
        }
    Vector eta2 = bwd.basis.coordinates(eta1);
    Vector alpha2 = zero_vector(s, f);
    for (std::size_t j = 0; j < s; ++j) alpha2[j] = dot(alpha1, gb[j]);

    return WeightedAutomaton(a.alphabet(), std::move(m2), Matrix::row_vector(alpha2, f),
                             Matrix::column_vector(eta2, f));
}

bool check_forward_conjugate(const WeightedAutomaton& a, const WeightedAutomaton& a2, const Matrix& f) {
    detail::require_compatible(a, a2, "check_forward_conjugate");
    if (f.rows() != a2.states() || f.cols() != a.states())
        throw InputError("base matrix must be " + std::to_string(a2.states()) + "x" + std::to_string(a.states()));
    if (f.field() != a.field()) throw InputError("base matrix uses a different field");
    for (std::size_t l = 0; l < a.alphabet().size(); ++l)
        if (!(f * a.trans(l) == a2.trans(l) * f)) return false;
    if (!(a.init() == a2.init() * f)) return false;
    return a2.final() == f * a.final();
}

WeightedAutomaton add(const WeightedAutomaton& a, const WeightedAutomaton& b) {
    detail::require_compatible(a, b, "add");
    const std::size_t na = a.states(), nb = b.states(), n = na + nb;
    const Field f = a.field();
    std::vector<Matrix> trans;
    for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) m(i, j) = a.trans(l)(i, j);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j) m(na + i, na + j) = b.trans(l)(i, j);
        trans.push_back(std::move(m));
    }
    Matrix init(1, n, f), final(n, 1, f);
    for (std::size_t i = 0; i < na; ++i) {
        init(0, i) = a.init()(0, i);
        final(i, 0) = a.final()(i, 0);
    }
    for (std::size_t i = 0; i < nb; ++i) {
        init(0, na + i) = b.init()(0, i);
        final(na + i, 0) = b.final()(i, 0);
    }
    return WeightedAutomaton(a.alphabet(), std::move(trans), std::move(init), std::move(final));
}

WeightedAutomaton negate(const WeightedAutomaton& a) {
    return WeightedAutomaton(a.alphabet(), a.transitions(), -a.init(), a.final());
}

WeightedAutomaton hadamard(const WeightedAutomaton& a, const WeightedAutomaton& b) {
    detail::require_compatible(a, b, "hadamard");
    std::vector<Matrix> trans;
    for (std::size_t l = 0; l < a.alphabet().size(); ++l) trans.push_back(kron(a.trans(l), b.trans(l)));
    return WeightedAutomaton(a.alphabet(), std::move(trans), kron(a.init(), b.init()), kron(a.final(), b.final()));
}

WeightedAutomaton const_one(const Alphabet& alphabet, Field field) {
    Matrix one = Matrix::identity(1, field);
    return WeightedAutomaton(alphabet, std::vector<Matrix>(alphabet.size(), one), one, one);
}

WeightedAutomaton zero_automaton(const Alphabet& alphabet, Field field) {
    Matrix zero(1, 1, field);
    return WeightedAutomaton(alphabet, std::vector<Matrix>(alphabet.size(), zero), zero, zero);
}

WeightedAutomaton convert_field(const WeightedAutomaton& a, Field target) {
    std::vector<Matrix> trans;
    for (const auto& m : a.transitions()) trans.push_back(m.converted(target));
    return WeightedAutomaton(a.alphabet(), std::move(trans), a.init().converted(target),
                             a.final().converted(target));
}

}  // namespace imagebin
