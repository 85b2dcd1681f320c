#include "imagebin/mod2.hpp"

#include <map>

#include "imagebin/errors.hpp"
#include "imagebin/kernels.hpp"

namespace imagebin {

namespace {

std::vector<int> parse_bits(std::string_view text, const char* what) {
    std::vector<int> bits;
    for (char c : text) {
        if (c != '0' && c != '1') throw InputError(std::string(what) + " must be a string of 0/1 digits");
        bits.push_back(c - '0');
    }
    return bits;
}

Rational power_of_two(long e) {
    Rational r = 1;
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r = p;
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r = Rational(1) / Rational(p);
    }
    return r;
}

bool is_identity(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).value() != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace

void LfsrSpec::validate() const {
    if (d == 0) throw InputError("LFSR dimension must be at least 1");
    if (taps.size() != d) throw InputError("expected " + std::to_string(d) + " feedback taps");
    if (init.size() != d) throw InputError("expected " + std::to_string(d) + " initial bits");
    for (int b : taps)
        if (b != 0 && b != 1) throw InputError("feedback taps must be bits");
    for (int b : init)
        if (b != 0 && b != 1) throw InputError("initial bits must be bits");
    if (taps.back() != 1) throw InputError("last feedback tap c_d must be 1");
}

LfsrSpec LfsrSpec::from_strings(std::size_t d, std::string_view taps, std::string_view init) {
    LfsrSpec s{d, parse_bits(taps, "taps"), parse_bits(init, "initial bits")};
    s.validate();
    return s;
}

std::vector<int> lfsr_sequence(const LfsrSpec& spec, std::size_t length) {
    spec.validate();
    if (length < spec.d) throw InputError("sequence length must be at least d");
    std::vector<int> a(spec.init.begin(), spec.init.end());
    while (a.size() < length) {
        int next = 0;
        for (std::size_t i = 1; i <= spec.d; ++i) next ^= spec.taps[i - 1] & a[a.size() - i];
        a.push_back(next);
    }
    return a;
}

std::size_t lfsr_period(const LfsrSpec& spec) {
    spec.validate();
    // c_d = 1 makes the window map invertible, so the window sequence is
    // purely periodic and its first repeat is a return to the start.
    std::vector<int> window = spec.init;
    const std::vector<int> start = window;
    for (std::size_t p = 1;; ++p) {
        int next = 0;
        for (std::size_t i = 1; i <= spec.d; ++i) next ^= spec.taps[i - 1] & window[spec.d - i];
        window.erase(window.begin());
        window.push_back(next);
        if (window == start) return p;
    }
}

WeightedAutomaton lfsr_to_mod2ma(const LfsrSpec& spec) {
    spec.validate();
    const std::size_t d = spec.d;
    const Field f = Field::GF2;
    Matrix m(d, d, f);
    for (std::size_t j = 0; j + 1 < d; ++j) m(j + 1, j) = Scalar::one(f);
    for (std::size_t i = 1; i <= d; ++i) m(d - i, d - 1) = Scalar::bit(spec.taps[i - 1]);
    Matrix init(1, d, f), final(d, 1, f);
    for (std::size_t j = 0; j < d; ++j) init(0, j) = Scalar::bit(spec.init[j]);
    final(0, 0) = Scalar::one(f);
    return WeightedAutomaton({"#"}, {m}, std::move(init), std::move(final));
}

Dfa lfsr_cycle_dfa(const LfsrSpec& spec) {
    const std::size_t p = lfsr_period(spec);
    const auto a = lfsr_sequence(spec, std::max(p, spec.d));
    Dfa dfa;
    dfa.alphabet = {"#"};
    dfa.states = p;
    dfa.initial = 0;
    for (std::size_t i = 0; i < p; ++i) {
        dfa.delta.push_back({(i + 1) % p});
        dfa.accepting.push_back(a[i] == 1);
    }
    return dfa;
}

WeightedAutomaton ifa_to_mod2(const WeightedAutomaton& a) {
    auto check = is_image_binary(a);
    if (!check.image_binary)
        throw InputError("automaton is not image-binary: value " + check.value->to_string() + " on '" +
                         format_word(a.alphabet(), *check.witness) + "'");
    return minimize(dfa_to_ifa(ifa_to_dfa(a), Field::GF2));
}

ShiftRegisterReport shift_register_rank_report(const LfsrSpec& spec) {
    spec.validate();
    const std::size_t d = spec.d;
    if (d >= 8 * sizeof(std::size_t) - 1) throw InputError("LFSR dimension too large");
    const std::size_t p = (std::size_t(1) << d) - 1;
    ShiftRegisterReport rep;
    rep.period = lfsr_period(spec);
    if (rep.period != p)
        throw InputError("period is " + std::to_string(rep.period) + ", not the maximal " + std::to_string(p));

    const auto a = lfsr_sequence(spec, std::max(p, d));
    rep.hankel = Matrix(p, p, Field::Rational);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) rep.hankel(i, j) = Scalar::rational(a[(i + j) % p], 1);
    rep.rank = rank(rep.hankel);

    const Matrix sq = kernels::multiply(rep.hankel, rep.hankel);
    rep.diagonal = sq(0, 0).value();
    rep.off_diagonal = p > 1 ? sq(0, 1).value() : Rational(0);
    const Rational want_diag = power_of_two(static_cast<long>(d) - 1);
    const Rational want_off = power_of_two(static_cast<long>(d) - 2);
    rep.square_matches = true;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            if (sq(i, j).value() != (i == j ? want_diag : want_off)) rep.square_matches = false;

    const long dl = static_cast<long>(d);
    const Rational off = power_of_two(-2 * dl + 2);
    const Rational diag = power_of_two(-dl + 2) - off;
    auto inverse_holds = [&](const Rational& off_value) {
        Matrix h(p, p, Field::Rational);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) h(i, j) = Scalar(Field::Rational, i == j ? diag : off_value);
        return is_identity(kernels::multiply(sq, h));
    };
    rep.inverse_negative_off_diagonal = inverse_holds(-off);
    rep.inverse_positive_off_diagonal = inverse_holds(off);
    return rep;
}

}  // namespace imagebin
