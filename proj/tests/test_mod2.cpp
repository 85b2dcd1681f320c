#include <doctest.h>

#include "imagebin/errors.hpp"
#include "imagebin/mod2.hpp"
#include "support.hpp"

using namespace imagebin;
using namespace imagebin::testing;

namespace {

LfsrSpec maximal3() { return LfsrSpec::from_strings(3, "011", "100"); }
LfsrSpec maximal4() { return LfsrSpec::from_strings(4, "0011", "1000"); }

/// Direct iteration of the recurrence, independent of the library.
std::vector<int> iterate(const LfsrSpec& s, std::size_t length) {
    std::vector<int> a(s.init.begin(), s.init.end());
    while (a.size() < length) {
        int next = 0;
        for (std::size_t i = 1; i <= s.d; ++i) next ^= s.taps[i - 1] & a[a.size() - i];
        a.push_back(next);
    }
    a.resize(length);
    return a;
}

Word unary(std::size_t n) { return Word(n, 0); }

Rational pow2(long e) {
    Rational r(1);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= 2;
    return e < 0 ? 1 / r : r;
}

}  // namespace

TEST_CASE("LFSR sequences and periods") {
    auto seq = lfsr_sequence(maximal3(), 14);
    CHECK(seq == std::vector<int>{1, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1});
    CHECK(seq == iterate(maximal3(), 14));
    CHECK(lfsr_period(maximal3()) == 7);
    auto zero = LfsrSpec::from_strings(2, "11", "00");
    CHECK(lfsr_sequence(zero, 6) == std::vector<int>(6, 0));
    CHECK(lfsr_period(zero) == 1);
    CHECK(lfsr_period(maximal4()) == 15);
    CHECK(lfsr_period(LfsrSpec::from_strings(4, "0001", "1000")) == 4);
    CHECK_THROWS_AS(lfsr_sequence(maximal3(), 2), InputError);
    CHECK_THROWS_AS(LfsrSpec::from_strings(3, "010", "100"), InputError);
    CHECK_THROWS_AS(LfsrSpec::from_strings(3, "01", "100"), InputError);
}

TEST_CASE("LFSR as a mod-2 automaton") {
    for (const auto& spec : {maximal3(), maximal4(), LfsrSpec::from_strings(4, "1111", "1010")}) {
        auto m = lfsr_to_mod2ma(spec);
        CHECK(m.states() == spec.d);
        CHECK(m.field() == Field::GF2);
        const std::size_t p = lfsr_period(spec);
        auto expected = iterate(spec, 3 * p + spec.d);
        for (std::size_t n = 0; n < expected.size(); ++n) {
            CHECK(oracle_eval(m, unary(n)) == expected[n]);
            CHECK(oracle_eval(m, unary(n)) == oracle_eval(m, unary(n % p)));
        }
        Dfa cycle = lfsr_cycle_dfa(spec);
        CHECK(cycle.states == p);
        for (std::size_t n = 0; n < expected.size(); ++n) CHECK(cycle.accepts(unary(n)) == (expected[n] == 1));
    }
}

TEST_CASE("IFA to mod-2 automaton") {
    auto m3 = ifa_to_mod2(dfa_to_ifa(lfsr_cycle_dfa(maximal3())));
    CHECK(m3.states() == 3);
    CHECK(ifa_to_mod2(const_one({"a", "b"})).states() == 1);

    auto ifa = even_a_prefix_ifa();
    auto m = ifa_to_mod2(ifa);
    CHECK(m.states() <= 3);
    for (const Word& w : words_up_to(2, 8)) CHECK(oracle_eval(m, w) == oracle_eval(ifa, w));

    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = dfa_to_ifa(random_dfa(rng, 1 + rng.below(5), 2));
        auto g = ifa_to_mod2(d);
        CHECK(g.states() <= d.states());
        for (const Word& w : words_up_to(2, 8)) CHECK(oracle_eval(g, w) == oracle_eval(d, w));
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto c = random_conjugated_ifa(rng, 1 + rng.below(4), 2);
        CHECK(ifa_to_mod2(c.ifa).states() <= c.ifa.states());
    }

    Matrix doubled = ifa.init();
    doubled.scale(Scalar::rational(2));
    CHECK_THROWS_AS(ifa_to_mod2(WeightedAutomaton(ifa.alphabet(), ifa.transitions(), doubled, ifa.final())),
                    InputError);
}

TEST_CASE("shift register rank report") {
    for (const auto& spec : {maximal3(), maximal4()}) {
        const long d = static_cast<long>(spec.d);
        auto rep = shift_register_rank_report(spec);
        const std::size_t p = (std::size_t(1) << spec.d) - 1;
        CHECK(rep.period == p);
        CHECK(rep.rank == p);
        CHECK(rep.diagonal == pow2(d - 1));
        CHECK(rep.off_diagonal == pow2(d - 2));
        CHECK(rep.square_matches);
        CHECK(rep.inverse_negative_off_diagonal);
        CHECK_FALSE(rep.inverse_positive_off_diagonal);

        auto seq = iterate(spec, 2 * p);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) {
                CHECK(rep.hankel(i, j).value() == seq[(i + j) % p]);
                CHECK(rep.hankel(i, j) == rep.hankel(j, i));
            }

        // Independent check of the inverse: (H²)·H' = I with the negative off-diagonal.
        Matrix square(p, p, Field::Rational), inv(p, p, Field::Rational);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) {
                square(i, j) = Scalar::rational(i == j ? pow2(d - 1) : pow2(d - 2));
                inv(i, j) = Scalar::rational(i == j ? Rational(pow2(2 - d) - pow2(2 - 2 * d)) : Rational(-pow2(2 - 2 * d)));
            }
        CHECK(rep.hankel * rep.hankel == square);
        CHECK(square * inv == Matrix::identity(p, Field::Rational));
    }
    try {
        shift_register_rank_report(LfsrSpec::from_strings(4, "0001", "1000"));
        FAIL("non-maximal register accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
}
