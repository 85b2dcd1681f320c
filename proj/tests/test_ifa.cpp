#include <doctest.h>

#include <algorithm>

#include "imagebin/errors.hpp"
#include "support.hpp"

using namespace imagebin;
using namespace imagebin::testing;

namespace {

bool contains_a(const Word& w) { return std::find(w.begin(), w.end(), 0) != w.end(); }

}  // namespace

TEST_CASE("binariness of sample automata") {
    auto ifa = even_a_prefix_ifa();
    CHECK(is_image_binary(ifa).image_binary);

    Matrix doubled = ifa.init();
    doubled.scale(Scalar::rational(2));
    WeightedAutomaton twice(ifa.alphabet(), ifa.transitions(), doubled, ifa.final());
    auto r = is_image_binary(twice);
    REQUIRE_FALSE(r.image_binary);
    CHECK(format_word(ifa.alphabet(), *r.witness) == "aa");
    CHECK(*r.value == Scalar::rational(2));
    CHECK(oracle_eval(twice, *r.witness) == 2);

    CHECK_THROWS_AS(is_image_binary(convert_field(const_one({"a"}), Field::GF2)), InputError);

    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(is_image_binary(dfa_to_ifa(random_dfa(rng, 1 + rng.below(5), 2))).image_binary);
}

TEST_CASE("boolean operations on the even-a-prefix automaton") {
    auto ifa = even_a_prefix_ifa();
    auto c = complement(ifa);
    CHECK(c.states() == 4);
    CHECK(oracle_eval(c, parse_word(ifa.alphabet(), "a")) == 1);
    CHECK(oracle_eval(c, parse_word(ifa.alphabet(), "aa")) == 0);
    auto accept_all = const_one(ifa.alphabet());
    CHECK(equivalent(intersect(ifa, accept_all), ifa).equivalent);
    CHECK(equivalent(union_of(ifa, complement(ifa)), accept_all).equivalent);
    CHECK(union_of(ifa, ifa).states() == 3 + 3 + 9);
}

TEST_CASE("boolean operations on random IFAs") {
    Rng rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        auto a = random_conjugated_ifa(rng, 1 + rng.below(3), 2).ifa;
        auto b = random_conjugated_ifa(rng, 1 + rng.below(3), 2).ifa;
        auto c = complement(a), i = intersect(a, b), u = union_of(a, b);
        CHECK(equivalent(complement(c), a).equivalent);
        CHECK(is_image_binary(c).image_binary);
        CHECK(is_image_binary(i).image_binary);
        CHECK(is_image_binary(u).image_binary);
        for (const Word& w : words_up_to(2, 8)) {
            const Rational x = oracle_eval(a, w), y = oracle_eval(b, w);
            CHECK(oracle_eval(i, w) == x * y);
            CHECK(oracle_eval(u, w) == std::max(x, y));
        }
    }
}

TEST_CASE("IFA to DFA") {
    auto ifa = even_a_prefix_ifa();
    Dfa d = ifa_to_dfa(ifa);
    CHECK(d.states <= 8);
    for (const Word& w : words_up_to(2, 10)) CHECK(d.accepts(w) == starts_with_even_positive_a(w));

    Dfa empty = ifa_to_dfa(zero_automaton({"a", "b"}));
    CHECK(empty.states == 1);
    CHECK_FALSE(empty.accepting[0]);

    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = random_conjugated_ifa(rng, 4, 2);
        Dfa e = ifa_to_dfa(c.ifa);
        CHECK(e.states <= 16);
        e.validate();
        for (const Word& w : words_up_to(2, 8)) CHECK(e.accepts(w) == (oracle_eval(c.ifa, w) == 1));
    }

    Matrix doubled = ifa.init();
    doubled.scale(Scalar::rational(2));
    CHECK_THROWS_AS(ifa_to_dfa(WeightedAutomaton(ifa.alphabet(), ifa.transitions(), doubled, ifa.final())),
                    InvariantError);
}

TEST_CASE("NFA embedding by subset construction") {
    Nfa n;
    n.alphabet = {"a", "b"};
    n.states = 2;
    n.delta = {{{0, 1}, {0}}, {{1}, {1}}};
    n.initial = {true, false};
    n.accepting = {false, true};
    auto ifa = nfa_to_ifa(n);
    CHECK(is_image_binary(ifa).image_binary);
    CHECK(equivalent(ifa, dfa_to_ifa(subset_construction(n))).equivalent);
    for (const Word& w : words_up_to(2, 8)) {
        CHECK((oracle_eval(ifa, w) == 1) == contains_a(w));
        CHECK(n.accepts(w) == contains_a(w));
    }

    Rng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        Nfa r = random_nfa(rng, 1 + rng.below(4), 2);
        auto e = nfa_to_ifa(r);
        CHECK(e.states() <= (std::size_t(1) << r.states));
        for (const Word& w : words_up_to(2, 6)) CHECK((oracle_eval(e, w) == 1) == r.accepts(w));
    }
}

TEST_CASE("Hankel blocks") {
    auto ifa = even_a_prefix_ifa();
    HankelBlock h = hankel_block(ifa, 3, 3);
    CHECK(h.row_words.size() == 15);
    for (std::size_t i = 0; i < h.row_words.size(); ++i)
        for (std::size_t j = 0; j < h.col_words.size(); ++j) {
            Word xy = h.row_words[i];
            xy.insert(xy.end(), h.col_words[j].begin(), h.col_words[j].end());
            CHECK(h.values(i, j).value() == oracle_eval(ifa, xy));
        }
    CHECK(block_rank(h, Field::Rational) <= 3);
    CHECK(block_rank(hankel_block(zero_automaton({"a"}), 2, 2), Field::Rational) == 0);

    Matrix doubled = ifa.init();
    doubled.scale(Scalar::rational(2));
    auto bad = hankel_block(WeightedAutomaton(ifa.alphabet(), ifa.transitions(), doubled, ifa.final()), 2, 2);
    CHECK_THROWS_AS(block_rank(bad, Field::GF2), InputError);

    Rng rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = random_conjugated_ifa(rng, 1 + rng.below(4), 2);
        const std::size_t n = c.ifa.states();
        auto block = hankel_block(c.ifa, n, n);
        const std::size_t q = block_rank(block, Field::Rational);
        CHECK(block_rank(block, Field::GF2) <= q);
        CHECK(q <= n);
    }
}
