#include <doctest.h>

#include "imagebin/errors.hpp"
#include "imagebin/graph.hpp"
#include "support.hpp"

using namespace imagebin;
using namespace imagebin::testing;

namespace {

Lasso lasso(const Alphabet& alphabet, std::string_view stem, std::string_view cycle) {
    return {parse_word(alphabet, stem), parse_word(alphabet, cycle)};
}

}  // namespace

TEST_CASE("strongly connected components") {
    Graph g = {{1}, {2}, {0, 3}, {4}, {3}, {}};
    auto scc = strongly_connected_components(g);
    CHECK(scc.count() == 3);
    CHECK(scc.component[0] == scc.component[2]);
    CHECK(scc.component[3] == scc.component[4]);
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t t : g[v]) CHECK(scc.component[t] <= scc.component[v]);
    CHECK(is_nontrivial(g, scc, scc.component[0]));
    CHECK_FALSE(is_nontrivial(g, scc, scc.component[5]));
    CHECK(is_nontrivial({{0}}, strongly_connected_components({{0}}), 0));
    auto r = reachable_from(g, {3});
    CHECK(r == std::vector<bool>{false, false, false, true, true, false});
}

TEST_CASE("NBA lasso acceptance and run counts") {
    auto four = four_run_nba();
    auto unary = lasso(four.alphabet, "", "a");
    CHECK(nba_lasso_accepts(four, unary));
    CHECK(nba_lasso_count_final(four, unary, 100) == Integer(4));
    CHECK(nba_lasso_count_final(four, unary, 3) == std::nullopt);

    Nba none = four;
    none.accepting.assign(5, false);
    CHECK_FALSE(nba_lasso_accepts(none, unary));
    CHECK(nba_lasso_count_final(none, unary, 100) == Integer(0));

    auto inf_a = infinitely_many_a_nba();
    CHECK(nba_lasso_accepts(inf_a, lasso(inf_a.alphabet, "", "ab")));
    CHECK_FALSE(nba_lasso_accepts(inf_a, lasso(inf_a.alphabet, "aaa", "b")));
    CHECK_THROWS_AS(validate_lasso(lasso(inf_a.alphabet, "a", ""), 2), InputError);

    // Two runs that separate and merge again on every period: infinitely many final runs.
    Nba diamond;
    diamond.alphabet = {"a"};
    diamond.states = 3;
    diamond.delta = {{{1, 2}}, {{0}}, {{0}}};
    diamond.initial = {true, false, false};
    diamond.accepting = {true, false, false};
    CHECK(nba_lasso_accepts(diamond, lasso(diamond.alphabet, "", "a")));
    CHECK(nba_lasso_count_final(diamond, lasso(diamond.alphabet, "", "a"), 1000) == std::nullopt);
    CHECK(find_diamond_on_loop(diamond).has_value());
    CHECK_FALSE(find_diamond_on_loop(four).has_value());
}

TEST_CASE("lasso acceptance matches the relation oracle") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        Nba a = random_nba(rng, 1 + rng.below(4), 2);
        for (const Lasso& l : lassos_up_to(2, 3, 3)) CHECK(nba_lasso_accepts(a, l) == oracle_lasso_accepts(a, l));
    }
}

TEST_CASE("bounded ambiguity check") {
    auto four = four_run_nba();
    CHECK(check_ambiguity_on_lassos(four, 4, 3, 3).within_bound);
    auto r = check_ambiguity_on_lassos(four, 3, 3, 3);
    CHECK_FALSE(r.within_bound);
    REQUIRE(r.witness.has_value());
    CHECK(nba_lasso_count_final(four, *r.witness, 100) == Integer(4));
    CHECK(check_ambiguity_on_lassos(infinitely_many_a_nba(), 1, 3, 3).within_bound);
    CHECK(lassos_up_to(2, 1, 2).size() == 3 * 6);

    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t k = 1 + rng.below(3);
        Nba u = random_union_of_dbas(rng, k, 1 + rng.below(3), 2);
        CHECK(check_ambiguity_on_lassos(u, static_cast<unsigned>(k), 3, 3).within_bound);
    }
}

TEST_CASE("IBA semantics on lassos") {
    auto all = accept_all_iba({"a", "b"});
    for (const Lasso& l : lassos_up_to(2, 2, 2)) CHECK(iba_lasso_eval(all, l) == 1);
    Iba rejecting = all;
    rejecting.accepting = {false};
    CHECK(iba_lasso_eval(rejecting, lasso(all.alphabet, "a", "b")) == 0);

    // Weighted stem edges contribute their product; loop edges have weight 1.
    Iba w;
    w.alphabet = {"a"};
    w.trans = {Matrix::of_ints({{0, 3, -1}, {0, 1, 0}, {0, 0, 1}})};
    w.init = Matrix::of_ints({{2, 0, 0}});
    w.accepting = {false, true, true};
    CHECK(is_ultimately_stable(w));
    CHECK(iba_lasso_eval(w, lasso(w.alphabet, "", "a")) == 2 * 3 - 2);
    CHECK(iba_lasso_count_final(w, lasso(w.alphabet, "", "a")) == Integer(2));

    Iba unstable = w;
    unstable.trans[0](1, 1) = Scalar::rational(2);
    CHECK_FALSE(is_ultimately_stable(unstable));
    CHECK_THROWS_AS(iba_lasso_eval(unstable, lasso(w.alphabet, "", "a")), SemanticError);

    auto embedded = nba_to_iba(four_run_nba());
    CHECK(iba_lasso_eval(embedded, lasso({"a"}, "", "a")) == 4);

    Iba infinite = nba_to_iba([] {
        Nba d;
        d.alphabet = {"a"};
        d.states = 3;
        d.delta = {{{1, 2}}, {{0}}, {{0}}};
        d.initial = {true, false, false};
        d.accepting = {true, false, false};
        return d;
    }());
    CHECK_THROWS_AS(iba_lasso_eval(infinite, lasso({"a"}, "", "a")), SemanticError);
}

TEST_CASE("trimming keeps useful states") {
    Iba a;
    a.alphabet = {"a"};
    a.trans = {Matrix::of_ints({{0, 1, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}})};
    a.init = Matrix::of_ints({{1, 0, 0, 0}});
    a.accepting = {false, true, true, true};
    auto useful = useful_states(a);
    CHECK(useful == std::vector<bool>{true, true, false, false});
    auto [t, kept] = trim(a);
    CHECK(kept == std::vector<std::size_t>{0, 1});
    CHECK(t.states() == 2);
    CHECK(iba_lasso_eval(t, lasso({"a"}, "", "a")) == iba_lasso_eval(a, lasso({"a"}, "", "a")));

    Iba dead = a;
    dead.accepting.assign(4, false);
    auto [z, none] = trim(dead);
    CHECK(none.empty());
    CHECK(z.states() == 1);
    CHECK(z.init(0, 0).is_zero());
}
