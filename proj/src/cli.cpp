#include "imagebin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "imagebin/automaton.hpp"
#include "imagebin/buchi.hpp"
#include "imagebin/errors.hpp"
#include "imagebin/fixtures.hpp"
#include "imagebin/ifa.hpp"
#include "imagebin/io.hpp"
#include "imagebin/kdis.hpp"
#include "imagebin/mc.hpp"
#include "imagebin/mod2.hpp"

namespace imagebin {

namespace {

using nlohmann::json;

struct Outcome {
    std::string text;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> diagnostics;
};

struct Options {
    std::vector<std::string> files;
    std::string file;
    std::string word;
    unsigned k = 1;
    std::size_t d = 0;
    std::string taps, init;
    std::size_t length = 0;
    std::string emit = "none";
    std::string stem, cycle;
    std::size_t max_stem = 3, max_cycle = 3;
    std::size_t lasso_bound = 3;
    bool skip_check = false;
    std::uint64_t seed = 42;
    std::size_t states = 3, alphabet = 2, components = 2;
    std::string kind;
};

std::string shown_word(const Alphabet& alphabet, const Word& w) {
    return w.empty() ? "(empty word)" : format_word(alphabet, w);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

WeightedAutomaton load_weighted(const std::string& path) {
    return parse_weighted(read_file(path));
}

Iba load_iba(const std::string& path) {
    const std::string text = read_file(path);
    switch (peek_kind(text)) {
        case FileKind::Iba: return parse_iba(text);
        case FileKind::Nba: return nba_to_iba(parse_nba(text));
        default: throw InputError("'" + path + "' is not an iba or nba file");
    }
}

void require_ifa(const WeightedAutomaton& a, const std::string& path) {
    auto r = is_image_binary(a);
    if (!r.image_binary)
        throw SemanticError("'" + path + "' is not image-binary: value " + r.value->to_string() + " on '" +
                                format_word(a.alphabet(), *r.witness) + "'",
                            format_word(a.alphabet(), *r.witness));
}

Outcome automaton_outcome(const WeightedAutomaton& a) {
    Outcome o;
    o.text = serialize(a);
    o.result = {{"states", a.states()}, {"automaton", o.text}};
    return o;
}

Outcome cmd_eval(const Options& opt) {
    auto a = load_weighted(opt.file);
    Word w = parse_word(a.alphabet(), opt.word);
    Scalar v = eval_word(a, w);
    Outcome o;
    o.inputs = {{"file", opt.file}, {"word", opt.word}};
    o.text = v.to_string() + "\n";
    o.result = {{"value", v.to_string()}};
    return o;
}

Outcome cmd_equiv(const Options& opt) {
    auto a = load_weighted(opt.files.at(0));
    auto b = load_weighted(opt.files.at(1));
    auto r = equivalent(a, b);
    Outcome o;
    o.inputs = {{"files", opt.files}};
    o.text = yes_no(r.equivalent) + "\n";
    o.result = {{"equivalent", r.equivalent}};
    if (r.witness) {
        o.text += "witness: " + shown_word(a.alphabet(), *r.witness) + "\n";
        o.result["witness"] = format_word(a.alphabet(), *r.witness);
    }
    return o;
}

Outcome cmd_minimize(const Options& opt) {
    auto a = load_weighted(opt.files.at(0));
    Outcome o = automaton_outcome(minimize(a));
    o.inputs = {{"file", opt.files[0]}};
    o.diagnostics.push_back("states: " + std::to_string(a.states()) + " -> " + std::to_string(o.result["states"].get<std::size_t>()));
    return o;
}

Outcome cmd_check_ifa(const Options& opt) {
    auto a = load_weighted(opt.files.at(0));
    auto r = is_image_binary(a);
    Outcome o;
    o.inputs = {{"file", opt.files[0]}};
    o.text = yes_no(r.image_binary) + "\n";
    o.result = {{"image_binary", r.image_binary}};
    if (!r.image_binary) {
        o.text += "witness: " + shown_word(a.alphabet(), *r.witness) + "\nvalue: " + r.value->to_string() + "\n";
        o.result["witness"] = format_word(a.alphabet(), *r.witness);
        o.result["value"] = r.value->to_string();
    }
    return o;
}

Outcome cmd_boolean(const std::string& name, const Options& opt) {
    std::vector<WeightedAutomaton> in;
    for (const auto& f : opt.files) {
        in.push_back(load_weighted(f));
        require_ifa(in.back(), f);
    }
    WeightedAutomaton r = name == "complement" ? complement(in.at(0))
                          : name == "intersect" ? intersect(in.at(0), in.at(1))
                                                : union_of(in.at(0), in.at(1));
    Outcome o = automaton_outcome(r);
    o.inputs = {{"files", opt.files}};
    return o;
}

Outcome cmd_to_dfa(const Options& opt) {
    auto a = load_weighted(opt.files.at(0));
    require_ifa(a, opt.files[0]);
    Dfa d = ifa_to_dfa(a);
    Outcome o;
    o.inputs = {{"file", opt.files[0]}};
    o.text = serialize(d);
    o.result = {{"states", d.states}, {"automaton", o.text}};
    return o;
}

Outcome cmd_nfa_to_ifa(const Options& opt) {
    Nfa n = parse_nfa(read_file(opt.files.at(0)));
    Outcome o = automaton_outcome(nfa_to_ifa(n));
    o.inputs = {{"file", opt.files[0]}};
    return o;
}

Outcome cmd_to_mod2(const Options& opt) {
    auto a = load_weighted(opt.files.at(0));
    require_ifa(a, opt.files[0]);
    Outcome o = automaton_outcome(ifa_to_mod2(a));
    o.inputs = {{"file", opt.files[0]}};
    return o;
}

json lfsr_inputs(const Options& opt) {
    return {{"d", opt.d}, {"taps", opt.taps}, {"init", opt.init}};
}

Outcome cmd_lfsr(const Options& opt) {
    LfsrSpec spec = LfsrSpec::from_strings(opt.d, opt.taps, opt.init);
    const std::size_t period = lfsr_period(spec);
    const std::size_t length = opt.length ? opt.length : std::max(period, spec.d);
    std::string bits;
    for (int b : lfsr_sequence(spec, length)) bits += static_cast<char>('0' + b);
    Outcome o;
    o.inputs = lfsr_inputs(opt);
    o.inputs["length"] = length;
    o.result = {{"sequence", bits}, {"period", period}};
    o.text = "sequence: " + bits + "\nperiod: " + std::to_string(period) + "\n";
    if (opt.emit == "mod2") {
        std::string text = serialize(lfsr_to_mod2ma(spec));
        o.text += text;
        o.result["automaton"] = text;
    } else if (opt.emit == "dfa") {
        std::string text = serialize(lfsr_cycle_dfa(spec));
        o.text += text;
        o.result["automaton"] = text;
    } else if (opt.emit != "none") {
        throw InputError("--emit expects none, mod2 or dfa");
    }
    return o;
}

Outcome cmd_lfsr_report(const Options& opt) {
    LfsrSpec spec = LfsrSpec::from_strings(opt.d, opt.taps, opt.init);
    auto rep = shift_register_rank_report(spec);
    const std::string sign = rep.inverse_negative_off_diagonal   ? "negative"
                             : rep.inverse_positive_off_diagonal ? "positive"
                                                                 : "none";
    Outcome o;
    o.inputs = lfsr_inputs(opt);
    o.result = {{"period", rep.period},
                {"rank", rep.rank},
                {"diagonal", rational_to_string(rep.diagonal)},
                {"off_diagonal", rational_to_string(rep.off_diagonal)},
                {"square_matches", rep.square_matches},
                {"inverse_off_diagonal_sign", sign}};
    o.text = "period: " + std::to_string(rep.period) + "\nrank: " + std::to_string(rep.rank) +
             "\ndiagonal: " + rational_to_string(rep.diagonal) + "\noff-diagonal: " +
             rational_to_string(rep.off_diagonal) + "\nsquare-matches: " + yes_no(rep.square_matches) +
             "\ninverse-off-diagonal-sign: " + sign + "\n";
    return o;
}

std::string lasso_text(const Alphabet& alphabet, const Lasso& l) {
    return "(" + format_word(alphabet, l.stem) + ")(" + format_word(alphabet, l.cycle) + ")^w";
}

void warn_diamond(const Nba& a, Outcome& o) {
    if (auto d = find_diamond_on_loop(a))
        o.diagnostics.push_back("warning: states " + std::to_string(d->first + 1) + " and " +
                                std::to_string(d->second + 1) +
                                " form a diamond on a loop; the automaton may be infinitely ambiguous");
}

Outcome cmd_kdis(const Options& opt) {
    Nba a = parse_nba(read_file(opt.files.at(0)));
    Outcome o;
    o.inputs = {{"file", opt.files[0]}, {"k", opt.k}};
    warn_diamond(a, o);
    if (!opt.skip_check) {
        auto rep = check_ambiguity_on_lassos(a, opt.k, opt.lasso_bound, opt.lasso_bound);
        if (!rep.within_bound)
            throw SemanticError("more than " + std::to_string(opt.k) + " final runs on " +
                                    lasso_text(a.alphabet, *rep.witness),
                                lasso_text(a.alphabet, *rep.witness));
    }
    auto res = kdis(a, opt.k);
    o.text = serialize(res);
    o.result = {{"states", res.iba.states()}, {"untrimmed_states", res.untrimmed_states}, {"automaton", o.text}};
    o.diagnostics.push_back("states: " + std::to_string(res.untrimmed_states) + " explored, " +
                            std::to_string(res.iba.states()) + " after trimming");
    return o;
}

Outcome cmd_lasso_eval(const Options& opt) {
    const std::string text = read_file(opt.files.at(0));
    Outcome o;
    o.inputs = {{"file", opt.files[0]}, {"stem", opt.stem}, {"cycle", opt.cycle}};
    if (peek_kind(text) == FileKind::Nba) {
        Nba a = parse_nba(text);
        Lasso l{parse_word(a.alphabet, opt.stem), parse_word(a.alphabet, opt.cycle)};
        validate_lasso(l, a.alphabet.size());
        const bool acc = nba_lasso_accepts(a, l);
        auto count = nba_lasso_count_final(a, l, Integer(1) << 62);
        const std::string runs = count ? count->get_str() : "infinite";
        o.text = "accepted: " + yes_no(acc) + "\nfinal-runs: " + runs + "\n";
        o.result = {{"accepted", acc}, {"final_runs", runs}};
        return o;
    }
    Iba a = parse_iba(text);
    Lasso l{parse_word(a.alphabet, opt.stem), parse_word(a.alphabet, opt.cycle)};
    Rational v = iba_lasso_eval(a, l);
    o.text = rational_to_string(v) + "\n";
    o.result = {{"value", rational_to_string(v)}};
    return o;
}

Outcome cmd_ambiguity(const Options& opt) {
    Nba a = parse_nba(read_file(opt.files.at(0)));
    auto rep = check_ambiguity_on_lassos(a, opt.k, opt.max_stem, opt.max_cycle);
    Outcome o;
    o.inputs = {{"file", opt.files[0]}, {"k", opt.k}, {"max_stem", opt.max_stem}, {"max_cycle", opt.max_cycle}};
    warn_diamond(a, o);
    o.text = yes_no(rep.within_bound) + "\n";
    o.result = {{"within_bound", rep.within_bound}, {"lassos_checked", rep.lassos_checked}};
    if (rep.witness) {
        o.text += "witness: " + lasso_text(a.alphabet, *rep.witness) + "\n";
        o.result["witness"] = {{"stem", format_word(a.alphabet, rep.witness->stem)},
                               {"cycle", format_word(a.alphabet, rep.witness->cycle)}};
    }
    return o;
}

Outcome cmd_modelcheck(const Options& opt) {
    Iba a = load_iba(opt.files.at(0));
    MarkovChain m = parse_markov_chain(read_file(opt.files.at(1)));
    Outcome o;
    o.inputs = {{"automaton", opt.files[0]}, {"chain", opt.files[1]}};
    if (!opt.skip_check) {
        for (const Lasso& l : lassos_up_to(a.alphabet.size(), opt.lasso_bound, opt.lasso_bound)) {
            Rational v = iba_lasso_eval(a, l);
            if (v != 0 && v != 1)
                throw SemanticError("input not image-binary: value " + rational_to_string(v) + " on " +
                                        lasso_text(a.alphabet, l),
                                    lasso_text(a.alphabet, l));
        }
    }
    auto res = model_check_detailed(a, m);
    std::size_t recurrent = 0;
    for (const auto& c : res.product.classes) recurrent += c.recurrent;
    o.text = rational_to_string(res.probability) + "\n";
    o.result = {{"probability", rational_to_string(res.probability)},
                {"product_nodes", res.product.nodes.size()},
                {"sccs", res.product.scc.count()},
                {"recurrent_sccs", recurrent}};
    o.diagnostics.push_back("product: " + std::to_string(res.product.nodes.size()) + " nodes, " +
                            std::to_string(res.product.scc.count()) + " SCCs, " + std::to_string(recurrent) +
                            " recurrent");
    return o;
}

Outcome cmd_gen(const Options& opt) {
    Rng rng(opt.seed);
    Outcome o;
    o.inputs = {{"kind", opt.kind}, {"seed", opt.seed}, {"states", opt.states}, {"alphabet", opt.alphabet}};
    if (opt.states == 0) throw InputError("--states must be at least 1");
    if (opt.kind == "dfa") {
        o.text = serialize(random_dfa(rng, opt.states, opt.alphabet));
    } else if (opt.kind == "ifa") {
        o.text = serialize(random_conjugated_ifa(rng, opt.states, opt.alphabet).ifa);
    } else if (opt.kind == "nfa") {
        o.text = serialize(random_nfa(rng, opt.states, opt.alphabet));
    } else if (opt.kind == "nba") {
        o.inputs["components"] = opt.components;
        o.text = serialize(random_union_of_dbas(rng, opt.components, opt.states, opt.alphabet));
    } else if (opt.kind == "mc") {
        o.text = serialize(random_markov_chain(rng, opt.states, letters(opt.alphabet)));
    } else {
        throw InputError("gen kind must be dfa, ifa, nfa, nba or mc");
    }
    o.result = {{"file", o.text}};
    return o;
}

struct Failure {
    int code;
    const char* kind;
};

Failure classify(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return {exit_usage, "parse"};
    if (dynamic_cast<const ValidationError*>(&e)) return {exit_validation, "validation"};
    if (dynamic_cast<const InputError*>(&e)) return {exit_validation, "input"};
    if (dynamic_cast<const SemanticError*>(&e)) return {exit_semantic, "semantic"};
    if (dynamic_cast<const InvariantError*>(&e)) return {exit_semantic, "invariant"};
    return {exit_semantic, "internal"};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for image-binary weighted automata over finite and infinite words", "imagebin"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit one JSON document {command, inputs, result, diagnostics}");
    Options opt;

    auto files = [&](CLI::App* sub, std::size_t n, const char* what) {
        sub->add_option("files", opt.files, what)->required()->expected(static_cast<int>(n));
    };
    auto lfsr_opts = [&](CLI::App* sub) {
        sub->add_option("--d", opt.d, "Register length")->required();
        sub->add_option("--taps", opt.taps, "Feedback bits c_1..c_d, e.g. 011")->required();
        sub->add_option("--init", opt.init, "Initial bits a_0..a_{d-1}, e.g. 100")->required();
    };

    auto* eval = app.add_subcommand("eval", "Evaluate a weighted automaton on a word");
    eval->add_option("file", opt.file, "wa file")->required();
    eval->add_option("word", opt.word, "Word (letters, or tokens separated by spaces/commas); empty for ε");
    files(app.add_subcommand("equiv", "Decide equivalence of two weighted automata"), 2, "two wa files");
    files(app.add_subcommand("minimize", "Minimize a weighted automaton"), 1, "wa file");
    files(app.add_subcommand("check-ifa", "Decide whether a rational automaton is image-binary"), 1, "wa file");
    files(app.add_subcommand("complement", "Complement of an IFA"), 1, "wa file");
    files(app.add_subcommand("intersect", "Intersection of two IFAs"), 2, "two wa files");
    files(app.add_subcommand("union", "Union of two IFAs"), 2, "two wa files");
    files(app.add_subcommand("to-dfa", "Convert an IFA into a DFA"), 1, "wa file");
    files(app.add_subcommand("nfa-to-ifa", "Subset construction, embedded as an IFA"), 1, "nfa file");
    files(app.add_subcommand("to-mod2", "Convert an IFA into a mod-2 multiplicity automaton"), 1, "wa file");
    auto* lfsr = app.add_subcommand("lfsr", "Shift register sequence and period");
    lfsr_opts(lfsr);
    lfsr->add_option("--length", opt.length, "Number of terms (default: one period)");
    lfsr->add_option("--emit", opt.emit, "Also print an automaton: none, mod2 or dfa");
    lfsr_opts(app.add_subcommand("lfsr-report", "Hankel rank and autocorrelation report of a maximal LFSR"));
    auto* kd = app.add_subcommand("kdis", "Disambiguate a k-ambiguous NBA into an IBA");
    kd->add_option("file", opt.files, "nba file")->required()->expected(1);
    kd->add_option("--k", opt.k, "Ambiguity bound")->required()->check(CLI::PositiveNumber);
    kd->add_option("--lasso-bound", opt.lasso_bound, "Stem and cycle bound of the ambiguity sanity check");
    kd->add_flag("--skip-check", opt.skip_check, "Skip the bounded ambiguity check");
    auto* le = app.add_subcommand("lasso-eval", "Evaluate an NBA or IBA on the lasso word stem·cycle^ω");
    le->add_option("file", opt.files, "nba or iba file")->required()->expected(1);
    le->add_option("--stem", opt.stem, "Stem word (may be empty)");
    le->add_option("--cycle", opt.cycle, "Cycle word (nonempty)")->required();
    auto* amb = app.add_subcommand("ambiguity-check", "Check at most k final runs on all bounded lassos");
    amb->add_option("file", opt.files, "nba file")->required()->expected(1);
    amb->add_option("--k", opt.k, "Ambiguity bound")->required();
    amb->add_option("--max-stem", opt.max_stem, "Longest stem")->check(CLI::PositiveNumber);
    amb->add_option("--max-cycle", opt.max_cycle, "Longest cycle")->check(CLI::PositiveNumber);
    auto* mc = app.add_subcommand("modelcheck", "Probability that a Markov chain run is accepted by an IBA");
    mc->add_option("files", opt.files, "iba (or nba) file and mc file")->required()->expected(2);
    mc->add_option("--lasso-bound", opt.lasso_bound, "Stem and cycle bound of the binariness spot check")
        ->default_val(2);
    mc->add_flag("--skip-check", opt.skip_check, "Skip the binariness spot check");
    auto* gen = app.add_subcommand("gen", "Generate a seeded random fixture");
    gen->add_option("kind", opt.kind, "dfa, ifa, nfa, nba (union of DBAs) or mc")->required();
    gen->add_option("--seed", opt.seed, "Random seed");
    gen->add_option("--states", opt.states, "States (per component for nba)");
    gen->add_option("--alphabet", opt.alphabet, "Alphabet size");
    gen->add_option("--components", opt.components, "Number of DBA components for nba");

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    json doc = {{"command", command}, {"inputs", json::object()}, {"result", nullptr}, {"diagnostics", json::array()}};
    try {
        Outcome o;
        if (command == "eval") o = cmd_eval(opt);
        else if (command == "equiv") o = cmd_equiv(opt);
        else if (command == "minimize") o = cmd_minimize(opt);
        else if (command == "check-ifa") o = cmd_check_ifa(opt);
        else if (command == "complement" || command == "intersect" || command == "union") o = cmd_boolean(command, opt);
        else if (command == "to-dfa") o = cmd_to_dfa(opt);
        else if (command == "nfa-to-ifa") o = cmd_nfa_to_ifa(opt);
        else if (command == "to-mod2") o = cmd_to_mod2(opt);
        else if (command == "lfsr") o = cmd_lfsr(opt);
        else if (command == "lfsr-report") o = cmd_lfsr_report(opt);
        else if (command == "kdis") o = cmd_kdis(opt);
        else if (command == "lasso-eval") o = cmd_lasso_eval(opt);
        else if (command == "ambiguity-check") o = cmd_ambiguity(opt);
        else if (command == "modelcheck") o = cmd_modelcheck(opt);
        else o = cmd_gen(opt);

        if (as_json) {
            doc["inputs"] = o.inputs;
            doc["result"] = o.result;
            doc["diagnostics"] = o.diagnostics;
            out << doc.dump(2) << "\n";
        } else {
            out << o.text;
            for (const auto& d : o.diagnostics) err << d << "\n";
        }
        return exit_ok;
    } catch (const std::exception& e) {
        const Failure f = classify(e);
        if (as_json) {
            json error = {{"kind", f.kind}, {"message", e.what()}, {"exit_code", f.code}};
            if (auto* s = dynamic_cast<const SemanticError*>(&e); s && s->witness()) error["witness"] = *s->witness();
            doc["error"] = error;
            out << doc.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return f.code;
    }
}

}  // namespace imagebin
