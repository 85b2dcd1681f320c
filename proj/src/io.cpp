#include "imagebin/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "imagebin/errors.hpp"

namespace imagebin {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

struct RawDocument {
    std::map<std::string, Line> headers;  // tokens exclude the key
    std::vector<Line> trans;              // tokens exclude "trans"
    std::vector<Line> rows;               // tokens exclude "row"
};

RawDocument parse_raw(std::string_view text) {
    RawDocument doc;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        for (std::string tok; in >> tok;) line.tokens.push_back(tok);
        if (line.tokens.empty()) continue;
        std::string head = line.tokens.front();
        line.tokens.erase(line.tokens.begin());
        if (head == "trans") {
            doc.trans.push_back(std::move(line));
        } else if (head == "row") {
            doc.rows.push_back(std::move(line));
        } else if (head.size() > 1 && head.back() == ':') {
            head.pop_back();
            auto [it, fresh] = doc.headers.emplace(head, line);
            if (!fresh) throw ParseError("duplicate '" + head + ":' header", number);
        } else {
            throw ParseError("unrecognized line starting with '" + head + "'", number);
        }
        if (end == text.size()) break;
    }
    return doc;
}

const Line& require(const RawDocument& doc, const std::string& key) {
    auto it = doc.headers.find(key);
    if (it == doc.headers.end()) throw ParseError("missing '" + key + ":' header");
    return it->second;
}

const std::string& single(const RawDocument& doc, const std::string& key) {
    const Line& l = require(doc, key);
    if (l.tokens.size() != 1) throw ParseError("'" + key + ":' expects exactly one value", l.number);
    return l.tokens.front();
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("expected a nonnegative integer, got '" + tok + "'", line);
    try {
        return std::stoul(tok);
    } catch (const std::exception&) {
        throw ParseError("integer '" + tok + "' out of range", line);
    }
}

std::size_t parse_state(const std::string& tok, std::size_t n, std::size_t line) {
    std::size_t s = parse_count(tok, line);
    if (s < 1 || s > n)
        throw ValidationError("line " + std::to_string(line) + ": state " + tok + " out of range 1.." +
                              std::to_string(n));
    return s - 1;
}

Scalar parse_scalar(const std::string& tok, Field f, std::size_t line) {
    try {
        return Scalar::parse(tok, f);
    } catch (const InputError& e) {
        throw ParseError(e.what(), line);
    }
}

std::size_t parse_letter(const Alphabet& alphabet, const std::string& tok, std::size_t line) {
    auto it = std::find(alphabet.begin(), alphabet.end(), tok);
    if (it == alphabet.end())
        throw ValidationError("line " + std::to_string(line) + ": unknown letter '" + tok + "'");
    return static_cast<std::size_t>(it - alphabet.begin());
}

void require_kind(const RawDocument& doc, const char* want) {
    const std::string& kind = single(doc, "kind");
    if (kind != want)
        throw ParseError("expected kind '" + std::string(want) + "', found '" + kind + "'", require(doc, "kind").number);
}

Alphabet read_alphabet(const RawDocument& doc) {
    Alphabet a = require(doc, "alphabet").tokens;
    std::set<std::string> seen;
    for (const auto& l : a)
        if (!seen.insert(l).second) throw ValidationError("duplicate letter '" + l + "'");
    return a;
}

std::size_t read_states(const RawDocument& doc) {
    std::size_t n = parse_count(single(doc, "states"), require(doc, "states").number);
    if (n == 0) throw ValidationError("states must be at least 1");
    return n;
}

Matrix read_scalar_vector(const RawDocument& doc, const std::string& key, std::size_t n, Field f, bool row) {
    const Line& l = require(doc, key);
    if (l.tokens.size() != n)
        throw ParseError("'" + key + ":' expects " + std::to_string(n) + " values, got " +
                             std::to_string(l.tokens.size()),
                         l.number);
    Matrix m = row ? Matrix(1, n, f) : Matrix(n, 1, f);
    for (std::size_t i = 0; i < n; ++i) (row ? m(0, i) : m(i, 0)) = parse_scalar(l.tokens[i], f, l.number);
    return m;
}

std::vector<bool> read_index_set(const RawDocument& doc, const std::string& key, std::size_t n) {
    const Line& l = require(doc, key);
    std::vector<bool> set(n, false);
    for (const auto& tok : l.tokens) {
        std::size_t s = parse_state(tok, n, l.number);
        if (set[s]) throw ValidationError("line " + std::to_string(l.number) + ": state " + tok + " listed twice");
        set[s] = true;
    }
    return set;
}

struct Relation {
    Alphabet alphabet;
    std::size_t states = 0;
    std::vector<std::vector<std::vector<std::size_t>>> delta;
    std::vector<bool> initial, accepting;
};

Relation read_relation(const RawDocument& doc) {
    Relation r;
    r.alphabet = read_alphabet(doc);
    r.states = read_states(doc);
    r.initial = read_index_set(doc, "initial", r.states);
    r.accepting = read_index_set(doc, "final", r.states);
    r.delta.assign(r.states, std::vector<std::vector<std::size_t>>(r.alphabet.size()));
    for (const Line& l : doc.trans) {
        if (l.tokens.size() != 3 && l.tokens.size() != 4)
            throw ParseError("expected 'trans <letter> <from> <to> [1]'", l.number);
        std::size_t a = parse_letter(r.alphabet, l.tokens[0], l.number);
        std::size_t from = parse_state(l.tokens[1], r.states, l.number);
        std::size_t to = parse_state(l.tokens[2], r.states, l.number);
        if (l.tokens.size() == 4 && !parse_scalar(l.tokens[3], Field::Rational, l.number).is_one())
            throw ValidationError("line " + std::to_string(l.number) + ": transition weights must be 1");
        auto& targets = r.delta[from][a];
        if (std::find(targets.begin(), targets.end(), to) != targets.end())
            throw ValidationError("line " + std::to_string(l.number) + ": duplicate transition");
        targets.push_back(to);
    }
    for (auto& row : r.delta)
        for (auto& targets : row) std::sort(targets.begin(), targets.end());
    if (!doc.rows.empty()) throw ParseError("'row' lines only belong in Markov chain files", doc.rows.front().number);
    return r;
}

std::vector<Matrix> read_weighted_trans(const RawDocument& doc, const Alphabet& alphabet, std::size_t n, Field f) {
    std::vector<Matrix> trans(alphabet.size(), Matrix(n, n, f));
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const Line& l : doc.trans) {
        if (l.tokens.size() != 4) throw ParseError("expected 'trans <letter> <from> <to> <weight>'", l.number);
        std::size_t a = parse_letter(alphabet, l.tokens[0], l.number);
        std::size_t from = parse_state(l.tokens[1], n, l.number);
        std::size_t to = parse_state(l.tokens[2], n, l.number);
        if (!seen.emplace(a, from, to).second)
            throw ValidationError("line " + std::to_string(l.number) + ": duplicate transition");
        trans[a](from, to) = parse_scalar(l.tokens[3], f, l.number);
    }
    if (!doc.rows.empty()) throw ParseError("'row' lines only belong in Markov chain files", doc.rows.front().number);
    return trans;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
    return out;
}

/// "key: value" or "key:" when the value is empty.
std::string field_line(const char* key, const std::string& value) {
    return std::string(key) + ":" + (value.empty() ? "" : " " + value) + "\n";
}

std::string header(const char* kind, const Alphabet& alphabet, std::size_t n) {
    return std::string("kind: ") + kind + "\nalphabet: " + join(alphabet) + "\nstates: " + std::to_string(n) + "\n";
}

std::string index_set(const std::vector<bool>& set) {
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (set[i]) xs.push_back(std::to_string(i + 1));
    return join(xs);
}

std::string scalar_row(const Matrix& m) {
    std::vector<std::string> xs;
    for (const auto& s : m.entries()) xs.push_back(s.to_compact_string());
    return join(xs);
}

std::string weighted_trans(const Alphabet& alphabet, const std::vector<Matrix>& trans) {
    std::string out;
    for (std::size_t a = 0; a < alphabet.size(); ++a)
        for (std::size_t i = 0; i < trans[a].rows(); ++i)
            for (std::size_t j = 0; j < trans[a].cols(); ++j)
                if (!trans[a](i, j).is_zero())
                    out += "trans " + alphabet[a] + " " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                           trans[a](i, j).to_compact_string() + "\n";
    return out;
}

std::string relation_text(const char* kind, const Alphabet& alphabet, std::size_t n,
                          const std::vector<std::vector<std::vector<std::size_t>>>& delta,
                          const std::vector<bool>& initial, const std::vector<bool>& accepting) {
    std::string out = header(kind, alphabet, n);
    out += field_line("initial", index_set(initial));
    out += field_line("final", index_set(accepting));
    for (std::size_t a = 0; a < alphabet.size(); ++a)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t t : delta[q][a])
                out += "trans " + alphabet[a] + " " + std::to_string(q + 1) + " " + std::to_string(t + 1) + "\n";
    return out;
}

}  // namespace

const char* file_kind_name(FileKind k) {
    switch (k) {
        case FileKind::Weighted: return "wa";
        case FileKind::Nba: return "nba";
        case FileKind::Iba: return "iba";
        case FileKind::Nfa: return "nfa";
        case FileKind::MarkovChain: return "mc";
    }
    return "?";
}

FileKind peek_kind(std::string_view text) {
    const RawDocument doc = parse_raw(text);
    const std::string& kind = single(doc, "kind");
    for (FileKind k : {FileKind::Weighted, FileKind::Nba, FileKind::Iba, FileKind::Nfa, FileKind::MarkovChain})
        if (kind == file_kind_name(k)) return k;
    throw ParseError("unknown kind '" + kind + "' (expected wa, nba, iba, nfa or mc)", require(doc, "kind").number);
}

WeightedAutomaton parse_weighted(std::string_view text) {
    const RawDocument doc = parse_raw(text);
    require_kind(doc, "wa");
    Field f = Field::Rational;
    if (doc.headers.count("field")) {
        try {
            f = parse_field(single(doc, "field"));
        } catch (const InputError& e) {
            throw ParseError(e.what(), require(doc, "field").number);
        }
    }
    Alphabet alphabet = read_alphabet(doc);
    std::size_t n = read_states(doc);
    Matrix init = read_scalar_vector(doc, "initial", n, f, true);
    Matrix final = read_scalar_vector(doc, "final", n, f, false);
    auto trans = read_weighted_trans(doc, alphabet, n, f);
    return WeightedAutomaton(std::move(alphabet), std::move(trans), std::move(init), std::move(final));
}

Nba parse_nba(std::string_view text) {
    const RawDocument doc = parse_raw(text);
    require_kind(doc, "nba");
    Relation r = read_relation(doc);
    Nba a{std::move(r.alphabet), r.states, std::move(r.delta), std::move(r.initial), std::move(r.accepting)};
    a.validate();
    return a;
}

Nfa parse_nfa(std::string_view text) {
    const RawDocument doc = parse_raw(text);
    require_kind(doc, "nfa");
    Relation r = read_relation(doc);
    Nfa a{std::move(r.alphabet), r.states, std::move(r.delta), std::move(r.initial), std::move(r.accepting)};
    a.validate();
    return a;
}

Iba parse_iba(std::string_view text) {
    const RawDocument doc = parse_raw(text);
    require_kind(doc, "iba");
    if (doc.headers.count("field") && single(doc, "field") != "rational")
        throw ParseError("iba files must use the rational field", require(doc, "field").number);
    Iba a;
    a.alphabet = read_alphabet(doc);
    std::size_t n = read_states(doc);
    a.init = read_scalar_vector(doc, "initial", n, Field::Rational, true);
    a.accepting = read_index_set(doc, "final", n);
    a.trans = read_weighted_trans(doc, a.alphabet, n, Field::Rational);
    a.validate();
    return a;
}

MarkovChain parse_markov_chain(std::string_view text) {
    const RawDocument doc = parse_raw(text);
    require_kind(doc, "mc");
    MarkovChain m;
    m.states = read_states(doc);
    m.alphabet = read_alphabet(doc);
    const Matrix init = read_scalar_vector(doc, "initial", m.states, Field::Rational, true);
    for (const auto& s : init.entries()) m.initial.push_back(s.value());
    const Line& labels = require(doc, "labels");
    if (labels.tokens.size() != m.states)
        throw ParseError("'labels:' expects " + std::to_string(m.states) + " letters", labels.number);
    m.labels = labels.tokens;
    if (!doc.trans.empty()) throw ParseError("'trans' lines do not belong in Markov chain files", doc.trans.front().number);

    m.transition = Matrix(m.states, m.states, Field::Rational);
    std::vector<bool> seen(m.states, false);
    for (const Line& l : doc.rows) {
        if (l.tokens.empty() || l.tokens.front().size() < 2 || l.tokens.front().back() != ':')
            throw ParseError("expected 'row <i>: <p_1> ... <p_n>'", l.number);
        std::string idx = l.tokens.front();
        idx.pop_back();
        std::size_t s = parse_state(idx, m.states, l.number);
        if (seen[s]) throw ParseError("row " + idx + " given twice", l.number);
        seen[s] = true;
        if (l.tokens.size() != m.states + 1)
            throw ParseError("row " + idx + " expects " + std::to_string(m.states) + " entries", l.number);
        for (std::size_t t = 0; t < m.states; ++t)
            m.transition(s, t) = parse_scalar(l.tokens[t + 1], Field::Rational, l.number);
    }
    for (std::size_t s = 0; s < m.states; ++s)
        if (!seen[s]) throw ParseError("missing row " + std::to_string(s + 1));
    m.validate();
    return m;
}

std::string serialize(const WeightedAutomaton& a) {
    std::string out = "kind: wa\nfield: " + std::string(field_name(a.field())) + "\n";
    out += "alphabet: " + join(a.alphabet()) + "\nstates: " + std::to_string(a.states()) + "\n";
    out += "initial: " + scalar_row(a.init()) + "\n";
    out += "final: " + scalar_row(a.final()) + "\n";
    out += weighted_trans(a.alphabet(), a.transitions());
    return out;
}

std::string serialize(const Nba& a) {
    return relation_text("nba", a.alphabet, a.states, a.delta, a.initial, a.accepting);
}

std::string serialize(const Nfa& a) {
    return relation_text("nfa", a.alphabet, a.states, a.delta, a.initial, a.accepting);
}

std::string serialize(const Dfa& a) {
    std::vector<std::vector<std::vector<std::size_t>>> delta(a.states);
    for (std::size_t q = 0; q < a.states; ++q)
        for (std::size_t t : a.delta[q]) delta[q].push_back({t});
    std::vector<bool> initial(a.states, false);
    initial[a.initial] = true;
    return relation_text("nfa", a.alphabet, a.states, delta, initial, a.accepting);
}

std::string serialize(const Iba& a) {
    std::string out = header("iba", a.alphabet, a.states());
    out += field_line("initial", scalar_row(a.init));
    out += field_line("final", index_set(a.accepting));
    out += weighted_trans(a.alphabet, a.trans);
    return out;
}

std::string serialize(const KdisResult& k) {
    std::string out = header("iba", k.iba.alphabet, k.iba.states());
    for (std::size_t i = 0; i < k.labels.size(); ++i)
        out += "# state " + std::to_string(i + 1) + " = " + k.labels[i].to_string() + "\n";
    out += field_line("initial", scalar_row(k.iba.init));
    out += field_line("final", index_set(k.iba.accepting));
    out += weighted_trans(k.iba.alphabet, k.iba.trans);
    return out;
}

std::string serialize(const MarkovChain& m) {
    std::string out = "kind: mc\nstates: " + std::to_string(m.states) + "\nalphabet: " + join(m.alphabet) + "\n";
    std::vector<std::string> init;
    for (const auto& p : m.initial) init.push_back(Scalar::rational(p).to_compact_string());
    out += "initial: " + join(init) + "\nlabels: " + join(m.labels) + "\n";
    for (std::size_t s = 0; s < m.states; ++s) {
        std::vector<std::string> row;
        for (std::size_t t = 0; t < m.states; ++t) row.push_back(m.transition(s, t).to_compact_string());
        out += "row " + std::to_string(s + 1) + ": " + join(row) + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace imagebin
