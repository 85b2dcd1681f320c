#pragma once

// Line-based text formats.
//
// Automaton files:
//   kind: wa | nba | iba | nfa
//   field: rational | gf2          (wa only; default rational)
//   alphabet: a b
//   states: 3
//   initial: ...                   wa/iba: one scalar per state; nba/nfa: state indices
//   final: ...                     wa: one scalar per state; nba/iba/nfa: state indices
//   trans <letter> <from> <to> <weight>
// States are 1-based, omitted transitions have weight 0 and '#' starts a
// comment. nba/nfa transitions may omit the weight, which must be 1 if given.
//
// Markov chain files:
//   kind: mc
//   states: 2
//   alphabet: a b
//   initial: 1/2 1/2
//   labels: a b
//   row 1: 1/2 1/2
//   row 2: 0 1

#include <string>
#include <string_view>
#include <vector>

#include "imagebin/automaton.hpp"
#include "imagebin/buchi.hpp"
#include "imagebin/ifa.hpp"
#include "imagebin/kdis.hpp"
#include "imagebin/mc.hpp"

namespace imagebin {

enum class FileKind { Weighted, Nba, Iba, Nfa, MarkovChain };

const char* file_kind_name(FileKind k);
/// Reads the kind header. Throws ParseError when it is missing or unknown.
FileKind peek_kind(std::string_view text);

WeightedAutomaton parse_weighted(std::string_view text);
Nba parse_nba(std::string_view text);
Iba parse_iba(std::string_view text);
Nfa parse_nfa(std::string_view text);
MarkovChain parse_markov_chain(std::string_view text);

std::string serialize(const WeightedAutomaton& a);
std::string serialize(const Nba& a);
std::string serialize(const Iba& a);
std::string serialize(const Nfa& a);
/// Written as an nfa file with a single initial state.
std::string serialize(const Dfa& a);
std::string serialize(const MarkovChain& m);
/// kdis output with each state's count vector in a comment line.
std::string serialize(const KdisResult& k);

/// Reads a whole file. Throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace imagebin
