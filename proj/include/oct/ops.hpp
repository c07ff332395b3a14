#pragma once

#include <optional>

#include "oct/dfa.hpp"
#include "oct/nfa.hpp"

namespace oct {

bool accepts(const Nfa& a, const Word& w);
bool accepts(const Dfa& a, const Word& w);

/// Subset construction with epsilon closure. The result is complete (the
/// empty subset acts as the sink) and contains reachable subsets only, in
/// BFS discovery order, so equal inputs yield structurally equal outputs.
Dfa determinize(const Nfa& a);

/// Turns a deterministic, possibly partial automaton into a complete Dfa by
/// adding at most one non-accepting sink. The input must have no epsilon
/// transitions, at most one initial state, and no two transitions sharing
/// (src, label); otherwise a StructuralError is raised.
Dfa complete(const Nfa& a);

/// Flips accepting and rejecting states. Same state count.
Dfa complement(const Dfa& a);

/// Intersection product; epsilon transitions of either factor advance that
/// factor alone. Reachable pairs only. Alphabets must be identical.
Nfa product_intersection(const Nfa& a, const Nfa& b);

/// True iff no accepting state is reachable from an initial state.
bool is_empty(const Nfa& a);

/// A shortest accepted word, lexicographically least among equal length;
/// nullopt iff the language is empty.
std::optional<Word> shortest_accepted(const Nfa& a);

struct Inclusion {
  bool holds;
  std::optional<Word> counterexample;  // set iff !holds: shortest word of L(a) - L(b)
};

/// Checks L(a) subset-of L(b). Alphabets must be identical.
Inclusion is_subset(const Nfa& a, const Dfa& b);

}  // namespace oct
