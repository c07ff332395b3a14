#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "oct/alphabet.hpp"

namespace oct {

using StateId = std::uint32_t;

/// Label of an epsilon transition. Sorts after every real letter.
inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

struct Transition {
  StateId src;
  Symbol label;  // letter index or kEpsilon
  StateId tgt;

  auto operator<=>(const Transition&) const = default;
};

/// A nondeterministic finite automaton, immutable after construction.
/// state_count may be 0 (the empty language). Transitions are kept sorted
/// by (src, label, tgt) so every traversal order is reproducible.
class Nfa {
 public:
  Nfa(Alphabet alphabet, StateId state_count, std::vector<StateId> initial,
      std::vector<StateId> accepting, std::vector<Transition> transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  StateId state_count() const { return state_count_; }
  const std::vector<StateId>& initial() const { return initial_; }
  const std::vector<StateId>& accepting() const { return accepting_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  bool is_accepting(StateId q) const { return accepting_mask_[q]; }
  bool any_accepting(const std::vector<StateId>& states) const;

  /// Outgoing transitions of one state, sorted by (label, tgt).
  std::span<const Transition> out(StateId q) const;

  /// All states reachable from `states` via epsilon transitions (the input
  /// states included). Input and output are sorted and duplicate-free.
  std::vector<StateId> eps_closure(std::vector<StateId> states) const;

  /// One synchronous step on `letter` (no closure). Sorted, duplicate-free.
  std::vector<StateId> step(const std::vector<StateId>& states, Symbol letter) const;

  bool operator==(const Nfa& other) const = default;

 private:
  Alphabet alphabet_;
  StateId state_count_ = 0;
  std::vector<StateId> initial_;
  std::vector<StateId> accepting_;
  std::vector<Transition> transitions_;
  std::vector<std::uint32_t> out_begin_;  // per-state offsets into transitions_
  std::vector<bool> accepting_mask_;
};

}  // namespace oct
