#pragma once

#include <cstdint>
#include <vector>

#include "oct/nfa.hpp"

namespace oct {

/// A complete deterministic finite automaton: exactly one initial state and
/// a total transition table. state_count is always >= 1.
class Dfa {
 public:
  Dfa(Alphabet alphabet, StateId state_count, StateId initial,
      std::vector<StateId> accepting, std::vector<StateId> table);

  const Alphabet& alphabet() const { return alphabet_; }
  StateId state_count() const { return state_count_; }
  StateId initial() const { return initial_; }
  const std::vector<StateId>& accepting() const { return accepting_; }
  const std::vector<StateId>& table() const { return table_; }

  bool is_accepting(StateId q) const { return accepting_mask_[q]; }

  StateId step(StateId q, Symbol letter) const {
    return table_[q * alphabet_.size() + letter];
  }

  /// Runs the word from the initial state; letters are validated.
  StateId run(const Word& w) const;

  Nfa as_nfa() const;

  bool operator==(const Dfa& other) const = default;

 private:
  Alphabet alphabet_;
  StateId state_count_ = 1;
  StateId initial_ = 0;
  std::vector<StateId> accepting_;
  std::vector<StateId> table_;  // row-major: state * |alphabet| + letter
  std::vector<bool> accepting_mask_;
};

}  // namespace oct
