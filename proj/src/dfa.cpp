#include "oct/dfa.hpp"

#include <algorithm>

#include "oct/errors.hpp"

namespace oct {

Dfa::Dfa(Alphabet alphabet, StateId state_count, StateId initial,
         std::vector<StateId> accepting, std::vector<StateId> table)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      accepting_(std::move(accepting)),
      table_(std::move(table)) {
  if (state_count_ == 0) throw StructuralError("a Dfa needs at least one state");
  if (initial_ >= state_count_) throw StructuralError("initial state id out of range");
  if (table_.size() != static_cast<std::size_t>(state_count_) * alphabet_.size()) {
    throw StructuralError("transition table size does not match states x letters");
  }
  for (StateId q : table_) {
    if (q >= state_count_) throw StructuralError("transition target out of range");
  }
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  for (StateId q : accepting_) {
    if (q >= state_count_) throw StructuralError("accepting state id out of range");
  }
  accepting_mask_.assign(state_count_, false);
  for (StateId q : accepting_) accepting_mask_[q] = true;
}

StateId Dfa::run(const Word& w) const {
  StateId q = initial_;
  for (Symbol s : w) {
    if (s >= alphabet_.size()) throw InputError("letter not in alphabet");
    q = step(q, s);
  }
  return q;
}

Nfa Dfa::as_nfa() const {
  std::vector<Transition> trans;
  trans.reserve(table_.size());
  for (StateId q = 0; q < state_count_; ++q) {
    for (Symbol s = 0; s < alphabet_.size(); ++s) {
      trans.push_back({q, s, step(q, s)});
    }
  }
  return Nfa(alphabet_, state_count_, {initial_}, accepting_, std::move(trans));
}

}  // namespace oct
