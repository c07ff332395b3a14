#include "oct/nfa.hpp"

#include <algorithm>

#include "oct/errors.hpp"

namespace oct {

namespace {

std::vector<StateId> sorted_unique(std::vector<StateId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, StateId state_count, std::vector<StateId> initial,
         std::vector<StateId> accepting, std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(sorted_unique(std::move(initial))),
      accepting_(sorted_unique(std::move(accepting))),
      transitions_(std::move(transitions)) {
  for (StateId q : initial_) {
    if (q >= state_count_) throw StructuralError("initial state id out of range");
  }
  for (StateId q : accepting_) {
    if (q >= state_count_) throw StructuralError("accepting state id out of range");
  }
  for (const Transition& t : transitions_) {
    if (t.src >= state_count_ || t.tgt >= state_count_) {
      throw StructuralError("transition state id out of range");
    }
    if (t.label != kEpsilon && t.label >= alphabet_.size()) {
      throw StructuralError("transition label not in alphabet");
    }
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                     transitions_.end());

  out_begin_.assign(state_count_ + 1, 0);
  for (const Transition& t : transitions_) out_begin_[t.src + 1]++;
  for (StateId q = 0; q < state_count_; ++q) out_begin_[q + 1] += out_begin_[q];

  accepting_mask_.assign(state_count_, false);
  for (StateId q : accepting_) accepting_mask_[q] = true;
}

bool Nfa::any_accepting(const std::vector<StateId>& states) const {
  return std::any_of(states.begin(), states.end(),
                     [&](StateId q) { return accepting_mask_[q]; });
}

std::span<const Transition> Nfa::out(StateId q) const {
  return {transitions_.data() + out_begin_[q], transitions_.data() + out_begin_[q + 1]};
}

std::vector<StateId> Nfa::eps_closure(std::vector<StateId> states) const {
  std::vector<bool> seen(state_count_, false);
  std::vector<StateId> stack = states;
  for (StateId q : states) seen[q] = true;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (const Transition& t : out(q)) {
      if (t.label == kEpsilon && !seen[t.tgt]) {
        seen[t.tgt] = true;
        states.push_back(t.tgt);
        stack.push_back(t.tgt);
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

std::vector<StateId> Nfa::step(const std::vector<StateId>& states, Symbol letter) const {
  std::vector<StateId> next;
  for (StateId q : states) {
    for (const Transition& t : out(q)) {
      if (t.label == letter) next.push_back(t.tgt);
    }
  }
  return sorted_unique(std::move(next));
}

}  // namespace oct
