#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oct/dfa.hpp"
#include "oct/nfa.hpp"

namespace oct {

/// The observation architecture: the global alphabet and one subalphabet per
/// agent. Agents are indexed 0..n-1 in code. A subalphabet may be empty (a
/// blind agent) or equal to the global alphabet.
class ObservationArchitecture {
 public:
  ObservationArchitecture(Alphabet global, std::vector<Alphabet> agents);

  const Alphabet& global() const { return global_; }
  const std::vector<Alphabet>& agents() const { return agents_; }
  std::size_t agent_count() const { return agents_.size(); }
  const Alphabet& agent(std::size_t i) const;

  bool observes(std::size_t i, Symbol global_sym) const;
  /// Index of a global letter in agent i's alphabet, if observed.
  std::optional<Symbol> to_agent(std::size_t i, Symbol global_sym) const;
  /// Global index of agent i's letter.
  Symbol to_global(std::size_t i, Symbol agent_sym) const;

  bool operator==(const ObservationArchitecture& other) const {
    return global_ == other.global_ && agents_ == other.agents_;
  }

 private:
  Alphabet global_;
  std::vector<Alphabet> agents_;
  std::vector<std::vector<std::optional<Symbol>>> to_agent_;  // [agent][global sym]
  std::vector<std::vector<Symbol>> to_global_;                // [agent][agent sym]
};

/// Erases from w every letter agent i does not observe. Result is over the
/// agent's alphabet.
Word project_word(const ObservationArchitecture& arch, const Word& w, std::size_t agent);

/// Relabels every transition on an unobserved letter with epsilon. Same
/// states; the result is over the agent's alphabet and recognizes P_i(L(a)).
Nfa project_automaton(const ObservationArchitecture& arch, const Nfa& a, std::size_t agent);

/// Lifts an automaton over the agent's alphabet back to the global alphabet
/// by adding self-loops on every unobserved letter at every state. The
/// result recognizes the inverse projection of L(a).
Nfa inverse_project_automaton(const ObservationArchitecture& arch, const Nfa& a,
                              std::size_t agent);

/// A complete Dfa over the global alphabet accepting exactly the words whose
/// agent-i projection equals sigma (a chain of |sigma|+1 states plus sink).
Dfa word_match_automaton(const ObservationArchitecture& arch, const Word& sigma,
                         std::size_t agent);

}  // namespace oct
