#include "oct/projection.hpp"

#include <string>
#include <utility>

#include "oct/errors.hpp"

namespace oct {

ObservationArchitecture::ObservationArchitecture(Alphabet global,
                                                 std::vector<Alphabet> agents)
    : global_(std::move(global)), agents_(std::move(agents)) {
  if (agents_.empty()) throw InputError("at least one agent is required");
  to_agent_.resize(agents_.size());
  to_global_.resize(agents_.size());
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    to_agent_[i].assign(global_.size(), std::nullopt);
    for (Symbol s = 0; s < agents_[i].size(); ++s) {
      auto g = global_.index_of(agents_[i].letter(s));
      if (!g) {
        throw InputError("agent letter not in the global alphabet: " +
                         agents_[i].letter(s));
      }
      if (to_agent_[i][*g]) {
        throw InputError("duplicate agent letter: " + agents_[i].letter(s));
      }
      to_agent_[i][*g] = s;
      to_global_[i].push_back(*g);
    }
  }
}

const Alphabet& ObservationArchitecture::agent(std::size_t i) const {
  if (i >= agents_.size()) throw InputError("agent index out of range");
  return agents_[i];
}

bool ObservationArchitecture::observes(std::size_t i, Symbol global_sym) const {
  return to_agent(i, global_sym).has_value();
}

std::optional<Symbol> ObservationArchitecture::to_agent(std::size_t i,
                                                        Symbol global_sym) const {
  if (i >= agents_.size()) throw InputError("agent index out of range");
  if (global_sym >= global_.size()) throw InputError("letter not in alphabet");
  return to_agent_[i][global_sym];
}

Symbol ObservationArchitecture::to_global(std::size_t i, Symbol agent_sym) const {
  if (i >= agents_.size()) throw InputError("agent index out of range");
  if (agent_sym >= to_global_[i].size()) throw InputError("letter not in agent alphabet");
  return to_global_[i][agent_sym];
}

Word project_word(const ObservationArchitecture& arch, const Word& w, std::size_t agent) {
  Word out;
  for (Symbol s : w) {
    if (auto local = arch.to_agent(agent, s)) out.push_back(*local);
  }
  return out;
}

Nfa project_automaton(const ObservationArchitecture& arch, const Nfa& a,
                      std::size_t agent) {
  if (!(a.alphabet() == arch.global())) {
    throw InputError("project_automaton: automaton is not over the global alphabet");
  }
  std::vector<Transition> trans;
  trans.reserve(a.transitions().size());
  for (const Transition& t : a.transitions()) {
    if (t.label == kEpsilon) {
      trans.push_back(t);
      continue;
    }
    auto local = arch.to_agent(agent, t.label);
    trans.push_back({t.src, local ? *local : kEpsilon, t.tgt});
  }
  return Nfa(arch.agent(agent), a.state_count(), a.initial(), a.accepting(),
             std::move(trans));
}

Nfa inverse_project_automaton(const ObservationArchitecture& arch, const Nfa& a,
                              std::size_t agent) {
  if (!(a.alphabet() == arch.agent(agent))) {
    throw InputError("inverse_project_automaton: automaton is not over the agent alphabet");
  }
  std::vector<Transition> trans;
  trans.reserve(a.transitions().size());
  for (const Transition& t : a.transitions()) {
    Symbol label = t.label == kEpsilon ? kEpsilon : arch.to_global(agent, t.label);
    trans.push_back({t.src, label, t.tgt});
  }
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (Symbol g = 0; g < arch.global().size(); ++g) {
      if (!arch.observes(agent, g)) trans.push_back({q, g, q});
    }
  }
  return Nfa(arch.global(), a.state_count(), a.initial(), a.accepting(), std::move(trans));
}

Dfa word_match_automaton(const ObservationArchitecture& arch, const Word& sigma,
                         std::size_t agent) {
  for (Symbol s : sigma) {
    if (s >= arch.agent(agent).size()) throw InputError("letter not in agent alphabet");
  }
  const std::size_t sigma_len = sigma.size();
  const std::size_t global_size = arch.global().size();
  const StateId n = static_cast<StateId>(sigma_len + 2);  // chain + sink
  const StateId sink = n - 1;
  std::vector<StateId> table(static_cast<std::size_t>(n) * global_size, sink);
  for (StateId q = 0; q + 1 < n; ++q) {
    for (Symbol g = 0; g < global_size; ++g) {
      std::size_t cell = static_cast<std::size_t>(q) * global_size + g;
      if (!arch.observes(agent, g)) {
        table[cell] = q;  // invisible letters stay put
      } else if (q < sigma_len && arch.to_global(agent, sigma[q]) == g) {
        table[cell] = q + 1;
      }
    }
  }
  return Dfa(arch.global(), n, 0, {static_cast<StateId>(sigma_len)}, std::move(table));
}

}  // namespace oct
