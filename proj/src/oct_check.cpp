#include "oct/oct_check.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "oct/errors.hpp"
#include "oct/projection.hpp"

namespace oct {

std::string to_string(WitnessBranch b) {
  return b == WitnessBranch::kGoodConfused ? "GOOD_CONFUSED" : "BAD_CONFUSED";
}

Nfa bad_language_nfa(const Problem& p) {
  return product_intersection(p.plant.as_nfa(), complement(p.spec).as_nfa());
}

AgentView make_agent_view(const Problem& p, std::size_t agent) {
  return AgentView{
      determinize(project_automaton(p.arch, p.spec.as_nfa(), agent)),
      determinize(project_automaton(p.arch, bad_language_nfa(p), agent)),
  };
}

namespace {

/// intersection over all agents of Pi^-1(Pi(base)), intersected with the
/// plant last; factors are folded in agent declaration order.
Nfa constrained_intersection(const Problem& p, const Nfa& base) {
  std::optional<Nfa> acc;
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    Nfa factor =
        inverse_project_automaton(p.arch, project_automaton(p.arch, base, i), i);
    acc = acc ? product_intersection(*acc, std::move(factor)) : std::move(factor);
  }
  return product_intersection(*acc, p.plant.as_nfa());
}

}  // namespace

OctResult check_oct(const Problem& p) {
  Nfa bad = bad_language_nfa(p);
  Nfa a1 = constrained_intersection(p, p.spec.as_nfa());
  Nfa a2 = constrained_intersection(p, bad);

  OctResult result;
  result.a1_states = a1.state_count();
  result.a2_states = a2.state_count();

  Inclusion inc1 = is_subset(a1, p.spec);
  if (!inc1.holds) {
    // A bad word whose every observation is shared by some good word.
    OctWitness w{WitnessBranch::kBadConfused, std::move(*inc1.counterexample), {}};
    for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
      w.per_agent.push_back(recover_agent_word(p, i, w.rho, TargetLanguage::kGood));
    }
    result.holds = false;
    result.witness = std::move(w);
    return result;
  }

  Inclusion inc2 = is_subset(a2, determinize(bad));
  if (!inc2.holds) {
    OctWitness w{WitnessBranch::kGoodConfused, std::move(*inc2.counterexample), {}};
    for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
      w.per_agent.push_back(recover_agent_word(p, i, w.rho, TargetLanguage::kBad));
    }
    result.holds = false;
    result.witness = std::move(w);
    return result;
  }

  result.holds = true;
  return result;
}

Word recover_agent_word(const Problem& p, std::size_t agent, const Word& rho,
                        TargetLanguage target) {
  Word sigma = project_word(p.arch, rho, agent);
  Dfa match = word_match_automaton(p.arch, sigma, agent);
  Nfa target_nfa =
      target == TargetLanguage::kGood ? p.spec.as_nfa() : bad_language_nfa(p);
  auto found = shortest_accepted(product_intersection(target_nfa, match.as_nfa()));
  if (!found) {
    throw InternalError("recover_agent_word: no projection-matching word in target");
  }
  return *found;
}

bool validate_witness(const Problem& p, const OctWitness& w) {
  if (w.per_agent.size() != p.arch.agent_count()) return false;
  const bool rho_in_l = accepts(p.plant, w.rho);
  const bool rho_in_k = accepts(p.spec, w.rho);
  if (w.branch == WitnessBranch::kGoodConfused) {
    if (!rho_in_k) return false;
  } else {
    if (!rho_in_l || rho_in_k) return false;
  }
  for (std::size_t i = 0; i < w.per_agent.size(); ++i) {
    const Word& rho_i = w.per_agent[i];
    const bool in_k = accepts(p.spec, rho_i);
    const bool in_bad = accepts(p.plant, rho_i) && !in_k;
    if (w.branch == WitnessBranch::kGoodConfused ? !in_bad : !in_k) return false;
    if (project_word(p.arch, w.rho, i) != project_word(p.arch, rho_i, i)) return false;
  }
  return true;
}

bool cantell(const Problem& p, std::size_t agent, const Word& rho) {
  std::vector<AgentView> views;
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    views.push_back(make_agent_view(p, i));
  }
  return cantell(p, views, agent, rho);
}

bool cantell(const Problem& p, const std::vector<AgentView>& views, std::size_t agent,
             const Word& rho) {
  if (agent >= p.arch.agent_count()) throw InputError("agent index out of range");
  if (!accepts(p.plant, rho)) {
    throw InputError("cantell: the word is not in the plant language");
  }
  const Word sigma = project_word(p.arch, rho, agent);
  if (accepts(p.spec, rho)) return !accepts(views[agent].bad_proj, sigma);
  return !accepts(views[agent].spec_proj, sigma);
}

namespace {

constexpr std::uint32_t kInf = 0xffffffffu;

/// Unit-cost distance from every node to an accepting node, over an explicit
/// forward edge list. kInf where acceptance is unreachable.
std::vector<std::uint32_t> dist_to_accept(std::size_t node_count,
                                          const std::vector<std::vector<StateId>>& fwd,
                                          const std::vector<bool>& accepting) {
  std::vector<std::vector<StateId>> rev(node_count);
  for (std::size_t q = 0; q < node_count; ++q) {
    for (StateId t : fwd[q]) rev[t].push_back(static_cast<StateId>(q));
  }
  std::vector<std::uint32_t> dist(node_count, kInf);
  std::vector<StateId> queue;
  for (std::size_t q = 0; q < node_count; ++q) {
    if (accepting[q]) {
      dist[q] = 0;
      queue.push_back(static_cast<StateId>(q));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    StateId q = queue[head];
    for (StateId s : rev[q]) {
      if (dist[s] == kInf) {
        dist[s] = dist[q] + 1;
        queue.push_back(s);
      }
    }
  }
  return dist;
}

/// Shortlex enumeration of the accepted words of a deterministic transition
/// structure, pruned by distance to acceptance. Calls `sink` for every
/// accepted word; a true return stops the walk.
template <typename Sink>
void for_each_accepted(StateId start, std::size_t sigma,
                       const std::vector<std::vector<StateId>>& fwd,
                       const std::vector<bool>& accepting,
                       const std::vector<std::uint32_t>& dist, std::size_t max_len,
                       Sink&& sink) {
  struct Entry {
    StateId node;
    Word word;
  };
  std::vector<Entry> frontier;
  if (dist[start] != kInf && dist[start] <= max_len) frontier.push_back({start, {}});
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    for (const Entry& e : frontier) {
      if (accepting[e.node] && sink(e.word)) return;
    }
    if (len == max_len) break;
    std::vector<Entry> next;
    const std::size_t budget = max_len - len - 1;
    for (const Entry& e : frontier) {
      for (Symbol s = 0; s < sigma; ++s) {
        StateId t = fwd[e.node][s];
        if (dist[t] != kInf && dist[t] <= budget) {
          Word w = e.word;
          w.push_back(s);
          next.push_back({t, std::move(w)});
        }
      }
    }
    frontier = std::move(next);
  }
}

Word projection_key(const Problem& p, const Word& w) {
  Word key;
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    Word proj = project_word(p.arch, w, i);
    key.insert(key.end(), proj.begin(), proj.end());
    key.push_back(kEpsilon);  // separator
  }
  return key;
}

}  // namespace

JoResult check_jo_bounded(const Problem& p, std::size_t max_len) {
  const std::size_t sigma = p.arch.global().size();
  const StateId np = p.plant.state_count();
  const StateId ns = p.spec.state_count();

  // Bad side: pairs (plant state, spec state), accepting where only the
  // plant accepts.
  const std::size_t pair_count = static_cast<std::size_t>(np) * ns;
  std::vector<std::vector<StateId>> bad_fwd(pair_count, std::vector<StateId>(sigma));
  std::vector<bool> bad_acc(pair_count, false);
  for (StateId qp = 0; qp < np; ++qp) {
    for (StateId qs = 0; qs < ns; ++qs) {
      std::size_t id = static_cast<std::size_t>(qp) * ns + qs;
      bad_acc[id] = p.plant.is_accepting(qp) && !p.spec.is_accepting(qs);
      for (Symbol s = 0; s < sigma; ++s) {
        bad_fwd[id][s] = static_cast<StateId>(
            static_cast<std::size_t>(p.plant.step(qp, s)) * ns + p.spec.step(qs, s));
      }
    }
  }
  const StateId bad_start =
      static_cast<StateId>(static_cast<std::size_t>(p.plant.initial()) * ns +
                           p.spec.initial());
  auto bad_dist = dist_to_accept(pair_count, bad_fwd, bad_acc);

  // Index the bad words by their projection tuple; shortlex enumeration makes
  // the first entry per tuple the least.
  std::map<Word, Word> first_bad;
  for_each_accepted(bad_start, sigma, bad_fwd, bad_acc, bad_dist, max_len,
                    [&](const Word& w) {
                      first_bad.emplace(projection_key(p, w), w);
                      return false;
                    });

  JoResult result;
  result.searched_to = max_len;
  if (first_bad.empty()) return result;

  // Good side: walk the specification automaton.
  std::vector<std::vector<StateId>> good_fwd(ns, std::vector<StateId>(sigma));
  std::vector<bool> good_acc(ns, false);
  for (StateId q = 0; q < ns; ++q) {
    good_acc[q] = p.spec.is_accepting(q);
    for (Symbol s = 0; s < sigma; ++s) good_fwd[q][s] = p.spec.step(q, s);
  }
  auto good_dist = dist_to_accept(ns, good_fwd, good_acc);

  for_each_accepted(p.spec.initial(), sigma, good_fwd, good_acc, good_dist, max_len,
                    [&](const Word& w) {
                      auto it = first_bad.find(projection_key(p, w));
                      if (it == first_bad.end()) return false;
                      result.counterexample = {w, it->second};
                      return true;
                    });
  return result;
}

}  // namespace oct
