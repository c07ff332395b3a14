#include "oct/observer.hpp"

#include <map>
#include <utility>

#include "oct/errors.hpp"
#include "oct/projection.hpp"

namespace oct {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "Y";
    case Verdict::kNo: return "N";
    case Verdict::kUnknown: return "U";
  }
  throw InternalError("unreachable verdict");
}

Observer synth_observer(const Problem& p, std::size_t agent) {
  AgentView view = make_agent_view(p, agent);
  const Dfa& good = view.spec_proj;
  const Dfa& bad = view.bad_proj;
  const std::size_t sigma = p.arch.agent(agent).size();

  // Synchronous product of the two complete DFAs, reachable pairs only,
  // discovered in BFS order.
  std::map<std::pair<StateId, StateId>, StateId> pair_id;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](StateId qg, StateId qb) {
    auto [it, inserted] = pair_id.emplace(std::make_pair(qg, qb), pairs.size());
    if (inserted) pairs.push_back(it->first);
    return it->second;
  };

  std::vector<StateId> table;
  std::vector<Verdict> labels;
  std::vector<StateId> accepting;
  intern(good.initial(), bad.initial());
  for (StateId id = 0; id < pairs.size(); ++id) {
    auto [qg, qb] = pairs[id];
    const bool g = good.is_accepting(qg);
    const bool b = bad.is_accepting(qb);
    Verdict v = Verdict::kUnknown;
    if (g && !b) v = Verdict::kYes;
    if (!g && b) v = Verdict::kNo;
    labels.push_back(v);
    if (v == Verdict::kYes) accepting.push_back(id);
    for (Symbol s = 0; s < sigma; ++s) {
      table.push_back(intern(good.step(qg, s), bad.step(qb, s)));
    }
  }
  Dfa machine(p.arch.agent(agent), static_cast<StateId>(pairs.size()), 0,
              std::move(accepting), std::move(table));
  return Observer{agent, std::move(machine), std::move(labels)};
}

Verdict observe(const Observer& o, const Word& sigma) {
  return o.labels[o.machine.run(sigma)];
}

DecentralizedRun run_decentralized(const Problem& p, const Word& rho) {
  std::vector<Observer> observers;
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    observers.push_back(synth_observer(p, i));
  }
  return run_decentralized(p, observers, rho);
}

DecentralizedRun run_decentralized(const Problem& p, const std::vector<Observer>& observers,
                                   const Word& rho) {
  if (!accepts(p.plant, rho)) {
    throw InputError("run_decentralized: the word is not in the plant language");
  }
  DecentralizedRun run;
  bool any_yes = false;
  bool any_no = false;
  for (std::size_t i = 0; i < observers.size(); ++i) {
    Verdict v = observe(observers[i], project_word(p.arch, rho, i));
    run.per_agent.push_back(v);
    any_yes = any_yes || v == Verdict::kYes;
    any_no = any_no || v == Verdict::kNo;
  }
  if (any_yes && any_no) {
    throw InternalError("observers disagree: simultaneous Y and N on one run");
  }
  run.overall = any_yes ? Verdict::kYes : any_no ? Verdict::kNo : Verdict::kUnknown;
  return run;
}

AltoctReport verify_altoct(const Problem& p, std::size_t max_len) {
  std::vector<Observer> observers;
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    observers.push_back(synth_observer(p, i));
  }

  AltoctReport report;
  report.max_len = max_len;

  // Shortlex walk over all global words, filtered by plant membership.
  const std::size_t sigma = p.arch.global().size();
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    for (const Word& rho : frontier) {
      if (!accepts(p.plant, rho)) continue;
      report.words_checked++;
      const bool in_k = accepts(p.spec, rho);
      bool told = false;
      for (std::size_t i = 0; i < observers.size(); ++i) {
        Verdict v = observe(observers[i], project_word(p.arch, rho, i));
        if (v == Verdict::kUnknown) continue;
        if (v == Verdict::kYes ? !in_k : in_k) {
          report.soundness.push_back({rho, i, v});
        } else {
          told = true;
        }
      }
      if (!told) report.completeness.push_back(rho);
    }
    if (len == max_len || sigma == 0) break;
    std::vector<Word> next;
    next.reserve(frontier.size() * sigma);
    for (const Word& w : frontier) {
      for (Symbol s = 0; s < sigma; ++s) {
        Word ext = w;
        ext.push_back(s);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return report;
}

}  // namespace oct
