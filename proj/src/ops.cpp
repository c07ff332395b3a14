#include "oct/ops.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <utility>

#include "oct/errors.hpp"

namespace oct {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

void check_letters(const Alphabet& alphabet, const Word& w) {
  for (Symbol s : w) {
    if (s >= alphabet.size()) throw InputError("letter not in alphabet");
  }
}

}  // namespace

bool accepts(const Nfa& a, const Word& w) {
  check_letters(a.alphabet(), w);
  std::vector<StateId> cur = a.eps_closure(a.initial());
  for (Symbol s : w) {
    if (cur.empty()) return false;
    cur = a.eps_closure(a.step(cur, s));
  }
  return a.any_accepting(cur);
}

bool accepts(const Dfa& a, const Word& w) { return a.is_accepting(a.run(w)); }

Dfa determinize(const Nfa& a) {
  const std::size_t sigma = a.alphabet().size();
  std::map<std::vector<StateId>, StateId> subset_id;
  std::vector<std::vector<StateId>> subsets;
  std::vector<StateId> table;
  std::vector<StateId> accepting;

  auto intern = [&](std::vector<StateId> subset) {
    auto [it, inserted] = subset_id.emplace(std::move(subset), subsets.size());
    if (inserted) subsets.push_back(it->first);
    return it->second;
  };

  StateId start = intern(a.eps_closure(a.initial()));
  for (StateId q = 0; q < subsets.size(); ++q) {
    // subsets grows while we scan it; index-based BFS keeps discovery order
    if (a.any_accepting(subsets[q])) accepting.push_back(q);
    for (Symbol s = 0; s < sigma; ++s) {
      table.push_back(intern(a.eps_closure(a.step(subsets[q], s))));
    }
  }
  return Dfa(a.alphabet(), static_cast<StateId>(subsets.size()), start,
             std::move(accepting), std::move(table));
}

Dfa complete(const Nfa& a) {
  const std::size_t sigma = a.alphabet().size();
  if (a.initial().size() > 1) {
    throw StructuralError("deterministic automaton expected: several initial states");
  }
  if (a.state_count() == 0 || a.initial().empty()) {
    // No runs at all: the one-state empty-language automaton.
    return Dfa(a.alphabet(), 1, 0, {}, std::vector<StateId>(sigma, 0));
  }

  const StateId n = a.state_count();
  const StateId sink = n;
  std::vector<StateId> table(static_cast<std::size_t>(n + 1) * sigma, sink);
  bool used_sink = false;
  std::vector<bool> defined(static_cast<std::size_t>(n) * sigma, false);
  for (const Transition& t : a.transitions()) {
    if (t.label == kEpsilon) {
      throw StructuralError("deterministic automaton expected: epsilon transition");
    }
    std::size_t cell = static_cast<std::size_t>(t.src) * sigma + t.label;
    if (defined[cell]) {
      throw StructuralError("deterministic automaton expected: duplicate transition on '" +
                            a.alphabet().letter(t.label) + "' from state " +
                            std::to_string(t.src));
    }
    defined[cell] = true;
    table[static_cast<std::size_t>(t.src) * sigma + t.label] = t.tgt;
  }
  for (StateId q = 0; q < n; ++q) {
    for (Symbol s = 0; s < sigma; ++s) {
      if (!defined[static_cast<std::size_t>(q) * sigma + s]) used_sink = true;
    }
  }
  if (!used_sink) {
    table.resize(static_cast<std::size_t>(n) * sigma);
    return Dfa(a.alphabet(), n, a.initial()[0], a.accepting(), std::move(table));
  }
  return Dfa(a.alphabet(), n + 1, a.initial()[0], a.accepting(), std::move(table));
}

Dfa complement(const Dfa& a) {
  std::vector<StateId> accepting;
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (!a.is_accepting(q)) accepting.push_back(q);
  }
  return Dfa(a.alphabet(), a.state_count(), a.initial(), std::move(accepting), a.table());
}

Nfa product_intersection(const Nfa& a, const Nfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw InputError("product_intersection: alphabets differ");
  }
  std::map<std::pair<StateId, StateId>, StateId> pair_id;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<Transition> trans;
  std::vector<StateId> initial;
  std::vector<StateId> accepting;

  auto intern = [&](StateId qa, StateId qb) {
    auto [it, inserted] = pair_id.emplace(std::make_pair(qa, qb), pairs.size());
    if (inserted) pairs.push_back(it->first);
    return it->second;
  };

  for (StateId qa : a.initial()) {
    for (StateId qb : b.initial()) initial.push_back(intern(qa, qb));
  }
  for (StateId id = 0; id < pairs.size(); ++id) {
    auto [qa, qb] = pairs[id];
    if (a.is_accepting(qa) && b.is_accepting(qb)) accepting.push_back(id);
    for (const Transition& ta : a.out(qa)) {
      if (ta.label == kEpsilon) {
        trans.push_back({id, kEpsilon, intern(ta.tgt, qb)});
        continue;
      }
      for (const Transition& tb : b.out(qb)) {
        if (tb.label == ta.label) trans.push_back({id, ta.label, intern(ta.tgt, tb.tgt)});
      }
    }
    for (const Transition& tb : b.out(qb)) {
      if (tb.label == kEpsilon) trans.push_back({id, kEpsilon, intern(qa, tb.tgt)});
    }
  }
  return Nfa(a.alphabet(), static_cast<StateId>(pairs.size()), std::move(initial),
             std::move(accepting), std::move(trans));
}

bool is_empty(const Nfa& a) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<StateId> stack;
  for (StateId q : a.initial()) {
    seen[q] = true;
    stack.push_back(q);
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    if (a.is_accepting(q)) return false;
    for (const Transition& t : a.out(q)) {
      if (!seen[t.tgt]) {
        seen[t.tgt] = true;
        stack.push_back(t.tgt);
      }
    }
  }
  return true;
}

std::optional<Word> shortest_accepted(const Nfa& a) {
  const StateId n = a.state_count();
  if (n == 0) return std::nullopt;

  // Letters remaining to acceptance from each state: 0-1 BFS on the reversed
  // automaton (epsilon costs nothing).
  std::vector<std::vector<std::pair<Symbol, StateId>>> rev(n);
  for (const Transition& t : a.transitions()) rev[t.tgt].push_back({t.label, t.src});

  std::vector<std::uint32_t> dist(n, kInf);
  std::deque<StateId> dq;
  for (StateId q : a.accepting()) {
    dist[q] = 0;
    dq.push_back(q);
  }
  while (!dq.empty()) {
    StateId q = dq.front();
    dq.pop_front();
    for (auto [label, src] : rev[q]) {
      std::uint32_t cost = (label == kEpsilon) ? 0 : 1;
      if (dist[q] != kInf && dist[q] + cost < dist[src]) {
        dist[src] = dist[q] + cost;
        if (cost == 0) {
          dq.push_front(src);
        } else {
          dq.push_back(src);
        }
      }
    }
  }

  auto min_dist = [&](const std::vector<StateId>& states) {
    std::uint32_t best = kInf;
    for (StateId q : states) best = std::min(best, dist[q]);
    return best;
  };

  std::vector<StateId> front = a.eps_closure(a.initial());
  const std::uint32_t total = min_dist(front);
  if (total == kInf) return std::nullopt;

  // Greedy forward walk: at each position take the least letter that keeps a
  // state with exactly the remaining distance alive. Yields the
  // lexicographically least among the shortest accepted words.
  Word w;
  for (std::uint32_t remaining = total; remaining > 0; --remaining) {
    bool advanced = false;
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      std::vector<StateId> next = a.eps_closure(a.step(front, s));
      if (min_dist(next) == remaining - 1) {
        w.push_back(s);
        front = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InternalError("shortest_accepted: distance invariant broken");
  }
  return w;
}

Inclusion is_subset(const Nfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("is_subset: alphabets differ");
  auto cex = shortest_accepted(product_intersection(a, complement(b).as_nfa()));
  if (cex) return {false, std::move(cex)};
  return {true, std::nullopt};
}

}  // namespace oct
