#include "oct/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "oct/errors.hpp"

namespace oct::oracle {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

bool test_bit(const Bits& b, std::size_t i) {
  return (b[i / 64] >> (i % 64)) & 1;
}

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

/// Exhaustive search state over (plant state, spec state) pairs. A pair set
/// indexed by an observation sigma holds exactly the pairs reachable under
/// some word whose agent projection equals sigma. Work is metered; crossing
/// the cap aborts with "instance too large for oracle".
struct Workbench {
  const Problem& p;
  std::size_t ns;          // spec state count
  std::size_t pair_count;  // plant states x spec states
  Bits good_pairs;         // spec accepts: the word is in K
  Bits bad_pairs;          // plant accepts, spec rejects: the word is in L-K
  std::uint64_t work = 0;

  explicit Workbench(const Problem& problem)
      : p(problem),
        ns(problem.spec.state_count()),
        pair_count(static_cast<std::size_t>(problem.plant.state_count()) * ns) {
    charge(pair_count);
    good_pairs = make_bits(pair_count);
    bad_pairs = make_bits(pair_count);
    for (StateId qp = 0; qp < p.plant.state_count(); ++qp) {
      for (StateId qs = 0; qs < ns; ++qs) {
        std::size_t id = pair_index(qp, qs);
        if (p.spec.is_accepting(qs)) set_bit(good_pairs, id);
        if (p.plant.is_accepting(qp) && !p.spec.is_accepting(qs)) set_bit(bad_pairs, id);
      }
    }
  }

  std::size_t pair_index(StateId qp, StateId qs) const {
    return static_cast<std::size_t>(qp) * ns + qs;
  }

  std::size_t pair_step(std::size_t pair, Symbol g) const {
    StateId qp = static_cast<StateId>(pair / ns);
    StateId qs = static_cast<StateId>(pair % ns);
    return pair_index(p.plant.step(qp, g), p.spec.step(qs, g));
  }

  void charge(std::uint64_t units) {
    work += units;
    if (work > kWorkCap) {
      throw OracleCapacityError("instance too large for oracle");
    }
  }

  /// Saturates the set under steps on every letter agent i does not observe.
  Bits closure(Bits pairs, std::size_t agent) {
    std::vector<std::uint32_t> stack;
    for (std::size_t i = 0; i < pair_count; ++i) {
      if (test_bit(pairs, i)) stack.push_back(static_cast<std::uint32_t>(i));
    }
    const std::size_t sigma = p.arch.global().size();
    while (!stack.empty()) {
      std::size_t pair = stack.back();
      stack.pop_back();
      charge(sigma);
      for (Symbol g = 0; g < sigma; ++g) {
        if (p.arch.observes(agent, g)) continue;
        std::size_t next = pair_step(pair, g);
        if (!test_bit(pairs, next)) {
          set_bit(pairs, next);
          stack.push_back(static_cast<std::uint32_t>(next));
        }
      }
    }
    return pairs;
  }

  Bits step_visible(const Bits& pairs, Symbol g) {
    Bits next = make_bits(pair_count);
    for (std::size_t i = 0; i < pair_count; ++i) {
      if (test_bit(pairs, i)) {
        charge(1);
        set_bit(next, pair_step(i, g));
      }
    }
    return next;
  }

  Bits start_set(std::size_t agent) {
    Bits b = make_bits(pair_count);
    set_bit(b, pair_index(p.plant.initial(), p.spec.initial()));
    return closure(std::move(b), agent);
  }

  /// Pairs reachable under words whose agent projection equals sigma
  /// (a word over the agent alphabet).
  Bits reachable_under(std::size_t agent, const Word& sigma) {
    Bits cur = start_set(agent);
    for (Symbol s : sigma) {
      cur = closure(step_visible(cur, p.arch.to_global(agent, s)), agent);
    }
    return cur;
  }
};

Word oracle_project(const Problem& p, std::size_t agent, const Word& w) {
  Word out;
  for (Symbol s : w) {
    if (auto local = p.arch.to_agent(agent, s)) out.push_back(*local);
  }
  return out;
}

}  // namespace

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
  const std::size_t sigma = alphabet.size();
  if (sigma == 0) return {Word{}};
  std::uint64_t count = 1;  // epsilon
  std::uint64_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    layer *= sigma;
    count += layer;
    if (count > kWorkCap) {
      throw OracleCapacityError("instance too large for oracle");
    }
  }
  std::vector<Word> words;
  words.reserve(count);
  words.push_back(Word{});
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol s = 0; s < sigma; ++s) {
        Word w = words[i];
        w.push_back(s);
        words.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return words;
}

bool sigma_realizable(const Problem& p, std::size_t agent, const Word& sigma,
                      TargetLanguage target) {
  Workbench wb(p);
  Bits reached = wb.reachable_under(agent, sigma);
  return intersects(reached,
                    target == TargetLanguage::kGood ? wb.good_pairs : wb.bad_pairs);
}

bool oracle_cantell(const Problem& p, std::size_t agent, const Word& rho) {
  if (agent >= p.arch.agent_count()) throw InputError("agent index out of range");
  if (!accepts(p.plant, rho)) {
    throw InputError("oracle_cantell: the word is not in the plant language");
  }
  const bool in_k = accepts(p.spec, rho);
  const Word sigma = oracle_project(p, agent, rho);
  return !sigma_realizable(p, agent, sigma,
                           in_k ? TargetLanguage::kBad : TargetLanguage::kGood);
}

Verdict oracle_f(const Problem& p, std::size_t agent, const Word& sigma) {
  Workbench wb(p);
  Bits reached = wb.reachable_under(agent, sigma);
  const bool has_good = intersects(reached, wb.good_pairs);
  const bool has_bad = intersects(reached, wb.bad_pairs);
  if (has_good && !has_bad) return Verdict::kYes;
  if (has_bad && !has_good) return Verdict::kNo;
  return Verdict::kUnknown;
}

std::optional<Word> find_confuser(const Problem& p, std::size_t agent, const Word& sigma,
                                  TargetLanguage target) {
  Workbench wb(p);
  const std::size_t sigma_len = sigma.size();
  const std::size_t node_count = wb.pair_count * (sigma_len + 1);
  const std::uint32_t kUnseen = 0xffffffffu;

  auto accepts_target = [&](std::size_t pair) {
    return test_bit(target == TargetLanguage::kGood ? wb.good_pairs : wb.bad_pairs, pair);
  };

  // BFS over (pair, matched prefix of sigma); expanding letters in alphabet
  // order from a FIFO queue makes the first accepting node reached carry the
  // shortlex-least word.
  std::vector<std::uint32_t> parent(node_count, kUnseen);
  std::vector<Symbol> via(node_count, 0);
  std::vector<std::uint32_t> queue;
  auto node_of = [&](std::size_t pair, std::size_t pos) {
    return static_cast<std::uint32_t>(pos * wb.pair_count + pair);
  };

  const std::size_t start_pair = wb.pair_index(p.plant.initial(), p.spec.initial());
  std::uint32_t start = node_of(start_pair, 0);
  parent[start] = start;
  queue.push_back(start);

  auto reconstruct = [&](std::uint32_t node) {
    Word w;
    while (parent[node] != node) {
      w.push_back(via[node]);
      node = parent[node];
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  if (sigma_len == 0 && accepts_target(start_pair)) return Word{};

  const std::size_t nsym = p.arch.global().size();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t cur = queue[head];
    const std::size_t pos = cur / wb.pair_count;
    const std::size_t pair = cur % wb.pair_count;
    wb.charge(nsym);
    for (Symbol g = 0; g < nsym; ++g) {
      std::size_t next_pos;
      if (auto local = p.arch.to_agent(agent, g)) {
        if (pos >= sigma_len || sigma[pos] != *local) continue;  // projection breaks
        next_pos = pos + 1;
      } else {
        next_pos = pos;
      }
      std::size_t next_pair = wb.pair_step(pair, g);
      std::uint32_t next = node_of(next_pair, next_pos);
      if (parent[next] != kUnseen) continue;
      parent[next] = cur;
      via[next] = g;
      if (next_pos == sigma_len && accepts_target(next_pair)) return reconstruct(next);
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

OracleOctResult oracle_check_oct(const Problem& p) {
  Workbench wb(p);
  const std::size_t n = p.arch.agent_count();
  const std::size_t nsym = p.arch.global().size();

  // A configuration is everything that decides whether a word violates the
  // condition: its plant and spec states plus, per agent, the pair set of
  // its observation. Shortlex BFS over configurations, first violating
  // configuration wins.
  struct Node {
    StateId qp;
    StateId qs;
    std::vector<Bits> sets;
    std::uint32_t parent;
    Symbol via;
  };
  std::vector<Node> nodes;
  std::map<std::vector<std::uint64_t>, std::uint32_t> seen;

  auto key_of = [&](StateId qp, StateId qs, const std::vector<Bits>& sets) {
    std::vector<std::uint64_t> key{qp, qs};
    for (const Bits& b : sets) key.insert(key.end(), b.begin(), b.end());
    return key;
  };

  auto violating = [&](const Node& node) {
    if (!p.plant.is_accepting(node.qp)) return false;  // not a word of L
    const Bits& wanted =
        p.spec.is_accepting(node.qs) ? wb.bad_pairs : wb.good_pairs;
    for (std::size_t i = 0; i < n; ++i) {
      if (!intersects(node.sets[i], wanted)) return false;
    }
    return true;
  };

  auto word_of = [&](std::uint32_t index) {
    Word w;
    while (nodes[index].parent != index) {
      w.push_back(nodes[index].via);
      index = nodes[index].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  auto make_witness = [&](std::uint32_t index) {
    Word rho = word_of(index);
    const bool in_k = p.spec.is_accepting(nodes[index].qs);
    OctWitness w{in_k ? WitnessBranch::kGoodConfused : WitnessBranch::kBadConfused,
                 std::move(rho),
                 {}};
    const TargetLanguage target = in_k ? TargetLanguage::kBad : TargetLanguage::kGood;
    for (std::size_t i = 0; i < n; ++i) {
      auto confuser = find_confuser(p, i, oracle_project(p, i, w.rho), target);
      if (!confuser) throw InternalError("oracle witness recovery found no confuser");
      w.per_agent.push_back(std::move(*confuser));
    }
    return w;
  };

  std::vector<Bits> start_sets;
  for (std::size_t i = 0; i < n; ++i) start_sets.push_back(wb.start_set(i));
  nodes.push_back(Node{p.plant.initial(), p.spec.initial(), std::move(start_sets), 0, 0});
  seen.emplace(key_of(nodes[0].qp, nodes[0].qs, nodes[0].sets), 0);

  for (std::uint32_t head = 0; head < nodes.size(); ++head) {
    if (violating(nodes[head])) return {false, make_witness(head)};
    for (Symbol g = 0; g < nsym; ++g) {
      wb.charge(n + 1);
      StateId qp = p.plant.step(nodes[head].qp, g);
      StateId qs = p.spec.step(nodes[head].qs, g);
      std::vector<Bits> sets;
      sets.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (p.arch.observes(i, g)) {
          sets.push_back(wb.closure(wb.step_visible(nodes[head].sets[i], g), i));
        } else {
          sets.push_back(nodes[head].sets[i]);
        }
      }
      auto key = key_of(qp, qs, sets);
      wb.charge(key.size());
      if (seen.emplace(std::move(key), static_cast<std::uint32_t>(nodes.size())).second) {
        nodes.push_back(Node{qp, qs, std::move(sets), head, g});
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace oct::oracle
