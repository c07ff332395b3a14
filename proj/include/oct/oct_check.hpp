#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oct/ops.hpp"
#include "oct/problem.hpp"

namespace oct {

/// The two shapes a violation of the condition can take: a good word all
/// agents confuse with bad words, or a bad word all agents confuse with good
/// words.
enum class WitnessBranch {
  kGoodConfused,  // rho in K, every rho_i in L-K
  kBadConfused,   // rho in L-K, every rho_i in K
};

std::string to_string(WitnessBranch b);

struct OctWitness {
  WitnessBranch branch;
  Word rho;                     // over the global alphabet
  std::vector<Word> per_agent;  // rho_1..rho_n, projection-matching rho

  bool operator==(const OctWitness&) const = default;
};

struct OctResult {
  bool holds;
  std::optional<OctWitness> witness;  // present iff !holds
  std::size_t a1_states = 0;          // size of the first intersection automaton
  std::size_t a2_states = 0;          // size of the second
};

struct JoResult {
  /// (rho in K, rho' in L-K) agreeing on every agent's projection.
  std::optional<std::pair<Word, Word>> counterexample;
  std::size_t searched_to = 0;
};

/// Which language a recovered per-agent word must belong to.
enum class TargetLanguage {
  kGood,  // the specification language K
  kBad,   // L - K
};

/// Decides the condition via the two language inclusions
///   A1 = (intersection over i of Pi^-1(Pi(K)))   and L, checked against K
///   A2 = (intersection over i of Pi^-1(Pi(L-K))) and L, checked against L-K
/// in that order. On failure the witness carries the shortest
/// lexicographically-least violating word of the first failed inclusion and
/// independently shortest per-agent confusing words.
OctResult check_oct(const Problem& p);

/// Shortest lexicographically-least word of the target language whose agent-i
/// projection equals that of rho. Raises InternalError when no such word
/// exists (the callers only ask on inclusion violations, where one must).
Word recover_agent_word(const Problem& p, std::size_t agent, const Word& rho,
                        TargetLanguage target);

/// True iff the witness satisfies its branch's membership requirements and
/// matches rho in every agent's projection.
bool validate_witness(const Problem& p, const OctWitness& w);

/// Per-agent projected languages of K and L-K, determinized. Shared by
/// cantell and observer synthesis.
struct AgentView {
  Dfa spec_proj;  // over agent alphabet, recognizes Pi(K)
  Dfa bad_proj;   // over agent alphabet, recognizes Pi(L-K)
};

AgentView make_agent_view(const Problem& p, std::size_t agent);

/// Recognizer of L-K as an Nfa (plant intersected with the complemented
/// specification).
Nfa bad_language_nfa(const Problem& p);

/// Exact per-word decision of Definition-2 cantell: agent i's observation of
/// rho is not shared by any oppositely-classified word. rho must be in L.
bool cantell(const Problem& p, std::size_t agent, const Word& rho);
bool cantell(const Problem& p, const std::vector<AgentView>& views, std::size_t agent,
             const Word& rho);

/// Bounded search for a joint-observability counterexample: a pair of words
/// of length <= max_len, one good and one bad, that agree on every agent's
/// projection. Returns the shortlex-least such rho (then shortlex-least
/// rho'), or none-up-to-bound. Not finding one is not a proof.
JoResult check_jo_bounded(const Problem& p, std::size_t max_len);

}  // namespace oct
