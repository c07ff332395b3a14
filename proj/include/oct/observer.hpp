#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oct/oct_check.hpp"
#include "oct/problem.hpp"

namespace oct {

/// Three-valued observation outcome: the behavior was good (in K), bad
/// (in L-K), or cannot be told from this agent's observation.
enum class Verdict { kYes, kNo, kUnknown };

std::string to_string(Verdict v);

/// A finite-state observer: a complete Dfa over the agent's alphabet whose
/// states carry verdict labels. The machine's accepting set is the set of
/// Y-labeled states.
struct Observer {
  std::size_t agent;
  Dfa machine;                  // over the agent's alphabet
  std::vector<Verdict> labels;  // one per machine state

  bool operator==(const Observer&) const = default;
};

/// Builds agent i's observer as the synchronous product of a complete Dfa
/// for Pi(K) and one for Pi(L-K); a product state is labeled Y when only the
/// first factor accepts, N when only the second does, U otherwise. Allowed
/// whether or not the condition holds (observers stay sound either way).
Observer synth_observer(const Problem& p, std::size_t agent);

/// The label of the state reached on sigma (a word over the agent alphabet).
Verdict observe(const Observer& o, const Word& sigma);

struct DecentralizedRun {
  Verdict overall;
  std::vector<Verdict> per_agent;
};

/// Feeds each agent its projection of rho (a word of L) and aggregates:
/// any Y makes the overall verdict Y, any N makes it N, otherwise U.
/// A simultaneous Y and N raises InternalError.
DecentralizedRun run_decentralized(const Problem& p, const Word& rho);
DecentralizedRun run_decentralized(const Problem& p, const std::vector<Observer>& observers,
                                   const Word& rho);

struct AltoctReport {
  std::size_t max_len = 0;
  std::size_t words_checked = 0;  // words of L enumerated

  struct SoundnessViolation {
    Word rho;
    std::size_t agent;
    Verdict verdict;  // the wrong Y or N

    bool operator==(const SoundnessViolation&) const = default;
  };

  /// An agent announced Y on a bad word or N on a good one.
  std::vector<SoundnessViolation> soundness;
  /// Words of L on which no agent gives the correct non-U verdict.
  std::vector<Word> completeness;

  bool clean() const { return soundness.empty() && completeness.empty(); }
};

/// Checks both halves of the functional condition over every word of L up to
/// max_len: no observer may lie (soundness) and some observer must tell
/// (completeness).
AltoctReport verify_altoct(const Problem& p, std::size_t max_len);

}  // namespace oct
