#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "oct/observer.hpp"
#include "oct/oct_check.hpp"
#include "oct/problem.hpp"

// Independent reference implementations of the defining quantifier formulas,
// used as ground truth against the inclusion-based checker. The only
// machinery shared with the main build is stepping the plant and
// specification DFAs (word membership); none of the checker's constructions
// (projection/inverse-projection automata, subset construction, products,
// inclusion tests) are used here.
namespace oct::oracle {

/// Exhaustive-search work cap; exceeding it raises OracleCapacityError
/// ("instance too large for oracle").
inline constexpr std::uint64_t kWorkCap = 10'000'000;

/// All words of length <= max_len in shortlex order. Refuses to materialize
/// more than kWorkCap words.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

/// Exact evaluation of Definition-2 cantell for rho in L, by exhaustive
/// search over the configurations reachable under words sharing rho's
/// agent-i observation.
bool oracle_cantell(const Problem& p, std::size_t agent, const Word& rho);

struct OracleOctResult {
  bool holds;
  std::optional<OctWitness> witness;  // present iff !holds; shortlex-least rho
};

/// Exact evaluation of the defining forall-exists formula. When the
/// condition fails, returns the shortlex-least word of L that no agent can
/// tell, with shortlex-least per-agent confusing words.
OracleOctResult oracle_check_oct(const Problem& p);

/// The three-case local decision function evaluated directly: Y when some
/// good word and no bad word shares the observation sigma, N symmetrically,
/// U otherwise.
Verdict oracle_f(const Problem& p, std::size_t agent, const Word& sigma);

/// Shortlex-least word of the target language whose agent-i projection is
/// sigma; nullopt when none exists.
std::optional<Word> find_confuser(const Problem& p, std::size_t agent, const Word& sigma,
                                  TargetLanguage target);

/// Whether any word of the target language projects to sigma at agent i.
bool sigma_realizable(const Problem& p, std::size_t agent, const Word& sigma,
                      TargetLanguage target);

}  // namespace oct::oracle
