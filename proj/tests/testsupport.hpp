#pragma once

// Shared helpers for the test suite: compact automaton builders, fixture
// loading, brute-force word enumeration, and the random instance generators
// used by the property and acceptance suites.

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oct/format.hpp"
#include "oct/ops.hpp"
#include "oct/problem.hpp"

namespace testsupport {

using oct::Alphabet;
using oct::Dfa;
using oct::Nfa;
using oct::Problem;
using oct::StateId;
using oct::Symbol;
using oct::Word;

struct TransSpec {
  StateId src;
  std::string letter;  // "eps" for epsilon
  StateId tgt;
};

inline Nfa mk_nfa(std::vector<std::string> letters, StateId states,
                  std::vector<StateId> initial, std::vector<StateId> accepting,
                  std::vector<TransSpec> transitions) {
  Alphabet sigma(std::move(letters));
  std::vector<oct::Transition> trans;
  for (const TransSpec& t : transitions) {
    Symbol label = t.letter == "eps" ? oct::kEpsilon : *sigma.index_of(t.letter);
    trans.push_back({t.src, label, t.tgt});
  }
  return Nfa(std::move(sigma), states, std::move(initial), std::move(accepting),
             std::move(trans));
}

inline Dfa mk_dfa(std::vector<std::string> letters, StateId states, StateId initial,
                  std::vector<StateId> accepting, std::vector<TransSpec> transitions) {
  return oct::complete(
      mk_nfa(std::move(letters), states, {initial}, std::move(accepting),
             std::move(transitions)));
}

inline Word w(const Alphabet& sigma, std::string_view text) {
  return oct::parse_word(sigma, text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

#ifdef OCT_FIXTURES_DIR
inline Problem load_fixture(const std::string& name) {
  return oct::parse_problem(read_file(std::string(OCT_FIXTURES_DIR) + "/" + name));
}
#endif

/// All words of length <= max_len over an alphabet of the given size, in
/// shortlex order. Test-local enumeration, independent of the oracle module.
inline std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<Word> words{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len && alphabet_size > 0; ++len) {
    std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol s = 0; s < alphabet_size; ++s) {
        Word word = words[i];
        word.push_back(s);
        words.push_back(std::move(word));
      }
    }
    level_begin = level_end;
  }
  return words;
}

template <typename Acceptor>
std::set<Word> language_upto(const Acceptor& a, std::size_t max_len) {
  std::set<Word> out;
  for (const Word& word : all_words(a.alphabet().size(), max_len)) {
    if (oct::accepts(a, word)) out.insert(word);
  }
  return out;
}

inline std::vector<std::string> letter_pool(std::size_t n) {
  std::vector<std::string> pool{"a", "b", "c"};
  pool.resize(n);
  return pool;
}

/// A random NFA for the automata-core property tests: up to max_states
/// states, possibly with epsilon transitions, possibly with empty initial or
/// accepting sets (degenerate cases included on purpose).
inline Nfa random_nfa(std::mt19937& rng, StateId max_states, std::size_t alphabet_size,
                      bool with_epsilon = true) {
  StateId states = static_cast<StateId>(rng() % (max_states + 1));  // 0 allowed
  Alphabet sigma(letter_pool(alphabet_size));
  std::vector<StateId> initial;
  std::vector<StateId> accepting;
  std::vector<oct::Transition> trans;
  for (StateId q = 0; q < states; ++q) {
    if (rng() % 3 == 0) initial.push_back(q);
    if (rng() % 3 == 0) accepting.push_back(q);
  }
  if (states > 0 && initial.empty() && rng() % 4 != 0) {
    initial.push_back(static_cast<StateId>(rng() % states));
  }
  for (StateId src = 0; src < states; ++src) {
    for (Symbol s = 0; s < alphabet_size; ++s) {
      for (StateId tgt = 0; tgt < states; ++tgt) {
        if (rng() % 100 < 18) trans.push_back({src, s, tgt});
      }
    }
    if (with_epsilon) {
      for (StateId tgt = 0; tgt < states; ++tgt) {
        if (rng() % 100 < 8) trans.push_back({src, oct::kEpsilon, tgt});
      }
    }
  }
  return Nfa(std::move(sigma), states, std::move(initial), std::move(accepting),
             std::move(trans));
}

inline Dfa random_total_dfa(std::mt19937& rng, StateId states, const Alphabet& sigma) {
  std::vector<StateId> table;
  for (StateId q = 0; q < states; ++q) {
    for (Symbol s = 0; s < sigma.size(); ++s) {
      (void)s;
      (void)q;
      table.push_back(static_cast<StateId>(rng() % states));
    }
  }
  std::vector<StateId> accepting;
  for (StateId q = 0; q < states; ++q) {
    if (rng() % 2 == 0) accepting.push_back(q);
  }
  return Dfa(sigma, states, 0, std::move(accepting), std::move(table));
}

/// The random corpus recipe shared by the property and acceptance suites:
/// plant and spec DFAs of at most 4 states, an alphabet of 2 or 3 letters,
/// two agents with random (possibly empty, possibly full) subalphabets, and
/// K subset-of L by construction or by rejection sampling.
inline Problem random_problem(std::mt19937& rng) {
  const std::size_t alpha = 2 + rng() % 2;
  Alphabet sigma(letter_pool(alpha));
  const StateId plant_states = static_cast<StateId>(1 + rng() % 4);
  Dfa plant = random_total_dfa(rng, plant_states, sigma);

  std::optional<Dfa> spec;
  if (rng() % 2 == 0) {
    for (int attempt = 0; attempt < 40 && !spec; ++attempt) {
      Dfa candidate = random_total_dfa(rng, static_cast<StateId>(1 + rng() % 4), sigma);
      if (oct::is_subset(candidate.as_nfa(), plant).holds) spec = std::move(candidate);
    }
  }
  if (!spec) {
    // Same machine, accepting states thinned: K subset-of L structurally.
    std::vector<StateId> accepting;
    for (StateId q : plant.accepting()) {
      if (rng() % 3 != 0) accepting.push_back(q);
    }
    spec = Dfa(sigma, plant.state_count(), plant.initial(), std::move(accepting),
               plant.table());
  }

  std::vector<Alphabet> agents;
  std::vector<std::string> names;
  for (int i = 0; i < 2; ++i) {
    std::vector<std::string> letters;
    const std::uint32_t mode = rng() % 10;
    if (mode == 0) {
      // blind agent
    } else if (mode == 1) {
      letters = sigma.letters();
    } else {
      for (const std::string& l : sigma.letters()) {
        if (rng() % 2 == 0) letters.push_back(l);
      }
    }
    agents.emplace_back(std::move(letters));
    names.push_back(std::to_string(i + 1));
  }
  return oct::make_problem(std::move(plant), std::move(*spec),
                           oct::ObservationArchitecture(sigma, std::move(agents)),
                           std::move(names));
}

}  // namespace testsupport
