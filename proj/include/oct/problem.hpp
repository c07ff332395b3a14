#pragma once

#include <string>
#include <vector>

#include "oct/dfa.hpp"
#include "oct/projection.hpp"

namespace oct {

/// A checking instance: the plant automaton (language L), the specification
/// automaton (K, the good behaviors), and the observation architecture.
/// Both automata are complete and share the architecture's global alphabet;
/// K is a subset of L (validated on construction).
struct Problem {
  Dfa plant;
  Dfa spec;
  ObservationArchitecture arch;
  std::vector<std::string> agent_names;  // declaration order; parallel to arch.agents()

  bool operator==(const Problem& other) const = default;
};

/// Validates and assembles a Problem. Raises InputError when alphabets
/// disagree or when K is not a subset of L (the message names a witness
/// word of K - L).
Problem make_problem(Dfa plant, Dfa spec, ObservationArchitecture arch,
                     std::vector<std::string> agent_names);

}  // namespace oct
