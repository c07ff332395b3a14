#include "oct/problem.hpp"

#include <utility>

#include "oct/errors.hpp"
#include "oct/ops.hpp"

namespace oct {

Problem make_problem(Dfa plant, Dfa spec, ObservationArchitecture arch,
                     std::vector<std::string> agent_names) {
  if (!(plant.alphabet() == arch.global())) {
    throw InputError("plant alphabet differs from the architecture's global alphabet");
  }
  if (!(spec.alphabet() == plant.alphabet())) {
    throw InputError("spec alphabet differs from the plant alphabet");
  }
  if (agent_names.size() != arch.agent_count()) {
    throw InputError("one name per agent is required");
  }
  Inclusion inc = is_subset(spec.as_nfa(), plant);
  if (!inc.holds) {
    throw InputError("K not a subset of L, witness: " +
                     format_word(plant.alphabet(), *inc.counterexample));
  }
  return Problem{std::move(plant), std::move(spec), std::move(arch),
                 std::move(agent_names)};
}

}  // namespace oct
