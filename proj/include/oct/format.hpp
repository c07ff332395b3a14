#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oct/observer.hpp"
#include "oct/problem.hpp"

namespace oct {

/// Parses a problem file:
///   # comment
///   [plant]            automaton section: alphabet:, states:, initial:,
///   ...                accepting:, trans: <src> <letter> <tgt>
///   [spec]
///   ...
///   [agent <name>] <letter> <letter> ...
/// Exactly one plant and one spec section, at least one agent line. Plant
/// and spec must be deterministic (they are completed on load). LF and CRLF
/// both accepted; '#' starts a comment anywhere on a line.
Problem parse_problem(std::string_view text);

/// Canonical rendering; parse(serialize(p)) == p.
std::string serialize_problem(const Problem& p);

/// Observer export: the automaton section lines plus one
/// "label: <state> <Y|N|U>" line per state.
std::string serialize_observer(const Observer& o);

/// Parses an observer export back into its machine and labels.
std::pair<Dfa, std::vector<Verdict>> parse_observer(std::string_view text);

}  // namespace oct
