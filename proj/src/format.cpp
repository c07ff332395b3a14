#include "oct/format.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>

#include "oct/errors.hpp"
#include "oct/ops.hpp"

namespace oct {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

StateId parse_state_id(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                  [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line, "expected a state id, got '" + tok + "'");
  }
  unsigned long v = std::stoul(tok);
  if (v > 0xfffffffeUL) throw ParseError(line, "state id too large: " + tok);
  return static_cast<StateId>(v);
}

struct RawTransition {
  StateId src;
  std::string letter;
  StateId tgt;
  std::size_t line;
};

struct RawAutomaton {
  std::string section;  // for error messages
  std::optional<std::vector<std::string>> alphabet;
  std::optional<StateId> states;
  std::optional<std::vector<StateId>> initial;
  std::optional<std::vector<StateId>> accepting;
  std::vector<RawTransition> transitions;

  /// Consumes one "key: value" line; false when the key is unknown.
  bool consume(const std::string& key, const std::string& value, std::size_t line) {
    if (key == "alphabet") {
      if (alphabet) throw ParseError(line, "duplicate 'alphabet:' line");
      alphabet = split_tokens(value);
      return true;
    }
    if (key == "states") {
      if (states) throw ParseError(line, "duplicate 'states:' line");
      states = parse_state_id(value, line);
      return true;
    }
    if (key == "initial") {
      if (initial) throw ParseError(line, "duplicate 'initial:' line");
      initial.emplace();
      for (const std::string& tok : split_tokens(value)) {
        initial->push_back(parse_state_id(tok, line));
      }
      return true;
    }
    if (key == "accepting") {
      if (accepting) throw ParseError(line, "duplicate 'accepting:' line");
      accepting.emplace();
      for (const std::string& tok : split_tokens(value)) {
        accepting->push_back(parse_state_id(tok, line));
      }
      return true;
    }
    if (key == "trans") {
      auto toks = split_tokens(value);
      if (toks.size() != 3) {
        throw ParseError(line, "expected 'trans: <src> <letter> <tgt>'");
      }
      transitions.push_back({parse_state_id(toks[0], line), toks[1],
                             parse_state_id(toks[2], line), line});
      return true;
    }
    return false;
  }

  /// Validates and builds the (possibly partial, deterministic) automaton.
  Nfa build(bool require_alphabet_nonempty) const {
    if (!alphabet) throw ParseError(0, section + ": missing 'alphabet:' line");
    if (!states) throw ParseError(0, section + ": missing 'states:' line");
    if (!initial) throw ParseError(0, section + ": missing 'initial:' line");
    if (require_alphabet_nonempty && alphabet->empty()) {
      throw ParseError(0, section + ": the alphabet must not be empty");
    }
    Alphabet sigma(*alphabet);
    if (initial->size() != 1) {
      throw ParseError(0, section + ": exactly one initial state is required");
    }
    auto check_id = [&](StateId q, std::size_t line) {
      if (q >= *states) {
        throw ParseError(line, section + ": state id " + std::to_string(q) +
                                   " out of range (states: " + std::to_string(*states) +
                                   ")");
      }
    };
    check_id((*initial)[0], 0);
    std::vector<StateId> acc = accepting.value_or(std::vector<StateId>{});
    for (StateId q : acc) check_id(q, 0);
    std::vector<Transition> trans;
    for (const RawTransition& t : transitions) {
      check_id(t.src, t.line);
      check_id(t.tgt, t.line);
      if (t.letter == "eps") {
        throw ParseError(t.line, "epsilon labels are not allowed in problem files");
      }
      auto sym = sigma.index_of(t.letter);
      if (!sym) throw ParseError(t.line, "unknown letter: " + t.letter);
      trans.push_back({t.src, *sym, t.tgt});
    }
    return Nfa(std::move(sigma), *states, *initial, std::move(acc), std::move(trans));
  }
};

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view no_comment = raw.substr(0, raw.find('#'));
    std::string line = trim(no_comment);
    if (!line.empty()) out.push_back({number, std::move(line)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  std::optional<RawAutomaton> plant;
  std::optional<RawAutomaton> spec;
  std::vector<std::pair<std::string, std::vector<std::string>>> agents;  // name, letters
  RawAutomaton* current = nullptr;

  for (const Line& line : significant_lines(text)) {
    if (line.text.front() == '[') {
      std::size_t close = line.text.find(']');
      if (close == std::string::npos) {
        throw ParseError(line.number, "unterminated section header");
      }
      std::string header = trim(line.text.substr(1, close - 1));
      std::string rest = trim(line.text.substr(close + 1));
      if (header == "plant" || header == "spec") {
        if (!rest.empty()) {
          throw ParseError(line.number, "unexpected text after [" + header + "]");
        }
        auto& slot = header == "plant" ? plant : spec;
        if (slot) throw ParseError(line.number, "duplicate [" + header + "] section");
        slot.emplace();
        slot->section = header;
        current = &*slot;
        continue;
      }
      if (header.rfind("agent", 0) == 0) {
        std::string name = trim(header.substr(5));
        if (name.empty()) throw ParseError(line.number, "agent section needs a name");
        for (const auto& [existing, letters] : agents) {
          if (existing == name) {
            throw ParseError(line.number, "duplicate agent name: " + name);
          }
        }
        agents.emplace_back(name, split_tokens(rest));
        current = nullptr;
        continue;
      }
      throw ParseError(line.number, "unknown section [" + header + "]");
    }

    std::size_t colon = line.text.find(':');
    if (colon == std::string::npos) {
      throw ParseError(line.number, "expected 'key: value' or a section header");
    }
    std::string key = trim(line.text.substr(0, colon));
    std::string value = trim(line.text.substr(colon + 1));
    if (current == nullptr) {
      throw ParseError(line.number, "automaton line outside [plant] or [spec]");
    }
    if (!current->consume(key, value, line.number)) {
      throw ParseError(line.number, "unknown key '" + key + "'");
    }
  }

  if (!plant) throw ParseError(0, "missing [plant] section");
  if (!spec) throw ParseError(0, "missing [spec] section");
  if (agents.empty()) throw ParseError(0, "at least one [agent <name>] line is required");

  Dfa plant_dfa = complete(plant->build(true));
  Dfa spec_dfa = complete(spec->build(true));
  if (!(spec_dfa.alphabet() == plant_dfa.alphabet())) {
    throw ParseError(0, "spec alphabet differs from the plant alphabet");
  }

  std::vector<Alphabet> agent_alphabets;
  std::vector<std::string> agent_names;
  for (const auto& [name, letters] : agents) {
    for (const std::string& l : letters) {
      if (!plant_dfa.alphabet().contains(l)) {
        throw ParseError(0, "agent " + name + ": unknown letter: " + l);
      }
    }
    agent_alphabets.emplace_back(letters);
    agent_names.push_back(name);
  }

  ObservationArchitecture arch(plant_dfa.alphabet(), std::move(agent_alphabets));
  return make_problem(std::move(plant_dfa), std::move(spec_dfa), std::move(arch),
                      std::move(agent_names));
}

namespace {

void write_automaton_lines(std::ostream& out, const Dfa& a) {
  out << "alphabet:";
  for (const std::string& l : a.alphabet().letters()) out << ' ' << l;
  out << '\n';
  out << "states: " << a.state_count() << '\n';
  out << "initial: " << a.initial() << '\n';
  out << "accepting:";
  for (StateId q : a.accepting()) out << ' ' << q;
  out << '\n';
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      out << "trans: " << q << ' ' << a.alphabet().letter(s) << ' ' << a.step(q, s)
          << '\n';
    }
  }
}

}  // namespace

std::string serialize_problem(const Problem& p) {
  std::ostringstream out;
  out << "[plant]\n";
  write_automaton_lines(out, p.plant);
  out << "\n[spec]\n";
  write_automaton_lines(out, p.spec);
  out << '\n';
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    out << "[agent " << p.agent_names[i] << "]";
    for (const std::string& l : p.arch.agent(i).letters()) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

std::string serialize_observer(const Observer& o) {
  std::ostringstream out;
  write_automaton_lines(out, o.machine);
  for (StateId q = 0; q < o.machine.state_count(); ++q) {
    out << "label: " << q << ' ' << to_string(o.labels[q]) << '\n';
  }
  return out.str();
}

std::pair<Dfa, std::vector<Verdict>> parse_observer(std::string_view text) {
  RawAutomaton raw;
  raw.section = "observer";
  std::vector<std::pair<StateId, Verdict>> labels;
  for (const Line& line : significant_lines(text)) {
    std::size_t colon = line.text.find(':');
    if (colon == std::string::npos) {
      throw ParseError(line.number, "expected 'key: value'");
    }
    std::string key = trim(line.text.substr(0, colon));
    std::string value = trim(line.text.substr(colon + 1));
    if (key == "label") {
      auto toks = split_tokens(value);
      if (toks.size() != 2) throw ParseError(line.number, "expected 'label: <state> <Y|N|U>'");
      Verdict v;
      if (toks[1] == "Y") {
        v = Verdict::kYes;
      } else if (toks[1] == "N") {
        v = Verdict::kNo;
      } else if (toks[1] == "U") {
        v = Verdict::kUnknown;
      } else {
        throw ParseError(line.number, "unknown verdict label: " + toks[1]);
      }
      labels.emplace_back(parse_state_id(toks[0], line.number), v);
      continue;
    }
    if (!raw.consume(key, value, line.number)) {
      throw ParseError(line.number, "unknown key '" + key + "'");
    }
  }
  Dfa machine = complete(raw.build(false));
  std::vector<Verdict> by_state(machine.state_count(), Verdict::kUnknown);
  std::vector<bool> labeled(machine.state_count(), false);
  for (auto [q, v] : labels) {
    if (q >= machine.state_count()) throw ParseError(0, "label for unknown state");
    if (labeled[q]) throw ParseError(0, "state labeled twice: " + std::to_string(q));
    labeled[q] = true;
    by_state[q] = v;
  }
  for (StateId q = 0; q < machine.state_count(); ++q) {
    if (!labeled[q]) throw ParseError(0, "state missing a label: " + std::to_string(q));
  }
  return {std::move(machine), std::move(by_state)};
}

}  // namespace oct
