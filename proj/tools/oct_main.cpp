// Command-line front end: parse a problem file, decide the observability
// conditions, synthesize observers, and cross-check against the oracle.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oct/errors.hpp"
#include "oct/format.hpp"
#include "oct/observer.hpp"
#include "oct/oct_check.hpp"
#include "oct/oracle.hpp"

namespace {

using nlohmann::json;
using namespace oct;

std::string quoted(const std::string& s) { return '"' + s + '"'; }

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string inclusion_name(WitnessBranch b) {
  return b == WitnessBranch::kBadConfused ? "A1 <= K" : "A2 <= L-K";
}

json witness_json(const Problem& p, const OctWitness& w) {
  json per_agent = json::array();
  for (std::size_t i = 0; i < w.per_agent.size(); ++i) {
    per_agent.push_back({{"agent", p.agent_names[i]},
                         {"word", format_word(p.arch.global(), w.per_agent[i])}});
  }
  return {{"branch", to_string(w.branch)},
          {"rho", format_word(p.arch.global(), w.rho)},
          {"per_agent", per_agent}};
}

int cmd_check_oct(const std::string& path, bool as_json) {
  Problem p = load_problem(path);
  OctResult r = check_oct(p);
  if (as_json) {
    json j{{"command", "check-oct"},
           {"holds", r.holds},
           {"a1_states", r.a1_states},
           {"a2_states", r.a2_states},
           {"witness", nullptr},
           {"failed_inclusion", nullptr}};
    if (r.witness) {
      j["witness"] = witness_json(p, *r.witness);
      j["failed_inclusion"] = inclusion_name(r.witness->branch);
    }
    emit(j);
  } else if (r.holds) {
    std::cout << "OCT holds\n";
    std::cout << "A1 states: " << r.a1_states << '\n';
    std::cout << "A2 states: " << r.a2_states << '\n';
  } else {
    const OctWitness& w = *r.witness;
    std::cout << "OCT fails: inclusion " << inclusion_name(w.branch) << " violated\n";
    std::cout << "branch: " << to_string(w.branch) << '\n';
    std::cout << "rho: " << quoted(format_word(p.arch.global(), w.rho)) << '\n';
    for (std::size_t i = 0; i < w.per_agent.size(); ++i) {
      std::cout << "agent " << p.agent_names[i] << ": "
                << quoted(format_word(p.arch.global(), w.per_agent[i])) << '\n';
    }
    std::cout << "A1 states: " << r.a1_states << '\n';
    std::cout << "A2 states: " << r.a2_states << '\n';
  }
  return r.holds ? 0 : 1;
}

int cmd_check_jo(const std::string& path, std::size_t max_len, bool as_json) {
  Problem p = load_problem(path);
  JoResult r = check_jo_bounded(p, max_len);
  if (as_json) {
    json j{{"command", "check-jo"}, {"max_len", r.searched_to}, {"counterexample", nullptr}};
    if (r.counterexample) {
      j["counterexample"] = {
          {"rho", format_word(p.arch.global(), r.counterexample->first)},
          {"rho_prime", format_word(p.arch.global(), r.counterexample->second)}};
    }
    emit(j);
  } else if (r.counterexample) {
    std::cout << "JO counterexample found (searched to length " << r.searched_to << ")\n";
    std::cout << "rho: " << quoted(format_word(p.arch.global(), r.counterexample->first))
              << " (in K)\n";
    std::cout << "rho': " << quoted(format_word(p.arch.global(), r.counterexample->second))
              << " (in L-K)\n";
  } else {
    std::cout << "no JO counterexample up to length " << r.searched_to
              << " (bounded search; not a proof of JO)\n";
  }
  return r.counterexample ? 1 : 0;
}

int cmd_synth(const std::string& path, const std::string& out_dir, bool as_json) {
  Problem p = load_problem(path);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw InputError("cannot create output directory: " + out_dir);

  const bool holds = check_oct(p).holds;
  json observers = json::array();
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    Observer o = synth_observer(p, i);
    std::size_t y = 0, no = 0, u = 0;
    for (Verdict v : o.labels) {
      if (v == Verdict::kYes) ++y;
      if (v == Verdict::kNo) ++no;
      if (v == Verdict::kUnknown) ++u;
    }
    std::string file_name = "observer_" + p.agent_names[i] + ".txt";
    std::filesystem::path out_path = std::filesystem::path(out_dir) / file_name;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + out_path.string());
    out << serialize_observer(o);
    std::ostringstream line;
    line << "agent " << p.agent_names[i] << ": states=" << o.machine.state_count()
         << " Y=" << y << " N=" << no << " U=" << u << " -> " << file_name;
    lines.push_back(line.str());
    observers.push_back({{"agent", p.agent_names[i]},
                         {"states", o.machine.state_count()},
                         {"y", y},
                         {"n", no},
                         {"u", u},
                         {"file", file_name}});
  }
  if (as_json) {
    emit(json{{"command", "synth"}, {"oct_holds", holds}, {"observers", observers}});
  } else {
    if (!holds) {
      std::cout << "warning: OCT does not hold; observers are sound but not complete\n";
    }
    for (const std::string& line : lines) std::cout << line << '\n';
  }
  return 0;
}

int cmd_observe(const std::string& path, const std::string& agent_name,
                const std::string& input, bool as_json) {
  Problem p = load_problem(path);
  std::size_t agent = p.arch.agent_count();
  for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
    if (p.agent_names[i] == agent_name) agent = i;
  }
  if (agent == p.arch.agent_count()) throw InputError("unknown agent: " + agent_name);
  Word sigma = parse_word(p.arch.agent(agent), input);
  Verdict v = observe(synth_observer(p, agent), sigma);
  if (as_json) {
    emit(json{{"command", "observe"},
              {"agent", agent_name},
              {"input", input},
              {"verdict", to_string(v)}});
  } else {
    std::cout << "verdict: " << to_string(v) << '\n';
  }
  return 0;
}

int cmd_run(const std::string& path, const std::string& word, bool as_json) {
  Problem p = load_problem(path);
  Word rho = parse_word(p.arch.global(), word);
  DecentralizedRun run = run_decentralized(p, rho);
  if (as_json) {
    json per_agent = json::array();
    for (std::size_t i = 0; i < run.per_agent.size(); ++i) {
      per_agent.push_back(
          {{"agent", p.agent_names[i]}, {"verdict", to_string(run.per_agent[i])}});
    }
    emit(json{{"command", "run"},
              {"word", format_word(p.arch.global(), rho)},
              {"per_agent", per_agent},
              {"overall", to_string(run.overall)}});
  } else {
    for (std::size_t i = 0; i < run.per_agent.size(); ++i) {
      std::cout << "agent " << p.agent_names[i] << ": " << to_string(run.per_agent[i])
                << '\n';
    }
    std::cout << "overall: " << to_string(run.overall) << '\n';
  }
  return 0;
}

int cmd_validate_witness(const std::string& path, const std::string& rho_text,
                         const std::vector<std::string>& agent_words,
                         const std::string& branch_text, bool as_json) {
  Problem p = load_problem(path);
  if (agent_words.size() != p.arch.agent_count()) {
    throw InputError("expected one --word per agent (" +
                     std::to_string(p.arch.agent_count()) + " agents)");
  }
  OctWitness w;
  w.rho = parse_word(p.arch.global(), rho_text);
  for (const std::string& s : agent_words) {
    w.per_agent.push_back(parse_word(p.arch.global(), s));
  }
  if (branch_text == "good") {
    w.branch = WitnessBranch::kGoodConfused;
  } else if (branch_text == "bad") {
    w.branch = WitnessBranch::kBadConfused;
  } else if (branch_text.empty()) {
    // Infer from rho's membership: a good rho can only be GOOD_CONFUSED.
    w.branch = accepts(p.spec, w.rho) ? WitnessBranch::kGoodConfused
                                      : WitnessBranch::kBadConfused;
  } else {
    throw InputError("--branch must be 'good' or 'bad'");
  }
  const bool valid = validate_witness(p, w);
  if (as_json) {
    emit(json{{"command", "validate-witness"},
              {"valid", valid},
              {"branch", to_string(w.branch)},
              {"rho", format_word(p.arch.global(), w.rho)}});
  } else if (valid) {
    std::cout << "witness is valid (branch " << to_string(w.branch) << ")\n";
  } else {
    std::cout << "witness is invalid (checked as branch " << to_string(w.branch) << ")\n";
  }
  return valid ? 0 : 1;
}

Dfa mutate_dfa(const Dfa& d, std::mt19937& rng) {
  std::vector<StateId> table = d.table();
  std::vector<bool> acc(d.state_count(), false);
  for (StateId q : d.accepting()) acc[q] = true;
  const int edits = 1 + static_cast<int>(rng() % 2);
  for (int e = 0; e < edits; ++e) {
    if (!table.empty() && rng() % 2 == 0) {
      table[rng() % table.size()] = static_cast<StateId>(rng() % d.state_count());
    } else {
      std::size_t q = rng() % d.state_count();
      acc[q] = !acc[q];
    }
  }
  std::vector<StateId> accepting;
  for (StateId q = 0; q < d.state_count(); ++q) {
    if (acc[q]) accepting.push_back(q);
  }
  return Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(accepting),
             std::move(table));
}

Problem mutate_problem(const Problem& base, std::mt19937& rng) {
  Dfa plant = mutate_dfa(base.plant, rng);
  Dfa spec = mutate_dfa(base.spec, rng);
  if (!is_subset(spec.as_nfa(), plant).holds) {
    // Restore the K-subset-of-L invariant.
    spec = determinize(product_intersection(spec.as_nfa(), plant.as_nfa()));
  }
  return make_problem(std::move(plant), std::move(spec), base.arch, base.agent_names);
}

int cmd_oracle_compare(const std::string& path, std::size_t trials, std::uint32_t seed,
                       bool as_json) {
  Problem base = load_problem(path);
  std::mt19937 rng(seed);
  std::size_t disagreements = 0;
  json results = json::array();
  std::vector<std::string> lines;

  auto compare_one = [&](const std::string& label, const Problem& p) {
    OctResult checker = check_oct(p);
    oracle::OracleOctResult ref = oracle::oracle_check_oct(p);
    bool witness_ok = true;
    if (checker.witness) witness_ok = witness_ok && validate_witness(p, *checker.witness);
    if (ref.witness) witness_ok = witness_ok && validate_witness(p, *ref.witness);
    const bool agree = checker.holds == ref.holds && witness_ok;
    if (!agree) ++disagreements;
    std::ostringstream line;
    line << label << ": checker holds=" << (checker.holds ? "true" : "false")
         << ", oracle holds=" << (ref.holds ? "true" : "false") << " -> "
         << (agree ? "agree" : "DISAGREE");
    lines.push_back(line.str());
    results.push_back({{"case", label},
                       {"checker_holds", checker.holds},
                       {"oracle_holds", ref.holds},
                       {"witnesses_valid", witness_ok},
                       {"agree", agree}});
  };

  compare_one("file", base);
  for (std::size_t t = 1; t <= trials; ++t) {
    compare_one("trial " + std::to_string(t), mutate_problem(base, rng));
  }

  if (as_json) {
    emit(json{{"command", "oracle-compare"},
              {"trials", trials},
              {"seed", seed},
              {"results", results},
              {"disagreements", disagreements}});
  } else {
    for (const std::string& line : lines) std::cout << line << '\n';
    std::cout << "disagreements: " << disagreements << '\n';
  }
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized observability toolkit: decides the at-least-one-can-tell "
               "condition, searches for joint-observability counterexamples, and "
               "synthesizes Y/N/U observers."};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  std::size_t max_len = 10;
  std::string out_dir;
  std::string agent_name;
  std::string input;
  std::string word;
  std::string rho_text;
  std::vector<std::string> agent_words;
  std::string branch_text;
  std::size_t trials = 0;
  std::uint32_t seed = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "problem file")->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* c_oct = app.add_subcommand("check-oct", "decide the OCT condition");
  add_common(c_oct);
  CLI::App* c_jo = app.add_subcommand("check-jo", "bounded joint-observability search");
  add_common(c_jo);
  c_jo->add_option("--max-len", max_len, "word length bound")->default_val(10);
  CLI::App* c_synth = app.add_subcommand("synth", "synthesize per-agent observers");
  add_common(c_synth);
  c_synth->add_option("--out", out_dir, "output directory")->required();
  CLI::App* c_observe = app.add_subcommand("observe", "run one observer on an observation");
  add_common(c_observe);
  c_observe->add_option("--agent", agent_name, "agent name")->required();
  c_observe->add_option("--input", input, "observation over the agent alphabet")->required();
  CLI::App* c_run = app.add_subcommand("run", "run the decentralized observers on a word of L");
  add_common(c_run);
  c_run->add_option("--word", word, "word over the global alphabet")->required();
  CLI::App* c_validate = app.add_subcommand("validate-witness", "check a violation witness");
  add_common(c_validate);
  c_validate->add_option("--rho", rho_text, "the confused word")->required();
  c_validate->add_option("--word", agent_words, "per-agent confusing word (repeat per agent)")
      ->required();
  c_validate->add_option("--branch", branch_text, "good or bad (inferred when omitted)");
  CLI::App* c_compare = app.add_subcommand("oracle-compare", "cross-check checker vs oracle");
  add_common(c_compare);
  c_compare->add_option("--trials", trials, "number of random mutations to also compare");
  c_compare->add_option("--seed", seed, "mutation seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_oct)) return cmd_check_oct(file, as_json);
    if (app.got_subcommand(c_jo)) return cmd_check_jo(file, max_len, as_json);
    if (app.got_subcommand(c_synth)) return cmd_synth(file, out_dir, as_json);
    if (app.got_subcommand(c_observe)) return cmd_observe(file, agent_name, input, as_json);
    if (app.got_subcommand(c_run)) return cmd_run(file, word, as_json);
    if (app.got_subcommand(c_validate)) {
      return cmd_validate_witness(file, rho_text, agent_words, branch_text, as_json);
    }
    if (app.got_subcommand(c_compare)) {
      return cmd_oracle_compare(file, trials, seed, as_json);
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const OracleCapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
