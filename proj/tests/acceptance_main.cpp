// Acceptance suite: one pass/fail line per criterion. Drives both the
// library and the installed CLI binary.
//
// usage: acceptance_tests <cli-binary> <fixtures-dir> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oct/observer.hpp"
#include "oct/oracle.hpp"
#include "oct/oct_check.hpp"
#include "testsupport.hpp"

namespace {

using namespace oct;
namespace fs = std::filesystem;

std::string g_cli;
std::string g_fixtures;
fs::path g_scratch;

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::vector<std::string>& args) {
  static int counter = 0;
  fs::path out = g_scratch / ("cli_out_" + std::to_string(counter++) + ".txt");
  std::ostringstream cmd;
  cmd << "'" << g_cli << "'";
  for (const std::string& a : args) cmd << " '" << a << "'";
  cmd << " > '" << out.string() << "' 2>&1";
  int status = std::system(cmd.str().c_str());
  if (status == -1) throw std::runtime_error("failed to spawn the CLI");
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

std::string fixture_path(const std::string& name) { return g_fixtures + "/" + name; }

Problem load(const std::string& name) {
  return parse_problem(testsupport::read_file(fixture_path(name)));
}

struct Failure {
  std::string detail;
};

void expect(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

// ---------------------------------------------------------------------------

void criterion_paper_example() {
  std::string paper = fixture_path("instance-paper.oct");
  CliResult oct_run = run_cli({"check-oct", paper});
  expect(oct_run.exit_code == 1, "check-oct should exit 1, got " +
                                     std::to_string(oct_run.exit_code));
  expect(oct_run.output.find("rho: \"b\"") != std::string::npos,
         "check-oct witness should name rho \"b\"");

  CliResult validate = run_cli(
      {"validate-witness", paper, "--rho", "abb", "--word", "ab", "--word", "abab"});
  expect(validate.exit_code == 0, "the hand-made witness should validate");
  expect(validate.output.find("BAD_CONFUSED") != std::string::npos,
         "the witness should be reported as BAD_CONFUSED");

  CliResult jo = run_cli({"check-jo", paper, "--max-len", "12"});
  expect(jo.exit_code == 0, "no bounded JO counterexample should exist");
}

void criterion_projection_golden() {
  Problem p = load("instance-paper.oct");
  Word abbab = parse_word(p.arch.global(), "abbab");
  Word bb = parse_word(p.arch.global(), "bb");
  expect(format_word(p.arch.agent(0), project_word(p.arch, abbab, 0)) == "aa",
         "P1(abbab) must be aa");
  expect(project_word(p.arch, bb, 0).empty(), "P1(bb) must be the empty word");
}

std::vector<Problem> corpus() {
  std::mt19937 rng(20260809);
  std::vector<Problem> instances;
  for (int i = 0; i < 200; ++i) instances.push_back(testsupport::random_problem(rng));
  for (const char* name :
       {"instance-paper.oct", "instance-swap.oct", "instance-split.oct"}) {
    instances.push_back(load(name));
  }
  return instances;
}

void criterion_oracle_equivalence() {
  std::size_t idx = 0;
  for (const Problem& p : corpus()) {
    const std::string tag = "instance #" + std::to_string(idx++);
    OctResult checker = check_oct(p);
    oracle::OracleOctResult ref = oracle::oracle_check_oct(p);
    expect(checker.holds == ref.holds, tag + ": OCT verdict disagreement");
    if (!checker.holds) {
      expect(validate_witness(p, *checker.witness), tag + ": invalid checker witness");
      expect(validate_witness(p, *ref.witness), tag + ": invalid oracle witness");
    }

    std::vector<AgentView> views;
    for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
      views.push_back(make_agent_view(p, i));
    }
    for (const Word& rho : testsupport::all_words(p.arch.global().size(), 6)) {
      if (!accepts(p.plant, rho)) continue;
      for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
        expect(cantell(p, views, i, rho) == oracle::oracle_cantell(p, i, rho),
               tag + ": cantell disagreement on a word of length " +
                   std::to_string(rho.size()));
      }
    }

    for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
      Observer o = synth_observer(p, i);
      Dfa proj_plant = determinize(project_automaton(p.arch, p.plant.as_nfa(), i));
      for (const Word& sigma : testsupport::all_words(p.arch.agent(i).size(), 6)) {
        if (!accepts(proj_plant, sigma)) continue;
        expect(observe(o, sigma) == oracle::oracle_f(p, i, sigma),
               tag + ": observer verdict disagreement");
      }
    }
  }
}

void criterion_altoct() {
  for (const char* name : {"instance-split.oct", "instance-keql.oct",
                           "instance-fullobs.oct", "instance-blind.oct"}) {
    Problem p = load(name);
    expect(check_oct(p).holds, std::string(name) + " should satisfy the condition");
    AltoctReport report = verify_altoct(p, 8);
    expect(report.soundness.empty(), std::string(name) + ": soundness violation");
    expect(report.completeness.empty(), std::string(name) + ": completeness violation");
  }
  Problem paper = load("instance-paper.oct");
  AltoctReport report = verify_altoct(paper, 8);
  expect(report.soundness.empty(), "paper instance: soundness violation");
  Word abb = parse_word(paper.arch.global(), "abb");
  expect(std::find(report.completeness.begin(), report.completeness.end(), abb) !=
             report.completeness.end(),
         "paper instance: abb must be reported as a completeness violation");
}

void criterion_oct_implies_jo() {
  std::size_t idx = 0;
  for (const Problem& p : corpus()) {
    const std::string tag = "instance #" + std::to_string(idx++);
    if (!check_oct(p).holds) continue;
    expect(!check_jo_bounded(p, 10).counterexample.has_value(),
           tag + ": OCT holds but a bounded JO counterexample exists");
  }
}

void criterion_structural_bounds() {
  std::size_t idx = 0;
  for (const Problem& p : corpus()) {
    const std::string tag = "instance #" + std::to_string(idx++);
    OctResult r = check_oct(p);
    const std::size_t m = p.spec.state_count();
    const std::size_t pp = p.plant.state_count();
    std::size_t a1_bound = pp;
    std::size_t a2_bound = pp;
    for (std::size_t i = 0; i < p.arch.agent_count(); ++i) {
      a1_bound *= m;
      a2_bound *= pp * m;
    }
    expect(r.a1_states <= a1_bound, tag + ": A1 exceeds its bound");
    expect(r.a2_states <= a2_bound, tag + ": A2 exceeds its bound");
  }
}

std::string dir_contents(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  std::string all;
  for (const std::string& name : names) {
    all += "== " + name + "\n" + testsupport::read_file((dir / name).string());
  }
  return all;
}

void criterion_determinism() {
  const std::vector<std::string> fixtures = {
      "instance-paper.oct", "instance-swap.oct",     "instance-split.oct",
      "instance-keql.oct",  "instance-fullobs.oct",  "instance-blind.oct"};
  // A word of L per fixture, for the run command.
  auto run_word = [](const std::string& name) -> std::string {
    if (name == "instance-paper.oct") return "abb";
    if (name == "instance-swap.oct") return "ab";
    if (name == "instance-split.oct") return "bb";
    if (name == "instance-keql.oct") return "ab";
    if (name == "instance-fullobs.oct") return "ba";
    return "b";  // instance-blind shares the paper automata
  };

  int synth_round = 0;
  for (const std::string& name : fixtures) {
    const std::string file = fixture_path(name);
    std::vector<std::vector<std::string>> commands = {
        {"check-oct", file},
        {"check-jo", file, "--max-len", "8"},
        {"observe", file, "--agent", "1", "--input", ""},
        {"run", file, "--word", run_word(name)},
        {"validate-witness", file, "--rho", "b", "--word", "", "--word", ""},
        {"oracle-compare", file, "--trials", "3", "--seed", "9"},
    };
    for (const auto& base : commands) {
      for (bool as_json : {false, true}) {
        std::vector<std::string> args = base;
        if (as_json) args.push_back("--json");
        CliResult first = run_cli(args);
        CliResult second = run_cli(args);
        expect(first.output == second.output && first.exit_code == second.exit_code,
               name + ": nondeterministic output from '" + base[0] + "'");
      }
    }

    // synth twice into separate directories; reports and exports must match.
    fs::path dir_a = g_scratch / ("synth_" + std::to_string(synth_round) + "_a");
    fs::path dir_b = g_scratch / ("synth_" + std::to_string(synth_round) + "_b");
    ++synth_round;
    CliResult first = run_cli({"synth", file, "--out", dir_a.string()});
    CliResult second = run_cli({"synth", file, "--out", dir_b.string()});
    expect(first.exit_code == 0 && second.exit_code == 0, name + ": synth failed");
    expect(first.output == second.output, name + ": nondeterministic synth report");
    expect(dir_contents(dir_a) == dir_contents(dir_b),
           name + ": nondeterministic observer exports");
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  int number;
  std::string label;
  std::function<void()> body;
  double budget_seconds;  // 0 = untimed
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance_tests <cli-binary> <fixtures-dir> <scratch-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];
  g_scratch = argv[3];
  fs::create_directories(g_scratch);

  const std::vector<Criterion> criteria = {
      {1, "paper example reproduction (check-oct, validate-witness, check-jo)",
       criterion_paper_example, 1.0},
      {2, "projection golden values", criterion_projection_golden, 0.0},
      {3, "oracle equivalence on 200 random instances plus fixtures",
       criterion_oracle_equivalence, 300.0},
      {4, "observer soundness and completeness to length 8", criterion_altoct, 0.0},
      {5, "OCT implies bounded JO across the corpus", criterion_oct_implies_jo, 0.0},
      {6, "structural state-count bounds", criterion_structural_bounds, 0.0},
      {7, "byte-identical outputs across repeated runs", criterion_determinism, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const Failure& f) {
      failure = f.detail;
    } catch (const std::exception& e) {
      failure = std::string("unexpected error: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      std::ostringstream over;
      over << "exceeded the " << c.budget_seconds << "s budget (" << elapsed << "s)";
      failure = over.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (failure.empty()) {
      line << "PASS criterion " << c.number << ": " << c.label << " (" << elapsed << "s)";
    } else {
      line << "FAIL criterion " << c.number << ": " << c.label << " -- " << failure;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
