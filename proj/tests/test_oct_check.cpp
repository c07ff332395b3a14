#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oct/errors.hpp"
#include "oct/oct_check.hpp"
#include "testsupport.hpp"

using namespace oct;
using namespace testsupport;

TEST_CASE("check_oct on the paper instance") {
  Problem p = load_fixture("instance-paper.oct");
  OctResult r = check_oct(p);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  const OctWitness& w0 = *r.witness;
  CHECK(w0.branch == WitnessBranch::kBadConfused);
  CHECK(w0.rho == w(p.arch.global(), "b"));
  REQUIRE(w0.per_agent.size() == 2);
  CHECK(w0.per_agent[0] == Word{});
  CHECK(w0.per_agent[1] == w(p.arch.global(), "ab"));
  CHECK(validate_witness(p, w0));

  // completed sizes: plant 4, spec 3, two agents
  CHECK(r.a1_states <= 3 * 3 * 4);
  CHECK(r.a2_states <= 12 * 12 * 4);
}

TEST_CASE("check_oct holds on the split instance") {
  Problem p = load_fixture("instance-split.oct");
  OctResult r = check_oct(p);
  CHECK(r.holds);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("check_oct holds when K equals L") {
  Problem p = load_fixture("instance-keql.oct");
  CHECK(check_oct(p).holds);
}

TEST_CASE("check_oct holds when some agent observes everything") {
  CHECK(check_oct(load_fixture("instance-fullobs.oct")).holds);
  CHECK(check_oct(load_fixture("instance-blind.oct")).holds);
}

TEST_CASE("check_oct on the swap instance") {
  Problem p = load_fixture("instance-swap.oct");
  OctResult r = check_oct(p);
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness->branch == WitnessBranch::kBadConfused);
  CHECK(r.witness->rho == w(p.arch.global(), "ba"));
  CHECK(validate_witness(p, *r.witness));
}

TEST_CASE("degenerate single-agent problems") {
  Problem base = load_fixture("instance-paper.oct");
  auto single = [&](std::vector<std::string> letters) {
    ObservationArchitecture arch(base.arch.global(), {Alphabet(std::move(letters))});
    return make_problem(base.plant, base.spec, std::move(arch), {"solo"});
  };
  CHECK_FALSE(check_oct(single({"a"})).holds);
  CHECK(check_oct(single({"a", "b"})).holds);
}

TEST_CASE("recover_agent_word finds the shortest matching word") {
  Problem p = load_fixture("instance-paper.oct");
  CHECK(recover_agent_word(p, 1, w(p.arch.global(), "b"), TargetLanguage::kGood) ==
        w(p.arch.global(), "ab"));
  CHECK(recover_agent_word(p, 0, w(p.arch.global(), "ab"), TargetLanguage::kBad) ==
        w(p.arch.global(), "abb"));

  // A blind agent matches everything, so the shortest good word comes back.
  Problem blind = load_fixture("instance-blind.oct");
  CHECK(recover_agent_word(blind, 0, w(blind.arch.global(), "abb"),
                           TargetLanguage::kGood) == Word{});
}

TEST_CASE("validate_witness accepts the hand-made non-minimal witness") {
  Problem p = load_fixture("instance-paper.oct");
  const Alphabet& g = p.arch.global();
  OctWitness paper{WitnessBranch::kBadConfused, w(g, "abb"), {w(g, "ab"), w(g, "abab")}};
  CHECK(validate_witness(p, paper));

  // The same words cannot be a good-confused witness: abb is a bad word.
  paper.branch = WitnessBranch::kGoodConfused;
  CHECK_FALSE(validate_witness(p, paper));
}

TEST_CASE("validate_witness rejects projection mismatches") {
  Problem p = load_fixture("instance-paper.oct");
  const Alphabet& g = p.arch.global();
  OctWitness bad{WitnessBranch::kBadConfused, w(g, "b"), {Word{}, Word{}}};
  CHECK_FALSE(validate_witness(p, bad));  // P2(b) != P2(epsilon)

  OctWitness wrong_count{WitnessBranch::kBadConfused, w(g, "b"), {Word{}}};
  CHECK_FALSE(validate_witness(p, wrong_count));
}

TEST_CASE("checker-produced witnesses validate on every failing fixture") {
  for (const char* name : {"instance-paper.oct", "instance-swap.oct"}) {
    Problem p = load_fixture(name);
    OctResult r = check_oct(p);
    REQUIRE_FALSE(r.holds);
    CHECK(validate_witness(p, *r.witness));
  }
}

TEST_CASE("cantell on the paper instance") {
  Problem p = load_fixture("instance-paper.oct");
  const Alphabet& g = p.arch.global();
  CHECK_FALSE(cantell(p, 0, w(g, "abb")));
  CHECK_FALSE(cantell(p, 1, w(g, "abb")));
  CHECK_THROWS_AS(cantell(p, 0, w(g, "aab")), InputError);  // not in L
}

TEST_CASE("cantell on the split instance") {
  Problem p = load_fixture("instance-split.oct");
  const Alphabet& g = p.arch.global();
  CHECK(cantell(p, 0, w(g, "aa")));
  CHECK(cantell(p, 1, w(g, "b")));
  CHECK(cantell(p, 1, w(g, "")));       // no bad word projects to epsilon at agent 2
  CHECK_FALSE(cantell(p, 0, w(g, "")));  // but "b" looks like epsilon to agent 1
}

TEST_CASE("cantell is always true for a fully observing agent") {
  Problem p = load_fixture("instance-fullobs.oct");
  const Alphabet& g = p.arch.global();
  for (const char* word : {"ab", "ba"}) {
    CHECK(cantell(p, 0, w(g, word)));
  }
}

TEST_CASE("check_jo_bounded finds the swap pair") {
  Problem p = load_fixture("instance-swap.oct");
  JoResult r = check_jo_bounded(p, 2);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->first == w(p.arch.global(), "ab"));
  CHECK(r.counterexample->second == w(p.arch.global(), "ba"));
  CHECK(r.searched_to == 2);
}

TEST_CASE("check_jo_bounded finds nothing on the paper instance") {
  Problem p = load_fixture("instance-paper.oct");
  CHECK_FALSE(check_jo_bounded(p, 12).counterexample.has_value());
}

TEST_CASE("check_jo_bounded with K = L never finds a pair") {
  Problem p = load_fixture("instance-keql.oct");
  CHECK_FALSE(check_jo_bounded(p, 8).counterexample.has_value());
}

TEST_CASE("check_jo_bounded at bound zero") {
  Problem p = load_fixture("instance-paper.oct");  // epsilon is good, never bad
  JoResult r = check_jo_bounded(p, 0);
  CHECK_FALSE(r.counterexample.has_value());
  CHECK(r.searched_to == 0);
}

TEST_CASE("problem invariant: K must be a subset of L") {
  Problem p = load_fixture("instance-swap.oct");
  // Swap plant and spec: {ab,ba} is not a subset of {ab}.
  CHECK_THROWS_WITH_AS(
      make_problem(p.spec, p.plant, p.arch, p.agent_names),
      "K not a subset of L, witness: ba", InputError);
}
