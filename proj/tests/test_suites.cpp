#include <doctest.h>

#include "qnoether/noether_suites.hpp"

using namespace qn;
using namespace qn::noether;

namespace {

SuiteConfig random_mode(uint64_t seed = 1) {
  SuiteConfig c;
  c.mode = Mode::RandomEval;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("rank two rewriting table") {
  Report r = verify_suite(2, "tj-ek", {});
  CHECK(r.instances.size() == 6);
  CHECK(r.pass());
}

TEST_CASE("all suites pass at ranks two and three") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& s : noether_suite_names()) {
      Report r = verify_suite(n, s, {});
      CHECK_MESSAGE(r.pass(), s << " n=" << n);
      CHECK(!r.instances.empty());
    }
}

TEST_CASE("random evaluation agrees with the symbolic verdict") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& s : noether_suite_names()) {
      Report sym = verify_suite(n, s, {});
      Report num = verify_suite(n, s, random_mode());
      REQUIRE(sym.instances.size() == num.instances.size());
      for (size_t i = 0; i < sym.instances.size(); ++i)
        CHECK_MESSAGE(sym.instances[i].pass == num.instances[i].pass, s << " #" << i);
    }
}

TEST_CASE("parsed identities") {
  NoetherContext c2(2), c3(3);
  SuiteConfig sym;
  CHECK(check_identity(c2, parse_expression("t[1]*e[2]"), parse_expression("q*e[2]*t[1]"), sym, 1).pass);
  CHECK(check_identity(c3, parse_expression("qc(Y[3], X[1], 5)"), ex::lit(Int(0)), sym, 1).pass);
  CHECK(check_identity(c3, parse_expression("t[1]*t[2]"), parse_expression("t[2]*t[1]"), sym, 1).pass);
  // Mixed trees fall back to the twisted Laurent ring.
  CHECK(check_identity(c2, parse_expression("y[1]*x[1]"), parse_expression("q*x[1]*y[1]"), sym, 1).pass);
  CHECK(check_identity(c2, parse_expression("x[1]^-1*x[1]"), ex::lit(Int(1)), sym, 1).pass);
  CHECK(check_identity(c2, parse_expression("e[1]"), parse_expression("x[1]+x[2]"), sym, 1).pass);
}

TEST_CASE("random evaluation detects a missing q") {
  NoetherContext c(2);
  auto lhs = parse_expression("t[1]*e[2]"), rhs = parse_expression("e[2]*t[1]");
  CHECK(!check_identity(c, lhs, rhs, {}, 1).pass);
  Outcome o = check_identity(c, lhs, rhs, random_mode(), 1);
  CHECK(!o.pass);
  CHECK(o.detail.find("disagree") != std::string::npos);
  Outcome ok = check_identity(c, lhs, parse_expression("q*e[2]*t[1]"), random_mode(), 1);
  CHECK(ok.pass);
  CHECK(ok.detail.find("probabilistic") != std::string::npos);
}

TEST_CASE("guards and argument errors") {
  CHECK_THROWS_AS(verify_suite(5, "level-relations", {}), GuardExceeded);
  CHECK_THROWS_AS(verify_suite(4, "bn", {}), GuardExceeded);
  CHECK_THROWS_AS(verify_suite(2, "no-such-suite", {}), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite(0, "tj-ek", {}), std::invalid_argument);
}

TEST_CASE("parallel and serial runners agree") {
  auto ctx = std::make_shared<NoetherContext>(3);
  Report a = run_tasks("xy-relations", 3, Mode::Symbolic, noether_tasks(ctx, "xy-relations", {}));
  Report b = run_tasks_serial("xy-relations", 3, Mode::Symbolic, noether_tasks(ctx, "xy-relations", {}));
  REQUIRE(a.instances.size() == b.instances.size());
  for (size_t i = 0; i < a.instances.size(); ++i) {
    CHECK(a.instances[i].relation == b.instances[i].relation);
    CHECK(a.instances[i].indices == b.instances[i].indices);
    CHECK(a.instances[i].pass == b.instances[i].pass);
    CHECK(a.instances[i].detail == b.instances[i].detail);
  }
}

TEST_CASE("sink sees instances in index order") {
  std::vector<std::vector<int>> seen;
  Report r = verify_suite(3, "telescoping", {}, [&](const Instance& i) { seen.push_back(i.indices); });
  REQUIRE(seen.size() == r.instances.size());
  for (size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == r.instances[i].indices);
}

TEST_CASE("failing task becomes a failed instance") {
  std::vector<Task> t{{"boom", {1}, []() -> Outcome { throw std::runtime_error("bad"); }}};
  Report r = run_tasks("x", 1, Mode::Symbolic, t);
  CHECK(!r.pass());
  CHECK(r.instances[0].detail == "error: bad");
}
