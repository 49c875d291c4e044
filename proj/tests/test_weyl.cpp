#include <doctest.h>

#include <random>
#include <set>

#include "qnoether/noether.hpp"
#include "qnoether/weyl.hpp"

using namespace qn;

namespace {

MultiRat X(int v, int j) { return MultiRat::var(v, j); }
MultiRat C(int v, int c) { return MultiRat(v, Int(c)); }

SkewElem sample(const SpecPtr& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(1, 3), e(-1, 1), pick(1, s->v);
  SkewElem r(s);
  for (int k = 0; k < 3; ++k) {
    MultiRat f = C(s->v, c(rng)) * X(s->v, pick(rng)) + C(s->v, c(rng));
    if (k == 2) f = f / X(s->v, pick(rng));
    std::vector<int> beta(s->m);
    for (auto& b : beta) b = e(rng);
    r += SkewElem::make(s, {{beta, f}});
  }
  return r;
}

const GroupType kTypes[] = {GroupType::A, GroupType::B, GroupType::D};
const Convention kConv[] = {Convention::Standard, Convention::YFixed};

}  // namespace

TEST_CASE("group orders and closure") {
  CHECK(enumerate_group(GroupType::A, 3).size() == 6);
  CHECK(enumerate_group(GroupType::B, 2).size() == 8);
  CHECK(enumerate_group(GroupType::D, 3).size() == 24);
  CHECK(enumerate_group(GroupType::B, 4).size() == 384);
  for (auto t : kTypes) {
    auto gs = enumerate_group(t, 3);
    std::set<std::string> names;
    for (const auto& g : gs) {
      CHECK(g.valid());
      names.insert(g.str());
    }
    CHECK(names.size() == gs.size());
    for (const auto& g : gs)
      for (const auto& h : gs) CHECK(names.count((g * h).str()) == 1);
  }
}

TEST_CASE("cycle notation round trip") {
  auto g = SignedPerm::parse("(1 2)(3)+-+", 3, GroupType::B);
  CHECK(g.perm == std::vector<int>{1, 0, 2});
  CHECK(g.sign_at(1) == -1);
  CHECK(SignedPerm::parse(g.str(), 3, GroupType::B) == g);
  CHECK_THROWS(SignedPerm::parse("(1 2)-++", 3, GroupType::D));
}

TEST_CASE("action examples") {
  auto s = noether_spec(2);
  auto sw = SignedPerm::transposition(2, 1, 2, GroupType::A);
  CHECK(act(sw, SkewElem::x(s, 1), Convention::Standard) == SkewElem::x(s, 2));
  SkewElem p = SkewElem::x(s, 1) * SkewElem::x(s, 2);
  CHECK(act(SignedPerm::flips(2, 3u, GroupType::D), p, Convention::Standard) == p);
  SkewElem d = SkewElem::unit(s, 1) - SkewElem::unit(s, 2);
  CHECK(act(sw, d, Convention::Standard) == -d);
}

TEST_CASE("left action and ring automorphism") {
  std::mt19937_64 rng(11);
  auto s = noether_spec(3);
  for (auto t : kTypes)
    for (auto c : kConv) {
      auto gs = enumerate_group(t, 3);
      std::uniform_int_distribution<size_t> pick(0, gs.size() - 1);
      for (int trial = 0; trial < 6; ++trial) {
        const auto& g = gs[pick(rng)];
        const auto& h = gs[pick(rng)];
        SkewElem a = sample(s, rng), b = sample(s, rng);
        CHECK(act(g * h, a, c) == act(g, act(h, a, c), c));
        CHECK(act(g, a * b, c) == act(g, a, c) * act(g, b, c));
      }
    }
}

TEST_CASE("invariance examples") {
  auto g = noether::skew_gens(3);
  CHECK(is_invariant(g.e[2], GroupType::A, 3, Convention::Standard));
  CHECK(is_invariant(g.t[1], GroupType::A, 3, Convention::Standard));
  auto s2 = noether_spec(2);
  CHECK(!is_invariant(SkewElem::unit(s2, 1), GroupType::A, 2, Convention::Standard));
}

TEST_CASE("generator invariance agrees with full enumeration") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n) {
    auto s = noether_spec(n);
    for (auto t : kTypes)
      for (auto c : kConv)
        for (int trial = 0; trial < 3; ++trial) {
          SkewElem a = sample(s, rng);
          SkewElem r = reynolds(a, t, n, c);
          CHECK(is_invariant(a, t, n, c) == is_invariant_full(a, t, n, c));
          CHECK(is_invariant(r, t, n, c) == is_invariant_full(r, t, n, c));
          CHECK(is_invariant_full(r, t, n, c));
        }
  }
}

TEST_CASE("Reynolds operator") {
  auto s = noether_spec(2);
  SkewElem avg = reynolds(SkewElem::x(s, 1), GroupType::A, 2, Convention::Standard);
  CHECK(avg == SkewElem::constant(s, (X(2, 1) + X(2, 2)) / C(2, 2)));
  auto g3 = noether::skew_gens(3);
  CHECK(reynolds(g3.e[1], GroupType::A, 3, Convention::Standard) == g3.e[1]);
  // Average of y_1 against the Vandermonde reconstruction y_i = sum_j x_i^{j-1} t_j.
  auto g = noether::skew_gens(2);
  SkewElem ybar = reynolds(SkewElem::unit(s, 1), GroupType::A, 2, Convention::Standard);
  SkewElem expect = g.t[0] + SkewElem::constant(g.spec, (X(2, 1) + X(2, 2)) / C(2, 2)) * g.t[1];
  CHECK(ybar == expect);

  std::mt19937_64 rng(3);
  for (auto t : kTypes)
    for (auto c : kConv) {
      SkewElem a = sample(s, rng);
      SkewElem r = reynolds(a, t, 2, c);
      CHECK(r == reynolds_serial(a, t, 2, c));
      CHECK(reynolds(r, t, 2, c) == r);
    }
}

TEST_CASE("x-product separates D from B") {
  for (int n = 2; n <= 4; ++n) {
    auto s = noether_spec(n);
    SkewElem p = SkewElem::one(s);
    for (int j = 1; j <= n; ++j) p = p * SkewElem::x(s, j);
    for (auto c : kConv) {
      CHECK(is_invariant(p, GroupType::D, n, c));
      CHECK(!is_invariant(p, GroupType::B, n, c));
      CHECK(act(SignedPerm::flips(n, 1u, GroupType::B), p, c) == -p);
    }
  }
}
