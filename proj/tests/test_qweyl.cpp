#include <doctest.h>

#include "qnoether/qweyl.hpp"
#include "qnoether/skewnormal.hpp"

using namespace qn;
using namespace qn::qweyl;

namespace {

using Elem = Algebra<QRat>::Elem;

Elem term(const Word& w, const QRat& c) { return Elem{{w, c}}; }

}  // namespace

TEST_CASE("rewriting examples") {
  auto A1 = symbolic_algebra(Params::powers({1}));
  // x_1 y_1 -> q_1 y_1 x_1 + 1
  Elem e = A1.normalize(parse_word("x1 y1", 1));
  CHECK(e == A1.add(term({0, 1}, QRat::q()), A1.scalar(QRat(1))));
  auto A2 = symbolic_algebra(Params::powers({1, 2}));
  CHECK(A2.normalize(parse_word("y1 y2", 2)) == term({0, 1}, QRat(1)));
  CHECK(A2.normalize(parse_word("y2 y1", 2)) == term({0, 1}, QRat(1)));
  CHECK(A2.normalize(parse_word("x2 y1", 2)) == term({0, 3}, QRat::q()));
  CHECK(A2.normalize(parse_word("x1 y2", 2)) == term({1, 2}, QRat(1)));
  // x_1 x_2 = q_1 x_2 x_1
  CHECK(A2.normalize(parse_word("x2 x1", 2)) == term({2, 3}, QRat::q_pow(-1)));
}

TEST_CASE("z elements") {
  auto A = symbolic_algebra(Params::powers({1, 2, 3}));
  CHECK(A.z_closed(0) == A.scalar(QRat(1)));
  CHECK(A.z_closed(1) == A.add(A.scalar(QRat(1)), term({0, 3}, QRat::q() - QRat(1))));
  CHECK(A.sub(A.z_closed(2), A.z_closed(1)) == term({1, 4}, QRat::q_pow(2) - QRat(1)));
  for (int i = 1; i <= 3; ++i) CHECK(A.z_commutator(i) == A.z_closed(i));
}

TEST_CASE("general lambda keeps the rewriting confluent") {
  Params p = parse_params("q,q^2,q^-1", "1,q,2;q^-1,1,q^3;1/2,q^-3,1");
  auto A = symbolic_algebra(p);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Word w(2 + trial % 7);
    for (auto& a : w) a = static_cast<int>(rng() % 6);
    std::mt19937_64 r1(rng()), r2(rng());
    auto a = A.normalize(w);
    CHECK(a == A.normalize(w, &r1));
    CHECK(a == A.normalize(w, &r2));
  }
  Params bad = p;
  bad.lambda[0][1] = QRat(3);
  CHECK_THROWS(bad.validate());
}

TEST_CASE("suites") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> k;
    for (int i = 1; i <= n; ++i) k.push_back(i * i);
    Params p = Params::powers(k);
    for (const auto& s : suite_names()) {
      Report sym = verify_qweyl_suite(p, s, {});
      CHECK_MESSAGE(sym.pass(), s << " n=" << n);
      SuiteConfig c;
      c.mode = Mode::RandomEval;
      Report num = verify_qweyl_suite(p, s, c);
      CHECK_MESSAGE(num.pass(), s << " n=" << n);
    }
  }
}

TEST_CASE("rank two z relations") {
  auto A = symbolic_algebra(Params::powers({1, 1}));
  CHECK(A.mul(A.z_closed(2), A.y(1)) == A.scale(QRat::q(), A.mul(A.y(1), A.z_closed(2))));
  CHECK(A.mul(A.z_closed(1), A.y(2)) == A.mul(A.y(2), A.z_closed(1)));
  CHECK(A.mul(A.z_closed(1), A.y(1)) == A.scale(QRat::q(), A.mul(A.y(1), A.z_closed(1))));
}

TEST_CASE("plane isomorphism image") {
  auto s = noether_spec(1);
  SkewElem yp = plane_iso_image(), x = SkewElem::x(s, 1);
  CHECK(yp * x - MultiRat::q_pow(1, 1) * (x * yp) == SkewElem::one(s));
}

TEST_CASE("z' exponent matrix") {
  CHECK(skewnormal::quantum_plane_exponents(zprime_matrix({1, 4, 2})) == std::vector<Int>{1, 2, 4});
}

TEST_CASE("word syntax") {
  CHECK(parse_word("x1 y2 x1", 2) == Word{2, 1, 2});
  CHECK(format_word(Word{2, 1, 2}, 2) == "x1 y2 x1");
  CHECK_THROWS(parse_word("z1", 2));
  CHECK_THROWS(parse_word("x3", 2));
}
