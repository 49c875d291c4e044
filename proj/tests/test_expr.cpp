#include <doctest.h>

#include <random>

#include "qnoether/expr.hpp"

using namespace qn;

TEST_CASE("parse shapes") {
  auto e = parse_expression("t[1]*e[2] - q*e[2]*t[1]");
  REQUIRE(e->kind == Expr::Kind::Sub);
  CHECK(e->kids[0]->kind == Expr::Kind::Mul);
  auto c = parse_expression("qc(Y[3], X[1], 5)");
  REQUIRE(c->kind == Expr::Kind::QComm);
  CHECK(c->power == 5);
  CHECK(c->kids[0]->name == "Y");
  CHECK(c->kids[1]->idx == std::vector<int>{1});
  auto inv = parse_expression("x[1]^-1");
  REQUIRE(inv->kind == Expr::Kind::Pow);
  CHECK(inv->power == -1);
  CHECK(same_tree(parse_expression("2*q^-3*ek[1,0]"), ex::mul(ex::mul(ex::lit(Int(2)), ex::qpow(-3)), ex::gen("ek", {1, 0}))));
  CHECK(parse_expression("K2")->name == "K");
  CHECK(parse_expression("E+1")->idx == std::vector<int>{1});
}

TEST_CASE("precedence") {
  CHECK(same_tree(parse_expression("e[1]+e[2]*t[1]^2"),
                  ex::add(ex::gen("e", {1}), ex::mul(ex::gen("e", {2}), ex::pow(ex::gen("t", {1}), 2)))));
  CHECK(same_tree(parse_expression("-t[1]^2"), ex::neg(ex::pow(ex::gen("t", {1}), 2))));
  CHECK(same_tree(parse_expression("e[1]-e[2]-e[3]"),
                  ex::sub(ex::sub(ex::gen("e", {1}), ex::gen("e", {2})), ex::gen("e", {3}))));
}

TEST_CASE("positioned errors") {
  auto where = [](const std::string& text) {
    try {
      parse_expression(text);
    } catch (const ParseError& e) {
      return std::pair{e.line, e.col};
    }
    return std::pair{0, 0};
  };
  CHECK(where("t[1] *") == std::pair{1, 7});
  CHECK(where("e[1]\n + foo[2]") == std::pair{2, 4});
  CHECK(where("ek[1]").first == 1);
  CHECK(where("t[1]^-1").first == 1);
  CHECK(where("t[1]^x").first == 1);
  CHECK(where("qc(t[1], t[2])").first == 1);
  CHECK(where("(e[1]").first == 1);
}

TEST_CASE("print then parse is the identity on trees") {
  const char* samples[] = {
      "t[1]*e[2] - q*e[2]*t[1]", "qc(Y[3], X[1], 5)", "x[1]^-1", "-(e[1]-e[2])*t[1]", "q^-2*(t[1]+t[2])^3",
      "-3 - -2", "e[1]-(e[2]-e[3])", "2*(-e[1])", "Xmi[2,1]^-2*dmi[2,1]", "E+1*E-1 - E-1*E+1", "-q^2",
  };
  for (const char* s : samples) {
    auto a = parse_expression(s);
    CHECK_MESSAGE(same_tree(parse_expression(print_expression(a)), a), s);
  }
}

TEST_CASE("random trees round trip") {
  std::mt19937_64 rng(17);
  std::function<ExprPtr(int)> build = [&](int depth) -> ExprPtr {
    std::uniform_int_distribution<int> k(0, depth > 0 ? 8 : 2);
    switch (k(rng)) {
      case 0: return ex::lit(Int(static_cast<int64_t>(rng() % 7) - 3));
      case 1: return ex::qpow(static_cast<int>(rng() % 5) - 2);
      case 2: return ex::gen(rng() % 2 ? "t" : "x", {1 + static_cast<int>(rng() % 3)});
      case 3: return ex::add(build(depth - 1), build(depth - 1));
      case 4: return ex::sub(build(depth - 1), build(depth - 1));
      case 5: return ex::neg(build(depth - 1));
      case 6: return ex::mul(build(depth - 1), build(depth - 1), rng() % 2);
      case 7: return ex::pow(ex::gen("x", {1}), static_cast<int>(rng() % 5) - 2);
      default: return ex::qcomm(build(depth - 1), build(depth - 1), static_cast<int>(rng() % 3));
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    ExprPtr a = build(4);
    std::string text = print_expression(a);
    ExprPtr b = parse_expression(text);
    CHECK_MESSAGE(print_expression(b) == text, text);
    CHECK_MESSAGE(same_tree(parse_expression(print_expression(b)), b), text);
  }
}
