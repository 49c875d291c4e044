#include "qnoether/expr.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace qn {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.power != b.power || a.opposite != b.opposite) return false;
  if (a.kind == Expr::Kind::Int && !(a.value == b.value)) return false;
  if (a.kind == Expr::Kind::Gen && (a.name != b.name || a.idx != b.idx)) return false;
  if (a.kids.size() != b.kids.size()) return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!(*a.kids[i] == *b.kids[i])) return false;
  return true;
}

bool same_tree(const ExprPtr& a, const ExprPtr& b) { return *a == *b; }

namespace ex {

namespace {
ExprPtr node(Expr::Kind k, std::vector<ExprPtr> kids = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->kids = std::move(kids);
  return e;
}
}  // namespace

ExprPtr lit(const Int& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Int;
  e->value = v;
  return e;
}
ExprPtr q() { return node(Expr::Kind::Q); }
ExprPtr qpow(int k) { return k == 0 ? lit(Int(1)) : k == 1 ? q() : pow(q(), k); }
ExprPtr gen(const std::string& name, std::vector<int> idx) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Gen;
  e->name = name;
  e->idx = std::move(idx);
  return e;
}
ExprPtr add(ExprPtr a, ExprPtr b) { return node(Expr::Kind::Add, {std::move(a), std::move(b)}); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return node(Expr::Kind::Sub, {std::move(a), std::move(b)}); }
ExprPtr neg(ExprPtr a) { return node(Expr::Kind::Neg, {std::move(a)}); }
ExprPtr mul(ExprPtr a, ExprPtr b, bool opposite) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Mul;
  e->opposite = opposite;
  e->kids = {std::move(a), std::move(b)};
  return e;
}
ExprPtr mul3(ExprPtr a, ExprPtr b, ExprPtr c, bool opposite) {
  return mul(mul(std::move(a), std::move(b), opposite), std::move(c), opposite);
}
ExprPtr pow(ExprPtr a, int k) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Pow;
  e->power = k;
  e->kids = {std::move(a)};
  return e;
}
ExprPtr qcomm(ExprPtr a, ExprPtr b, int k) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::QComm;
  e->power = k;
  e->kids = {std::move(a), std::move(b)};
  return e;
}
ExprPtr sum(const std::vector<ExprPtr>& terms) {
  if (terms.empty()) return lit(Int(0));
  ExprPtr r = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) r = add(r, terms[i]);
  return r;
}

}  // namespace ex

int generator_arity(const std::string& name) {
  static const std::set<std::string> one = {"x", "y", "e", "t", "X", "Y", "E+", "E-", "K"};
  static const std::set<std::string> two = {"ek", "Xmi", "dmi"};
  if (one.count(name)) return 1;
  if (two.count(name)) return 2;
  return -1;
}

namespace {

bool negative_power_ok(const Expr& base) {
  if (base.kind == Expr::Kind::Q) return true;
  if (base.kind != Expr::Kind::Gen) return false;
  return base.name == "x" || base.name == "X" || base.name == "Xmi" || base.name == "K";
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool digit_at(size_t p) const { return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p])); }

  std::string digits() {
    skip();
    size_t b = pos_;
    while (digit_at(pos_)) ++pos_;
    if (b == pos_) fail("expected integer");
    return s_.substr(b, pos_ - b);
  }
  int small_int() {
    bool neg = accept('-');
    std::string d = digits();
    if (d.size() > 6) fail("integer too large");
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+'))
        e = ex::add(e, term());
      else if (accept('-'))
        e = ex::sub(e, term());
      else
        return e;
    }
  }
  ExprPtr term() {
    ExprPtr e = unary();
    while (accept('*')) e = ex::mul(e, unary());
    return e;
  }
  ExprPtr unary() {
    if (accept('-')) return ex::neg(unary());
    return power();
  }
  ExprPtr power() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    size_t at = pos_;
    int k = small_int();
    if (k < 0 && !negative_power_ok(*base)) {
      pos_ = at;
      fail("negative exponent needs a base variable");
    }
    return ex::pow(base, k);
  }
  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ex::lit(Int(digits()));
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "q") return ex::q();
    if (name == "qc") {
      expect('(');
      ExprPtr a = expr();
      expect(',');
      ExprPtr b = expr();
      expect(',');
      int k = small_int();
      expect(')');
      return ex::qcomm(a, b, k);
    }
    if (name == "E" && pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-') && digit_at(pos_ + 1)) {
      name += s_[pos_++];
      return ex::gen(name, {std::stoi(digits())});
    }
    if (name == "K" && digit_at(pos_)) return ex::gen(name, {std::stoi(digits())});
    int ar = generator_arity(name);
    if (ar < 0 || name == "E+" || name == "E-" || name == "K") {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    expect('[');
    std::vector<int> idx{small_int()};
    while (accept(',')) idx.push_back(small_int());
    expect(']');
    if (static_cast<int>(idx.size()) != ar) {
      pos_ = start;
      fail("generator '" + name + "' takes " + std::to_string(ar) + " indices");
    }
    return ex::gen(name, idx);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

enum Prec { kSum = 1, kProd = 2, kUnary = 3, kPow = 4, kAtom = 5 };

int prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return kSum;
    case Expr::Kind::Mul:
      return kProd;
    case Expr::Kind::Neg:
      return kUnary;
    case Expr::Kind::Pow:
      return kPow;
    case Expr::Kind::Int:
      return e.value.sign() < 0 ? kUnary : kAtom;
    default:
      return kAtom;
  }
}

void print(std::ostream& os, const Expr& e, int minp) {
  bool paren = prec(e) < minp;
  if (paren) os << '(';
  switch (e.kind) {
    case Expr::Kind::Int:
      os << e.value;
      break;
    case Expr::Kind::Q:
      os << 'q';
      break;
    case Expr::Kind::Gen:
      if (e.name == "E+" || e.name == "E-" || e.name == "K") {
        os << e.name << e.idx[0];
      } else {
        os << e.name << '[';
        for (size_t i = 0; i < e.idx.size(); ++i) os << (i ? "," : "") << e.idx[i];
        os << ']';
      }
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print(os, *e.kids[0], kSum);
      os << (e.kind == Expr::Kind::Add ? " + " : " - ");
      print(os, *e.kids[1], kProd);
      break;
    case Expr::Kind::Mul: {
      const Expr& a = *e.kids[e.opposite ? 1 : 0];
      const Expr& b = *e.kids[e.opposite ? 0 : 1];
      print(os, a, kProd);
      os << '*';
      print(os, b, kUnary);
      break;
    }
    case Expr::Kind::Neg:
      os << '-';
      print(os, *e.kids[0], kUnary);
      break;
    case Expr::Kind::Pow:
      print(os, *e.kids[0], kAtom);
      os << '^' << e.power;
      break;
    case Expr::Kind::QComm:
      os << "qc(";
      print(os, *e.kids[0], kSum);
      os << ", ";
      print(os, *e.kids[1], kSum);
      os << ", " << e.power << ')';
      break;
  }
  if (paren) os << ')';
}

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Gen) out.insert(e.name);
  for (const auto& k : e.kids) collect(*k, out);
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string print_expression(const ExprPtr& e) {
  std::ostringstream os;
  print(os, *e, kSum);
  return os.str();
}

std::vector<std::string> generator_names(const ExprPtr& e) {
  std::set<std::string> s;
  collect(*e, s);
  return {s.begin(), s.end()};
}

}  // namespace qn
