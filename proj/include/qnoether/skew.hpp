#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qnoether/multirat.hpp"

namespace qn {

// Twisted Laurent ring over Q(q)(x_1..x_v) with monoid Z^m. Moving delta^beta
// left past a coefficient f turns it into f(q^{A^T beta} x):
//   delta^beta * f = f(q^{A^T beta} x) * delta^beta.
struct SkewSpec {
  int v = 0;
  int m = 0;
  std::vector<std::vector<int>> A;     // m rows of length v
  std::vector<std::string> var_names;  // v + 1 entries, slot 0 is "q"
  std::vector<std::string> unit_names; // m entries

  std::vector<int> shift_of(const std::vector<int>& beta) const;  // A^T beta
  bool operator==(const SkewSpec& o) const { return v == o.v && m == o.m && A == o.A; }
};
using SpecPtr = std::shared_ptr<const SkewSpec>;

// A = k * identity on n variables; k = 1 gives the Noether ring.
SpecPtr noether_spec(int n, int k = 1);

struct ExpLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class SkewElem {
 public:
  using Map = std::map<std::vector<int>, MultiRat, ExpLess>;

  SkewElem() = default;
  explicit SkewElem(SpecPtr s) : spec_(std::move(s)) {}
  static SkewElem make(SpecPtr s, const std::vector<std::pair<std::vector<int>, MultiRat>>& terms);
  static SkewElem constant(SpecPtr s, const MultiRat& c);
  static SkewElem one(SpecPtr s) { return constant(s, MultiRat(s->v, Int(1))); }
  static SkewElem x(SpecPtr s, int j);     // base variable x_j
  static SkewElem unit(SpecPtr s, int k, int power = 1);  // delta_k^power

  const SpecPtr& spec() const { return spec_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  // Coefficient at a given exponent (zero if absent).
  MultiRat coeff(const std::vector<int>& beta) const;

  SkewElem operator-() const;
  friend SkewElem operator+(const SkewElem& a, const SkewElem& b);
  friend SkewElem operator-(const SkewElem& a, const SkewElem& b);
  // Left scalar multiplication f * a.
  friend SkewElem operator*(const MultiRat& f, const SkewElem& a);
  friend SkewElem operator*(const SkewElem& a, const SkewElem& b) { return mul(a, b, false); }
  SkewElem& operator+=(const SkewElem& b);
  SkewElem& operator-=(const SkewElem& b) { return *this += -b; }

  // Normal-form product; opposite=true returns b*a.
  static SkewElem mul(const SkewElem& a, const SkewElem& b, bool opposite);
  SkewElem pow(unsigned e) const;
  // Inverse of a single-term element c * delta^beta.
  SkewElem unit_inverse() const;

  friend bool operator==(const SkewElem& a, const SkewElem& b);

  // Weighted exponent sum shared by all terms, or nullopt when terms disagree.
  // Throws std::invalid_argument on the zero element.
  std::optional<int> y_degree(const std::vector<int>& weights) const;

  SkewElem& compactify();
  std::string str() const;

 private:
  void check(const SkewElem& o) const;
  SpecPtr spec_;
  Map t_;
};

// [a, b]_c = a b - c b a.
SkewElem qcomm(const SkewElem& a, const SkewElem& b, const MultiRat& c);

struct IncompatibleMap : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Ring map determined by images of base variables (Laurent monomials with
// signs) and monoid units (sign * Laurent monomial coefficient * delta^mu).
struct BaseMap {
  SpecPtr target;
  LaurentMap xmap = LaurentMap::identity();
  struct UnitImage {
    int sign = 1;
    LExp coeff{};             // Laurent monomial in the target variables
    std::vector<int> mu;      // target monoid exponent
  };
  std::vector<UnitImage> units;
};

// Checks the images satisfy the source commutation relations in the target;
// throws IncompatibleMap otherwise.
void validate_map(const SkewSpec& source, const BaseMap& map);
SkewElem substitute_base(const SkewElem& a, const BaseMap& map, bool validate = true);

}  // namespace qn
