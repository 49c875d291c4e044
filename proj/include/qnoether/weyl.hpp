#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qnoether/skew.hpp"

namespace qn {

enum class GroupType { A, B, D };
enum class Convention { Standard, YFixed };

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// g(x_i) = (-1)^{alpha_i} x_{perm(i)} with 0-based perm; bit i of signs is alpha_i.
struct SignedPerm {
  std::vector<int> perm;
  uint32_t signs = 0;
  GroupType type = GroupType::A;

  static SignedPerm identity(int n, GroupType t);
  static SignedPerm transposition(int n, int i, int j, GroupType t);  // 1-based
  static SignedPerm flips(int n, uint32_t mask, GroupType t);
  int n() const { return static_cast<int>(perm.size()); }
  int sign_at(int i) const { return (signs >> i) & 1u ? -1 : 1; }
  bool valid() const;
  // (g*h)(x) = g(h(x)).
  friend SignedPerm operator*(const SignedPerm& g, const SignedPerm& h);
  SignedPerm inverse() const;
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) = default;

  // Cycle notation followed by a sign string, e.g. "(1 2)(3)+-+".
  static SignedPerm parse(const std::string& s, int n, GroupType t);
  std::string str() const;
};

std::vector<SignedPerm> enumerate_group(GroupType t, int n);
// Adjacent transpositions plus one sign pattern (none for A, e_1 for B,
// e_1+e_2 for D).
std::vector<SignedPerm> generators(GroupType t, int n);

// Map realizing g on a ring whose first n variables are x_1..x_n and first n
// monoid units are y_1..y_n.
BaseMap weyl_map(const SignedPerm& g, const SpecPtr& spec, Convention c);
SkewElem act(const SignedPerm& g, const SkewElem& a, Convention c);
bool is_invariant(const SkewElem& a, GroupType t, int n, Convention c);
bool is_invariant_full(const SkewElem& a, GroupType t, int n, Convention c);
// |G|^{-1} sum_g g(a); OpenMP reduction over group elements.
SkewElem reynolds(const SkewElem& a, GroupType t, int n, Convention c);
SkewElem reynolds_serial(const SkewElem& a, GroupType t, int n, Convention c);

}  // namespace qn
