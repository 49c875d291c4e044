#pragma once

#include <map>
#include <string>
#include <vector>

#include "qnoether/expr.hpp"
#include "qnoether/randeval.hpp"
#include "qnoether/report.hpp"
#include "qnoether/skew.hpp"
#include "qnoether/weyl.hpp"

namespace qn::uq {

// Base variables X_{mi}, 1 <= i <= m <= N, at slots var(m,i) = m(m-1)/2 + i;
// units delta^{mi}, m <= N-1, at index unit(m,i) = m(m-1)/2 + i - 1, with
// delta^{mi} X_{mi} = q^{-1} X_{mi} delta^{mi}.
int var_slot(int m, int i);
int unit_index(int m, int i);
SpecPtr gt_spec(int N);

MultiRat X(const SpecPtr& s, int m, int i);

enum class Gen { Eplus, Eminus, K, Kinv };

// Coefficient A_{mi}^{+-} and A_m^0 in the twisted Laurent ring's base field.
MultiRat a_coeff(const SpecPtr& s, int m, int i, bool plus);
MultiRat a0_coeff(const SpecPtr& s, int m);

// phi(E_m^{+-}) = sum_i (+-delta^{mi}) A_{mi}^{+-}; phi(K_m^{+-1}) = (A_m^0)^{+-1}.
SkewElem phi(int N, Gen g, int m);

// Element of G = prod_m W(D_m); rows[m-1] has rank m.
struct GElem {
  std::vector<SignedPerm> rows;
  static GElem identity(int N);
  static GElem single(int N, const SignedPerm& g);  // g in the factor of its rank
};
// Generators of every factor, each embedded as a G element.
std::vector<GElem> g_generators(int N);

// Conjugation: delta^{mi} -> delta^{m zeta(i)}. Signed: delta^{mi} ->
// (-1)^{alpha_mi} delta^{m zeta(i)}. Both are ring automorphisms; only Signed
// fixes phi(E_m) under sign changes for m >= 2.
enum class UnitSign { Conjugation, Signed };
BaseMap g_map(const GElem& g, const SpecPtr& s, UnitSign u = UnitSign::Signed);
SkewElem g_act(const GElem& g, const SkewElem& a, UnitSign u = UnitSign::Signed);
bool g_invariant(const SkewElem& a, int N, UnitSign u = UnitSign::Signed);

// x_i -> X_{mi}^{-1}, y_i -> X_{mi}^{-1} delta^{mi} from the rank-m Noether ring.
// Intertwines Convention::Standard with UnitSign::Conjugation and
// Convention::YFixed with UnitSign::Signed.
BaseMap iota_map(int N, int m);

// Action on the formal basis vector [lambda + gamma]; X_{mi} stands for
// q^{lambda~_{mi}}. Keys are output shifts.
using GTVector = std::map<std::vector<int>, MultiRat, ExpLess>;
GTVector gt_apply(const SkewElem& a, const std::vector<int>& gamma);
GTVector gt_apply(const SkewElem& a, const GTVector& v);

// Evaluation of E+m, E-m, Km, Xmi[m,i], dmi[m,i] trees.
SkewElem eval_uq(int N, const ExprPtr& e);
NumResolver uq_resolver(int N);

std::vector<std::string> suite_names();
std::vector<Task> uq_tasks(int N, const std::string& suite, const SuiteConfig& cfg);
Report verify_uq_suite(int N, const std::string& suite, const SuiteConfig& cfg, const InstanceSink& sink = {});

}  // namespace qn::uq
