#include "qnoether/randeval.hpp"

#include <stdexcept>

#include "qnoether/qrat.hpp"

namespace qn {

namespace {

void put(NumVal& v, const std::vector<int>& k, Fp c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

NumVal combine(const NumVal& a, const NumVal& b, int sign) {
  NumVal r = a;
  for (const auto& [k, c] : b) put(r, k, sign > 0 ? c : -c);
  return r;
}

std::vector<int> plus(const std::vector<int>& a, const std::vector<int>& b, int sign = 1) {
  std::vector<int> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += sign * b[i];
  return r;
}

}  // namespace

NumericEvaluator::NumericEvaluator(SpecPtr spec, NumResolver resolve, NumPoint pt)
    : spec_(std::move(spec)), resolve_(std::move(resolve)), pt_(std::move(pt)) {
  if (static_cast<int>(pt_.x.size()) != spec_->v) throw std::invalid_argument("point dimension mismatch");
  q_ = Fp::from_mpq(pt_.q);
  if (q_.is_zero()) throw DivisionByZero("q vanishes mod p");
  qinv_ = q_.inverse();
  for (const auto& x : pt_.x) x_.push_back(Fp::from_mpq(x));
}

NumVal NumericEvaluator::operator()(const ExprPtr& e) { return at(*e, std::vector<int>(spec_->v, 0)); }

Fp NumericEvaluator::qpow(int k) const { return (k >= 0 ? q_ : qinv_).pow(static_cast<uint64_t>(std::abs(k))); }

const NumGen& NumericEvaluator::resolved(const Expr& e) {
  auto it = gens_.find(&e);
  if (it == gens_.end()) it = gens_.emplace(&e, resolve_(e)).first;
  return it->second;
}

const NumVal& NumericEvaluator::at(const Expr& e, const std::vector<int>& shift) {
  Key key{&e, shift};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  NumVal v = compute(e, shift);
  return memo_.emplace(std::move(key), std::move(v)).first->second;
}

NumVal NumericEvaluator::leaf(const SkewElem& a, const std::vector<int>& shift) {
  std::vector<Fp> pt{q_};
  for (size_t j = 0; j < x_.size(); ++j) pt.push_back(x_[j] * qpow(shift[j]));
  NumVal r;
  for (const auto& [beta, f] : a.terms()) put(r, beta, f.eval(pt));
  return r;
}

NumVal NumericEvaluator::product(const Expr& a, const Expr& b, const std::vector<int>& shift) {
  NumVal r;
  const NumVal va = at(a, shift);
  for (const auto& [beta, ca] : va) {
    const NumVal& vb = at(b, plus(shift, spec_->shift_of(beta)));
    for (const auto& [gamma, cb] : vb) put(r, plus(beta, gamma), ca * cb);
  }
  return r;
}

NumVal NumericEvaluator::inverse(const Expr& a, const std::vector<int>& shift) {
  const NumVal& va = at(a, shift);
  if (va.size() != 1) throw std::invalid_argument("negative power of a non-monomial value");
  std::vector<int> beta = va.begin()->first;
  const NumVal& vs = at(a, plus(shift, spec_->shift_of(beta), -1));
  auto it = vs.find(beta);
  if (it == vs.end()) throw DivisionByZero("inverse of a vanishing value");
  std::vector<int> nb(beta.size());
  for (size_t k = 0; k < beta.size(); ++k) nb[k] = -beta[k];
  return NumVal{{nb, it->second.inverse()}};
}

NumVal NumericEvaluator::compute(const Expr& e, const std::vector<int>& shift) {
  using K = Expr::Kind;
  const std::vector<int> zero(spec_->m, 0);
  switch (e.kind) {
    case K::Int: {
      NumVal r;
      put(r, zero, Fp::from_mpz(e.value.to_mpz()));
      return r;
    }
    case K::Q:
      return NumVal{{zero, q_}};
    case K::Gen: {
      const NumGen& g = resolved(e);
      if (g.elem) return leaf(*g.elem, shift);
      if (!g.macro) throw std::invalid_argument("unresolved generator " + e.name);
      return at(*g.macro, shift);
    }
    case K::Add:
      return combine(at(*e.kids[0], shift), at(*e.kids[1], shift), 1);
    case K::Sub:
      return combine(at(*e.kids[0], shift), at(*e.kids[1], shift), -1);
    case K::Neg:
      return combine(NumVal{}, at(*e.kids[0], shift), -1);
    case K::Mul:
      return e.opposite ? product(*e.kids[1], *e.kids[0], shift) : product(*e.kids[0], *e.kids[1], shift);
    case K::Pow: {
      const Expr& b = *e.kids[0];
      if (b.kind == K::Q) return NumVal{{zero, qpow(e.power)}};
      // Powers as repeated products of values at successive shifts.
      NumVal acc{{zero, Fp::raw(1)}};
      for (int i = 0; i < std::abs(e.power); ++i) {
        NumVal next;
        for (const auto& [beta, ca] : acc) {
          std::vector<int> s2 = plus(shift, spec_->shift_of(beta));
          const NumVal vb = e.power >= 0 ? at(b, s2) : inverse(b, s2);
          for (const auto& [gamma, cb] : vb) put(next, plus(beta, gamma), ca * cb);
        }
        acc = std::move(next);
      }
      return acc;
    }
    case K::QComm: {
      NumVal ab = product(*e.kids[0], *e.kids[1], shift);
      NumVal ba = product(*e.kids[1], *e.kids[0], shift);
      Fp c = qpow(e.power);
      for (auto& [k, v] : ba) v *= c;
      return combine(ab, ba, -1);
    }
  }
  throw std::invalid_argument("bad expression node");
}

NumPoint random_point(std::mt19937_64& rng, int v, int64_t bound) {
  std::uniform_int_distribution<int64_t> num(-bound, bound), den(1, bound);
  auto draw = [&] {
    for (;;) {
      int64_t a = num(rng);
      if (a == 0) continue;
      mpq_class r(mpz_class(std::to_string(a)), mpz_class(std::to_string(den(rng))));
      r.canonicalize();
      return r;
    }
  };
  NumPoint p;
  do p.q = draw();
  while (p.q == 1 || p.q == -1);
  for (int j = 0; j < v; ++j) p.x.push_back(draw());
  return p;
}

RandomCheck random_eval_check(const ExprPtr& lhs, const ExprPtr& rhs, const SpecPtr& spec,
                              const NumResolver& resolve, uint64_t seed, int trials, int max_resamples) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  RandomCheck r;
  while (r.trials < trials) {
    NumPoint p = random_point(rng, spec->v);
    try {
      NumericEvaluator ev(spec, resolve, p);
      NumVal a = ev(lhs);
      NumVal b = ev(rhs);
      ++r.trials;
      if (a == b) {
        ++r.agreed;
      } else {
        r.pass = false;
        r.detail = "disagree at trial " + std::to_string(r.trials) + " (q = " + p.q.get_str() + ")";
        return r;
      }
    } catch (const DivisionByZero&) {
      if (++r.resamples > max_resamples) throw std::runtime_error("resample limit exceeded");
    }
  }
  r.detail = "agree " + std::to_string(r.agreed) + "/" + std::to_string(r.trials) + " (probabilistic)";
  return r;
}

}  // namespace qn
