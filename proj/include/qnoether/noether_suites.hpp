#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qnoether/eval.hpp"
#include "qnoether/noether.hpp"
#include "qnoether/randeval.hpp"
#include "qnoether/report.hpp"
#include "qnoether/weyl.hpp"

namespace qn::noether {

// Shared, lazily extended data for one rank; safe to use from several tasks.
class NoetherContext {
 public:
  explicit NoetherContext(int n);
  int n() const { return n_; }
  // e/t normal-form levels, built on first use.
  const NoetherData& data();
  const ExponentData& exponents() const { return ex_; }

  Materializer& materializer();
  const SkewGens& gens() { return materializer().gens(); }
  // Level element in the twisted Laurent ring; throws GuardExceeded above the
  // materialization bound unless forced.
  SkewElem level_skew(int i, int k, bool force = false);
  static constexpr int kMaterializeDegree = 5;

  // Expression for e_k^{(i)} over the generators e[d], t[j].
  ExprPtr level_expr(int i, int k) const;

  // Symbolic evaluation in the e/t normal form (generators e t ek X Y).
  ETElem eval_et(const ExprPtr& e);
  // Symbolic evaluation in the twisted Laurent ring (also x y).
  SkewElem eval_skew(const ExprPtr& e);
  // Whether the tree only uses generators the e/t algebra knows.
  static bool et_only(const ExprPtr& e);

  NumResolver resolver();
  SpecPtr spec() { return gens().spec; }

 private:
  int n_;
  std::once_flag data_once_;
  NoetherData data_;
  ExponentData ex_;
  std::vector<std::vector<ExprPtr>> level_exprs_;
  std::once_flag mat_once_;
  std::unique_ptr<Materializer> mat_;
  std::mutex skew_mu_;
  std::map<std::pair<int, int>, SkewElem> skew_levels_;
};

std::vector<std::string> noether_suite_names();

// Relation instances of a suite; throws GuardExceeded or std::invalid_argument.
std::vector<Task> noether_tasks(const std::shared_ptr<NoetherContext>& ctx, const std::string& suite,
                                const SuiteConfig& cfg);
Report verify_suite(int n, const std::string& suite, const SuiteConfig& cfg, const InstanceSink& sink = {});

enum class Engine { Auto, Skew };

// Checks lhs == rhs in the requested mode with this rank's generators. Auto
// uses the e/t normal form whenever the tree allows it.
Outcome check_identity(NoetherContext& ctx, const ExprPtr& lhs, const ExprPtr& rhs, const SuiteConfig& cfg,
                       uint64_t seed, Engine engine = Engine::Auto);

// The x_i -> x_i^2 embedding checks and the D_n eigenspace split checks.
struct BnDnTasks {
  std::vector<Task> bn;
  std::vector<Task> dn;
};
BnDnTasks bn_dn_maps(int n, uint64_t seed, int samples = 10);

// Expression for a Laurent polynomial in q.
ExprPtr lpoly_expr(const LPoly& c);

}  // namespace qn::noether
