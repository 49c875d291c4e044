#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qnoether/noether_suites.hpp"
#include "qnoether/qweyl.hpp"
#include "qnoether/skewnormal.hpp"
#include "qnoether/uqgln.hpp"

using json = nlohmann::json;
using namespace qn;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kGuard = 3 };

struct Options {
  int n = 0;
  int N = 0;
  std::string suite;
  std::string mode = "symbolic";
  uint64_t seed = 1;
  int trials = 20;
  std::string format = "text";
  bool force = false;
  bool no_timing = false;
  bool levels = false;
  std::string matrix;
  std::string qbar;
  std::string lambda = "ones";
  std::vector<std::string> words;
  std::string lhs, rhs;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SuiteConfig config(const Options& o) {
  SuiteConfig c;
  if (o.mode == "symbolic") c.mode = Mode::Symbolic;
  else if (o.mode == "random-eval") c.mode = Mode::RandomEval;
  else throw UsageError("mode must be symbolic or random-eval");
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  c.seed = o.seed;
  c.trials = o.trials;
  c.force = o.force;
  return c;
}

bool json_out(const Options& o) { return o.format == "json"; }

json exp_terms(const std::vector<std::pair<std::vector<int>, QRat>>& ts) {
  json a = json::array();
  for (const auto& [e, c] : ts) a.push_back({{"exp", e}, {"coeff", c.str()}});
  return a;
}

json to_json(const MultiRat& f) { return {{"num", exp_terms(f.num_terms())}, {"den", exp_terms(f.den_terms())}}; }

json to_json(const SkewElem& a) {
  const auto& s = *a.spec();
  json spec = {{"v", s.v}, {"m", s.m}, {"A", s.A}, {"vars", s.var_names}, {"units", s.unit_names}};
  json terms = json::array();
  for (const auto& [beta, f] : a.terms()) terms.push_back({{"exp", beta}, {"coeff", to_json(f)}});
  return {{"spec", spec}, {"terms", terms}};
}

std::string indices_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

// Streams one line per instance, then a summary line.
class Printer {
 public:
  Printer(const Options& o, std::string suite, int n, Mode mode)
      : o_(o), suite_(std::move(suite)), n_(n), mode_(mode) {}

  void operator()(const Instance& i) const {
    if (json_out(o_)) {
      json j = {{"suite", suite_}, {"n", n_},        {"mode", mode_name(mode_)}, {"relation", i.relation},
                {"indices", i.indices}, {"status", i.pass ? "pass" : "fail"}, {"detail", i.detail}};
      if (!o_.no_timing) j["millis"] = i.millis;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (i.pass ? "  pass " : "  FAIL ") << i.relation << " " << indices_str(i.indices) << "  "
                << i.detail;
      if (!o_.no_timing) std::cout << "  " << i.millis << " ms";
      std::cout << "\n";
    }
    std::cout.flush();
  }

  void summary(const Report& r) const {
    if (json_out(o_)) {
      std::cout << json{{"suite", r.suite}, {"n", r.n},           {"mode", mode_name(r.mode)},
                        {"pass", r.pass()}, {"passed", r.passed()}, {"total", r.instances.size()}}
                       .dump()
                << "\n";
    } else {
      std::cout << r.suite << " n=" << r.n << " " << mode_name(r.mode) << ": " << r.passed() << "/"
                << r.instances.size() << (r.pass() ? " pass" : " FAIL") << "\n";
    }
  }

 private:
  const Options& o_;
  std::string suite_;
  int n_;
  Mode mode_;
};

std::vector<std::string> pick(const std::string& suite, const std::vector<std::string>& all) {
  if (suite.empty() || suite == "all") return all;
  return {suite};
}

int run_suites(const Options& o, int n, const std::vector<std::string>& suites,
               const std::function<Report(const std::string&, const SuiteConfig&, const InstanceSink&)>& run) {
  SuiteConfig cfg = config(o);
  bool ok = true;
  for (const auto& s : suites) {
    Printer p(o, s, n, cfg.mode);
    Report r = run(s, cfg, [&p](const Instance& i) { p(i); });
    p.summary(r);
    ok = ok && r.pass();
  }
  return ok ? kOk : kFail;
}

int cmd_verify(const Options& o) {
  if (o.n < 1) throw UsageError("verify needs -n");
  return run_suites(o, o.n, pick(o.suite, noether::noether_suite_names()),
                    [&](const std::string& s, const SuiteConfig& c, const InstanceSink& k) {
                      return noether::verify_suite(o.n, s, c, k);
                    });
}

int cmd_uq(const Options& o) {
  if (o.N < 1) throw UsageError("uq needs -N");
  return run_suites(o, o.N, pick(o.suite, uq::suite_names()),
                    [&](const std::string& s, const SuiteConfig& c, const InstanceSink& k) {
                      return uq::verify_uq_suite(o.N, s, c, k);
                    });
}

int cmd_qweyl(const Options& o) {
  if (o.qbar.empty()) throw UsageError("qweyl needs --qbar");
  qweyl::Params p = qweyl::parse_params(o.qbar, o.lambda);
  if (!o.words.empty()) {
    auto A = qweyl::symbolic_algebra(p);
    for (const auto& w : o.words) {
      auto nf = A.normalize(qweyl::parse_word(w, p.n));
      if (json_out(o)) {
        json terms = json::array();
        for (const auto& [word, c] : nf) terms.push_back({{"word", qweyl::format_word(word, p.n)}, {"coeff", c.str()}});
        std::cout << json{{"input", w}, {"terms", terms}}.dump() << "\n";
      } else {
        std::cout << w << " = " << qweyl::format_elem(nf, p.n) << "\n";
      }
    }
    if (o.suite.empty()) return kOk;
  }
  return run_suites(o, p.n, pick(o.suite, qweyl::suite_names()),
                    [&](const std::string& s, const SuiteConfig& c, const InstanceSink& k) {
                      return qweyl::verify_qweyl_suite(p, s, c, k);
                    });
}

skewnormal::IntMatrix load_matrix(const std::string& src) {
  // The second spelling is kept for existing scripts.
  std::string rest;
  for (const std::string tag : {"builtin:S:", "builtin:paper-S:"})
    if (src.rfind(tag, 0) == 0) rest = src.substr(tag.size());
  if (!rest.empty()) {
    int n = 0;
    try {
      n = std::stoi(rest);
    } catch (const std::exception&) {
      throw UsageError("builtin matrix rank must be an integer");
    }
    if (n < 1 || n > 12) throw UsageError("builtin matrix rank must be in [1,12]");
    return noether::exponent_data(n).S;
  }
  std::ifstream in(src);
  if (!in) throw UsageError("cannot read matrix file '" + src + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return skewnormal::parse_matrix(ss.str());
}

json matrix_json(const skewnormal::IntMatrix& a) {
  json rows = json::array();
  for (const auto& r : a) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.str());
    rows.push_back(row);
  }
  return rows;
}

int cmd_normal_form(const Options& o) {
  if (o.matrix.empty()) throw UsageError("normal-form needs --matrix");
  auto S = load_matrix(o.matrix);
  auto nf = skewnormal::skew_normal_form(S);
  // Swapping a pair of columns of U flips the sign of that block.
  for (size_t b = 0; b + 1 < nf.D.size(); b += 2)
    if (nf.D[b][b + 1].sign() < 0)
      for (auto& row : nf.U) std::swap(row[b], row[b + 1]);
  nf.D = skewnormal::congruence(S, nf.U);
  bool ok = skewnormal::check_congruence(S, nf.U, nf.D);
  std::vector<Int> ks;
  for (size_t i = 0; i + 1 < nf.D.size(); i += 2) {
    if (nf.D[i][i + 1].is_zero()) break;
    ks.push_back(nf.D[i][i + 1]);
  }
  if (json_out(o)) {
    json k = json::array();
    for (const auto& x : ks) k.push_back(x.str());
    std::cout << json{{"U", matrix_json(nf.U)}, {"D", matrix_json(nf.D)}, {"blocks", k}, {"congruent", ok}}.dump()
              << "\n";
  } else {
    std::cout << "U\n" << skewnormal::format_matrix(nf.U) << "D\n" << skewnormal::format_matrix(nf.D) << "blocks";
    for (const auto& x : ks) std::cout << " " << x.str();
    std::cout << "\ncongruence " << (ok ? "holds" : "FAILS") << "\n";
  }
  return ok ? kOk : kFail;
}

int cmd_gens(const Options& o) {
  if (o.n < 1) throw UsageError("gens needs -n");
  if (o.n > 6 && !o.force) throw GuardExceeded("gens is limited to n = 6 (use --force)");
  auto g = noether::skew_gens(o.n);
  std::vector<std::pair<std::string, SkewElem>> named;
  for (int d = 0; d <= o.n; ++d) named.emplace_back("e" + std::to_string(d), g.e[d]);
  for (int j = 1; j <= o.n; ++j) named.emplace_back("t" + std::to_string(j), g.t[j - 1]);
  for (const auto& [name, a] : named) {
    if (json_out(o)) std::cout << json{{"name", name}, {"element", to_json(a)}}.dump() << "\n";
    else std::cout << name << " = " << a.str() << "\n";
  }
  if (!o.levels) return kOk;
  if (o.n > 4 && !o.force) throw GuardExceeded("level dump is limited to n = 4 (use --force)");
  noether::NoetherContext ctx(o.n);
  const auto& d = ctx.data();
  auto emit = [&](const std::string& name, const noether::ETElem& a) {
    if (json_out(o)) std::cout << json{{"name", name}, {"normal_form", a.str()}}.dump() << "\n";
    else std::cout << name << " = " << a.str() << "\n";
  };
  for (size_t i = 2; i < d.levels.size(); ++i)
    for (size_t k = 0; k < d.levels[i].size(); ++k)
      emit("e" + std::to_string(k) + "^(" + std::to_string(i) + ")", d.levels[i][k]);
  for (int i = 1; i <= o.n; ++i) emit("X" + std::to_string(i), d.X[i - 1]);
  for (int i = 1; i <= o.n; ++i) emit("Y" + std::to_string(i), d.Y[i - 1]);
  return kOk;
}

int cmd_eval(const Options& o) {
  SuiteConfig cfg = config(o);
  ExprPtr lhs = parse_expression(o.lhs), rhs = parse_expression(o.rhs);
  Outcome out;
  int rank = 0;
  if (o.N > 0) {
    rank = o.N;
    if (cfg.mode == Mode::RandomEval) {
      RandomCheck r = random_eval_check(lhs, rhs, uq::gt_spec(o.N), uq::uq_resolver(o.N), cfg.seed, cfg.trials);
      out = {r.pass, r.detail};
    } else {
      SkewElem d = uq::eval_uq(o.N, ex::sub(lhs, rhs));
      out = {d.is_zero(), d.is_zero() ? "twisted Laurent" : "difference " + d.str()};
    }
  } else {
    if (o.n < 1) throw UsageError("eval needs -n or -N");
    rank = o.n;
    noether::NoetherContext ctx(o.n);
    out = noether::check_identity(ctx, lhs, rhs, cfg, cfg.seed);
  }
  if (json_out(o)) {
    std::cout << json{{"n", rank}, {"mode", mode_name(cfg.mode)}, {"lhs", print_expression(lhs)},
                      {"rhs", print_expression(rhs)}, {"status", out.pass ? "equal" : "different"},
                      {"detail", out.detail}}
                     .dump()
              << "\n";
  } else {
    std::cout << (out.pass ? "equal" : "different") << " (" << out.detail << ")\n";
  }
  return out.pass ? kOk : kFail;
}

void common(CLI::App* c, Options& o, bool suites) {
  c->add_option("--mode", o.mode, "symbolic or random-eval")->check(CLI::IsMember({"symbolic", "random-eval"}));
  c->add_option("--seed", o.seed, "random-eval seed");
  c->add_option("--trials", o.trials, "random-eval trials per instance");
  c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c->add_flag("--force", o.force, "ignore size guards");
  if (suites) {
    c->add_option("--suite", o.suite, "suite name or all");
    c->add_flag("--no-timing", o.no_timing, "omit timings for reproducible output");
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification of q-difference invariants and Gelfand-Tsetlin realizations"};
  app.require_subcommand(1);

  auto* gens = app.add_subcommand("gens", "dump the generators e_d and t_j");
  gens->add_option("-n,--rank", o.n)->required();
  gens->add_flag("--levels", o.levels, "also dump recursion levels and X_i, Y_i");
  gens->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  gens->add_flag("--force", o.force);

  auto* verify = app.add_subcommand("verify", "run q-difference Noether suites");
  verify->add_option("-n,--rank", o.n)->required();
  common(verify, o, true);

  auto* nf = app.add_subcommand("normal-form", "skew-symmetric integer normal form");
  nf->add_option("--matrix", o.matrix, "file or builtin:S:n")->required();
  nf->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* qw = app.add_subcommand("qweyl", "quantum Weyl algebra normal forms and suites");
  qw->add_option("--qbar", o.qbar, "q_1,...,q_n, e.g. q,q^2")->required();
  qw->add_option("--lambda", o.lambda, "ones or rows a,b;c,d");
  qw->add_option("words", o.words, "words to normalize, e.g. \"x1 y1\"");
  common(qw, o, true);

  auto* uqc = app.add_subcommand("uq", "U_q(gl_N) realization suites");
  uqc->add_option("-N", o.N)->required();
  common(uqc, o, true);

  auto* ev = app.add_subcommand("eval", "compare two expressions");
  ev->add_option("-n,--rank", o.n, "Noether ring rank");
  ev->add_option("-N", o.N, "U_q(gl_N) rank");
  ev->add_option("lhs", o.lhs)->required();
  ev->add_option("rhs", o.rhs)->required();
  common(ev, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gens) return cmd_gens(o);
    if (*verify) return cmd_verify(o);
    if (*nf) return cmd_normal_form(o);
    if (*qw) return cmd_qweyl(o);
    if (*uqc) return cmd_uq(o);
    return cmd_eval(o);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
