#include "injdim/fid.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <regex>
#include <thread>

namespace injdim {

DimVerdict injective_dimension_oracle(const Module& m, int bound) {
  AlgebraPtr opp = opposite(m.algebra());
  return projective_dimension(dual_module(m, opp), bound);
}

DimVerdict injective_dimension_oracle(const Complex& x, int bound) {
  AlgebraPtr opp = opposite(*x.algebra_ptr());
  return projective_dimension(dual_complex(x, opp), bound);
}

namespace {

using Clock = std::chrono::steady_clock;

OperatorFamily resolve_family(const Algebra& a, OperatorFamily requested) {
  if (requested == OperatorFamily::Hopf && !a.is_group_algebra()) requested = OperatorFamily::Auto;
  if (requested != OperatorFamily::Auto) return requested;
  if (a.ci() && a.commutative()) return OperatorFamily::Eisenbud;
  return OperatorFamily::Auto;  // none available
}

std::string family_name(OperatorFamily f) {
  switch (f) {
    case OperatorFamily::Eisenbud: return "eisenbud";
    case OperatorFamily::Hopf: return "hopf";
    default: return "none";
  }
}

FidReport check_module(const Module& m, const FidConfig& cfg, const std::string& id,
                       const GroupCohomology* cached) {
  auto start = Clock::now();
  FidReport r;
  r.target_id = id;
  ModuleExt me(m, cfg.bound);
  r.ext_table = me.table();
  const OperatorFamily fam = resolve_family(m.algebra(), cfg.family);
  r.family = family_name(fam);
  std::vector<OperatorAction> actions;
  std::vector<int> degrees;
  if (fam == OperatorFamily::Eisenbud) {
    actions = eisenbud_actions(me);
    degrees.assign(actions.size(), 2);
  } else if (fam == OperatorFamily::Hopf) {
    std::optional<GroupCohomology> own;
    if (!cached) cached = &own.emplace(m.algebra_ptr(), cfg.bound);
    for (auto& g : hopf_generators(*cached)) {
      actions.push_back(hopf_action(*cached, g, me));
      degrees.push_back(g.degree);
    }
  }
  if (fam != OperatorFamily::Auto) r.criterion = torsion_verdict(r.ext_table, actions, degrees);
  r.oracle = injective_dimension_oracle(m, cfg.bound);
  r.projective = projective_dimension(me.res.complex);
  r.consistent = !(r.criterion.certified() && r.oracle.kind == DimVerdict::Kind::Infinite);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

FidReport check_fid(const Module& m, const FidConfig& cfg, const std::string& id) {
  return check_module(m, cfg, id, nullptr);
}

FidReport check_fid(const Complex& x, const FidConfig& cfg, const std::string& id) {
  auto start = Clock::now();
  FidReport r;
  r.target_id = id;
  FreeComplex p = resolve_complex(x, cfg.bound + 1);
  ExtComputer e(p, x);
  for (int n = 0; n <= cfg.bound; ++n) r.ext_table.push_back(e.dim(n));
  const Algebra& a = *x.algebra_ptr();
  OperatorFamily fam = resolve_family(a, cfg.family);
  if (fam == OperatorFamily::Hopf) fam = OperatorFamily::Auto;  // modules only
  r.family = family_name(fam);
  if (fam == OperatorFamily::Eisenbud) {
    auto ops = eisenbud_operators(p);
    std::vector<OperatorAction> actions;
    for (std::size_t i = 0; i < ops.size(); ++i)
      actions.push_back(operator_action(e, ops[i], "chi" + std::to_string(i + 1), 0, cfg.bound - 2));
    r.criterion = torsion_verdict(r.ext_table, actions, std::vector<int>(actions.size(), 2));
  }
  r.oracle = injective_dimension_oracle(x, cfg.bound);
  r.projective = projective_dimension(p);
  r.consistent = !(r.criterion.certified() && r.oracle.kind == DimVerdict::Kind::Infinite);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

ZooEntry zoo_entry(const std::string& name) {
  static const std::regex re(R"(\s*(ci|group)\(\s*(\d+)\s*;\s*([\d,\s]*)\)\s*)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw Error("unknown zoo algebra '" + name + "'");
  const auto p = static_cast<std::uint32_t>(std::stoul(m[2]));
  std::vector<unsigned> exps;
  std::string list = m[3];
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t next = list.find(',', pos);
    std::string tok = list.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.find_first_not_of(" ") != std::string::npos) exps.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  AlgebraPtr alg = m[1] == "ci" ? truncated_ci(p, exps) : group_algebra(p, exps);
  std::string canon = std::string(m[1]) + "(" + std::to_string(p) + ";";
  for (std::size_t i = 0; i < exps.size(); ++i) canon += (i ? "," : "") + std::to_string(exps[i]);
  return {canon + ")", alg};
}

std::vector<ZooEntry> default_zoo() {
  return {zoo_entry("ci(2;2)"), zoo_entry("ci(2;2,2)"), zoo_entry("ci(3;3)"),
          zoo_entry("group(2;2,2)"), zoo_entry("group(2;4)")};
}

Complex random_complex(AlgebraPtr alg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t a = rng() % 3, b = 1 + rng() % 2;
  Module m = random_module(alg, a, b, rng());
  const std::size_t g = 1 + rng() % 2;
  const std::uint32_t p = alg->field().modulus();
  Mat v(alg->field(), m.dim(), g);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < g; ++j) v(i, j) = static_cast<Residue>(rng() % p);
  Mat d = expand_images(m, v);
  return Complex(alg, -1, {free_module(alg, g), m}, {d});
}

std::uint64_t target_seed(std::uint64_t seed, std::size_t ai, std::size_t i) {
  return seed * 1000003ULL + ai * 1009ULL + i;
}

Module sweep_module(AlgebraPtr alg, std::uint64_t ts) {
  std::mt19937_64 rng(ts);
  const std::size_t a = rng() % 3, b = 1 + rng() % 2;
  return random_module(std::move(alg), a, b, rng());
}

namespace {

void check_module_target(SweepTarget& t, const AlgebraPtr& alg) {
  const FidReport& r = t.report;
  if (r.criterion.certified() && !r.oracle.finite()) t.violations.push_back("soundness");
  if (r.oracle.finite())
    for (std::size_t n = 1; n < r.ext_table.size(); ++n)
      if (r.ext_table[n] != 0) {
        t.violations.push_back("converse");
        break;
      }
  if (alg->self_injective() && r.oracle.exact && r.oracle.finite() != t.projective_module)
    t.violations.push_back("projectivity");
  if (r.oracle.exact && r.projective.exact && r.oracle.finite() != r.projective.finite())
    t.violations.push_back("pd_id");
  if (r.criterion.status != CriterionStatus::Unavailable && r.criterion.d == r.criterion.l &&
      r.criterion.window_start.has_value() != r.criterion.ml_multiple.has_value())
    t.violations.push_back("window_ml");
}

void check_complex_target(SweepTarget& t) {
  const FidReport& r = t.report;
  if (r.criterion.certified() && !r.oracle.finite()) t.violations.push_back("soundness");
  if (r.oracle.exact && r.projective.exact && r.oracle.finite() != r.projective.finite())
    t.violations.push_back("pd_id");
}

}  // namespace

SweepReport verify_theorem_sweep(const std::vector<ZooEntry>& zoo, const SweepConfig& cfg) {
  auto start = Clock::now();
  SweepReport rep;
  rep.seed = cfg.seed;
  rep.count = cfg.count;
  rep.bound = cfg.bound;
  for (auto& z : zoo) rep.zoo.push_back(z.name);

  struct Task {
    std::size_t ai, i;
    bool complex;
  };
  std::vector<Task> tasks;
  for (std::size_t ai = 0; ai < zoo.size(); ++ai) {
    for (std::size_t i = 0; i < cfg.count; ++i) tasks.push_back({ai, i, false});
    for (std::size_t i = 0; i < cfg.complexes; ++i) tasks.push_back({ai, cfg.count + i, true});
  }
  rep.targets.resize(tasks.size());

  // Group cohomology is shared by every Hopf target of one algebra.
  std::vector<std::optional<GroupCohomology>> cohomology(zoo.size());
  if (cfg.family == OperatorFamily::Hopf)
    for (std::size_t ai = 0; ai < zoo.size(); ++ai)
      if (zoo[ai].algebra->is_group_algebra()) cohomology[ai].emplace(zoo[ai].algebra, cfg.bound);

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      try {
        const Task& task = tasks[k];
        const ZooEntry& z = zoo[task.ai];
        SweepTarget& t = rep.targets[k];
        t.algebra = z.name;
        t.index = task.i;
        t.seed = target_seed(cfg.seed, task.ai, task.i);
        t.is_complex = task.complex;
        FidConfig fc{cfg.bound, cfg.family};
        const std::string id = z.name + "#" + std::to_string(task.i);
        if (task.complex) {
          t.complex.emplace(random_complex(z.algebra, t.seed));
          t.report = check_fid(*t.complex, fc, id);
          check_complex_target(t);
        } else {
          t.module.emplace(sweep_module(z.algebra, t.seed));
          const GroupCohomology* gc = cohomology[task.ai] ? &*cohomology[task.ai] : nullptr;
          t.report = check_module(*t.module, fc, id, gc);
          t.projective_module = is_projective(*t.module).projective;
          check_module_target(t, z.algebra);
        }
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& t : rep.targets) rep.violations += t.violations.size();
  for (std::size_t ai = 0; ai < zoo.size(); ++ai) {
    const AlgebraPtr& alg = zoo[ai].algebra;
    if (!alg->ci() || !alg->commutative()) continue;
    auto checks = verify_koszul_perfection(zoo[ai], koszul_targets(alg, cfg.seed, 5), cfg.bound);
    for (auto& c : checks) {
      if (!c.verdict.finite()) ++rep.koszul_failures;
      rep.koszul.push_back(std::move(c));
    }
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

std::vector<KoszulCheck> verify_koszul_perfection(
    const ZooEntry& alg, const std::vector<std::pair<std::string, Module>>& targets, int bound) {
  std::vector<KoszulCheck> out;
  for (auto& [name, m] : targets) {
    FreeComplex k = koszul_ci(minimal_resolution(m, bound).complex);
    out.push_back({alg.name, name, projective_dimension(k)});
  }
  return out;
}

std::vector<std::pair<std::string, Module>> koszul_targets(AlgebraPtr alg, std::uint64_t seed,
                                                           std::size_t seeds) {
  std::vector<std::pair<std::string, Module>> t;
  Module k = trivial_module(alg);
  t.emplace_back("k", k);
  t.emplace_back("syzygy1(k)", syzygy_module(k, 1));
  for (std::size_t i = 0; i < seeds; ++i) {
    std::uint64_t s = seed * 7919ULL + i;
    t.emplace_back("random#" + std::to_string(i), sweep_module(alg, s));
  }
  return t;
}

}  // namespace injdim
