// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <golden-dir> [--record]

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "injdim/fid.hpp"
#include "injdim/io.hpp"
#include "injdim/job.hpp"
#include "oracles.hpp"

using namespace injdim;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string golden_dir;
bool record = false;

Mat column(const Mat& b, std::size_t i) { return b.block(0, i, b.rows(), 1); }

std::vector<ZooEntry> ci_zoo() {
  std::vector<ZooEntry> out;
  for (auto& z : default_zoo())
    if (z.algebra->ci() && z.algebra->commutative()) out.push_back(z);
  return out;
}

// Computed once; criteria 3, 4 and 5 read the same sweep.
const SweepReport& full_sweep() {
  static const SweepReport r = [] {
    SweepConfig cfg;
    cfg.count = 50;
    cfg.bound = 12;
    return verify_theorem_sweep(default_zoo(), cfg);
  }();
  return r;
}
double sweep_seconds = 0;

Outcome betti_growth() {
  auto a = truncated_ci(2, {2, 2});
  auto t = Clock::now();
  Resolution r = minimal_resolution(trivial_module(a), 11);
  auto ext = ext_self_table(trivial_module(a), 10);
  const double secs = since(t);
  auto brute = oracle::betti_bruteforce(trivial_module(a), 10);
  for (int n = 0; n <= 10; ++n) {
    const auto want = static_cast<std::size_t>(n + 1);
    if (r.betti[n] != want || brute[n] != want || ext[n] != want)
      return {false, "mismatch at n=" + std::to_string(n)};
  }
  std::ostringstream s;
  s << "beta_n = Ext^n = n+1 for n <= 10 in " << secs << " s";
  return {secs < 5, s.str()};
}

Outcome periodicity() {
  auto a = truncated_ci(2, {2});
  auto t = Clock::now();
  ModuleExt me(trivial_module(a), 14);
  auto table = me.table();
  auto acts = eisenbud_actions(me);
  const double secs = since(t);
  const Mat one = Mat::identity(a->field(), 1);
  for (int n = 0; n <= 12; ++n) {
    if (table[n] != 1) return {false, "dim Ext^" + std::to_string(n) + " != 1"};
    if (n + 2 <= 12 && !(acts[0].at(n) == one)) return {false, "chi not identity at n=" + std::to_string(n)};
  }
  std::ostringstream s;
  s << "Ext^n = 1 for n <= 12, chi = [1] in " << secs << " s";
  return {secs < 1, s.str()};
}

std::size_t count_violations(const std::string& kind) {
  std::size_t c = 0;
  for (auto& t : full_sweep().targets)
    for (auto& v : t.violations)
      if (v == kind) ++c;
  return c;
}

Outcome soundness() {
  auto t = Clock::now();
  const SweepReport& r = full_sweep();
  sweep_seconds = since(t);
  std::size_t certified = 0;
  for (auto& x : r.targets) certified += x.report.criterion.certified();
  const std::size_t bad = count_violations("soundness");
  std::ostringstream s;
  s << r.targets.size() << " targets, " << certified << " certified, " << bad << " unsound, " << sweep_seconds
    << " s";
  return {bad == 0 && r.targets.size() == 50 * default_zoo().size() && sweep_seconds < 60, s.str()};
}

Outcome converse() {
  std::size_t finite = 0;
  for (auto& x : full_sweep().targets) finite += x.report.oracle.finite();
  const std::size_t bad = count_violations("converse");
  return {bad == 0, std::to_string(finite) + " finite targets, " + std::to_string(bad) + " violations"};
}

Outcome window_vs_ml() {
  std::size_t compared = 0, disagree = 0;
  auto ci = ci_zoo();
  for (auto& x : full_sweep().targets) {
    bool in_ci = false;
    for (auto& z : ci) in_ci |= z.name == x.algebra;
    const CriterionReport& c = x.report.criterion;
    if (!in_ci || c.status == CriterionStatus::Unavailable) continue;
    if (c.d != 2 || c.l != 2) return {false, "d or l differs from 2 on " + x.algebra};
    ++compared;
    disagree += c.window_start.has_value() != c.ml_multiple.has_value();
  }
  return {disagree == 0 && compared > 0,
          std::to_string(compared) + " compared, " + std::to_string(disagree) + " disagreements"};
}

Outcome koszul_perfection() {
  auto t = Clock::now();
  std::size_t checked = 0, failures = 0;
  for (auto& z : ci_zoo())
    for (auto& c : verify_koszul_perfection(z, koszul_targets(z.algebra, 7, 5), 12)) {
      ++checked;
      failures += !c.verdict.finite();
    }
  const double secs = since(t);
  std::ostringstream s;
  s << checked << " objects, " << failures << " failures, " << secs << " s";
  return {failures == 0 && checked == 7 * ci_zoo().size() && secs < 30, s.str()};
}

Outcome annihilation() {
  Json measured = Json::array();
  bool within = true;
  for (auto& z : ci_zoo()) {
    std::vector<std::pair<std::string, Module>> xs{{"k", trivial_module(z.algebra)},
                                                   {"random#0", random_module(z.algebra, 1, 2, 11)},
                                                   {"random#1", random_module(z.algebra, 2, 2, 12)}};
    for (auto& [name, x] : xs) {
      AnnihilationReport r = annihilation_exponent(x, 12);
      within &= r.ext_from_koszul && r.ext_into_koszul && *r.ext_from_koszul <= r.cap && *r.ext_into_koszul <= r.cap;
      Json e;
      e["algebra"] = z.name;
      e["target"] = name;
      e["ext_from_koszul"] = r.ext_from_koszul ? Json(*r.ext_from_koszul) : Json(nullptr);
      e["ext_into_koszul"] = r.ext_into_koszul ? Json(*r.ext_into_koszul) : Json(nullptr);
      e["cap"] = r.cap;
      measured.push_back(e);
    }
  }
  const std::string path = golden_dir + "/annihilation.json";
  if (record) std::ofstream(path) << measured.dump(2) << "\n";
  std::ifstream f(path);
  if (!f) return {false, "missing " + path};
  const bool same = Json::parse(f) == measured;
  return {within && same, std::to_string(measured.size()) + " exponents within cap" +
                              (same ? ", golden matches" : ", golden differs")};
}

Outcome operator_laws() {
  std::size_t checks = 0;
  for (auto& z : ci_zoo()) {
    const AlgebraPtr& a = z.algebra;
    for (std::uint64_t s = 0; s < 3; ++s) {
      Module m = s == 0 ? trivial_module(a) : random_module(a, 1, 2, 100 + s);
      const int bound = 8;
      ModuleExt me(m, bound);
      auto acts = eisenbud_actions(me);
      for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t j = i + 1; j < acts.size(); ++j)
          for (int n = 0; n + 4 <= bound; ++n, ++checks)
            if (!(acts[j].at(n + 2) * acts[i].at(n) == acts[i].at(n + 2) * acts[j].at(n)))
              return {false, "chi" + std::to_string(i + 1) + ", chi" + std::to_string(j + 1) + " do not commute on " +
                                 z.name};
      for (int deg = -4; deg <= -1; ++deg) {
        if (me.res.complex.rank(deg) == 0 || me.res.complex.rank(deg + 1) == 0) continue;
        auto other = eisenbud_actions(me, LiftPerturbation{deg, 0, 0});
        for (std::size_t i = 0; i < acts.size(); ++i, ++checks)
          if (other[i].matrices != acts[i].matrices) return {false, "lift dependence on " + z.name};
      }
      // chi(alpha beta) = chi(alpha) beta = alpha chi(beta) in Ext^*(M, M).
      const ExtComputer& e = me.ext;
      const HomComplex& h = e.hom();
      auto ops = eisenbud_operators(me.res.complex);
      for (auto& t : ops)
        for (int p = 0; p <= 2; ++p)
          for (int q = 0; q <= 2; ++q)
            for (std::size_t i = 0; i < e.dim(p); ++i)
              for (std::size_t j = 0; j < e.dim(q); ++j, ++checks) {
                Mat alpha = column(e.group(p).basis(), i), beta = column(e.group(q).basis(), j);
                Mat chi_alpha = e.group(p + 2).basis() * (e.action(t, p) * e.group(p).coordinates(alpha));
                Mat chi_beta = e.group(q + 2).basis() * (e.action(t, q) * e.group(q).coordinates(beta));
                Mat whole = e.action(t, p + q) * e.group(p + q).coordinates(yoneda(h, p, alpha, h, q, beta, me.res));
                Mat left = e.group(p + q + 2).coordinates(yoneda(h, p + 2, chi_alpha, h, q, beta, me.res));
                Mat right = e.group(p + q + 2).coordinates(yoneda(h, p, alpha, h, q + 2, chi_beta, me.res));
                if (!(whole == left) || !(whole == right)) return {false, "chi not central on " + z.name};
              }
    }
  }
  return {true, std::to_string(checks) + " exact matrix identities"};
}

Outcome hopf_vs_eisenbud() {
  auto a = group_algebra(2, {2, 2});
  const int bound = 12;
  GroupCohomology gc(a, bound);
  std::vector<KClass> eta;
  const ExtGroup& e2 = gc.ext.group(2);
  for (std::size_t i = 0; i < e2.dim(); ++i) eta.push_back({2, column(e2.basis(), i), "eta" + std::to_string(i + 1)});
  std::size_t agree = 0, certified = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Module m = sweep_module(a, target_seed(7, 3, s));
    ModuleExt me(m, bound);
    auto table = me.table();
    std::vector<OperatorAction> hopf;
    for (auto& c : eta) hopf.push_back(hopf_action(gc, c, me));
    auto h = torsion_verdict(table, hopf, std::vector<int>(hopf.size(), 2));
    auto chi = torsion_verdict(table, eisenbud_actions(me), {2, 2});
    if (h.certified() == chi.certified() && h.all_nilpotent() == chi.all_nilpotent()) ++agree;
    certified += chi.certified();
  }
  return {agree == 20, std::to_string(agree) + "/20 agree, " + std::to_string(certified) + " certified"};
}

Outcome determinism() {
  const std::vector<std::string> docs{
      R"J({"command":"resolve","algebra":{"kind":"truncated_ci","p":3,"exponents":[3]},"target":{"kind":"random","a":1,"b":2}})J",
      R"J({"command":"operators","algebra":{"kind":"group_algebra","p":2,"factors":[2,2]},"target":{"kind":"random","a":2,"b":2},"bound":8})J",
      R"J({"command":"koszul","algebra":{"kind":"truncated_ci","p":2,"exponents":[2,2]},"target":{"kind":"trivial"},"bound":8})J",
      R"J({"command":"check-fid","algebra":{"kind":"group_algebra","p":2,"factors":[4]},"target":{"kind":"syzygy","of":{"kind":"trivial"},"n":2}})J",
      R"J({"command":"verify","count":10,"complexes":2,"jobs":2})J",
  };
  for (auto& d : docs) {
    JobSpec j = parse_input(d);
    const std::string first = render(j, run(j));
    const std::string second = render(parse_input(d), run(parse_input(d)));
    if (first != second) return {false, "differs for " + j.command_name};
  }
  return {true, std::to_string(docs.size()) + " jobs byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  golden_dir = argc > 1 ? argv[1] : "tests/golden";
  record = argc > 2 && std::string(argv[2]) == "--record";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"betti growth", betti_growth},
      {"periodicity", periodicity},
      {"soundness sweep", soundness},
      {"converse", converse},
      {"window vs ml", window_vs_ml},
      {"koszul perfection", koszul_perfection},
      {"annihilation", annihilation},
      {"operator laws", operator_laws},
      {"hopf vs eisenbud", hopf_vs_eisenbud},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed ? 1 : 0;
}
