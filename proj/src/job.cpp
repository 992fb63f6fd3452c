#include "injdim/job.hpp"

#include <map>
#include <set>

namespace injdim {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw InputError(at(path, key), "missing required field");
  return obj[key];
}

void require_object(const Json& v, const std::string& path) {
  if (!v.is_object()) throw InputError(path, "expected an object");
}

void allow_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  const std::set<std::string> ok(keys.begin(), keys.end());
  for (auto& [k, v] : obj.items())
    if (!ok.count(k)) throw InputError(at(path, k), "unknown field");
}

std::int64_t integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::int64_t integer_in(const Json& v, const std::string& path, std::int64_t lo, std::int64_t hi) {
  const std::int64_t x = integer(v, path);
  if (x < lo || x > hi)
    throw InputError(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

std::string string_in(const Json& v, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!v.is_string()) throw InputError(path, "expected a string");
  const std::string s = v.get<std::string>();
  for (const char* a : allowed)
    if (s == a) return s;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw InputError(path, "unknown value '" + s + "' (expected one of " + list + ")");
}

const Json& array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw InputError(path, "expected an array");
  return v;
}

std::vector<Residue> residues(const Json& v, const std::string& path, const PrimeField& f,
                              std::optional<std::size_t> size = {}) {
  array(v, path);
  if (size && v.size() != *size)
    throw InputError(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(v.size()));
  std::vector<Residue> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(f.reduce(integer(v[i], at(path, i))));
  return out;
}

Mat matrix(const Json& v, const std::string& path, const PrimeField& f, std::size_t rows, std::size_t cols) {
  array(v, path);
  if (v.size() != rows)
    throw InputError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = residues(v[i], at(path, i), f, cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[j];
  }
  return m;
}

template <class F>
auto checked(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path, e.what());
  }
}

std::uint32_t prime(const Json& obj, const std::string& path) {
  const std::int64_t p = integer(field(obj, path, "p"), at(path, "p"));
  if (p < 2 || p > 65521 || !PrimeField::is_prime(static_cast<std::uint64_t>(p)))
    throw InputError(at(path, "p"), "characteristic " + std::to_string(p) + " is not a prime");
  return static_cast<std::uint32_t>(p);
}

std::vector<unsigned> positive_list(const Json& v, const std::string& path) {
  array(v, path);
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(static_cast<unsigned>(integer_in(v[i], at(path, i), 1, 1 << 16)));
  return out;
}

AlgebraPtr parse_algebra(const Json& a, const std::string& path) {
  require_object(a, path);
  const std::string kind = string_in(field(a, path, "kind"), at(path, "kind"),
                                     {"truncated_ci", "group_algebra", "structure_constants"});
  const std::uint32_t p = prime(a, path);
  if (kind == "truncated_ci") {
    allow_keys(a, path, {"kind", "p", "exponents"});
    const std::string ep = at(path, "exponents");
    auto exps = positive_list(field(a, path, "exponents"), ep);
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] < 2) throw InputError(at(ep, i), "exponent must be at least 2");
    return checked(path, [&] { return truncated_ci(p, exps); });
  }
  if (kind == "group_algebra") {
    allow_keys(a, path, {"kind", "p", "factors"});
    const std::string fp = at(path, "factors");
    auto factors = positive_list(field(a, path, "factors"), fp);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      unsigned q = factors[i];
      while (q % p == 0) q /= p;
      if (q != 1 || factors[i] < p)
        throw InputError(at(fp, i), "factor " + std::to_string(factors[i]) + " is not a power of " +
                                        std::to_string(p));
    }
    return checked(path, [&] { return group_algebra(p, factors); });
  }
  allow_keys(a, path, {"kind", "p", "dim", "mult", "unit", "augmentation"});
  const PrimeField f(p);
  const auto dim = static_cast<std::size_t>(integer_in(field(a, path, "dim"), at(path, "dim"), 1, 64));
  auto mult = residues(field(a, path, "mult"), at(path, "mult"), f, dim * dim * dim);
  auto unit = residues(field(a, path, "unit"), at(path, "unit"), f, dim);
  auto aug = residues(field(a, path, "augmentation"), at(path, "augmentation"), f, dim);
  return checked(path, [&] { return from_structure_constants(p, dim, mult, unit, aug); });
}

std::vector<Mat> actions(const Json& v, const std::string& path, const Algebra& alg, std::size_t dim) {
  array(v, path);
  if (v.size() != alg.dim())
    throw InputError(path, "expected one action matrix per algebra basis element (" +
                               std::to_string(alg.dim()) + ")");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(matrix(v[i], at(path, i), alg.field(), dim, dim));
  return out;
}

struct Target {
  std::optional<Module> module;
  std::optional<Complex> complex;
};

Module parse_module(const Json& t, const std::string& path, const AlgebraPtr& alg, std::uint64_t seed);

Target parse_target(const Json& t, const std::string& path, const AlgebraPtr& alg, std::uint64_t seed) {
  require_object(t, path);
  const std::string kind =
      string_in(field(t, path, "kind"), at(path, "kind"),
                {"trivial", "free", "random", "module", "complex", "syzygy", "direct_sum"});
  if (kind != "complex") return {parse_module(t, path, alg, seed), std::nullopt};
  allow_keys(t, path, {"kind", "lo", "terms", "differentials"});
  const int lo = static_cast<int>(integer_in(field(t, path, "lo"), at(path, "lo"), -1000, 1000));
  const std::string tp = at(path, "terms"), dp = at(path, "differentials");
  const Json& terms = array(field(t, path, "terms"), tp);
  if (terms.empty()) throw InputError(tp, "a complex needs at least one term");
  std::vector<Module> ms;
  for (std::size_t i = 0; i < terms.size(); ++i) ms.push_back(parse_module(terms[i], at(tp, i), alg, seed));
  const Json& diffs = array(field(t, path, "differentials"), dp);
  if (diffs.size() + 1 != ms.size())
    throw InputError(dp, "expected " + std::to_string(ms.size() - 1) + " differentials");
  std::vector<Mat> ds;
  for (std::size_t i = 0; i < diffs.size(); ++i)
    ds.push_back(matrix(diffs[i], at(dp, i), alg->field(), ms[i + 1].dim(), ms[i].dim()));
  return {std::nullopt, checked(path, [&] { return Complex(alg, lo, ms, ds); })};
}

Module parse_module(const Json& t, const std::string& path, const AlgebraPtr& alg, std::uint64_t seed) {
  require_object(t, path);
  const std::string kind = string_in(field(t, path, "kind"), at(path, "kind"),
                                     {"trivial", "free", "random", "module", "syzygy", "direct_sum"});
  if (kind == "trivial") {
    allow_keys(t, path, {"kind"});
    return trivial_module(alg);
  }
  if (kind == "free") {
    allow_keys(t, path, {"kind", "rank"});
    return free_module(alg, static_cast<std::size_t>(integer_in(field(t, path, "rank"), at(path, "rank"), 0, 64)));
  }
  if (kind == "random") {
    allow_keys(t, path, {"kind", "a", "b", "seed"});
    const auto a = static_cast<std::size_t>(integer_in(field(t, path, "a"), at(path, "a"), 0, 16));
    const auto b = static_cast<std::size_t>(integer_in(field(t, path, "b"), at(path, "b"), 0, 16));
    std::uint64_t s = seed;
    if (t.contains("seed")) s = static_cast<std::uint64_t>(integer_in(t["seed"], at(path, "seed"), 0, INT64_MAX));
    return random_module(alg, a, b, s);
  }
  if (kind == "module") {
    allow_keys(t, path, {"kind", "dim", "actions"});
    const auto dim = static_cast<std::size_t>(integer_in(field(t, path, "dim"), at(path, "dim"), 0, 4096));
    auto acts = actions(field(t, path, "actions"), at(path, "actions"), *alg, dim);
    return checked(path, [&] { return Module(alg, dim, std::move(acts)); });
  }
  if (kind == "syzygy") {
    allow_keys(t, path, {"kind", "of", "n"});
    Module of = parse_module(field(t, path, "of"), at(path, "of"), alg, seed);
    const int n = static_cast<int>(integer_in(field(t, path, "n"), at(path, "n"), 0, 64));
    return syzygy_module(of, n);
  }
  allow_keys(t, path, {"kind", "summands"});
  const std::string sp = at(path, "summands");
  const Json& s = array(field(t, path, "summands"), sp);
  Module sum = zero_module(alg);
  for (std::size_t i = 0; i < s.size(); ++i) sum = direct_sum(sum, parse_module(s[i], at(sp, i), alg, seed));
  return sum;
}

std::string zoo_name(const Algebra& a) {
  Json d = algebra_json(a);
  const std::string kind = d["kind"];
  std::string list;
  auto join = [&](const Json& xs) {
    for (auto& x : xs) list += (list.empty() ? "" : ",") + x.dump();
  };
  if (kind == "truncated_ci") join(d["exponents"]);
  else if (kind == "group_algebra") join(d["factors"]);
  else return "structure_constants(" + d["p"].dump() + ";" + d["dim"].dump() + ")";
  return std::string(kind == "truncated_ci" ? "ci" : "group") + "(" + d["p"].dump() + ";" + list + ")";
}

std::vector<OperatorAction> module_actions(const JobSpec& job, const ModuleExt& me, std::vector<int>& degrees) {
  const Algebra& a = job.module->algebra();
  std::vector<OperatorAction> out;
  OperatorFamily fam = job.family;
  if (fam == OperatorFamily::Auto) fam = a.ci() && a.commutative() ? OperatorFamily::Eisenbud : fam;
  if (fam == OperatorFamily::Eisenbud) {
    if (!a.ci() || !a.commutative()) throw Error("eisenbud operators need a commutative complete intersection");
    out = eisenbud_actions(me);
    degrees.assign(out.size(), 2);
  } else if (fam == OperatorFamily::Hopf) {
    if (!a.is_group_algebra()) throw Error("hopf operators need an abelian p-group algebra");
    GroupCohomology gc(job.module->algebra_ptr(), job.bound);
    for (auto& g : hopf_generators(gc)) {
      out.push_back(hopf_action(gc, g, me));
      degrees.push_back(g.degree);
    }
  } else {
    throw Error("no operator family is available for this algebra");
  }
  return out;
}

bool actions_commute(const std::vector<OperatorAction>& acts) {
  for (std::size_t i = 0; i < acts.size(); ++i)
    for (std::size_t j = i + 1; j < acts.size(); ++j) {
      const auto& s = acts[i];
      const auto& t = acts[j];
      const int last = std::max(s.first + static_cast<int>(s.matrices.size()),
                                t.first + static_cast<int>(t.matrices.size()));
      for (int n = std::min(s.first, t.first); n < last; ++n)
        if (s.covers(n) && t.covers(n) && t.covers(n + s.degree) && s.covers(n + t.degree) &&
            !(t.at(n + s.degree) * s.at(n) == s.at(n + t.degree) * t.at(n)))
          return false;
    }
  return true;
}

}  // namespace

std::vector<std::string> split_zoo_list(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
    cur.clear();
  };
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) flush();
    else cur += c;
  }
  flush();
  return out;
}

JobSpec parse_input(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

JobSpec parse_input(const Json& doc) {
  require_object(doc, "");
  allow_keys(doc, "", {"command", "algebra", "target", "bound", "seed", "format", "count", "complexes",
                       "zoo", "jobs", "operators", "timings"});
  JobSpec job;
  job.command_name = string_in(field(doc, "", "command"), "/command",
                               {"resolve", "ext", "operators", "koszul", "check-fid", "verify"});
  static const std::map<std::string, Command> commands{
      {"resolve", Command::Resolve},     {"ext", Command::Ext},
      {"operators", Command::Operators}, {"koszul", Command::Koszul},
      {"check-fid", Command::CheckFid},  {"verify", Command::Verify}};
  job.command = commands.at(job.command_name);
  if (doc.contains("bound")) job.bound = static_cast<int>(integer_in(doc["bound"], "/bound", 2, 64));
  if (doc.contains("seed")) job.seed = static_cast<std::uint64_t>(integer_in(doc["seed"], "/seed", 0, INT64_MAX));
  if (doc.contains("format")) job.format = string_in(doc["format"], "/format", {"json", "text"});
  if (doc.contains("count")) job.count = static_cast<std::size_t>(integer_in(doc["count"], "/count", 0, 100000));
  if (doc.contains("complexes"))
    job.complexes = static_cast<std::size_t>(integer_in(doc["complexes"], "/complexes", 0, 100000));
  if (doc.contains("jobs")) job.jobs = static_cast<unsigned>(integer_in(doc["jobs"], "/jobs", 1, 256));
  if (doc.contains("timings")) {
    if (!doc["timings"].is_boolean()) throw InputError("/timings", "expected a boolean");
    job.timings = doc["timings"].get<bool>();
  }
  if (doc.contains("operators")) {
    const std::string f = string_in(doc["operators"], "/operators", {"auto", "eisenbud", "hopf"});
    job.family = f == "eisenbud" ? OperatorFamily::Eisenbud
                 : f == "hopf"   ? OperatorFamily::Hopf
                                 : OperatorFamily::Auto;
  }
  if (doc.contains("zoo")) {
    const Json& z = doc["zoo"];
    if (z.is_string()) {
      job.zoo = split_zoo_list(z.get<std::string>());
    } else {
      array(z, "/zoo");
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (!z[i].is_string()) throw InputError(at("/zoo", i), "expected a string");
        job.zoo.push_back(z[i].get<std::string>());
      }
    }
    for (std::size_t i = 0; i < job.zoo.size(); ++i) checked(at("/zoo", i), [&] { return zoo_entry(job.zoo[i]); });
  }

  if (job.command == Command::Verify) {
    if (doc.contains("target")) throw InputError("/target", "verify draws its own targets");
    if (doc.contains("algebra")) {
      if (doc.contains("zoo")) throw InputError("/zoo", "give either an algebra or a zoo, not both");
      job.algebra = parse_algebra(doc["algebra"], "/algebra");
    }
    return job;
  }
  job.algebra = parse_algebra(field(doc, "", "algebra"), "/algebra");
  Target t = parse_target(field(doc, "", "target"), "/target", job.algebra, job.seed);
  job.module = std::move(t.module);
  job.complex = std::move(t.complex);
  if (job.command == Command::Koszul && (!job.algebra->ci() || !job.algebra->commutative()))
    throw InputError("/algebra", "koszul needs a commutative complete intersection");
  if (job.family == OperatorFamily::Hopf && !job.algebra->is_group_algebra())
    throw InputError("/operators", "hopf operators need an abelian p-group algebra");
  if (job.family == OperatorFamily::Hopf && job.complex)
    throw InputError("/operators", "hopf operators are available for modules only");
  if (job.family == OperatorFamily::Eisenbud && (!job.algebra->ci() || !job.algebra->commutative()))
    throw InputError("/operators", "eisenbud operators need a commutative complete intersection");
  return job;
}

JobResult run(const JobSpec& job) {
  JobResult res;
  Json& out = res.document;
  out["command"] = job.command_name;
  if (job.algebra) out["algebra"] = algebra_json(*job.algebra);
  if (job.module) out["target"] = module_json(*job.module);
  if (job.complex) out["target"] = complex_json(*job.complex);
  out["bound"] = job.bound;
  out["seed"] = job.seed;

  switch (job.command) {
    case Command::Resolve: {
      if (job.module) {
        Resolution r = minimal_resolution(*job.module, job.bound);
        out["betti"] = r.betti;
        out["complete"] = r.complete;
        out["projective_dimension"] = verdict_json(projective_dimension(r.complex));
      } else {
        FreeComplex p = resolve_complex(*job.complex, job.bound);
        out["lo"] = p.lo;
        out["ranks"] = p.ranks;
        out["complete"] = p.complete_below;
        out["projective_dimension"] = verdict_json(projective_dimension(p));
      }
      break;
    }
    case Command::Ext:
      out["ext"] = job.module ? ext_self_table(*job.module, job.bound) : ext_self_table(*job.complex, job.bound);
      break;
    case Command::Operators: {
      std::vector<OperatorAction> acts;
      std::vector<int> degrees;
      std::string family;
      if (job.module) {
        ModuleExt me(*job.module, job.bound);
        acts = module_actions(job, me, degrees);
        family = job.family == OperatorFamily::Hopf ? "hopf" : "eisenbud";
      } else {
        const Algebra& a = *job.algebra;
        if (!a.ci() || !a.commutative())
          throw Error("eisenbud operators need a commutative complete intersection");
        FreeComplex p = resolve_complex(*job.complex, job.bound + 1);
        ExtComputer e(p, *job.complex);
        auto ops = eisenbud_operators(p);
        for (std::size_t i = 0; i < ops.size(); ++i)
          acts.push_back(operator_action(e, ops[i], "chi" + std::to_string(i + 1), 0, job.bound - 2));
        family = "eisenbud";
      }
      out["family"] = family;
      out["commute"] = actions_commute(acts);
      Json as = Json::array();
      for (auto& a : acts) as.push_back(action_json(a));
      out["actions"] = std::move(as);
      break;
    }
    case Command::Koszul: {
      FreeComplex p = job.module ? minimal_resolution(*job.module, job.bound).complex
                                 : resolve_complex(*job.complex, job.bound);
      FreeComplex k = bounded_part(koszul_ci(p));
      std::string labels;
      for (std::size_t i = 0; i < job.algebra->ci()->c(); ++i)
        labels += (i ? "," : "") + std::string("chi") + std::to_string(i + 1);
      out["operators"] = labels;
      out["koszul"] = free_complex_json(k);
      out["projective_dimension"] = verdict_json(projective_dimension(k));
      if (job.module) {
        AnnihilationReport an = annihilation_exponent(*job.module, job.bound);
        Json a;
        a["ext_from_koszul"] = an.ext_from_koszul ? Json(*an.ext_from_koszul) : Json(nullptr);
        a["ext_into_koszul"] = an.ext_into_koszul ? Json(*an.ext_into_koszul) : Json(nullptr);
        a["cap"] = an.cap;
        out["annihilation"] = std::move(a);
      }
      break;
    }
    case Command::CheckFid: {
      FidConfig cfg{job.bound, job.family};
      FidReport r = job.module ? check_fid(*job.module, cfg, "target") : check_fid(*job.complex, cfg, "target");
      out["report"] = fid_json(r, job.timings);
      if (!r.consistent) res.exit_code = 2;
      break;
    }
    case Command::Verify: {
      std::vector<ZooEntry> zoo;
      if (job.algebra) zoo.push_back({zoo_name(*job.algebra), job.algebra});
      else if (job.zoo.empty()) zoo = default_zoo();
      else
        for (auto& n : job.zoo) zoo.push_back(zoo_entry(n));
      SweepConfig cfg;
      cfg.count = job.count;
      cfg.seed = job.seed;
      cfg.bound = job.bound;
      cfg.jobs = job.jobs;
      cfg.complexes = job.complexes;
      cfg.family = job.family;
      out["count"] = job.count;
      SweepReport r = verify_theorem_sweep(zoo, cfg);
      out["report"] = sweep_json(r, job.timings);
      if (r.violations || r.koszul_failures) res.exit_code = 2;
      break;
    }
  }
  return res;
}

std::string render(const JobSpec& job, const JobResult& result) {
  if (job.format == "text") return render_text(result.document);
  return result.document.dump(2) + "\n";
}

}  // namespace injdim
