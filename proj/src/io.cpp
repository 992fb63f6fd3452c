#include "injdim/io.hpp"

#include <algorithm>
#include <sstream>

namespace injdim {

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json shaped_matrix_json(const Mat& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = matrix_json(m);
  return j;
}

Json algebra_json(const Algebra& a) {
  Json j;
  const auto p = a.field().modulus();
  if (a.is_group_algebra()) {
    j["kind"] = "group_algebra";
    j["p"] = p;
    j["factors"] = *a.group_factors();
  } else if (a.ci()) {
    j["kind"] = "truncated_ci";
    j["p"] = p;
    j["exponents"] = a.ci()->exponents;
  } else {
    j["kind"] = "structure_constants";
    j["p"] = p;
    j["dim"] = a.dim();
    j["mult"] = a.structure_constants();
    j["unit"] = a.unit();
    j["augmentation"] = a.augmentation();
  }
  return j;
}

Json module_json(const Module& m) {
  Json j;
  j["kind"] = "module";
  j["dim"] = m.dim();
  Json acts = Json::array();
  for (auto& a : m.actions()) acts.push_back(matrix_json(a));
  j["actions"] = std::move(acts);
  return j;
}

Json complex_json(const Complex& x) {
  Json j;
  j["kind"] = "complex";
  j["lo"] = x.lo();
  Json terms = Json::array(), diffs = Json::array();
  for (int d = x.lo(); d <= x.hi(); ++d) {
    terms.push_back(module_json(x.term(d)));
    if (d < x.hi()) diffs.push_back(matrix_json(x.diff(d)));
  }
  j["terms"] = std::move(terms);
  j["differentials"] = std::move(diffs);
  return j;
}

Json free_complex_json(const FreeComplex& p) {
  Json j;
  j["lo"] = p.lo;
  j["hi"] = p.hi();
  j["ranks"] = p.ranks;
  j["complete_below"] = p.complete_below;
  return j;
}

Json verdict_json(const DimVerdict& v) {
  Json j;
  switch (v.kind) {
    case DimVerdict::Kind::Finite: j["kind"] = "Finite"; break;
    case DimVerdict::Kind::Infinite: j["kind"] = "Infinite"; break;
    case DimVerdict::Kind::AtLeast: j["kind"] = "AtLeast"; break;
  }
  if (v.kind != DimVerdict::Kind::Infinite) j["value"] = v.value;
  j["exact"] = v.exact;
  j["text"] = v.to_string();
  return j;
}

Json action_json(const OperatorAction& a) {
  Json j;
  j["label"] = a.label;
  j["degree"] = a.degree;
  j["first"] = a.first;
  Json ms = Json::array();
  for (auto& m : a.matrices) ms.push_back(shaped_matrix_json(m));
  j["matrices"] = std::move(ms);
  return j;
}

namespace {

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json criterion_json(const CriterionReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["summary"] = criterion_summary(r);
  j["generator_degrees"] = r.generator_degrees;
  j["d"] = r.d;
  j["l"] = r.l;
  j["window_start"] = optional_json(r.window_start);
  j["ml_multiple"] = optional_json(r.ml_multiple);
  Json ops = Json::array();
  for (std::size_t i = 0; i < r.labels.size(); ++i) {
    Json o;
    o["label"] = r.labels[i];
    o["nilpotency"] = optional_json(r.nilpotency[i]);
    ops.push_back(std::move(o));
  }
  j["operators"] = std::move(ops);
  return j;
}

std::string criterion_summary(const CriterionReport& r) {
  if (r.status == CriterionStatus::Unavailable) return "UNAVAILABLE";
  if (r.window_start) return "WINDOW(n=" + std::to_string(*r.window_start) + ")";
  if (r.ml_multiple) return "ML(m=" + std::to_string(*r.ml_multiple) + ")";
  return "NONE";
}

std::string fid_verdict(const FidReport& r) {
  if (r.oracle.finite() || r.criterion.certified()) return "FINITE";
  if (r.oracle.kind == DimVerdict::Kind::Infinite) return "INFINITE";
  return "UNDECIDED";
}

Json fid_json(const FidReport& r, bool timings) {
  Json j;
  j["target_id"] = r.target_id;
  j["verdict"] = fid_verdict(r);
  j["ext_table"] = r.ext_table;
  j["family"] = r.family;
  j["criterion"] = criterion_json(r.criterion);
  j["oracle"] = verdict_json(r.oracle);
  j["projective_dimension"] = verdict_json(r.projective);
  j["consistent"] = r.consistent;
  if (timings) j["seconds"] = r.seconds;
  return j;
}

Json sweep_json(const SweepReport& r, bool timings) {
  Json j;
  j["seed"] = r.seed;
  j["count"] = r.count;
  j["bound"] = r.bound;
  j["zoo"] = r.zoo;
  Json targets = Json::array();
  for (auto& t : r.targets) {
    Json o;
    o["algebra"] = t.algebra;
    o["index"] = t.index;
    o["seed"] = t.seed;
    o["kind"] = t.is_complex ? "complex" : "module";
    o["report"] = fid_json(t.report, timings);
    o["violations"] = t.violations;
    // Counterexample artifact: the serialized input.
    if (!t.violations.empty()) o["input"] = t.module ? module_json(*t.module) : complex_json(*t.complex);
    targets.push_back(std::move(o));
  }
  j["targets"] = std::move(targets);
  Json kz = Json::array();
  for (auto& k : r.koszul) {
    Json o;
    o["algebra"] = k.algebra;
    o["target"] = k.target;
    o["verdict"] = verdict_json(k.verdict);
    kz.push_back(std::move(o));
  }
  j["koszul"] = std::move(kz);
  j["violations"] = r.violations;
  j["koszul_failures"] = r.koszul_failures;
  if (timings) j["seconds"] = r.seconds;
  return j;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream os;
  for (auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const std::string pad(width[c] - r[c].size(), ' ');
      if (c == 0) line += r[c] + pad;
      else line += "  " + pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

namespace {

std::string str(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// Header row of indices followed by one row of values.
std::string indexed_row(const std::string& index_name, int first, const std::string& name,
                        const Json& values) {
  std::vector<std::string> head{index_name}, row{name};
  for (std::size_t i = 0; i < values.size(); ++i) {
    head.push_back(std::to_string(first + static_cast<int>(i)));
    row.push_back(str(values[i]));
  }
  return format_table({head, row});
}

std::string matrix_text(const Json& m) {
  if (m["rows"] == 0 || m["cols"] == 0) return "  (" + str(m["rows"]) + "x" + str(m["cols"]) + ")\n";
  std::vector<std::vector<std::string>> rows;
  for (auto& r : m["entries"]) {
    std::vector<std::string> row{" "};
    for (auto& e : r) row.push_back(str(e));
    rows.push_back(std::move(row));
  }
  return format_table(rows);
}

std::string fid_text(const Json& r) {
  std::ostringstream os;
  os << "target       " << str(r["target_id"]) << '\n';
  os << "verdict      " << str(r["verdict"]) << '\n';
  os << "criterion    " << str(r["criterion"]["summary"]) << " [" << str(r["criterion"]["status"])
     << ", family " << str(r["family"]) << "]\n";
  os << "oracle       " << str(r["oracle"]["text"]) << '\n';
  os << "projective   " << str(r["projective_dimension"]["text"]) << '\n';
  os << "consistent   " << (r["consistent"].get<bool>() ? "yes" : "NO") << '\n';
  if (r.contains("seconds")) os << "seconds      " << str(r["seconds"]) << '\n';
  os << indexed_row("n", 0, "ext", r["ext_table"]);
  if (!r["criterion"]["operators"].empty()) {
    std::vector<std::vector<std::string>> rows{{"operator", "nilpotency"}};
    for (auto& o : r["criterion"]["operators"]) rows.push_back({str(o["label"]), str(o["nilpotency"])});
    os << format_table(rows);
  }
  return os.str();
}

std::string sweep_text(const Json& r) {
  std::ostringstream os;
  os << "seed " << str(r["seed"]) << ", count " << str(r["count"]) << ", bound " << str(r["bound"])
     << '\n';
  std::vector<std::vector<std::string>> rows{
      {"algebra", "index", "kind", "ext0", "criterion", "oracle", "violations"}};
  for (auto& t : r["targets"]) {
    std::string v;
    for (auto& s : t["violations"]) v += (v.empty() ? "" : ",") + s.get<std::string>();
    rows.push_back({str(t["algebra"]), str(t["index"]), str(t["kind"]),
                    str(t["report"]["ext_table"][0]), str(t["report"]["criterion"]["summary"]),
                    str(t["report"]["oracle"]["text"]), v.empty() ? "-" : v});
  }
  os << format_table(rows);
  std::vector<std::vector<std::string>> kz{{"algebra", "koszul target", "pd"}};
  for (auto& k : r["koszul"]) kz.push_back({str(k["algebra"]), str(k["target"]), str(k["verdict"]["text"])});
  os << format_table(kz);
  os << str(r["violations"]) << " violations, " << str(r["koszul_failures"]) << " koszul failures\n";
  if (r.contains("seconds")) os << "seconds " << str(r["seconds"]) << '\n';
  return os.str();
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  const std::string cmd = doc.value("command", "");
  os << "command      " << cmd << '\n';
  if (doc.contains("algebra")) os << "algebra      " << doc["algebra"].dump() << '\n';
  if (doc.contains("bound")) os << "bound        " << str(doc["bound"]) << '\n';
  if (cmd == "resolve") {
    if (doc.contains("betti")) os << indexed_row("n", 0, "betti", doc["betti"]);
    else os << indexed_row("degree", doc["lo"].get<int>(), "rank", doc["ranks"]);
    os << "complete     " << (doc["complete"].get<bool>() ? "yes" : "no") << '\n';
    os << "pd           " << str(doc["projective_dimension"]["text"]) << '\n';
  } else if (cmd == "ext") {
    os << indexed_row("n", 0, "ext", doc["ext"]);
  } else if (cmd == "operators") {
    os << "family       " << str(doc["family"]) << '\n';
    os << "commute      " << (doc["commute"].get<bool>() ? "yes" : "no") << '\n';
    for (auto& a : doc["actions"]) {
      int n = a["first"].get<int>();
      for (auto& m : a["matrices"]) {
        os << str(a["label"]) << " : Ext^" << n << " -> Ext^" << n + a["degree"].get<int>() << '\n';
        os << matrix_text(m);
        ++n;
      }
    }
  } else if (cmd == "koszul") {
    os << "operators    " << str(doc["operators"]) << '\n';
    os << indexed_row("degree", doc["koszul"]["lo"].get<int>(), "rank", doc["koszul"]["ranks"]);
    os << "pd           " << str(doc["projective_dimension"]["text"]) << '\n';
    if (doc.contains("annihilation"))
      os << "annihilation " << str(doc["annihilation"]["ext_from_koszul"]) << " (from), "
         << str(doc["annihilation"]["ext_into_koszul"]) << " (into), cap "
         << str(doc["annihilation"]["cap"]) << '\n';
  } else if (cmd == "check-fid") {
    os << fid_text(doc["report"]);
  } else if (cmd == "verify") {
    os << sweep_text(doc["report"]);
  }
  return os.str();
}

}  // namespace injdim
