#pragma once

// JSON serialization of algebras, modules, complexes and reports, and the
// aligned-text renderings of those documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "injdim/fid.hpp"

namespace injdim {

/// Insertion-ordered, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// List of rows.
Json matrix_json(const Mat& m);
/// {"rows", "cols", "entries"}; keeps the shape of empty matrices.
Json shaped_matrix_json(const Mat& m);

/// Descriptor in the job schema: truncated_ci, group_algebra or
/// structure_constants.
Json algebra_json(const Algebra& a);
/// {"kind": "module", "dim", "actions"} with one matrix per basis element.
Json module_json(const Module& m);
/// {"kind": "complex", "lo", "terms", "differentials"}.
Json complex_json(const Complex& x);
/// {"lo", "hi", "ranks", "complete_below"}.
Json free_complex_json(const FreeComplex& p);

Json verdict_json(const DimVerdict& v);
Json action_json(const OperatorAction& a);
Json criterion_json(const CriterionReport& r);
Json fid_json(const FidReport& r, bool timings);
Json sweep_json(const SweepReport& r, bool timings);

/// "WINDOW(n=1)", "ML(m=2)", "NONE" or "UNAVAILABLE".
std::string criterion_summary(const CriterionReport& r);
/// "FINITE" when the oracle or the criterion proves it, "INFINITE" when the
/// oracle proves that, "UNDECIDED" otherwise.
std::string fid_verdict(const FidReport& r);

/// Right-aligned columns separated by two spaces; the first column is
/// left-aligned.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

/// Text rendering of a command output document. Every number shown is read
/// from the document itself.
std::string render_text(const Json& doc);

}  // namespace injdim
