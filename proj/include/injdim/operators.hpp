#pragma once

// Eisenbud operators, the diagonal (Hopf) action for abelian p-group
// algebras, Koszul objects and the torsion criteria.

#include <optional>
#include <string>
#include <vector>

#include "injdim/ext.hpp"

namespace injdim {

/// Adds x_1^{a_1} to the lift of one differential entry; the result still
/// lifts the same differential, so the induced operators on Ext must agree.
struct LiftPerturbation {
  int degree = 0;  // the differential d^degree
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Degree-2 chain maps t_1..t_c with lift(d)^2 = sum_i x_i^{a_i} lift(t_i),
/// computed at every j with d^j and d^{j+1} stored. Requires a CI presentation.
std::vector<ChainMapRep> eisenbud_operators(const FreeComplex& p,
                                            const std::optional<LiftPerturbation>& perturb = {});

/// Graded endomorphism of Ext^*(X, Y): matrices[n] : Ext^n -> Ext^{n + degree}.
struct OperatorAction {
  std::string label;
  int degree = 0;
  int first = 0;  // degree of matrices[0]
  std::vector<Mat> matrices;

  const Mat& at(int n) const { return matrices.at(n - first); }
  bool covers(int n) const { return n >= first && n < first + static_cast<int>(matrices.size()); }
};

/// Action by precomposition on Ext^n for n in [first, last].
OperatorAction operator_action(const ExtComputer& e, const ChainMapRep& t, const std::string& label,
                               int first, int last);

/// Everything needed to act on Ext^*(M, M) for a module M.
struct ModuleExt {
  Resolution res;
  ExtComputer ext;
  int bound;

  ModuleExt(const Module& m, int bound);
  std::vector<std::size_t> table() const;
};

/// Eisenbud operator actions on Ext^n(M, M), n = 0..bound - 2.
std::vector<OperatorAction> eisenbud_actions(const ModuleExt& me,
                                             const std::optional<LiftPerturbation>& perturb = {});

/// A class of Ext^n(k, k) together with the resolution of k it lives on.
struct KClass {
  int degree = 0;
  Mat cocycle;  // column in Hom^degree(F_k, k)
  std::string label;
};

/// Cohomology of k over a group algebra, with resolution depth `bound + 1`.
struct GroupCohomology {
  Resolution res_k;
  ExtComputer ext;
  explicit GroupCohomology(AlgebraPtr alg, int bound);
};

/// Generators of the positive part of the operator ring: in characteristic 2
/// the degree-1 classes plus degree-2 classes outside the span of their
/// products; in odd characteristic the degree-2 classes.
std::vector<KClass> hopf_generators(const GroupCohomology& h);

/// The chain map on F_M representing eta_M(alpha), for alpha in Ext^n(k,k).
/// Throws Error for a non-group algebra or odd-degree alpha in odd characteristic.
ChainMapRep hopf_chain_map(const GroupCohomology& h, const KClass& alpha, const ModuleExt& me);
OperatorAction hopf_action(const GroupCohomology& h, const KClass& alpha, const ModuleExt& me);

/// Cone of s : P -> Sigma^{|s|} P, minimized.
FreeComplex koszul_object(const FreeComplex& p, const ChainMapRep& s);
/// P // (chi_1, .., chi_c), recomputing the Eisenbud operators on each cone.
FreeComplex koszul_ci(const FreeComplex& p);
/// Drops the stored terms below a zero term in the acyclic range, when there
/// is one, and marks the result complete.
FreeComplex bounded_part(const FreeComplex& p);

struct AnnihilationReport {
  std::optional<int> ext_from_koszul;  // exponent on Ext(X // s, k)
  std::optional<int> ext_into_koszul;  // exponent on Ext(k, X // s)
  int cap = 0;
};

/// Least e with every degree-e monomial in chi_1..chi_c acting as zero on
/// Ext(X // chi, k) and on Ext(k, X // chi), searched up to 2c.
AnnihilationReport annihilation_exponent(const Module& x, int bound);

enum class CriterionStatus { CertifiedTorsion, NotCertified, Unavailable };

struct CriterionReport {
  std::vector<int> generator_degrees;
  int d = 0;
  int l = 0;
  std::optional<int> window_start;  // least n with Ext^n..Ext^{n+d-1} = 0
  std::optional<int> ml_multiple;   // least m with Ext^{ml} = 0
  std::vector<std::string> labels;
  std::vector<std::optional<int>> nilpotency;  // per operator; empty = not within range
  CriterionStatus status = CriterionStatus::Unavailable;

  bool certified() const { return status == CriterionStatus::CertifiedTorsion; }
  bool all_nilpotent() const;
};

CriterionReport torsion_verdict(const std::vector<std::size_t>& table,
                                const std::vector<OperatorAction>& actions,
                                const std::vector<int>& generator_degrees);

/// Least e >= 1 with T^e = 0 on every computed degree, if within range.
std::optional<int> nilpotency_index(const OperatorAction& t, int bound);

std::string to_string(CriterionStatus s);

}  // namespace injdim
