#pragma once

// Bounded complexes (cohomological indexing, d^j : X^j -> X^{j+1}) of
// finite-dimensional modules and of free modules.

#include <map>
#include <vector>

#include "injdim/module.hpp"

namespace injdim {

struct FreeComplex;

class Complex {
 public:
  /// Terms X^lo .. X^{lo + terms.size() - 1}; diffs[k] : X^{lo+k} -> X^{lo+k+1}.
  /// Validates d o d = 0 and that every differential is a module map.
  Complex(AlgebraPtr alg, int lo, std::vector<Module> terms, std::vector<Mat> diffs);

  static Complex concentrated(const Module& m, int degree = 0);

  const AlgebraPtr& algebra_ptr() const { return alg_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  const Module& term(int j) const;
  /// Zero matrix outside the stored range.
  Mat diff(int j) const;

 private:
  struct Unchecked {};
  Complex(Unchecked, AlgebraPtr alg, int lo, std::vector<Module> terms, std::vector<Mat> diffs);
  friend Complex shift(const Complex&, int);
  friend Complex cone(const Complex&, const Complex&, const std::map<int, Mat>&);
  friend Complex dual_complex(const Complex&, AlgebraPtr);
  friend Complex to_complex(const FreeComplex&);

  AlgebraPtr alg_;
  int lo_ = 0;
  std::vector<Module> terms_;
  std::vector<Mat> diffs_;
  Module zero_;
};

/// (Sigma^n X)^j = X^{j+n} with differential (-1)^n d_X.
Complex shift(const Complex& x, int n);

/// Chain map components f^j : X^j -> Y^j, missing degrees are zero.
bool is_chain_map(const Complex& x, const Complex& y, const std::map<int, Mat>& f);

/// Cone^j = X^{j+1} (+) Y^j, d(x, y) = (-d x, f x + d y). Throws Error if f
/// is not a chain map.
Complex cone(const Complex& x, const Complex& y, const std::map<int, Mat>& f);

/// H^n(X) with the induced action.
Module cohomology(const Complex& x, int n);
std::size_t cohomology_dim(const Complex& x, int n);

/// Termwise k-dual over the opposite algebra: (DX)^j = D(X^{-j}).
Complex dual_complex(const Complex& x, AlgebraPtr opposite_alg);

/// Complex of free modules, possibly truncated from below. Terms P^j for
/// j in [lo, hi]; terms and outgoing differentials there agree with the
/// represented object, so its cohomology is exact from lo + 1 upward.
struct FreeComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<std::size_t> ranks;  // ranks[j - lo]
  std::vector<FreeMap> diffs;      // diffs[j - lo] : P^j -> P^{j+1}; one fewer than ranks
  /// Terms below lo are zero (no truncation happened).
  bool complete_below = false;
  /// The lowest stored term is already minimal.
  bool lowest_minimal = false;
  /// Cohomology of the represented object vanishes below this degree.
  int coh_lo = 0;

  int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
  std::size_t rank(int j) const;
  /// Zero map outside the stored range.
  FreeMap diff(int j) const;
};

Complex to_complex(const FreeComplex& p);
/// dim H^j computed from the stored terms (exact for j >= lo + 1).
std::size_t cohomology_dim(const FreeComplex& p, int j);
/// Every differential entry lies in the radical.
bool is_minimal(const FreeComplex& p);
/// Splits off contractible summands R --unit--> R until no differential
/// entry is a unit; deterministic (lowest degree, then row-major order).
FreeComplex minimize(const FreeComplex& p);

/// Map of free complexes of the given degree: components[j] : P^j -> Q^{j+degree}.
struct ChainMapRep {
  int degree = 0;
  std::map<int, FreeMap> components;

  /// Zero map with the right ranks when the component is absent.
  FreeMap component(const Algebra& a, int j, std::size_t source_rank,
                    std::size_t target_rank) const;
};

/// Checks d_Q t = t d_P at every square whose both sides are stored.
bool commutes(const FreeComplex& p, const FreeComplex& q, const ChainMapRep& t);

/// Mapping cone of t : P -> Sigma^deg P (deg even):
/// C^j = P^{j+1} (+) P^{j+deg}, d = [[-d, 0], [t, d]].
FreeComplex cone(const FreeComplex& p, const ChainMapRep& t);

}  // namespace injdim
