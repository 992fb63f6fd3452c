#pragma once

// Minimal free resolutions of modules and bounded complexes, and verdicts on
// projective dimension.

#include <string>
#include <vector>

#include "injdim/complex.hpp"

namespace injdim {

/// Minimal free resolution ... -> F_1 -> F_0 -> M, stored cohomologically:
/// complex.rank(-n) = betti[n] and complex.diff(-n) = d_n : F_n -> F_{n-1}.
struct Resolution {
  Module target;
  FreeComplex complex;
  /// Field matrix of F_0 -> M (dim M x betti[0] * dim A).
  Mat augmentation;
  /// betti[n] = rank F_n for n = 0..computed; ends with 0 when complete.
  std::vector<std::size_t> betti;
  bool minimal = true;
  /// A zero term was reached, so the resolution is finite.
  bool complete = false;

  int computed_degree() const { return static_cast<int>(betti.size()) - 1; }
  /// d_n : F_n -> F_{n-1}; the zero map outside the computed range.
  FreeMap d(int n) const { return complex.diff(-n); }
};

/// Map from a free module onto a minimal generating set of ker f.
FreeMap syzygy_step(const Algebra& a, const FreeMap& f);
/// Same for the kernel of a cover F_0 -> M given as a field matrix. Throws
/// Error if the cover is not surjective.
FreeMap syzygy_step(const Module& m, const Mat& cover);

/// Resolution through F_{max_deg}, or until a term vanishes.
Resolution minimal_resolution(const Module& m, int max_deg);

/// Omega^n M = image of d_n inside F_{n-1} (M itself for n = 0).
Module syzygy_module(const Module& m, int n);

/// Minimal complex of free modules quasi-isomorphic to X, computed from
/// X.hi down to X.lo - depth (or until a term vanishes below X.lo).
FreeComplex resolve_complex(const Complex& x, int depth);

struct DimVerdict {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::AtLeast;
  int value = 0;
  /// Finite and Infinite verdicts are proved; AtLeast is a lower bound.
  bool exact = false;

  bool finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
  friend bool operator==(const DimVerdict&, const DimVerdict&) = default;

  static DimVerdict finite_of(int n) { return {Kind::Finite, n, true}; }
  static DimVerdict infinite() { return {Kind::Infinite, 0, true}; }
  static DimVerdict at_least(int b) { return {Kind::AtLeast, b, false}; }
};

/// Projective dimension of the object represented by a (truncated) free
/// complex. Over a self-injective algebra the answer is always exact once
/// the stored range reaches below the cohomology.
DimVerdict projective_dimension(const FreeComplex& p);
DimVerdict projective_dimension(const Module& m, int bound);
DimVerdict projective_dimension(const Complex& x, int bound);

/// Lowest degree with nonzero cohomology, or hi + 1 for an acyclic complex.
int lowest_cohomology(const Complex& x);

}  // namespace injdim
