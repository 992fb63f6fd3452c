#pragma once

// Ext via the Hom complex from a free complex into a bounded complex of
// modules, comparison lifting, and Yoneda products.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "injdim/resolution.hpp"

namespace injdim {

/// Hom^n(P, X) = prod_j Hom_R(P^j, X^{j+n}) with D phi = d_X phi - (-1)^n phi d_P.
/// A homomorphism R^r -> X^i is stored by its generator images; coordinate
/// offset(n, j) + g * dim X^{j+n} + s is entry s of the image of generator g.
class HomComplex {
 public:
  HomComplex(FreeComplex p, Complex x);

  const FreeComplex& source() const { return p_; }
  const Complex& target() const { return x_; }

  /// Hom^n and D^n agree with the untruncated source.
  bool computable(int n) const;
  std::size_t dim(int n) const;
  /// Degrees j of the source contributing to Hom^n, as [first, last].
  std::pair<int, int> span(int n) const;
  std::size_t offset(int n, int j) const;

  /// D^n : Hom^n -> Hom^{n+1}.
  const Mat& differential(int n) const;
  std::size_t differential_rank(int n) const;

  /// Generator images (dim X^{j+n} x rank P^j) of the P^j component of phi.
  Mat component(int n, int j, const Mat& phi) const;
  /// Vector in Hom^n from a map j -> generator images; missing components are zero.
  Mat assemble(int n, const std::map<int, Mat>& components) const;

  /// phi -> phi o t, as a field matrix Hom^n -> Hom^{n + t.degree}.
  Mat precompose(const ChainMapRep& t, int n) const;

 private:
  FreeComplex p_;
  Complex x_;
  mutable std::map<int, Mat> diff_cache_;
  mutable std::map<int, std::size_t> rank_cache_;
};

/// Ext^n as cocycles modulo coboundaries with the canonical basis.
struct ExtGroup {
  int degree = 0;
  Subquotient quotient;
  Mat cycles;

  std::size_t dim() const { return quotient.dim(); }
  /// Basis cocycles as columns in Hom^degree.
  const Mat& basis() const { return quotient.representatives(); }
  /// Coordinates of cocycles (columns) in the basis.
  Mat coordinates(const Mat& v) const { return quotient.coordinates(v); }
};

/// Caches Ext groups of one Hom complex.
class ExtComputer {
 public:
  ExtComputer(FreeComplex p, Complex x);

  const HomComplex& hom() const { return hom_; }
  /// Rank-only dimension.
  std::size_t dim(int n) const;
  const ExtGroup& group(int n) const;
  /// Matrix of [phi] -> [phi o t] from Ext^n to Ext^{n + t.degree}.
  Mat action(const ChainMapRep& t, int n) const;

 private:
  HomComplex hom_;
  mutable std::map<int, std::unique_ptr<ExtGroup>> groups_;
};

/// Ext^n(M, N) with N in degree 0; res must reach degree n + 1.
ExtGroup ext_group(const Resolution& res, const Module& n_module, int n);
/// Convenience form computing the resolution of M itself.
ExtGroup ext_group(const Module& m, const Module& n_module, int n);

/// dim Ext^n(M, M) for n = 0..bound.
std::vector<std::size_t> ext_self_table(const Module& m, int bound);
std::vector<std::size_t> ext_self_table(const Complex& x, int bound);

/// Columns of a FreeMap as field vectors: column g holds the image of e_g.
Mat generator_images(const Algebra& a, const FreeMap& f);

/// Chain map components c_j : P^j -> Y^{j + degree} for j = top down to
/// stop, returned as generator images (dim Y^{j+degree} x rank P^j). The
/// top component solves aug * c_top = base; lower ones solve
/// d_Y c_j = c_{j+1} d_P. Throws Error if a lifting system is inconsistent.
std::map<int, Mat> lift_into(const FreeComplex& p, const Complex& y, int degree, int top,
                             int stop, const Mat& aug, const Mat& base);

/// Lifts a cocycle alpha in Hom^n(F_M, N) to a chain map F_M -> Q of degree n
/// down to source degree -(n + depth), where Q resolves N with augmentation.
ChainMapRep lift_cocycle(const HomComplex& h, int n, const Mat& alpha, const Resolution& q,
                         int depth);

/// Class of alpha o beta in Ext^{m+n}(M, L), as a cocycle in the Hom complex
/// of F_M into L. alpha is a cocycle of Hom^m(F_N, L), beta of Hom^n(F_M, N);
/// res_n must reach degree m.
Mat yoneda(const HomComplex& h_nl, int m, const Mat& alpha, const HomComplex& h_mn, int n,
           const Mat& beta, const Resolution& res_n);

}  // namespace injdim
