#pragma once

// Finite-dimensional left modules and maps between free modules.

#include <cstdint>
#include <vector>

#include "injdim/algebra.hpp"

namespace injdim {

/// Left module: one dim x dim action matrix per algebra basis element, acting
/// on column vectors, with act(a) act(b) = act(ab).
class Module {
 public:
  /// Validates the unit and multiplication relations; throws Error naming
  /// the violated axiom.
  Module(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const PrimeField& field() const { return alg_->field(); }
  std::size_t dim() const { return dim_; }
  const Mat& action(std::size_t basis_index) const { return actions_.at(basis_index); }
  const std::vector<Mat>& actions() const { return actions_; }
  /// Action of an arbitrary algebra element.
  Mat act(const Elem& r) const;

  friend bool operator==(const Module& a, const Module& b) {
    return a.alg_->same_structure(*b.alg_) && a.dim_ == b.dim_ && a.actions_ == b.actions_;
  }

  /// Skips validation; for actions known to satisfy the axioms by construction.
  static Module trusted(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions);

 private:
  Module() = default;
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<Mat> actions_;
};

Module module_from_actions(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions);
Module free_module(AlgebraPtr alg, std::size_t rank);
Module trivial_module(AlgebraPtr alg);
Module zero_module(AlgebraPtr alg);
Module direct_sum(const Module& a, const Module& b);

/// k-linear dual Hom_k(M, k) as a left module over the opposite algebra.
Module dual_module(const Module& m);
/// As dual_module, but over a caller-supplied opposite algebra.
Module dual_module(const Module& m, AlgebraPtr opposite_alg);

/// Submodule spanned by the (independent, invariant) columns of basis,
/// expressed in that basis.
Module submodule(const Module& m, const Mat& basis);
/// Quotient by an invariant subspace; the quotient basis is the canonical
/// pivot completion of the subspace by standard vectors.
Module quotient_module(const Module& m, const Mat& sub_basis);

/// Span of rad * W for W spanned by the columns of w.
Mat radical_times(const Module& m, const Mat& w);
/// Minimal generators of the submodule spanned by the columns of w: the
/// columns of w that are pivots after a basis of rad * W.
Mat submodule_generators(const Module& m, const Mat& w);
/// Lifted basis of M / rad M, as columns (standard vectors).
Mat minimal_generators(const Module& m);

/// Basis of Hom_R(M, N) as dim N x dim M matrices (canonical kernel basis).
std::vector<Mat> hom_space(const Module& m, const Module& n);

struct Projectivity {
  bool projective = false;
  std::size_t rank = 0;  // number of minimal generators
};
Projectivity is_projective(const Module& m);

/// M (x)_k N with g acting as g (x) g; requires a group algebra.
Module tensor_diagonal(const Module& m, const Module& n);

/// Map R^a -> R^b of free left modules, e_j -> sum_i entry(i, j) e_i.
/// Entries act by right multiplication, so composition multiplies entry
/// products in the opposite order of the algebra.
struct FreeMap {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::vector<Elem> entries;  // target_rank x source_rank, row-major

  static FreeMap zero(const Algebra& a, std::size_t target_rank, std::size_t source_rank);
  const Elem& at(std::size_t i, std::size_t j) const { return entries[i * source_rank + j]; }
  Elem& at(std::size_t i, std::size_t j) { return entries[i * source_rank + j]; }
  bool is_zero() const;
  friend bool operator==(const FreeMap&, const FreeMap&) = default;
};

/// g o f.
FreeMap compose(const Algebra& a, const FreeMap& g, const FreeMap& f);
/// Field matrix in the coordinates (generator, algebra basis index).
Mat expand(const Algebra& a, const FreeMap& f);
/// Map whose j-th column of images is the image of the j-th generator.
FreeMap free_map_from_images(const Algebra& a, const Mat& images);
/// Every entry lies in the augmentation ideal.
bool entries_in_radical(const Algebra& a, const FreeMap& f);

/// Field matrix of the module map R^r -> M sending generator j to column j of images.
Mat expand_images(const Module& target, const Mat& images);

/// Cokernel of a seeded random map R^a -> R^b with entries in the radical;
/// deterministic in the seed.
Module random_module(AlgebraPtr alg, std::size_t a, std::size_t b, std::uint64_t seed);

}  // namespace injdim
