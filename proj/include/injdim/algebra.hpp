#pragma once

// Finite-dimensional augmented local algebras given by structure constants,
// with optional complete-intersection and group-algebra data.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "injdim/linalg.hpp"

namespace injdim {

/// Coefficient vector of an algebra element in the algebra basis.
using Elem = std::vector<Residue>;

/// k[x_1..x_c]/(x_1^{a_1},..,x_c^{a_c}) presentation. Monomial x^e has index
/// e_1 + a_1 (e_2 + a_2 (e_3 + ...)), so x_1 varies fastest.
struct CIPresentation {
  std::vector<unsigned> exponents;
  /// Monomial coordinates = to_monomial * basis coordinates.
  Mat to_monomial;
  /// Basis coordinates = from_monomial * monomial coordinates.
  Mat from_monomial;

  std::size_t c() const { return exponents.size(); }
};

class Algebra {
 public:
  Algebra(PrimeField f, std::size_t dim, std::vector<Residue> mult, Elem unit, Elem augmentation,
          std::vector<std::string> labels);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Elem& unit() const { return unit_; }
  const Elem& augmentation() const { return aug_; }

  /// Coefficient of e_k in e_i * e_j.
  Residue structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Residue>& structure_constants() const { return mult_; }

  Elem basis(std::size_t i) const;
  Elem zero() const { return Elem(dim_, 0); }
  Elem multiply(const Elem& a, const Elem& b) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, Residue s) const;
  Residue augment(const Elem& a) const;
  bool is_unit(const Elem& a) const { return augment(a) != 0; }
  /// Two-sided inverse of a unit of this local algebra.
  Elem inverse(const Elem& a) const;

  /// Matrix of v -> r v.
  Mat left_mult(const Elem& r) const;
  /// Matrix of v -> v r.
  Mat right_mult(const Elem& r) const;

  bool commutative() const { return commutative_; }
  bool self_injective() const { return self_injective_; }

  const std::optional<CIPresentation>& ci() const { return ci_; }
  /// Invariant factors when the basis is the group of an abelian p-group.
  const std::optional<std::vector<unsigned>>& group_factors() const { return group_; }
  bool is_group_algebra() const { return group_.has_value(); }

  void attach_ci(CIPresentation ci) { ci_ = std::move(ci); }
  void attach_group(std::vector<unsigned> factors) { group_ = std::move(factors); }

  /// Same structure constants, unit and augmentation.
  bool same_structure(const Algebra& other) const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Residue> mult_;
  Elem unit_;
  Elem aug_;
  std::vector<std::string> labels_;
  bool commutative_ = false;
  bool self_injective_ = false;
  std::optional<CIPresentation> ci_;
  std::optional<std::vector<unsigned>> group_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// k[x_1..x_c]/(x_i^{a_i}). Throws Error for a non-prime p or an exponent < 2.
AlgebraPtr truncated_ci(std::uint32_t p, const std::vector<unsigned>& exponents);

/// Group algebra of Z/q_1 x .. x Z/q_r over GF(p), basis the group elements.
/// Each q_i must be a power of p (q_i >= p). The complete-intersection
/// presentation x_i = g_i - 1 with exponents q_i is attached.
AlgebraPtr group_algebra(std::uint32_t p, const std::vector<unsigned>& factors);

/// Validates the axioms in order: shapes, unit, associativity, augmentation,
/// nilpotent radical. The first failure is named in the thrown Error.
AlgebraPtr from_structure_constants(std::uint32_t p, std::size_t dim, std::vector<Residue> mult,
                                    Elem unit, Elem augmentation,
                                    std::vector<std::string> labels = {});

/// Basis of ker(augmentation): the canonical kernel basis of the augmentation row.
std::vector<Elem> radical_basis(const Algebra& a);

AlgebraPtr opposite(const Algebra& a);

/// Polynomial in c variables with exponent of x_i bounded by 2 a_i.
class BddPoly {
 public:
  using Exponents = std::vector<unsigned>;

  BddPoly(PrimeField f, std::vector<unsigned> ci_exponents);

  const PrimeField& field() const { return field_; }
  const std::vector<unsigned>& ci_exponents() const { return a_; }
  const std::map<Exponents, Residue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, Residue c);
  BddPoly operator+(const BddPoly& o) const;
  BddPoly operator*(const BddPoly& o) const;
  friend bool operator==(const BddPoly& x, const BddPoly& y) { return x.terms_ == y.terms_; }

 private:
  PrimeField field_;
  std::vector<unsigned> a_;
  std::map<Exponents, Residue> terms_;
};

/// Canonical lift of r to Q = k[x_1..x_c]: all exponents below the a_i.
BddPoly lift_to_poly(const Algebra& a, const Elem& r);
/// Image of g in Q/(x_i^{a_i}) = the algebra.
Elem reduce_poly(const Algebra& a, const BddPoly& g);
/// Quotients q with g = sum_i x_i^{a_i} q_i; each monomial goes to the least
/// index i with e_i >= a_i. Throws Error if a monomial lies outside the ideal.
std::vector<BddPoly> divide_by_ci(const Algebra& a, const BddPoly& g);

}  // namespace injdim
