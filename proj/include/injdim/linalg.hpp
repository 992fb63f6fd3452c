#pragma once

// Dense exact linear algebra over prime fields GF(p).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace injdim {

/// Raised for malformed inputs (bad dimensions, failed axioms, schema errors).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Residue = std::uint32_t;

class PrimeField {
 public:
  /// Throws Error unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue inv(Residue a) const;
  Residue reduce(std::int64_t v) const;

  static bool is_prime(std::uint64_t n);

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Row-major matrix with entries in [0, p). 0xn and nx0 shapes are legal.
class Mat {
 public:
  Mat() : field_(2) {}
  Mat(PrimeField f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(PrimeField f, std::size_t n);
  /// Entries are reduced mod p.
  static Mat from_rows(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows);
  static Mat column(PrimeField f, std::span<const Residue> v);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<Residue> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Residue> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  std::vector<Residue> col(std::size_t j) const;
  void set_col(std::size_t j, std::span<const Residue> v);

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  /// Adds b into the block at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat columns(std::span<const std::size_t> idx) const;

  bool is_zero() const;
  Mat transpose() const;
  Mat scaled(Residue s) const;
  Mat negated() const { return scaled(field_.neg(1)); }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  const std::vector<Residue>& data() const { return a_; }

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> a_;
};

struct Rref {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are the first nonzero entry in column order.
Rref rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Canonical kernel basis: one column per free variable, in increasing order,
/// with that free variable set to 1 and the others to 0.
Mat kernel_basis(const Mat& m);

/// Solves a x = b column by column. Returns the particular solution with all
/// free variables zero, or nullopt if some column is inconsistent.
/// Throws Error on a row-count mismatch.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Block (i,j) of the result is a(i,j) * b.
Mat kron(const Mat& a, const Mat& b);

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);

/// Pivot columns of m; a deterministic basis of its column space.
Mat column_space_basis(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

/// A quotient Z/B of column spaces with B inside Z. Representatives are the
/// columns of Z that become pivots after the columns of B.
class Subquotient {
 public:
  Subquotient(const Mat& cycles, const Mat& boundaries);

  std::size_t dim() const { return reps_.cols(); }
  const Mat& representatives() const { return reps_; }
  /// Coordinates of each column of v (which must lie in Z) in the rep basis.
  Mat coordinates(const Mat& v) const;

 private:
  Mat reps_;
  Mat joined_;  // [boundary basis | reps]
  std::size_t nb_ = 0;
};

}  // namespace injdim
