#include "injdim/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace injdim {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error("characteristic " + std::to_string(p) + " is not a supported prime");
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw Error("inverse of zero");
  Residue result = 1, base = a;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Mat Mat::identity(PrimeField f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

Mat Mat::column(PrimeField f, std::span<const Residue> v) {
  Mat m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % f.modulus();
  return m;
}

std::vector<Residue> Mat::col(std::size_t j) const {
  std::vector<Residue> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_col(std::size_t j, std::span<const Residue> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    std::copy_n(a_.begin() + (r0 + i) * cols_ + c0, nc, b.a_.begin() + i * nc);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t i = 0; i < b.rows_; ++i)
    std::copy_n(b.a_.begin() + i * b.cols_, b.cols_, a_.begin() + (r0 + i) * cols_ + c0);
}

void Mat::add_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Residue& x = (*this)(r0 + i, c0 + j);
      x = field_.add(x, b(i, j));
    }
}

Mat Mat::columns(std::span<const std::size_t> idx) const {
  Mat m(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Residue x) { return x == 0; });
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::scaled(Residue s) const {
  Mat m = *this;
  for (auto& x : m.a_) x = field_.mul(x, s);
  return m;
}

namespace {

void check_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw Error("matrices over different fields");
}

// row_i += s * row_k, restricted to columns [from, cols)
inline void axpy(std::span<Residue> dst, std::span<const Residue> src, Residue s,
                 const PrimeField& f, std::size_t from = 0) {
  const std::uint64_t p = f.modulus();
  for (std::size_t j = from; j < dst.size(); ++j)
    if (src[j]) dst[j] = static_cast<Residue>((dst[j] + static_cast<std::uint64_t>(s) * src[j]) % p);
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
  Mat c(a.field_, a.rows_, b.cols_);
  if (a.field_.modulus() == 2) {
    const std::size_t w = (b.cols_ + 63) / 64;
    std::vector<std::uint64_t> bb(b.rows_ * w, 0), acc(w);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j)) bb[k * w + j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (a(i, k))
          for (std::size_t t = 0; t < w; ++t) acc[t] ^= bb[k * w + t];
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = acc[j / 64] >> (j % 64) & 1;
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto crow = c.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Residue s = a(i, k);
      if (s) axpy(crow, b.row(k), s, a.field_);
    }
  }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference dimension mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.field_.sub(a.a_[i], b.a_[i]);
  return c;
}

namespace {

// Bit-packed elimination over GF(2); same pivot rule as the generic path.
Rref rref_gf2(const Mat& m) {
  const std::size_t rows = m.rows(), cols = m.cols(), w = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * w, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    auto src = m.row(i);
    for (std::size_t j = 0; j < cols; ++j)
      if (src[j]) bits[i * w + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  Rref r{Mat(m.field(), rows, cols), 0, {}};
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t sel = rows;
    for (std::size_t i = prow; i < rows; ++i)
      if (bits[i * w + word] & mask) { sel = i; break; }
    if (sel == rows) continue;
    if (sel != prow)
      std::swap_ranges(bits.begin() + sel * w, bits.begin() + (sel + 1) * w, bits.begin() + prow * w);
    const std::uint64_t* pr = bits.data() + prow * w;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == prow) continue;
      std::uint64_t* ri = bits.data() + i * w;
      if (ri[word] & mask)
        for (std::size_t k = word; k < w; ++k) ri[k] ^= pr[k];
    }
    r.pivots.push_back(c);
    ++prow;
  }
  r.rank = prow;
  for (std::size_t i = 0; i < prow; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (bits[i * w + j / 64] >> (j % 64) & 1) r.reduced(i, j) = 1;
  return r;
}

}  // namespace

Rref rref(const Mat& m) {
  if (m.field().modulus() == 2) return rref_gf2(m);
  Rref r{m, 0, {}};
  Mat& a = r.reduced;
  const PrimeField& f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = prow; i < rows; ++i)
      if (a(i, c)) { sel = i; break; }
    if (sel == rows) continue;
    if (sel != prow)
      std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(prow).begin());
    Residue piv_inv = f.inv(a(prow, c));
    if (piv_inv != 1)
      for (std::size_t j = c; j < cols; ++j) a(prow, j) = f.mul(a(prow, j), piv_inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == prow) continue;
      Residue s = a(i, c);
      if (s) axpy(a.row(i), a.row(prow), f.neg(s), f, c);
    }
    r.pivots.push_back(c);
    ++prow;
  }
  r.rank = prow;
  return r;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  Rref r = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(f, m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k(fc, t) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k(r.pivots[i], t) = f.neg(r.reduced(i, fc));
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error("solve: row count mismatch");
  check_same_field(a, b);
  Rref r = rref(hcat(a, b));
  const std::size_t n = a.cols();
  // Any pivot in the b part means inconsistency.
  if (r.rank > 0 && r.pivots.back() >= n) return std::nullopt;
  Mat x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r.pivots[i], c) = r.reduced(i, n + c);
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  const PrimeField& f = a.field();
  Mat k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Residue s = a(i, j);
      if (!s) continue;
      for (std::size_t u = 0; u < b.rows(); ++u)
        for (std::size_t v = 0; v < b.cols(); ++v)
          k(i * b.rows() + u, j * b.cols() + v) = f.mul(s, b(u, v));
    }
  return k;
}

Mat hcat(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw Error("hcat: row count mismatch");
  Mat m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat vcat(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) throw Error("vcat: column count mismatch");
  Mat m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Mat column_space_basis(const Mat& m) { return m.columns(rref(m).pivots); }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Mat::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

Subquotient::Subquotient(const Mat& cycles, const Mat& boundaries) {
  const PrimeField& f = cycles.field();
  Mat bbasis = column_space_basis(boundaries);
  nb_ = bbasis.cols();
  Rref r = rref(hcat(bbasis, cycles));
  std::vector<std::size_t> rep_idx;
  for (auto c : r.pivots)
    if (c >= nb_) rep_idx.push_back(c - nb_);
  reps_ = cycles.columns(rep_idx);
  joined_ = hcat(bbasis, reps_);
  // Left inverse of the full-column-rank matrix joined_.
  const std::size_t n = joined_.rows(), k = joined_.cols();
  Rref e = rref(hcat(joined_, Mat::identity(f, n)));
  joined_ = e.reduced.block(0, k, k, n);
}

Mat Subquotient::coordinates(const Mat& v) const {
  Mat all = joined_ * v;
  return all.block(nb_, 0, reps_.cols(), v.cols());
}

}  // namespace injdim
