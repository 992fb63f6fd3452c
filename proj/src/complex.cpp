#include "injdim/complex.hpp"

#include <string>

namespace injdim {

Complex::Complex(Unchecked, AlgebraPtr alg, int lo, std::vector<Module> terms,
                 std::vector<Mat> diffs)
    : alg_(alg), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)),
      zero_(zero_module(alg)) {}

Complex::Complex(AlgebraPtr alg, int lo, std::vector<Module> terms, std::vector<Mat> diffs)
    : Complex(Unchecked{}, alg, lo, std::move(terms), std::move(diffs)) {
  const std::size_t expected = terms_.empty() ? 0 : terms_.size() - 1;
  if (diffs_.size() != expected) throw Error("complex needs one differential between consecutive terms");
  for (auto& t : terms_)
    if (!t.algebra().same_structure(*alg_)) throw Error("complex terms over different algebras");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const Mat& d = diffs_[k];
    if (d.rows() != terms_[k + 1].dim() || d.cols() != terms_[k].dim())
      throw Error("differential " + std::to_string(lo_ + static_cast<int>(k)) + " has the wrong shape");
    for (std::size_t i = 0; i < alg_->dim(); ++i)
      if (!(d * terms_[k].action(i) == terms_[k + 1].action(i) * d))
        throw Error("differential " + std::to_string(lo_ + static_cast<int>(k)) +
                    " is not a module map");
    if (k + 1 < diffs_.size() && !(diffs_[k + 1] * d).is_zero())
      throw Error("d o d != 0 at degree " + std::to_string(lo_ + static_cast<int>(k)));
  }
}

Complex Complex::concentrated(const Module& m, int degree) {
  return Complex(Unchecked{}, m.algebra_ptr(), degree, {m}, {});
}

const Module& Complex::term(int j) const {
  if (j < lo_ || j > hi()) return zero_;
  return terms_[j - lo_];
}

Mat Complex::diff(int j) const {
  if (j >= lo_ && j < hi()) return diffs_[j - lo_];
  return Mat(alg_->field(), term(j + 1).dim(), term(j).dim());
}

Complex shift(const Complex& x, int n) {
  std::vector<Module> terms;
  std::vector<Mat> diffs;
  for (int j = x.lo(); j <= x.hi(); ++j) terms.push_back(x.term(j));
  for (int j = x.lo(); j < x.hi(); ++j)
    diffs.push_back(n % 2 ? x.diff(j).negated() : x.diff(j));
  return Complex(Complex::Unchecked{}, x.algebra_ptr(), x.lo() - n, std::move(terms),
                 std::move(diffs));
}

namespace {

Mat component_or_zero(const std::map<int, Mat>& f, int j, const Complex& x, const Complex& y) {
  auto it = f.find(j);
  if (it != f.end()) return it->second;
  return Mat(x.algebra_ptr()->field(), y.term(j).dim(), x.term(j).dim());
}

}  // namespace

bool is_chain_map(const Complex& x, const Complex& y, const std::map<int, Mat>& f) {
  for (auto& [j, m] : f) {
    if (m.rows() != y.term(j).dim() || m.cols() != x.term(j).dim()) return false;
    for (std::size_t i = 0; i < x.algebra_ptr()->dim(); ++i)
      if (!(m * x.term(j).action(i) == y.term(j).action(i) * m)) return false;
  }
  const int lo = std::min(x.lo(), y.lo()) - 1, hi = std::max(x.hi(), y.hi());
  for (int j = lo; j <= hi; ++j) {
    Mat lhs = y.diff(j) * component_or_zero(f, j, x, y);
    Mat rhs = component_or_zero(f, j + 1, x, y) * x.diff(j);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Complex cone(const Complex& x, const Complex& y, const std::map<int, Mat>& f) {
  if (!is_chain_map(x, y, f)) throw Error("cone: map is not a chain map");
  const int lo = std::min(x.lo() - 1, y.lo()), hi = std::max(x.hi() - 1, y.hi());
  std::vector<Module> terms;
  std::vector<Mat> diffs;
  for (int j = lo; j <= hi; ++j) terms.push_back(direct_sum(x.term(j + 1), y.term(j)));
  for (int j = lo; j < hi; ++j) {
    const std::size_t xa = x.term(j + 1).dim(), ya = y.term(j).dim();
    const std::size_t xb = x.term(j + 2).dim(), yb = y.term(j + 1).dim();
    Mat d(x.algebra_ptr()->field(), xb + yb, xa + ya);
    d.set_block(0, 0, x.diff(j + 1).negated());
    d.set_block(xb, 0, component_or_zero(f, j + 1, x, y));
    d.set_block(xb, xa, y.diff(j));
    diffs.push_back(std::move(d));
  }
  return Complex(Complex::Unchecked{}, x.algebra_ptr(), lo, std::move(terms), std::move(diffs));
}

Module cohomology(const Complex& x, int n) {
  const Module& t = x.term(n);
  Mat ker = kernel_basis(x.diff(n));
  Module z = submodule(t, ker);
  Mat im = column_space_basis(x.diff(n - 1));
  auto coords = solve(ker, im);
  if (!coords) throw Error("image not contained in kernel");
  return quotient_module(z, *coords);
}

std::size_t cohomology_dim(const Complex& x, int n) {
  return x.term(n).dim() - rank(x.diff(n)) - rank(x.diff(n - 1));
}

Complex dual_complex(const Complex& x, AlgebraPtr opposite_alg) {
  std::vector<Module> terms;
  std::vector<Mat> diffs;
  for (int j = -x.hi(); j <= -x.lo(); ++j) terms.push_back(dual_module(x.term(-j), opposite_alg));
  for (int j = -x.hi(); j < -x.lo(); ++j) diffs.push_back(x.diff(-j - 1).transpose());
  return Complex(Complex::Unchecked{}, opposite_alg, -x.hi(), std::move(terms), std::move(diffs));
}

std::size_t FreeComplex::rank(int j) const {
  if (j < lo || j > hi()) return 0;
  return ranks[j - lo];
}

FreeMap FreeComplex::diff(int j) const {
  if (j >= lo && j < hi()) return diffs[j - lo];
  return FreeMap::zero(*alg, rank(j + 1), rank(j));
}

Complex to_complex(const FreeComplex& p) {
  std::vector<Module> terms;
  std::vector<Mat> diffs;
  for (int j = p.lo; j <= p.hi(); ++j) terms.push_back(free_module(p.alg, p.rank(j)));
  for (int j = p.lo; j < p.hi(); ++j) diffs.push_back(expand(*p.alg, p.diff(j)));
  return Complex(Complex::Unchecked{}, p.alg, p.lo, std::move(terms), std::move(diffs));
}

std::size_t cohomology_dim(const FreeComplex& p, int j) {
  const std::size_t n = p.alg->dim();
  return p.rank(j) * n - rank(expand(*p.alg, p.diff(j))) - rank(expand(*p.alg, p.diff(j - 1)));
}

bool is_minimal(const FreeComplex& p) {
  for (auto& d : p.diffs)
    if (!entries_in_radical(*p.alg, d)) return false;
  return true;
}

namespace {

FreeMap drop(const Algebra& a, const FreeMap& f, std::size_t row, std::size_t col) {
  const std::size_t nr = f.target_rank - (row < f.target_rank ? 1 : 0);
  const std::size_t nc = f.source_rank - (col < f.source_rank ? 1 : 0);
  FreeMap g = FreeMap::zero(a, nr, nc);
  for (std::size_t i = 0, gi = 0; i < f.target_rank; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, gj = 0; j < f.source_rank; ++j) {
      if (j == col) continue;
      g.at(gi, gj++) = f.at(i, j);
    }
    ++gi;
  }
  return g;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

FreeComplex minimize(const FreeComplex& p) {
  FreeComplex q = p;
  const Algebra& a = *q.alg;
  for (std::size_t k = 0; k < q.diffs.size(); ++k) {
    bool again = true;
    while (again) {
      again = false;
      FreeMap& d = q.diffs[k];
      for (std::size_t i = 0; i < d.target_rank && !again; ++i)
        for (std::size_t e = 0; e < d.source_rank && !again; ++e) {
          if (!a.is_unit(d.at(i, e))) continue;
          const Elem uinv = a.inverse(d.at(i, e));
          FreeMap nd = FreeMap::zero(a, d.target_rank - 1, d.source_rank - 1);
          for (std::size_t r = 0, ri = 0; r < d.target_rank; ++r) {
            if (r == i) continue;
            for (std::size_t l = 0, li = 0; l < d.source_rank; ++l) {
              if (l == e) continue;
              Elem corr = a.multiply(a.multiply(d.at(i, l), uinv), d.at(r, e));
              nd.at(ri, li++) = a.sub(d.at(r, l), corr);
            }
            ++ri;
          }
          d = std::move(nd);
          if (k > 0) q.diffs[k - 1] = drop(a, q.diffs[k - 1], e, kNone);
          if (k + 1 < q.diffs.size()) q.diffs[k + 1] = drop(a, q.diffs[k + 1], kNone, i);
          q.ranks[k] -= 1;
          q.ranks[k + 1] -= 1;
          again = true;
        }
    }
  }
  return q;
}

FreeMap ChainMapRep::component(const Algebra& a, int j, std::size_t source_rank,
                               std::size_t target_rank) const {
  auto it = components.find(j);
  if (it != components.end()) {
    if (it->second.source_rank != source_rank || it->second.target_rank != target_rank)
      throw Error("chain map component has the wrong ranks");
    return it->second;
  }
  return FreeMap::zero(a, target_rank, source_rank);
}

bool commutes(const FreeComplex& p, const FreeComplex& q, const ChainMapRep& t) {
  const Algebra& a = *p.alg;
  for (auto& [j, tj] : t.components) {
    auto next = t.components.find(j + 1);
    if (next == t.components.end() || j + 1 > p.hi()) continue;
    FreeMap lhs = compose(a, q.diff(j + t.degree), tj);
    FreeMap rhs = compose(a, next->second, p.diff(j));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

FreeComplex cone(const FreeComplex& p, const ChainMapRep& t) {
  const Algebra& a = *p.alg;
  const int deg = t.degree;
  if (deg < 1) throw Error("cone: operator degree must be positive");
  if (!commutes(p, p, t)) throw Error("cone: operator is not a chain map");
  FreeComplex c;
  c.alg = p.alg;
  c.complete_below = p.complete_below;
  c.lo = p.complete_below ? p.lo - deg : p.lo - 1;
  const int hi = p.hi() - 1;
  c.coh_lo = p.coh_lo - deg;
  for (int j = c.lo; j <= hi; ++j) c.ranks.push_back(p.rank(j + 1) + p.rank(j + deg));
  const bool odd = deg % 2;
  for (int j = c.lo; j < hi; ++j) {
    const std::size_t xa = p.rank(j + 1), ya = p.rank(j + deg);
    const std::size_t xb = p.rank(j + 2), yb = p.rank(j + 1 + deg);
    FreeMap d = FreeMap::zero(a, xb + yb, xa + ya);
    FreeMap dx = p.diff(j + 1);
    FreeMap tj = t.component(a, j + 1, xa, yb);
    FreeMap dy = p.diff(j + deg);
    for (std::size_t r = 0; r < xb; ++r)
      for (std::size_t s = 0; s < xa; ++s) d.at(r, s) = a.scale(dx.at(r, s), a.field().neg(1));
    for (std::size_t r = 0; r < yb; ++r) {
      for (std::size_t s = 0; s < xa; ++s) d.at(xb + r, s) = tj.at(r, s);
      for (std::size_t s = 0; s < ya; ++s)
        d.at(xb + r, xa + s) = odd ? a.scale(dy.at(r, s), a.field().neg(1)) : dy.at(r, s);
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

}  // namespace injdim
