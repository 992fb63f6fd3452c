#include "injdim/ext.hpp"

#include <string>

namespace injdim {

HomComplex::HomComplex(FreeComplex p, Complex x) : p_(std::move(p)), x_(std::move(x)) {
  if (!p_.alg->same_structure(*x_.algebra_ptr())) throw Error("Hom complex: algebra mismatch");
}

bool HomComplex::computable(int n) const {
  return p_.complete_below || p_.lo <= x_.lo() - n - 1;
}

std::pair<int, int> HomComplex::span(int n) const {
  return {std::max(p_.lo, x_.lo() - n), std::min(p_.hi(), x_.hi() - n)};
}

std::size_t HomComplex::offset(int n, int j) const {
  std::size_t off = 0;
  for (int i = span(n).first; i < j; ++i) off += p_.rank(i) * x_.term(i + n).dim();
  return off;
}

std::size_t HomComplex::dim(int n) const {
  auto [first, last] = span(n);
  return first > last ? 0 : offset(n, last + 1);
}

const Mat& HomComplex::differential(int n) const {
  auto it = diff_cache_.find(n);
  if (it != diff_cache_.end()) return it->second;
  const Algebra& a = *p_.alg;
  const PrimeField& f = a.field();
  Mat d(f, dim(n + 1), dim(n));
  auto [first, last] = span(n);
  auto [first1, last1] = span(n + 1);
  const Residue sign = n % 2 ? 1 : f.neg(1);  // -(-1)^n
  for (int j = first; j <= last; ++j) {
    const std::size_t r = p_.rank(j), xd = x_.term(j + n).dim();
    const std::size_t src = offset(n, j);
    if (j >= first1 && j <= last1) {
      const Mat dx = x_.diff(j + n);
      const std::size_t xd1 = x_.term(j + n + 1).dim(), dst = offset(n + 1, j);
      for (std::size_t g = 0; g < r; ++g) d.set_block(dst + g * xd1, src + g * xd, dx);
    }
    if (j - 1 >= first1 && j - 1 <= last1) {
      const FreeMap dp = p_.diff(j - 1);
      const Module& xm = x_.term(j + n);
      const std::size_t dst = offset(n + 1, j - 1);
      for (std::size_t g = 0; g < dp.source_rank; ++g)
        for (std::size_t i = 0; i < dp.target_rank; ++i) {
          const Elem& e = dp.at(i, g);
          bool nz = false;
          for (auto c : e) nz = nz || c;
          if (!nz) continue;
          d.add_block(dst + g * xd, src + i * xd, xm.act(e).scaled(sign));
        }
    }
  }
  return diff_cache_.emplace(n, std::move(d)).first->second;
}

std::size_t HomComplex::differential_rank(int n) const {
  auto it = rank_cache_.find(n);
  if (it != rank_cache_.end()) return it->second;
  std::size_t r = rank(differential(n));
  rank_cache_.emplace(n, r);
  return r;
}

Mat HomComplex::component(int n, int j, const Mat& phi) const {
  const std::size_t r = p_.rank(j), xd = x_.term(j + n).dim();
  Mat c(p_.alg->field(), xd, r);
  auto [first, last] = span(n);
  if (j < first || j > last) return c;
  const std::size_t off = offset(n, j);
  for (std::size_t g = 0; g < r; ++g)
    for (std::size_t s = 0; s < xd; ++s) c(s, g) = phi(off + g * xd + s, 0);
  return c;
}

Mat HomComplex::assemble(int n, const std::map<int, Mat>& components) const {
  Mat v(p_.alg->field(), dim(n), 1);
  auto [first, last] = span(n);
  for (auto& [j, c] : components) {
    if (j < first || j > last) continue;
    const std::size_t xd = x_.term(j + n).dim(), off = offset(n, j);
    if (c.rows() != xd || c.cols() != p_.rank(j)) throw Error("Hom component has the wrong shape");
    for (std::size_t g = 0; g < c.cols(); ++g)
      for (std::size_t s = 0; s < xd; ++s) v(off + g * xd + s, 0) = c(s, g);
  }
  return v;
}

Mat HomComplex::precompose(const ChainMapRep& t, int n) const {
  const Algebra& a = *p_.alg;
  const int m = n + t.degree;
  Mat out(a.field(), dim(m), dim(n));
  auto [first, last] = span(m);
  auto [sfirst, slast] = span(n);
  for (int j = first; j <= last; ++j) {
    const int k = j + t.degree;
    if (k < sfirst || k > slast) continue;
    const std::size_t r = p_.rank(j), rk = p_.rank(k);
    if (r == 0 || rk == 0) continue;
    if (!t.components.count(j))
      throw Error("operator component at degree " + std::to_string(j) + " was not computed");
    const FreeMap tj = t.component(a, j, r, rk);
    const Module& xm = x_.term(j + m);
    const std::size_t xd = xm.dim(), dst = offset(m, j), src = offset(n, k);
    for (std::size_t g = 0; g < r; ++g)
      for (std::size_t i = 0; i < rk; ++i) {
        const Elem& e = tj.at(i, g);
        bool nz = false;
        for (auto c : e) nz = nz || c;
        if (nz) out.add_block(dst + g * xd, src + i * xd, xm.act(e));
      }
  }
  return out;
}

ExtComputer::ExtComputer(FreeComplex p, Complex x) : hom_(std::move(p), std::move(x)) {}

std::size_t ExtComputer::dim(int n) const {
  if (!hom_.computable(n)) throw Error("Ext^" + std::to_string(n) + " needs a deeper resolution");
  return hom_.dim(n) - hom_.differential_rank(n) - hom_.differential_rank(n - 1);
}

const ExtGroup& ExtComputer::group(int n) const {
  auto it = groups_.find(n);
  if (it != groups_.end()) return *it->second;
  if (!hom_.computable(n)) throw Error("Ext^" + std::to_string(n) + " needs a deeper resolution");
  Mat cycles = kernel_basis(hom_.differential(n));
  Subquotient q(cycles, hom_.differential(n - 1));
  auto g = std::make_unique<ExtGroup>(ExtGroup{n, std::move(q), std::move(cycles)});
  return *groups_.emplace(n, std::move(g)).first->second;
}

Mat ExtComputer::action(const ChainMapRep& t, int n) const {
  const ExtGroup& src = group(n);
  const ExtGroup& dst = group(n + t.degree);
  return dst.coordinates(hom_.precompose(t, n) * src.basis());
}

ExtGroup ext_group(const Resolution& res, const Module& n_module, int n) {
  ExtComputer e(res.complex, Complex::concentrated(n_module));
  return e.group(n);
}

ExtGroup ext_group(const Module& m, const Module& n_module, int n) {
  return ext_group(minimal_resolution(m, n + 1), n_module, n);
}

std::vector<std::size_t> ext_self_table(const Module& m, int bound) {
  ExtComputer e(minimal_resolution(m, bound + 1).complex, Complex::concentrated(m));
  std::vector<std::size_t> dims;
  for (int n = 0; n <= bound; ++n) dims.push_back(e.dim(n));
  return dims;
}

std::vector<std::size_t> ext_self_table(const Complex& x, int bound) {
  ExtComputer e(resolve_complex(x, bound + 1), x);
  std::vector<std::size_t> dims;
  for (int n = 0; n <= bound; ++n) dims.push_back(e.dim(n));
  return dims;
}

Mat generator_images(const Algebra& a, const FreeMap& f) {
  const std::size_t n = a.dim();
  Mat m(a.field(), f.target_rank * n, f.source_rank);
  for (std::size_t i = 0; i < f.target_rank; ++i)
    for (std::size_t j = 0; j < f.source_rank; ++j)
      for (std::size_t t = 0; t < n; ++t) m(i * n + t, j) = f.at(i, j)[t];
  return m;
}

std::map<int, Mat> lift_into(const FreeComplex& p, const Complex& y, int degree, int top,
                             int stop, const Mat& aug, const Mat& base) {
  const Algebra& a = *p.alg;
  std::map<int, Mat> c;
  auto x = solve(aug, base);
  if (!x) throw Error("lifting failed at the augmentation");
  c.emplace(top, std::move(*x));
  for (int j = top - 1; j >= stop; --j) {
    const Mat& above = c.at(j + 1);
    Mat need = expand_images(y.term(j + 1 + degree), above) * generator_images(a, p.diff(j));
    auto s = solve(y.diff(j + degree), need);
    if (!s) throw Error("lifting failed at degree " + std::to_string(j));
    c.emplace(j, std::move(*s));
  }
  return c;
}

ChainMapRep lift_cocycle(const HomComplex& h, int n, const Mat& alpha, const Resolution& q,
                         int depth) {
  const FreeComplex& p = h.source();
  const Algebra& a = *p.alg;
  if (q.computed_degree() < depth && !q.complete)
    throw Error("target resolution is too short for the requested lift");
  Mat base = h.component(n, -n, alpha);
  auto images = lift_into(p, to_complex(q.complex), n, -n, -(n + depth), q.augmentation, base);
  ChainMapRep t;
  t.degree = n;
  for (auto& [j, m] : images) t.components.emplace(j, free_map_from_images(a, m));
  return t;
}

Mat yoneda(const HomComplex& h_nl, int m, const Mat& alpha, const HomComplex& h_mn, int n,
           const Mat& beta, const Resolution& res_n) {
  const Algebra& a = *h_mn.source().alg;
  ChainMapRep lift = lift_cocycle(h_mn, n, beta, res_n, m);
  const int j = -(m + n);
  const std::size_t r = h_mn.source().rank(j);
  const FreeMap b = lift.component(a, j, r, res_n.complex.rank(-m));
  Mat al = h_nl.component(m, -m, alpha);
  const Module& l = h_nl.target().term(0);
  Mat out(a.field(), l.dim(), r);
  for (std::size_t g = 0; g < r; ++g)
    for (std::size_t i = 0; i < b.target_rank; ++i) {
      Mat col = l.act(b.at(i, g)) * al.block(0, i, l.dim(), 1);
      for (std::size_t s = 0; s < l.dim(); ++s) out(s, g) = a.field().add(out(s, g), col(s, 0));
    }
  Mat v(a.field(), r * l.dim(), 1);
  for (std::size_t g = 0; g < r; ++g)
    for (std::size_t s = 0; s < l.dim(); ++s) v(g * l.dim() + s, 0) = out(s, g);
  return v;
}

}  // namespace injdim
