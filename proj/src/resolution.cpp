#include "injdim/resolution.hpp"

#include <string>

namespace injdim {

namespace {

/// Columns of w that generate span(w) modulo rad * span(w) + span(extra).
Mat generators_modulo(const Module& s, const Mat& w, const Mat& extra) {
  Mat rel = column_space_basis(hcat(radical_times(s, w), extra));
  Rref r = rref(hcat(rel, w));
  std::vector<std::size_t> idx;
  for (auto c : r.pivots)
    if (c >= rel.cols()) idx.push_back(c - rel.cols());
  return w.columns(idx);
}

}  // namespace

FreeMap syzygy_step(const Algebra& a, const FreeMap& f) {
  Mat ker = kernel_basis(expand(a, f));
  Module src = free_module(std::make_shared<const Algebra>(a), f.source_rank);
  return free_map_from_images(a, submodule_generators(src, ker));
}

FreeMap syzygy_step(const Module& m, const Mat& cover) {
  if (rank(cover) != m.dim()) throw Error("cover is not surjective");
  const Algebra& a = m.algebra();
  Mat ker = kernel_basis(cover);
  Module src = free_module(m.algebra_ptr(), cover.cols() / a.dim());
  return free_map_from_images(a, submodule_generators(src, ker));
}

Resolution minimal_resolution(const Module& m, int max_deg) {
  if (max_deg < 0) throw Error("resolution bound must be nonnegative");
  const Algebra& a = m.algebra();
  Mat gens = minimal_generators(m);
  Mat aug = expand_images(m, gens);
  std::vector<std::size_t> betti{gens.cols()};
  std::vector<FreeMap> maps;  // maps[n-1] = d_n
  bool complete = betti[0] == 0;
  for (int n = 1; n <= max_deg && !complete; ++n) {
    FreeMap d = n == 1 ? syzygy_step(m, aug) : syzygy_step(a, maps.back());
    betti.push_back(d.source_rank);
    maps.push_back(std::move(d));
    complete = betti.back() == 0;
  }
  FreeComplex c;
  c.alg = m.algebra_ptr();
  c.lo = -(static_cast<int>(betti.size()) - 1);
  if (complete && betti.size() > 1) c.lo += 1;
  for (int j = c.lo; j <= 0; ++j) c.ranks.push_back(betti[-j]);
  for (int j = c.lo; j < 0; ++j) c.diffs.push_back(maps[-j - 1]);
  c.complete_below = complete;
  c.lowest_minimal = true;
  c.coh_lo = 0;
  return Resolution{m, std::move(c), std::move(aug), std::move(betti), true, complete};
}

Module syzygy_module(const Module& m, int n) {
  if (n < 0) throw Error("syzygy index must be nonnegative");
  if (n == 0) return m;
  Resolution r = minimal_resolution(m, n);
  const AlgebraPtr& alg = m.algebra_ptr();
  Mat im = column_space_basis(expand(*alg, r.d(n)));
  return submodule(free_module(alg, r.complex.rank(-(n - 1))), im);
}

int lowest_cohomology(const Complex& x) {
  for (int j = x.lo(); j <= x.hi(); ++j)
    if (cohomology_dim(x, j) != 0) return j;
  return x.hi() + 1;
}

FreeComplex resolve_complex(const Complex& x, int depth) {
  if (depth < 0) throw Error("resolution depth must be nonnegative");
  const AlgebraPtr& alg = x.algebra_ptr();
  const Algebra& a = *alg;
  const std::size_t n = a.dim();
  const PrimeField& f = a.field();
  const int bottom = x.lo() - depth;

  // Built from the top down; index k holds degree x.hi() - k.
  std::vector<std::size_t> ranks;
  std::vector<FreeMap> outgoing;  // outgoing[k] : P^j -> P^{j+1}
  std::vector<Mat> phi;           // phi[k] : generator images in X^j
  bool complete = false;
  int j = x.hi();
  for (; j >= bottom; --j) {
    const std::size_t r1 = ranks.empty() ? 0 : ranks.back();
    const std::size_t r2 = ranks.size() < 2 ? 0 : ranks[ranks.size() - 2];
    const Module& xj = x.term(j);
    const Module& xj1 = x.term(j + 1);
    Mat psi(f, r2 * n + xj1.dim(), r1 * n + xj.dim());
    if (!ranks.empty()) {
      psi.set_block(0, 0, expand(a, outgoing.back()));
      psi.set_block(r2 * n, 0, expand_images(xj1, phi.back()).negated());
    }
    psi.set_block(r2 * n, r1 * n, x.diff(j));
    Mat z = kernel_basis(psi);
    Module s = direct_sum(free_module(alg, r1), xj);
    Mat bd(f, r1 * n + xj.dim(), 0);
    Mat dx = column_space_basis(x.diff(j - 1));
    if (dx.cols()) {
      bd = Mat(f, r1 * n + xj.dim(), dx.cols());
      bd.set_block(r1 * n, 0, dx);
    }
    Mat g = generators_modulo(s, z, bd);
    FreeMap d = free_map_from_images(a, g.block(0, 0, r1 * n, g.cols()));
    ranks.push_back(g.cols());
    outgoing.push_back(std::move(d));
    phi.push_back(g.block(r1 * n, 0, xj.dim(), g.cols()));
    if (j < x.lo() && g.cols() == 0) {
      complete = true;
      break;
    }
  }

  FreeComplex p;
  p.alg = alg;
  p.complete_below = complete;
  p.lo = complete ? j + 1 : bottom;
  if (complete) {
    ranks.pop_back();
    outgoing.pop_back();
  }
  // outgoing for the top degree maps to P^{hi+1} = 0 and is dropped.
  const int top = x.hi();
  if (p.lo > top) {
    p.lo = top;
    p.ranks = {0};
  } else {
    for (int deg = p.lo; deg <= top; ++deg) p.ranks.push_back(ranks[top - deg]);
    for (int deg = p.lo; deg < top; ++deg) p.diffs.push_back(outgoing[top - deg]);
  }
  p = minimize(p);
  p.lowest_minimal = false;
  p.coh_lo = lowest_cohomology(x);
  return p;
}

std::string DimVerdict::to_string() const {
  switch (kind) {
    case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
    case Kind::Infinite: return "Infinite";
    case Kind::AtLeast: return "AtLeast(" + std::to_string(value) + ")";
  }
  return {};
}

namespace {

/// -(lowest degree > floor with a nonzero term), or 0 when there is none.
DimVerdict finite_above(const FreeComplex& p, int floor) {
  for (int j = floor + 1; j <= p.hi(); ++j)
    if (p.rank(j) != 0) return DimVerdict::finite_of(-j);
  return DimVerdict::finite_of(0);
}

}  // namespace

DimVerdict projective_dimension(const FreeComplex& p) {
  if (p.complete_below) return finite_above(p, p.lo - 1);
  const int search_lo = p.lowest_minimal ? p.lo : p.lo + 1;
  for (int j = std::min(p.coh_lo - 1, p.hi()); j >= search_lo; --j)
    if (p.rank(j) == 0) return finite_above(p, j);
  const int c = p.coh_lo;
  if (p.alg->self_injective() && c - 1 >= p.lo) {
    Mat b = column_space_basis(expand(*p.alg, p.diff(c - 1)));
    Module bm = submodule(free_module(p.alg, p.rank(c)), b);
    if (is_projective(bm).projective) return finite_above(p, b.cols() ? c - 2 : c - 1);
    return DimVerdict::infinite();
  }
  return DimVerdict::at_least(-search_lo);
}

DimVerdict projective_dimension(const Module& m, int bound) {
  return projective_dimension(minimal_resolution(m, bound).complex);
}

DimVerdict projective_dimension(const Complex& x, int bound) {
  return projective_dimension(resolve_complex(x, bound));
}

}  // namespace injdim
