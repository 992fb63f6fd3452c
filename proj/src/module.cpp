#include "injdim/module.hpp"

#include <random>
#include <string>

namespace injdim {

Module::Module(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions)
    : alg_(std::move(alg)), dim_(dim), actions_(std::move(actions)) {
  const Algebra& a = *alg_;
  const PrimeField& f = a.field();
  if (actions_.size() != a.dim())
    throw Error("module needs one action matrix per algebra basis element");
  for (auto& m : actions_)
    if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == f))
      throw Error("action matrices must be dim x dim over the algebra's field");
  if (!(act(a.unit()) == Mat::identity(f, dim_)))
    throw Error("unit does not act as the identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat lhs = actions_[i] * actions_[j];
      Mat rhs(f, dim_, dim_);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (Residue c = a.structure_constant(i, j, k)) rhs = rhs + actions_[k].scaled(c);
      if (!(lhs == rhs))
        throw Error("relation violated: act(e" + std::to_string(i) + ") act(e" +
                    std::to_string(j) + ") != act(e" + std::to_string(i) + " e" +
                    std::to_string(j) + ")");
    }
}

Module Module::trusted(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions) {
  Module m;
  m.alg_ = std::move(alg);
  m.dim_ = dim;
  m.actions_ = std::move(actions);
  return m;
}

Mat Module::act(const Elem& r) const {
  if (r.size() != alg_->dim()) throw Error("element length mismatch");
  Mat m(field(), dim_, dim_);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) m = m + actions_[i].scaled(r[i]);
  return m;
}

Module module_from_actions(AlgebraPtr alg, std::size_t dim, std::vector<Mat> actions) {
  return Module(std::move(alg), dim, std::move(actions));
}

Module free_module(AlgebraPtr alg, std::size_t rank) {
  const Algebra& a = *alg;
  const std::size_t n = a.dim();
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < n; ++i) {
    Mat l = a.left_mult(a.basis(i));
    Mat m(a.field(), rank * n, rank * n);
    for (std::size_t r = 0; r < rank; ++r) m.set_block(r * n, r * n, l);
    acts.push_back(std::move(m));
  }
  return Module::trusted(std::move(alg), rank * n, std::move(acts));
}

Module trivial_module(AlgebraPtr alg) {
  const Algebra& a = *alg;
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Mat m(a.field(), 1, 1);
    m(0, 0) = a.augmentation()[i];
    acts.push_back(std::move(m));
  }
  return Module::trusted(std::move(alg), 1, std::move(acts));
}

Module zero_module(AlgebraPtr alg) {
  std::vector<Mat> acts(alg->dim(), Mat(alg->field(), 0, 0));
  return Module::trusted(std::move(alg), 0, std::move(acts));
}

Module direct_sum(const Module& a, const Module& b) {
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    Mat m(a.field(), a.dim() + b.dim(), a.dim() + b.dim());
    m.set_block(0, 0, a.action(i));
    m.set_block(a.dim(), a.dim(), b.action(i));
    acts.push_back(std::move(m));
  }
  return Module::trusted(a.algebra_ptr(), a.dim() + b.dim(), std::move(acts));
}

Module dual_module(const Module& m) { return dual_module(m, opposite(m.algebra())); }

Module dual_module(const Module& m, AlgebraPtr opposite_alg) {
  std::vector<Mat> acts;
  for (auto& a : m.actions()) acts.push_back(a.transpose());
  return Module::trusted(std::move(opposite_alg), m.dim(), std::move(acts));
}

Module submodule(const Module& m, const Mat& basis) {
  const std::size_t n = m.algebra().dim(), w = basis.cols();
  Mat images(m.field(), m.dim(), 0);
  for (std::size_t i = 0; i < n; ++i) images = hcat(images, m.action(i) * basis);
  auto x = solve(basis, images);
  if (!x) throw Error("subspace is not invariant under the algebra action");
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < n; ++i) acts.push_back(x->block(0, i * w, w, w));
  return Module::trusted(m.algebra_ptr(), w, std::move(acts));
}

Module quotient_module(const Module& m, const Mat& sub_basis) {
  const PrimeField& f = m.field();
  Mat sb = column_space_basis(sub_basis);
  Rref r = rref(hcat(sb, Mat::identity(f, m.dim())));
  std::vector<std::size_t> comp;
  for (auto c : r.pivots)
    if (c >= sb.cols()) comp.push_back(c - sb.cols());
  Mat e = Mat::identity(f, m.dim()).columns(comp);
  auto t = inverse(hcat(sb, e));
  if (!t) throw Error("quotient basis completion failed");
  Mat proj = t->block(sb.cols(), 0, comp.size(), m.dim());
  std::vector<Mat> acts;
  for (auto& a : m.actions()) acts.push_back(proj * a * e);
  return Module::trusted(m.algebra_ptr(), comp.size(), std::move(acts));
}

Mat radical_times(const Module& m, const Mat& w) {
  Mat all(m.field(), m.dim(), 0);
  for (auto& r : radical_basis(m.algebra())) all = hcat(all, m.act(r) * w);
  return column_space_basis(all);
}

Mat submodule_generators(const Module& m, const Mat& w) {
  Mat rad = radical_times(m, w);
  Rref r = rref(hcat(rad, w));
  std::vector<std::size_t> idx;
  for (auto c : r.pivots)
    if (c >= rad.cols()) idx.push_back(c - rad.cols());
  return w.columns(idx);
}

Mat minimal_generators(const Module& m) {
  return submodule_generators(m, Mat::identity(m.field(), m.dim()));
}

std::vector<Mat> hom_space(const Module& m, const Module& n) {
  if (!m.algebra().same_structure(n.algebra())) throw Error("hom_space: algebra mismatch");
  const PrimeField& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), na = m.algebra().dim();
  // Unknown f (dn x dm), variable index r * dm + c; equations f A_i - B_i f = 0.
  Mat sys(f, na * dn * dm, dn * dm);
  for (std::size_t i = 0; i < na; ++i) {
    const Mat& A = m.action(i);
    const Mat& B = n.action(i);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        std::size_t eq = (i * dn + r) * dm + c;
        for (std::size_t k = 0; k < dm; ++k)
          if (A(k, c)) sys(eq, r * dm + k) = f.add(sys(eq, r * dm + k), A(k, c));
        for (std::size_t k = 0; k < dn; ++k)
          if (B(r, k)) sys(eq, k * dm + c) = f.sub(sys(eq, k * dm + c), B(r, k));
      }
  }
  Mat ker = kernel_basis(sys);
  std::vector<Mat> out;
  for (std::size_t t = 0; t < ker.cols(); ++t) {
    Mat h(f, dn, dm);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) h(r, c) = ker(r * dm + c, t);
    out.push_back(std::move(h));
  }
  return out;
}

Projectivity is_projective(const Module& m) {
  std::size_t g = minimal_generators(m).cols();
  return {m.dim() == g * m.algebra().dim(), g};
}

Module tensor_diagonal(const Module& m, const Module& n) {
  if (!m.algebra().is_group_algebra())
    throw Error("diagonal tensor product needs a group algebra");
  if (!m.algebra().same_structure(n.algebra())) throw Error("tensor_diagonal: algebra mismatch");
  std::vector<Mat> acts;
  for (std::size_t t = 0; t < m.algebra().dim(); ++t)
    acts.push_back(kron(m.action(t), n.action(t)));
  return Module::trusted(m.algebra_ptr(), m.dim() * n.dim(), std::move(acts));
}

FreeMap FreeMap::zero(const Algebra& a, std::size_t target_rank, std::size_t source_rank) {
  return {source_rank, target_rank, std::vector<Elem>(target_rank * source_rank, a.zero())};
}

bool FreeMap::is_zero() const {
  for (auto& e : entries)
    for (auto x : e)
      if (x) return false;
  return true;
}

FreeMap compose(const Algebra& a, const FreeMap& g, const FreeMap& f) {
  if (g.source_rank != f.target_rank) throw Error("free map composition rank mismatch");
  FreeMap h = FreeMap::zero(a, g.target_rank, f.source_rank);
  for (std::size_t k = 0; k < g.target_rank; ++k)
    for (std::size_t j = 0; j < f.source_rank; ++j)
      for (std::size_t i = 0; i < f.target_rank; ++i)
        h.at(k, j) = a.add(h.at(k, j), a.multiply(f.at(i, j), g.at(k, i)));
  return h;
}

Mat expand(const Algebra& a, const FreeMap& f) {
  const std::size_t n = a.dim();
  Mat m(a.field(), f.target_rank * n, f.source_rank * n);
  for (std::size_t i = 0; i < f.target_rank; ++i)
    for (std::size_t j = 0; j < f.source_rank; ++j) {
      const Elem& e = f.at(i, j);
      bool nz = false;
      for (auto x : e) nz = nz || x;
      if (nz) m.set_block(i * n, j * n, a.right_mult(e));
    }
  return m;
}

FreeMap free_map_from_images(const Algebra& a, const Mat& images) {
  const std::size_t n = a.dim();
  if (images.rows() % n) throw Error("image vectors are not in a free module");
  FreeMap f = FreeMap::zero(a, images.rows() / n, images.cols());
  for (std::size_t i = 0; i < f.target_rank; ++i)
    for (std::size_t j = 0; j < f.source_rank; ++j)
      for (std::size_t t = 0; t < n; ++t) f.at(i, j)[t] = images(i * n + t, j);
  return f;
}

bool entries_in_radical(const Algebra& a, const FreeMap& f) {
  for (auto& e : f.entries)
    if (a.augment(e)) return false;
  return true;
}

Mat expand_images(const Module& target, const Mat& images) {
  const std::size_t n = target.algebra().dim();
  Mat m(target.field(), target.dim(), images.cols() * n);
  for (std::size_t t = 0; t < n; ++t) {
    Mat moved = target.action(t) * images;
    for (std::size_t j = 0; j < images.cols(); ++j)
      for (std::size_t r = 0; r < target.dim(); ++r) m(r, j * n + t) = moved(r, j);
  }
  return m;
}

Module random_module(AlgebraPtr alg, std::size_t a, std::size_t b, std::uint64_t seed) {
  const Algebra& A = *alg;
  std::mt19937_64 rng(seed);
  const std::uint32_t p = A.field().modulus();
  FreeMap f = FreeMap::zero(A, b, a);
  // Entries uniform in the radical, so the presentation is minimal.
  for (auto& e : f.entries) {
    for (auto& x : e) x = static_cast<Residue>(rng() % p);
    e = A.sub(e, A.scale(A.unit(), A.augment(e)));
  }
  Module fb = free_module(alg, b);
  return quotient_module(fb, column_space_basis(expand(A, f)));
}

}  // namespace injdim
