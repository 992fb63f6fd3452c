#include "injdim/operators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace injdim {

namespace {

/// Dense polynomials with exponent of x_i below 2 a_i; index e_1 + 2a_1 (e_2 + ...).
struct DenseBox {
  std::vector<unsigned> a;
  std::size_t small = 1, big = 1;
  std::vector<std::size_t> small_to_big;

  explicit DenseBox(const std::vector<unsigned>& exps) : a(exps) {
    for (auto e : a) {
      small *= e;
      big *= 2 * e;
    }
    small_to_big.resize(small);
    for (std::size_t s = 0; s < small; ++s) {
      std::size_t rest = s, b = 0, stride = 1;
      for (auto e : a) {
        b += (rest % e) * stride;
        rest /= e;
        stride *= 2 * e;
      }
      small_to_big[s] = b;
    }
  }
  std::vector<unsigned> exponents(std::size_t b) const {
    std::vector<unsigned> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      e[i] = b % (2 * a[i]);
      b /= 2 * a[i];
    }
    return e;
  }
};

using Dense = std::vector<Residue>;

Dense lift_dense(const Algebra& alg, const DenseBox& box, const Elem& r) {
  const CIPresentation& ci = *alg.ci();
  const PrimeField& f = alg.field();
  Dense out(box.big, 0);
  for (std::size_t s = 0; s < box.small; ++s) {
    Residue c = 0;
    for (std::size_t t = 0; t < r.size(); ++t)
      if (r[t]) c = f.add(c, f.mul(ci.to_monomial(s, t), r[t]));
    out[box.small_to_big[s]] = c;
  }
  return out;
}

// acc += x * y; the exponents of x and y stay below the box bound.
void mul_add(const PrimeField& f, const std::vector<std::size_t>& nz_x,
             const Dense& x, const std::vector<std::size_t>& nz_y, const Dense& y, Dense& acc) {
  for (auto i : nz_x)
    for (auto j : nz_y) {
      // Adding indices is exact because no coordinate overflows its 2a_i range.
      std::size_t k = i + j;
      acc[k] = f.add(acc[k], f.mul(x[i], y[j]));
    }
}

std::vector<std::size_t> support(const Dense& d) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i]) s.push_back(i);
  return s;
}

}  // namespace

std::vector<ChainMapRep> eisenbud_operators(const FreeComplex& p,
                                            const std::optional<LiftPerturbation>& perturb) {
  const Algebra& alg = *p.alg;
  if (!alg.ci()) throw Error("Eisenbud operators need a complete-intersection presentation");
  if (!alg.commutative()) throw Error("Eisenbud operators need a commutative algebra");
  const CIPresentation& ci = *alg.ci();
  const PrimeField& f = alg.field();
  const std::size_t c = ci.c();
  DenseBox box(ci.exponents);
  std::vector<ChainMapRep> ops(c);
  for (auto& t : ops) t.degree = 2;

  // Lifted differentials, computed once per degree.
  std::map<int, std::vector<Dense>> lifted;
  auto lift_diff = [&](int j) -> const std::vector<Dense>& {
    auto it = lifted.find(j);
    if (it != lifted.end()) return it->second;
    const FreeMap d = p.diff(j);
    std::vector<Dense> l;
    for (std::size_t k = 0; k < d.entries.size(); ++k) {
      Dense e = lift_dense(alg, box, d.entries[k]);
      if (perturb && perturb->degree == j && k == perturb->row * d.source_rank + perturb->col)
        e[ci.exponents[0]] = f.add(e[ci.exponents[0]], 1);
      l.push_back(std::move(e));
    }
    return lifted.emplace(j, std::move(l)).first->second;
  };

  for (int j = p.lo; j + 2 <= p.hi(); ++j) {
    const std::size_t r0 = p.rank(j), r1 = p.rank(j + 1), r2 = p.rank(j + 2);
    const auto& d0 = lift_diff(j);      // r1 x r0
    const auto& d1 = lift_diff(j + 1);  // r2 x r1
    std::vector<std::vector<std::size_t>> s0, s1;
    for (auto& e : d0) s0.push_back(support(e));
    for (auto& e : d1) s1.push_back(support(e));
    for (auto& t : ops) t.components.emplace(j, FreeMap::zero(alg, r2, r0));
    Dense sq(box.big);
    for (std::size_t k = 0; k < r2; ++k)
      for (std::size_t g = 0; g < r0; ++g) {
        std::fill(sq.begin(), sq.end(), 0);
        for (std::size_t i = 0; i < r1; ++i)
          mul_add(f, s0[i * r0 + g], d0[i * r0 + g], s1[k * r1 + i], d1[k * r1 + i], sq);
        // Least-index division by the x_i^{a_i}, then reduction mod the ideal.
        std::vector<Dense> quot(c, Dense(box.small, 0));
        for (std::size_t b = 0; b < box.big; ++b) {
          if (!sq[b]) continue;
          auto e = box.exponents(b);
          std::size_t i = 0;
          while (i < c && e[i] < ci.exponents[i]) ++i;
          if (i == c) throw Error("lifted differential does not square into the ideal");
          e[i] -= ci.exponents[i];
          bool inside = true;
          std::size_t s = 0, stride = 1;
          for (std::size_t v = 0; v < c; ++v) {
            inside = inside && e[v] < ci.exponents[v];
            s += e[v] * stride;
            stride *= ci.exponents[v];
          }
          if (inside) quot[i][s] = f.add(quot[i][s], sq[b]);
        }
        for (std::size_t i = 0; i < c; ++i) {
          Mat m = ci.from_monomial * Mat::column(f, quot[i]);
          Elem& out = ops[i].components.at(j).at(k, g);
          for (std::size_t t = 0; t < alg.dim(); ++t) out[t] = m(t, 0);
        }
      }
  }
  return ops;
}

OperatorAction operator_action(const ExtComputer& e, const ChainMapRep& t, const std::string& label,
                               int first, int last) {
  OperatorAction a{label, t.degree, first, {}};
  for (int n = first; n <= last; ++n) a.matrices.push_back(e.action(t, n));
  return a;
}

ModuleExt::ModuleExt(const Module& m, int b)
    : res(minimal_resolution(m, b + 1)),
      ext(res.complex, Complex::concentrated(m)),
      bound(b) {}

std::vector<std::size_t> ModuleExt::table() const {
  std::vector<std::size_t> dims;
  for (int n = 0; n <= bound; ++n) dims.push_back(ext.dim(n));
  return dims;
}

std::vector<OperatorAction> eisenbud_actions(const ModuleExt& me,
                                             const std::optional<LiftPerturbation>& perturb) {
  auto ops = eisenbud_operators(me.res.complex, perturb);
  std::vector<OperatorAction> out;
  for (std::size_t i = 0; i < ops.size(); ++i)
    out.push_back(operator_action(me.ext, ops[i], "chi" + std::to_string(i + 1), 0, me.bound - 2));
  return out;
}

GroupCohomology::GroupCohomology(AlgebraPtr alg, int bound)
    : res_k(minimal_resolution(trivial_module(alg), bound + 1)),
      ext(res_k.complex, Complex::concentrated(trivial_module(alg))) {
  if (!alg->is_group_algebra()) throw Error("the diagonal action needs a group algebra");
}

namespace {

KClass basis_class(const GroupCohomology& h, int n, std::size_t i, const std::string& label) {
  const ExtGroup& g = h.ext.group(n);
  return {n, g.basis().block(0, i, g.basis().rows(), 1), label};
}

}  // namespace

std::vector<KClass> hopf_generators(const GroupCohomology& h) {
  const Algebra& a = *h.res_k.complex.alg;
  std::vector<KClass> gens;
  if (h.res_k.computed_degree() < 3) throw Error("cohomology of k is too shallow for generators");
  const ExtGroup& e2 = h.ext.group(2);
  if (a.field().modulus() == 2) {
    const ExtGroup& e1 = h.ext.group(1);
    for (std::size_t i = 0; i < e1.dim(); ++i)
      gens.push_back(basis_class(h, 1, i, "y" + std::to_string(i + 1)));
    Mat prods(a.field(), e2.dim(), 0);
    for (std::size_t i = 0; i < e1.dim(); ++i)
      for (std::size_t j = 0; j < e1.dim(); ++j) {
        Mat v = yoneda(h.ext.hom(), 1, gens[i].cocycle, h.ext.hom(), 1, gens[j].cocycle, h.res_k);
        prods = hcat(prods, e2.coordinates(v));
      }
    Mat basis = column_space_basis(prods);
    Rref r = rref(hcat(basis, Mat::identity(a.field(), e2.dim())));
    std::size_t extra = 0;
    for (auto c : r.pivots)
      if (c >= basis.cols())
        gens.push_back(basis_class(h, 2, c - basis.cols(), "x" + std::to_string(++extra)));
  } else {
    for (std::size_t i = 0; i < e2.dim(); ++i)
      gens.push_back(basis_class(h, 2, i, "x" + std::to_string(i + 1)));
  }
  return gens;
}

ChainMapRep hopf_chain_map(const GroupCohomology& h, const KClass& alpha, const ModuleExt& me) {
  const AlgebraPtr& alg = h.res_k.complex.alg;
  const Algebra& a = *alg;
  if (!a.is_group_algebra()) throw Error("the diagonal action needs a group algebra");
  if (a.field().modulus() != 2 && alpha.degree % 2)
    throw Error("odd-degree classes do not act in odd characteristic");
  const int n = alpha.degree;
  const Module& m = me.res.target;
  const PrimeField& f = a.field();
  const FreeComplex& pk = h.res_k.complex;

  // Y = P_k (x) M over degrees -n..0, a projective resolution of M.
  std::vector<Module> terms;
  std::vector<Mat> diffs;
  const Mat id_m = Mat::identity(f, m.dim());
  for (int j = -n; j <= 0; ++j) terms.push_back(tensor_diagonal(free_module(alg, pk.rank(j)), m));
  for (int j = -n; j < 0; ++j) diffs.push_back(kron(expand(a, pk.diff(j)), id_m));
  Complex y(alg, -n, std::move(terms), std::move(diffs));

  const std::size_t r0 = me.res.complex.rank(0);
  FreeMap ident = FreeMap::zero(a, r0, r0);
  for (std::size_t g = 0; g < r0; ++g) ident.at(g, g) = a.unit();
  Mat base = me.res.augmentation * generator_images(a, ident);
  Mat aug = kron(h.res_k.augmentation, id_m);
  auto u = lift_into(me.res.complex, y, 0, 0, -n, aug, base);

  // alpha as a field map P_k^{-n} -> k: x e_g -> aug(x) alpha(e_g).
  Mat comp = h.ext.hom().component(n, -n, alpha.cocycle);
  const std::size_t rk = pk.rank(-n), da = a.dim();
  Mat afield(f, 1, rk * da);
  for (std::size_t g = 0; g < rk; ++g)
    for (std::size_t t = 0; t < da; ++t) afield(0, g * da + t) = f.mul(a.augmentation()[t], comp(0, g));
  Mat xi = kron(afield, id_m) * u.at(-n);
  Mat v = me.ext.hom().assemble(n, {{-n, xi}});
  return lift_cocycle(me.ext.hom(), n, v, me.res, me.bound - n);
}

OperatorAction hopf_action(const GroupCohomology& h, const KClass& alpha, const ModuleExt& me) {
  ChainMapRep t = hopf_chain_map(h, alpha, me);
  return operator_action(me.ext, t, alpha.label, 0, me.bound - alpha.degree);
}

FreeComplex koszul_object(const FreeComplex& p, const ChainMapRep& s) {
  FreeComplex c = minimize(cone(p, s));
  c.lowest_minimal = false;
  return c;
}

FreeComplex koszul_ci(const FreeComplex& p) {
  const std::size_t c = p.alg->ci() ? p.alg->ci()->c() : 0;
  if (c == 0) throw Error("Koszul objects need a complete-intersection presentation");
  FreeComplex cur = p;
  for (std::size_t i = 0; i < c; ++i) {
    auto ops = eisenbud_operators(cur);
    cur = koszul_object(cur, ops[i]);
  }
  return cur;
}

FreeComplex bounded_part(const FreeComplex& p) {
  if (p.complete_below) return p;
  const int search_lo = p.lowest_minimal ? p.lo : p.lo + 1;
  for (int j = std::min(p.coh_lo - 1, p.hi()); j >= search_lo; --j)
    if (p.rank(j) == 0) {
      FreeComplex b;
      b.alg = p.alg;
      b.lo = j + 1;
      b.complete_below = true;
      b.lowest_minimal = true;
      b.coh_lo = p.coh_lo;
      if (b.lo > p.hi()) {
        b.lo = p.hi();
        b.ranks = {0};
        return b;
      }
      for (int k = b.lo; k <= p.hi(); ++k) b.ranks.push_back(p.rank(k));
      for (int k = b.lo; k < p.hi(); ++k) b.diffs.push_back(p.diff(k));
      return b;
    }
  return p;
}

namespace {

/// Least e in [1, cap] with every degree-e monomial of the actions zero on all
/// covered source degrees; a composite leaving the covered range is zero.
std::optional<int> joint_exponent(const std::vector<OperatorAction>& acts, int lo, int hi, int cap) {
  const std::size_t r = acts.size();
  for (int e = 1; e <= cap; ++e) {
    // Enumerate multisets i_1 <= .. <= i_e.
    std::vector<std::size_t> idx(e, 0);
    bool all_zero = true;
    while (all_zero) {
      for (int n = lo; n <= hi && all_zero; ++n) {
        std::optional<Mat> prod;
        int deg = n;
        bool out = false;
        for (auto i : idx) {
          if (!acts[i].covers(deg)) {
            out = true;
            break;
          }
          prod = prod ? acts[i].at(deg) * *prod : acts[i].at(deg);
          deg += acts[i].degree;
        }
        if (!out && prod && !prod->is_zero()) all_zero = false;
      }
      int k = e - 1;
      while (k >= 0 && idx[k] == r - 1) --k;
      if (k < 0) break;
      ++idx[k];
      for (int m = k + 1; m < e; ++m) idx[m] = idx[k];
    }
    if (all_zero) return e;
  }
  return std::nullopt;
}

}  // namespace

AnnihilationReport annihilation_exponent(const Module& x, int bound) {
  const AlgebraPtr& alg = x.algebra_ptr();
  const std::size_t c = alg->ci() ? alg->ci()->c() : 0;
  if (c == 0) throw Error("Koszul objects need a complete-intersection presentation");
  AnnihilationReport rep;
  rep.cap = static_cast<int>(2 * c);

  FreeComplex k = bounded_part(koszul_ci(minimal_resolution(x, bound).complex));
  if (!k.complete_below) return rep;
  const Module kk = trivial_module(alg);

  // Ext^n(K, k) for n in [-K.hi, -K.lo], acted on through K.
  {
    ExtComputer e(k, Complex::concentrated(kk));
    auto ops = eisenbud_operators(k);
    std::vector<OperatorAction> acts;
    const int lo = -k.hi(), hi = -k.lo;
    for (std::size_t i = 0; i < c; ++i)
      acts.push_back(operator_action(e, ops[i], "chi" + std::to_string(i + 1), lo, hi - 2));
    rep.ext_from_koszul = joint_exponent(acts, lo, hi, rep.cap);
  }
  // Ext^n(k, K) for n in [K.lo, K.hi], acted on through the resolution of k.
  {
    const int lo = k.lo, hi = k.hi();
    Resolution rk = minimal_resolution(kk, hi - lo + 3);
    ExtComputer e(rk.complex, to_complex(k));
    auto ops = eisenbud_operators(rk.complex);
    std::vector<OperatorAction> acts;
    for (std::size_t i = 0; i < c; ++i)
      acts.push_back(operator_action(e, ops[i], "chi" + std::to_string(i + 1), lo, hi - 2));
    rep.ext_into_koszul = joint_exponent(acts, lo, hi, rep.cap);
  }
  return rep;
}

bool CriterionReport::all_nilpotent() const {
  for (auto& n : nilpotency)
    if (!n) return false;
  return true;
}

std::optional<int> nilpotency_index(const OperatorAction& t, int bound) {
  if (t.degree <= 0) return std::nullopt;
  for (int e = 1; e * t.degree <= bound; ++e) {
    bool zero = true;
    for (int n = 0; n + e * t.degree <= bound && zero; ++n) {
      std::optional<Mat> prod;
      int deg = n;
      bool covered = true;
      for (int s = 0; s < e; ++s) {
        if (!t.covers(deg)) {
          covered = false;
          break;
        }
        prod = prod ? t.at(deg) * *prod : t.at(deg);
        deg += t.degree;
      }
      if (!covered) return std::nullopt;
      zero = prod->is_zero();
    }
    if (zero) return e;
  }
  return std::nullopt;
}

CriterionReport torsion_verdict(const std::vector<std::size_t>& table,
                                const std::vector<OperatorAction>& actions,
                                const std::vector<int>& generator_degrees) {
  CriterionReport r;
  r.generator_degrees = generator_degrees;
  if (generator_degrees.empty()) return r;
  r.d = *std::max_element(generator_degrees.begin(), generator_degrees.end());
  r.l = 1;
  for (int g : generator_degrees) r.l = std::lcm(r.l, g);
  const int bound = static_cast<int>(table.size()) - 1;
  for (int n = 0; n + r.d - 1 <= bound && !r.window_start; ++n) {
    bool zero = true;
    for (int k = n; k < n + r.d; ++k) zero = zero && table[k] == 0;
    if (zero) r.window_start = n;
  }
  for (int m = 0; m * r.l <= bound && !r.ml_multiple; ++m)
    if (table[m * r.l] == 0) r.ml_multiple = m;
  for (auto& a : actions) {
    r.labels.push_back(a.label);
    r.nilpotency.push_back(nilpotency_index(a, bound));
  }
  r.status = r.window_start || r.ml_multiple ? CriterionStatus::CertifiedTorsion
                                             : CriterionStatus::NotCertified;
  return r;
}

std::string to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::CertifiedTorsion: return "CERTIFIED_TORSION";
    case CriterionStatus::NotCertified: return "NOT_CERTIFIED";
    case CriterionStatus::Unavailable: return "UNAVAILABLE";
  }
  return {};
}

}  // namespace injdim
