#include "injdim/algebra.hpp"

#include <numeric>

namespace injdim {

namespace {

std::size_t product(const std::vector<unsigned>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<unsigned> digits(std::size_t index, const std::vector<unsigned>& radix) {
  std::vector<unsigned> e(radix.size());
  for (std::size_t i = 0; i < radix.size(); ++i) {
    e[i] = static_cast<unsigned>(index % radix[i]);
    index /= radix[i];
  }
  return e;
}

std::size_t undigits(const std::vector<unsigned>& e, const std::vector<unsigned>& radix) {
  std::size_t idx = 0;
  for (std::size_t i = radix.size(); i-- > 0;) idx = idx * radix[i] + e[i];
  return idx;
}

std::string monomial_label(const std::vector<unsigned>& e, const char* prefix, bool letters) {
  static const char* names[] = {"x", "y", "z"};
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += letters ? std::string(names[i])
                 : std::string(prefix) + (e.size() == 1 ? "" : std::to_string(i + 1));
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Mat stack_rows(PrimeField f, const std::vector<Mat>& ms, std::size_t cols) {
  std::size_t rows = 0;
  for (auto& m : ms) rows += m.rows();
  Mat out(f, rows, cols);
  std::size_t r = 0;
  for (auto& m : ms) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

}  // namespace

Algebra::Algebra(PrimeField f, std::size_t dim, std::vector<Residue> mult, Elem unit,
                 Elem augmentation, std::vector<std::string> labels)
    : field_(f), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)),
      aug_(std::move(augmentation)), labels_(std::move(labels)) {
  if (mult_.size() != dim_ * dim_ * dim_ || unit_.size() != dim_ || aug_.size() != dim_)
    throw Error("structure constants have inconsistent dimensions");
  for (auto& x : mult_) x %= f.modulus();
  for (auto& x : unit_) x %= f.modulus();
  for (auto& x : aug_) x %= f.modulus();
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim_) throw Error("label count differs from dimension");

  commutative_ = true;
  for (std::size_t i = 0; i < dim_ && commutative_; ++i)
    for (std::size_t j = 0; j < i && commutative_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (structure_constant(i, j, k) != structure_constant(j, i, k)) {
          commutative_ = false;
          break;
        }

  // A local algebra is self-injective iff its left and right socles are simple.
  auto rad = radical_basis(*this);
  std::vector<Mat> lefts, rights;
  for (auto& r : rad) {
    lefts.push_back(left_mult(r));
    rights.push_back(right_mult(r));
  }
  std::size_t soc_l = kernel_basis(stack_rows(f, lefts, dim_)).cols();
  std::size_t soc_r = kernel_basis(stack_rows(f, rights, dim_)).cols();
  self_injective_ = (soc_l == 1 && soc_r == 1);
}

Elem Algebra::basis(std::size_t i) const {
  Elem e(dim_, 0);
  e.at(i) = 1;
  return e;
}

Elem Algebra::multiply(const Elem& a, const Elem& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw Error("element length mismatch");
  Elem c(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      Residue s = field_.mul(a[i], b[j]);
      const Residue* row = &mult_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k]) c[k] = field_.add(c[k], field_.mul(s, row[k]));
    }
  }
  return c;
}

Elem Algebra::add(const Elem& a, const Elem& b) const {
  Elem c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = field_.add(a[i], b[i]);
  return c;
}

Elem Algebra::sub(const Elem& a, const Elem& b) const {
  Elem c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = field_.sub(a[i], b[i]);
  return c;
}

Elem Algebra::scale(const Elem& a, Residue s) const {
  Elem c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = field_.mul(a[i], s);
  return c;
}

Residue Algebra::augment(const Elem& a) const {
  Residue s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s = field_.add(s, field_.mul(a[i], aug_[i]));
  return s;
}

Elem Algebra::inverse(const Elem& a) const {
  auto x = solve(left_mult(a), Mat::column(field_, unit_));
  if (!x) throw Error("element is not invertible");
  return x->col(0);
}

Mat Algebra::left_mult(const Elem& r) const {
  if (r.size() != dim_) throw Error("element length mismatch");
  Mat m(field_, dim_, dim_);
  for (std::size_t t = 0; t < dim_; ++t) m.set_col(t, multiply(r, basis(t)));
  return m;
}

Mat Algebra::right_mult(const Elem& r) const {
  if (r.size() != dim_) throw Error("element length mismatch");
  Mat m(field_, dim_, dim_);
  for (std::size_t t = 0; t < dim_; ++t) m.set_col(t, multiply(basis(t), r));
  return m;
}

bool Algebra::same_structure(const Algebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && mult_ == o.mult_ && unit_ == o.unit_ &&
         aug_ == o.aug_;
}

std::vector<Elem> radical_basis(const Algebra& a) {
  Mat row(a.field(), 1, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) row(0, i) = a.augmentation()[i];
  Mat k = kernel_basis(row);
  std::vector<Elem> out;
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.col(j));
  return out;
}

AlgebraPtr truncated_ci(std::uint32_t p, const std::vector<unsigned>& exponents) {
  PrimeField f(p);
  for (auto a : exponents)
    if (a < 2) throw Error("complete-intersection exponents must be at least 2");
  const std::size_t dim = product(exponents);
  if (dim > 4096) throw Error("algebra dimension exceeds the supported budget");
  std::vector<Residue> mult(dim * dim * dim, 0);
  std::vector<std::string> labels;
  const bool letters = exponents.size() <= 3;
  for (std::size_t i = 0; i < dim; ++i) {
    auto ei = digits(i, exponents);
    labels.push_back(monomial_label(ei, "x", letters));
    for (std::size_t j = 0; j < dim; ++j) {
      auto ej = digits(j, exponents);
      bool vanishes = false;
      for (std::size_t v = 0; v < ei.size(); ++v) {
        ej[v] += ei[v];
        if (ej[v] >= exponents[v]) vanishes = true;
      }
      if (!vanishes) mult[(i * dim + j) * dim + undigits(ej, exponents)] = 1;
    }
  }
  Elem unit(dim, 0), aug(dim, 0);
  unit[0] = 1;
  aug[0] = 1;
  auto alg = std::make_shared<Algebra>(f, dim, std::move(mult), unit, aug, std::move(labels));
  alg->attach_ci({exponents, Mat::identity(f, dim), Mat::identity(f, dim)});
  return alg;
}

AlgebraPtr group_algebra(std::uint32_t p, const std::vector<unsigned>& factors) {
  PrimeField f(p);
  for (auto q : factors) {
    unsigned x = q;
    while (x > 1 && x % p == 0) x /= p;
    if (q < p || x != 1)
      throw Error("invariant factor " + std::to_string(q) + " is not a power of " +
                  std::to_string(p));
  }
  const std::size_t dim = product(factors);
  if (dim > 4096) throw Error("algebra dimension exceeds the supported budget");
  std::vector<Residue> mult(dim * dim * dim, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    auto ei = digits(i, factors);
    labels.push_back(monomial_label(ei, "g", false));
    for (std::size_t j = 0; j < dim; ++j) {
      auto ej = digits(j, factors);
      for (std::size_t v = 0; v < ei.size(); ++v) ej[v] = (ej[v] + ei[v]) % factors[v];
      mult[(i * dim + j) * dim + undigits(ej, factors)] = 1;
    }
  }
  Elem unit(dim, 0), aug(dim, 1);
  unit[0] = 1;
  auto alg = std::make_shared<Algebra>(f, dim, std::move(mult), unit, aug, std::move(labels));
  alg->attach_group(factors);
  if (!factors.empty()) {
    // Column m of from_monomial is prod_i (g_i - 1)^{e_i} in group coordinates.
    Mat from(f, dim, dim);
    std::vector<Elem> xs;
    for (std::size_t v = 0; v < factors.size(); ++v) {
      std::vector<unsigned> e(factors.size(), 0);
      e[v] = 1;
      xs.push_back(alg->sub(alg->basis(undigits(e, factors)), unit));
    }
    for (std::size_t m = 0; m < dim; ++m) {
      auto e = digits(m, factors);
      Elem acc = unit;
      for (std::size_t v = 0; v < e.size(); ++v)
        for (unsigned t = 0; t < e[v]; ++t) acc = alg->multiply(acc, xs[v]);
      from.set_col(m, acc);
    }
    auto to = inverse(from);
    if (!to) throw Error("group algebra monomial change of basis is singular");
    alg->attach_ci({factors, *to, from});
  } else {
    alg->attach_ci({{}, Mat::identity(f, 1), Mat::identity(f, 1)});
  }
  return alg;
}

AlgebraPtr from_structure_constants(std::uint32_t p, std::size_t dim, std::vector<Residue> mult,
                                    Elem unit, Elem augmentation,
                                    std::vector<std::string> labels) {
  PrimeField f(p);
  if (dim == 0) throw Error("shape: algebra dimension must be positive");
  if (mult.size() != dim * dim * dim || unit.size() != dim || augmentation.size() != dim)
    throw Error("shape: structure constants have inconsistent dimensions");
  // Validate on a raw view before constructing, so the socle computation in
  // the constructor only ever sees local algebras.
  auto sc = [&](std::size_t i, std::size_t j, std::size_t k) {
    return mult[(i * dim + j) * dim + k] % p;
  };
  auto mul = [&](const Elem& a, const Elem& b) {
    Elem c(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Residue s = f.mul(a[i] % p, b[j] % p);
        if (!s) continue;
        for (std::size_t k = 0; k < dim; ++k) c[k] = f.add(c[k], f.mul(s, sc(i, j, k)));
      }
    return c;
  };
  auto basis = [&](std::size_t i) {
    Elem e(dim, 0);
    e[i] = 1;
    return e;
  };
  for (std::size_t i = 0; i < dim; ++i)
    if (mul(unit, basis(i)) != basis(i) || mul(basis(i), unit) != basis(i))
      throw Error("non-unital: unit fails on basis element " + std::to_string(i));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Elem ij = mul(basis(i), basis(j));
      for (std::size_t k = 0; k < dim; ++k)
        if (mul(ij, basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
          throw Error("non-associative on basis triple (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
    }
  auto aug = [&](const Elem& a) {
    Residue s = 0;
    for (std::size_t i = 0; i < dim; ++i) s = f.add(s, f.mul(a[i] % p, augmentation[i] % p));
    return s;
  };
  if (aug(unit) != 1) throw Error("augmentation not multiplicative: unit maps to " +
                                  std::to_string(aug(unit)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (aug(mul(basis(i), basis(j))) != f.mul(aug(basis(i)), aug(basis(j))))
        throw Error("augmentation not multiplicative on basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  // Nilpotent radical: I^{k+1} = rad * I^k must reach zero within dim steps.
  Mat row(f, 1, dim);
  for (std::size_t i = 0; i < dim; ++i) row(0, i) = augmentation[i] % p;
  Mat rad = kernel_basis(row);
  Mat power = rad;
  for (std::size_t step = 0; step <= dim && power.cols() > 0; ++step) {
    Mat next(f, dim, 0);
    for (std::size_t a = 0; a < rad.cols(); ++a)
      for (std::size_t b = 0; b < power.cols(); ++b)
        next = hcat(next, Mat::column(f, mul(rad.col(a), power.col(b))));
    power = column_space_basis(next);
  }
  if (power.cols() > 0) throw Error("radical not nilpotent: algebra is not local");
  return std::make_shared<Algebra>(f, dim, std::move(mult), std::move(unit),
                                   std::move(augmentation), std::move(labels));
}

AlgebraPtr opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Residue> mult(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mult[(i * n + j) * n + k] = a.structure_constant(j, i, k);
  auto op = std::make_shared<Algebra>(a.field(), n, std::move(mult), a.unit(), a.augmentation(),
                                      a.labels());
  if (a.ci() && a.commutative()) op->attach_ci(*a.ci());
  if (a.group_factors()) op->attach_group(*a.group_factors());
  return op;
}

BddPoly::BddPoly(PrimeField f, std::vector<unsigned> ci_exponents)
    : field_(f), a_(std::move(ci_exponents)) {}

void BddPoly::add_term(const Exponents& e, Residue c) {
  if (e.size() != a_.size()) throw Error("monomial arity mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] >= 2 * a_[i]) throw Error("monomial exponent exceeds the 2a_i bound");
  c %= field_.modulus();
  if (!c) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (!it->second) terms_.erase(it);
  }
}

BddPoly BddPoly::operator+(const BddPoly& o) const {
  BddPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

BddPoly BddPoly::operator*(const BddPoly& o) const {
  BddPoly r(field_, a_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, field_.mul(c1, c2));
    }
  return r;
}

BddPoly lift_to_poly(const Algebra& a, const Elem& r) {
  if (!a.ci()) throw Error("algebra has no complete-intersection presentation");
  const auto& ci = *a.ci();
  Mat m = ci.to_monomial * Mat::column(a.field(), r);
  BddPoly g(a.field(), ci.exponents);
  for (std::size_t idx = 0; idx < a.dim(); ++idx)
    if (m(idx, 0)) g.add_term(digits(idx, ci.exponents), m(idx, 0));
  return g;
}

Elem reduce_poly(const Algebra& a, const BddPoly& g) {
  if (!a.ci()) throw Error("algebra has no complete-intersection presentation");
  const auto& ci = *a.ci();
  Mat m(a.field(), a.dim(), 1);
  for (auto& [e, c] : g.terms()) {
    bool in_ideal = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] >= ci.exponents[i]) in_ideal = true;
    if (in_ideal) continue;
    std::size_t idx = undigits(e, ci.exponents);
    m(idx, 0) = a.field().add(m(idx, 0), c);
  }
  return (ci.from_monomial * m).col(0);
}

std::vector<BddPoly> divide_by_ci(const Algebra& a, const BddPoly& g) {
  if (!a.ci()) throw Error("algebra has no complete-intersection presentation");
  const auto& ex = a.ci()->exponents;
  std::vector<BddPoly> q(ex.size(), BddPoly(a.field(), ex));
  for (auto& [e, c] : g.terms()) {
    std::size_t i = 0;
    while (i < e.size() && e[i] < ex[i]) ++i;
    if (i == e.size()) throw Error("polynomial is not visibly in the complete-intersection ideal");
    auto e2 = e;
    e2[i] -= ex[i];
    q[i].add_term(e2, c);
  }
  return q;
}

}  // namespace injdim
