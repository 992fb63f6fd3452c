#include <gtest/gtest.h>

#include "injdim/operators.hpp"
#include "oracles.hpp"

using namespace injdim;

namespace {

bool is_identity_map(const Algebra& a, const FreeMap& f) {
  if (f.source_rank != f.target_rank) return false;
  for (std::size_t i = 0; i < f.target_rank; ++i)
    for (std::size_t j = 0; j < f.source_rank; ++j)
      if (f.at(i, j) != (i == j ? a.unit() : a.zero())) return false;
  return true;
}

std::vector<AlgebraPtr> ci_zoo() {
  return {truncated_ci(2, {2}), truncated_ci(2, {2, 2}), truncated_ci(3, {3}), group_algebra(2, {2, 2}),
          group_algebra(2, {4})};
}

Mat column(const Mat& b, std::size_t i) { return b.block(0, i, b.rows(), 1); }

}  // namespace

TEST(Eisenbud, PeriodicResolutionGivesIdentity) {
  auto a = truncated_ci(2, {2});
  ModuleExt me(trivial_module(a), 10);
  auto ops = eisenbud_operators(me.res.complex);
  ASSERT_EQ(ops.size(), 1u);
  EXPECT_EQ(ops[0].degree, 2);
  for (auto& [j, f] : ops[0].components) EXPECT_TRUE(is_identity_map(*a, f)) << j;
  auto acts = eisenbud_actions(me);
  ASSERT_EQ(acts[0].matrices.size(), 9u);
  for (auto& m : acts[0].matrices) EXPECT_EQ(m, Mat::identity(a->field(), 1));
}

TEST(Eisenbud, TwoVariablesCommuteAndAreInjective) {
  auto a = truncated_ci(2, {2, 2});
  ModuleExt me(trivial_module(a), 10);
  auto acts = eisenbud_actions(me);
  ASSERT_EQ(acts.size(), 2u);
  for (int n = 0; n + 4 <= 10; ++n)
    EXPECT_EQ(acts[0].at(n + 2) * acts[1].at(n), acts[1].at(n + 2) * acts[0].at(n)) << n;
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(rank(acts[0].at(n)), acts[0].at(n).cols()) << n;
}

TEST(Eisenbud, FreeModuleActsByZero) {
  auto a = truncated_ci(3, {3});
  ModuleExt me(free_module(a, 2), 6);
  for (auto& act : eisenbud_actions(me))
    for (int n = 0; n <= 4; ++n) EXPECT_TRUE(act.at(n).is_zero());
}

TEST(Eisenbud, ChainMapLaw) {
  for (auto a : ci_zoo())
    for (std::uint64_t s = 0; s < 3; ++s) {
      Module m = s ? random_module(a, 1, 2, s) : trivial_module(a);
      Resolution r = minimal_resolution(m, 7);
      for (auto& t : eisenbud_operators(r.complex)) EXPECT_TRUE(commutes(r.complex, r.complex, t));
    }
}

TEST(Eisenbud, CommutingActionsOnRandomModules) {
  for (auto a : ci_zoo())
    for (std::uint64_t s = 1; s < 4; ++s) {
      ModuleExt me(random_module(a, 1 + s % 2, 2, s * 3), 8);
      auto acts = eisenbud_actions(me);
      for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t j = i + 1; j < acts.size(); ++j)
          for (int n = 0; n + 4 <= 8; ++n)
            EXPECT_EQ(acts[j].at(n + 2) * acts[i].at(n), acts[i].at(n + 2) * acts[j].at(n));
    }
}

TEST(Eisenbud, LiftingStrategyIndependence) {
  for (auto a : ci_zoo())
    for (std::uint64_t s = 0; s < 3; ++s) {
      Module m = s ? random_module(a, 1, 2, s + 40) : trivial_module(a);
      ModuleExt me(m, 7);
      auto plain = eisenbud_actions(me);
      for (int deg = -3; deg <= -1; ++deg) {
        LiftPerturbation p{deg, 0, 0};
        if (me.res.complex.rank(deg) == 0 || me.res.complex.rank(deg + 1) == 0) continue;
        auto perturbed = eisenbud_actions(me, p);
        ASSERT_EQ(perturbed.size(), plain.size());
        for (std::size_t i = 0; i < plain.size(); ++i) EXPECT_EQ(perturbed[i].matrices, plain[i].matrices);
      }
    }
}

// chi(alpha beta) = chi(alpha) beta = alpha chi(beta) on Ext^*(k, k).
TEST(Eisenbud, CentralAgainstYonedaProducts) {
  for (auto a : {truncated_ci(2, {2, 2}), truncated_ci(3, {3}), group_algebra(2, {4})}) {
    Module k = trivial_module(a);
    Resolution res = minimal_resolution(k, 10);
    ExtComputer e(res.complex, Complex::concentrated(k, 0));
    const HomComplex& h = e.hom();
    auto ops = eisenbud_operators(res.complex);
    for (auto& t : ops)
      for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
          for (std::size_t i = 0; i < e.dim(m); ++i)
            for (std::size_t j = 0; j < e.dim(n); ++j) {
              Mat alpha = column(e.group(m).basis(), i), beta = column(e.group(n).basis(), j);
              Mat chi_alpha = e.group(m + 2).basis() * (e.action(t, m) * e.group(m).coordinates(alpha));
              Mat chi_beta = e.group(n + 2).basis() * (e.action(t, n) * e.group(n).coordinates(beta));
              Mat prod = yoneda(h, m, alpha, h, n, beta, res);
              Mat whole = e.action(t, m + n) * e.group(m + n).coordinates(prod);
              Mat left = e.group(m + n + 2).coordinates(yoneda(h, m + 2, chi_alpha, h, n, beta, res));
              Mat right = e.group(m + n + 2).coordinates(yoneda(h, m, alpha, h, n + 2, chi_beta, res));
              EXPECT_EQ(whole, left);
              EXPECT_EQ(whole, right);
            }
  }
}

TEST(Hopf, GeneratorsOfGroupCohomology) {
  GroupCohomology c2(group_algebra(2, {2}), 6);
  auto g = hopf_generators(c2);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].degree, 1);
  GroupCohomology c4(group_algebra(2, {4}), 6);
  auto g4 = hopf_generators(c4);
  ASSERT_EQ(g4.size(), 2u);
  EXPECT_EQ(g4[0].degree, 1);
  EXPECT_EQ(g4[1].degree, 2);
  GroupCohomology v4(group_algebra(2, {2, 2}), 6);
  EXPECT_EQ(hopf_generators(v4).size(), 2u);
  GroupCohomology c3(group_algebra(3, {3}), 6);
  auto g3 = hopf_generators(c3);
  ASSERT_EQ(g3.size(), 1u);
  EXPECT_EQ(g3[0].degree, 2);
  EXPECT_THROW(GroupCohomology(truncated_ci(2, {2}), 4), Error);
}

TEST(Hopf, IdentityClassActsAsIdentity) {
  auto a = group_algebra(2, {2, 2});
  GroupCohomology gc(a, 6);
  ModuleExt me(random_module(a, 1, 2, 5), 6);
  KClass one{0, gc.ext.group(0).basis(), "1"};
  auto act = hopf_action(gc, one, me);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(act.at(n), Mat::identity(a->field(), me.ext.dim(n))) << n;
}

TEST(Hopf, OnTheResidueFieldIsYonedaMultiplication) {
  auto a = group_algebra(2, {2});
  GroupCohomology gc(a, 8);
  ModuleExt me(trivial_module(a), 8);
  auto y = hopf_generators(gc)[0];
  auto act = hopf_action(gc, y, me);
  for (int n = 0; n < 8; ++n) EXPECT_EQ(act.at(n), Mat::identity(a->field(), 1)) << n;
}

TEST(Hopf, Multiplicative) {
  for (auto a : {group_algebra(2, {2, 2}), group_algebra(2, {4})}) {
    GroupCohomology gc(a, 8);
    auto gens = hopf_generators(gc);
    const KClass& y = gens[0];
    const KClass& z = gens.size() > 1 ? gens[1] : gens[0];
    Mat prod = yoneda(gc.ext.hom(), y.degree, y.cocycle, gc.ext.hom(), z.degree, z.cocycle, gc.res_k);
    KClass yz{y.degree + z.degree, prod, "yz"};
    for (std::uint64_t s = 0; s < 3; ++s) {
      ModuleExt me(s ? random_module(a, 1, 2, s) : trivial_module(a), 8);
      auto ay = hopf_action(gc, y, me), az = hopf_action(gc, z, me), ayz = hopf_action(gc, yz, me);
      for (int n = 0; n + yz.degree <= 8; ++n) {
        EXPECT_EQ(ayz.at(n), az.at(n + y.degree) * ay.at(n)) << n;
        EXPECT_EQ(ayz.at(n), ay.at(n + z.degree) * az.at(n)) << n;
      }
    }
  }
}

TEST(Hopf, OddDegreeRejectedInOddCharacteristic) {
  auto a = group_algebra(3, {3});
  GroupCohomology gc(a, 4);
  ModuleExt me(trivial_module(a), 4);
  KClass odd{1, gc.ext.group(1).basis(), "odd"};
  EXPECT_THROW(hopf_chain_map(gc, odd, me), Error);
}

TEST(Koszul, ZeroOperatorSplits) {
  auto a = truncated_ci(2, {2, 2});
  Resolution r = minimal_resolution(random_module(a, 1, 2, 3), 8);
  ChainMapRep zero;
  zero.degree = 2;
  FreeComplex c = koszul_object(r.complex, zero);
  for (int j = c.lo + 1; j <= c.hi(); ++j) EXPECT_EQ(c.rank(j), r.complex.rank(j + 1) + r.complex.rank(j + 2)) << j;
}

TEST(Koszul, ResidueFieldIsCutDownToAPerfectObject) {
  auto a = truncated_ci(2, {2});
  Resolution r = minimal_resolution(trivial_module(a), 8);
  auto ops = eisenbud_operators(r.complex);
  FreeComplex k = koszul_object(r.complex, ops[0]);
  EXPECT_TRUE(projective_dimension(k).finite());
  FreeComplex b = bounded_part(k);
  std::size_t total = 0;
  for (auto x : b.ranks) total += x;
  EXPECT_GT(total, 0u);
  EXPECT_TRUE(b.complete_below);

  auto a2 = truncated_ci(2, {2, 2});
  FreeComplex k2 = koszul_ci(minimal_resolution(trivial_module(a2), 10).complex);
  EXPECT_TRUE(projective_dimension(k2).finite());
}

TEST(Koszul, ProjectiveInputStaysFinite) {
  for (auto a : ci_zoo())
    EXPECT_TRUE(projective_dimension(koszul_ci(minimal_resolution(free_module(a, 2), 6).complex)).finite());
}

TEST(Annihilation, Examples) {
  auto a = truncated_ci(2, {2});
  auto r = annihilation_exponent(trivial_module(a), 10);
  ASSERT_TRUE(r.ext_from_koszul && r.ext_into_koszul);
  EXPECT_LE(*r.ext_from_koszul, 2);
  EXPECT_LE(*r.ext_into_koszul, 2);
  EXPECT_EQ(r.cap, 2);
  auto b = truncated_ci(2, {2, 2});
  auto rb = annihilation_exponent(trivial_module(b), 10);
  EXPECT_EQ(rb.cap, 4);
  EXPECT_TRUE(rb.ext_from_koszul && rb.ext_into_koszul);
  auto rf = annihilation_exponent(free_module(b, 1), 10);
  ASSERT_TRUE(rf.ext_from_koszul && rf.ext_into_koszul);
  EXPECT_EQ(*rf.ext_from_koszul, 1);
  EXPECT_EQ(*rf.ext_into_koszul, 1);
}

TEST(Criterion, Examples) {
  auto a = truncated_ci(2, {2});
  {
    ModuleExt me(free_module(a, 1), 8);
    auto r = torsion_verdict(me.table(), eisenbud_actions(me), {2});
    EXPECT_EQ(r.window_start, 1);
    EXPECT_EQ(r.ml_multiple, 1);
    EXPECT_TRUE(r.certified());
  }
  {
    ModuleExt me(trivial_module(a), 8);
    auto r = torsion_verdict(me.table(), eisenbud_actions(me), {2});
    EXPECT_FALSE(r.certified());
    EXPECT_EQ(r.status, CriterionStatus::NotCertified);
    EXPECT_FALSE(r.nilpotency[0].has_value());
  }
  {
    ModuleExt me(direct_sum(trivial_module(a), free_module(a, 1)), 8);
    auto r = torsion_verdict(me.table(), eisenbud_actions(me), {2});
    EXPECT_FALSE(r.certified());
  }
  auto none = torsion_verdict({1, 0, 0}, {}, {});
  EXPECT_EQ(none.status, CriterionStatus::Unavailable);
  auto mixed = torsion_verdict({1, 1, 0, 1, 1}, {}, {1, 2});
  EXPECT_EQ(mixed.d, 2);
  EXPECT_EQ(mixed.l, 2);
  EXPECT_FALSE(mixed.window_start.has_value());
  EXPECT_EQ(mixed.ml_multiple, 1);
  auto three = torsion_verdict({1, 1, 1, 1, 1, 1, 0, 1}, {}, {2, 3});
  EXPECT_EQ(three.d, 3);
  EXPECT_EQ(three.l, 6);
  EXPECT_EQ(three.ml_multiple, 1);
}

TEST(Criterion, NilpotencyIndex) {
  PrimeField f(2);
  OperatorAction t{"t", 1, 0, {}};
  // Ext^n of dim 2 everywhere; T is a fixed nilpotent Jordan block.
  Mat j = Mat::from_rows(f, {{0, 0}, {1, 0}});
  for (int n = 0; n < 6; ++n) t.matrices.push_back(j);
  EXPECT_EQ(nilpotency_index(t, 6), 2);
  OperatorAction id{"id", 1, 0, std::vector<Mat>(6, Mat::identity(f, 2))};
  EXPECT_FALSE(nilpotency_index(id, 6).has_value());
}
