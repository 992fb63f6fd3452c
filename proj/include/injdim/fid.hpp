#pragma once

// Injective-dimension oracle, the criterion checker and verification sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "injdim/operators.hpp"

namespace injdim {

enum class OperatorFamily { Auto, Eisenbud, Hopf };

struct FidConfig {
  int bound = 12;
  OperatorFamily family = OperatorFamily::Auto;
};

struct FidReport {
  std::string target_id;
  std::vector<std::size_t> ext_table;
  std::string family;  // "eisenbud", "hopf" or "none"
  CriterionReport criterion;
  /// Injective dimension via the dual over the opposite algebra.
  DimVerdict oracle;
  /// Projective dimension of the target itself.
  DimVerdict projective;
  /// False only when the criterion certifies torsion while the oracle proves
  /// infinite injective dimension.
  bool consistent = true;
  double seconds = 0;
};

DimVerdict injective_dimension_oracle(const Module& m, int bound);
DimVerdict injective_dimension_oracle(const Complex& x, int bound);

FidReport check_fid(const Module& m, const FidConfig& cfg, const std::string& id = "module");
FidReport check_fid(const Complex& x, const FidConfig& cfg, const std::string& id = "complex");

struct ZooEntry {
  std::string name;
  AlgebraPtr algebra;
};

/// Parses names like "ci(2;2,2)" and "group(2;4)".
ZooEntry zoo_entry(const std::string& name);
std::vector<ZooEntry> default_zoo();

/// Deterministic random bounded complex R^a -> M in degrees -1, 0.
Complex random_complex(AlgebraPtr alg, std::uint64_t seed);

struct SweepTarget {
  std::string algebra;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool is_complex = false;
  std::optional<Module> module;
  std::optional<Complex> complex;
  FidReport report;
  bool projective_module = false;
  std::vector<std::string> violations;
};

struct KoszulCheck {
  std::string algebra;
  std::string target;
  DimVerdict verdict;
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  int bound = 0;
  std::vector<std::string> zoo;
  std::vector<SweepTarget> targets;
  std::vector<KoszulCheck> koszul;
  std::size_t violations = 0;
  std::size_t koszul_failures = 0;
  double seconds = 0;
};

struct SweepConfig {
  std::size_t count = 50;
  std::uint64_t seed = 7;
  int bound = 12;
  unsigned jobs = 1;
  /// Random two-term complexes per algebra, in addition to the modules.
  std::size_t complexes = 0;
  OperatorFamily family = OperatorFamily::Auto;
};

/// Seed of target i over zoo algebra ai.
std::uint64_t target_seed(std::uint64_t seed, std::size_t ai, std::size_t i);
/// The random module used for a target seed.
Module sweep_module(AlgebraPtr alg, std::uint64_t target_seed);

/// Checks on every target: certified => oracle Finite; oracle Finite =>
/// Ext^{n>=1}(M, M) = 0 in range; over self-injective algebras oracle
/// Finite <=> projective; pd finite <=> id finite; for d = l the window and
/// ml criteria agree.
SweepReport verify_theorem_sweep(const std::vector<ZooEntry>& zoo, const SweepConfig& cfg);

/// projective_dimension(C // (chi_1..chi_c)) for each listed module.
std::vector<KoszulCheck> verify_koszul_perfection(const ZooEntry& alg,
                                                  const std::vector<std::pair<std::string, Module>>& targets,
                                                  int bound);
/// k, the first syzygy of k and `seeds` random modules.
std::vector<std::pair<std::string, Module>> koszul_targets(AlgebraPtr alg, std::uint64_t seed,
                                                           std::size_t seeds);

}  // namespace injdim
