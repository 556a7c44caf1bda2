#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fatpoints/ordering.hpp"
#include "fatpoints/reduction.hpp"
#include "fatpoints/simplex.hpp"

namespace fatpoints {

/// An ordered tuple (E_1, ..., E_r) of disjoint subsets of the triple's D,
/// each matched to a same-size subset U'_i of the jet rows of point i
/// (derivative multi-indices of degree m_i - 1).
struct PartitionPlan {
  Triple triple;
  std::vector<PointSet> parts;         // E_i
  std::vector<PointSet> row_selection;  // U'_i, multi-indices of degree m_i - 1

  void validate() const;
  long long removed_count() const;
};

/// det of the integer matrix [jet_coefficient(a, b)] with rows the given
/// derivative multi-indices and columns the given points. The determinant of
/// the corresponding polynomial block is this integer times the monomial
/// P^(sum E - sum b); det(empty, empty) = 1.
mpz_class sigma_coefficient(std::span<const ExponentVector> row_bs,
                            std::span<const ExponentVector> part);

enum class ExceptionalVerdict { exceptional, not_exceptional, budget_exceeded };

struct VerifyOutcome {
  ExceptionalVerdict verdict = ExceptionalVerdict::budget_exceeded;
  uint64_t nodes = 0;
  /// On not_exceptional: a rival tuple with the same part sums and all
  /// blocks nonsingular.
  std::optional<std::vector<PointSet>> witness;
};

/// Checks the two conditions of exceptionality: every block coefficient is
/// nonzero, and no different tuple of disjoint subsets of D with the same
/// sizes and the same part sums has all blocks nonsingular. The rival search
/// is a backtracking enumeration pruned by per-coordinate subset-sum bounds.
VerifyOutcome verify_exceptional(const PartitionPlan& plan,
                                 uint64_t budget = 100'000'000ULL);

/// Parameters of the hyperplane-cut partition: cuts at multiples of the
/// exact rational mu, a stand-in for the irrational d/s + delta.
struct StrictPartitionParams {
  int n = 0, d = 0, m = 0, s = 0;
  mpq_class mu;

  /// mu = d/s + 1/(2 s (d+1)), nudged upward until no c*mu with 1 <= c < s
  /// is an integer in [0, d].
  static StrictPartitionParams with_defaults(int n, int d, int m, int s);
  /// Throws (with the offending (c, sum) witness) when some cut hyperplane
  /// meets the lattice, or when mu is outside (d/s, m).
  void validate() const;
};

/// Labels every point of D(d) by the floor vector of its consecutive-
/// coordinate window sums divided by mu; equal labels form one part. Returns
/// exactly s^n parts, each certified a subset of a scrambled n-simplex of
/// size m, with jet rows chosen per part (canonical prefix, falling back to
/// a maximal nonsingular row subset).
PartitionPlan strict_partition(const StrictPartitionParams& params);

/// One stage of a generalized reduction chain: either a partition block
/// consuming several points at once or a row-filling reduction consuming one.
struct PlanStep {
  std::variant<PartitionPlan, MonomialOrdering> action;
};

struct PlanStepReport {
  int first_point = 0;  // 1-based range of multiplicities consumed
  int last_point = 0;
  bool is_partition = false;
  bool verified = false;
  ExceptionalVerdict verdict = ExceptionalVerdict::budget_exceeded;  // partition steps
  long long removed = 0;
};

struct PlanRunOutcome {
  CertificationResult cert;
  std::vector<PlanStepReport> steps;
};

/// Runs the steps in execution order, consuming multiplicities from the back
/// of the tuple. Partition steps must target the current point set exactly
/// and pass verification for the final status to be non-special; row-filling
/// steps are theorem-backed. Throws on overlapping removals or group
/// mismatches.
PlanRunOutcome run_generalized_plan(const Triple& t, std::span<const PlanStep> steps,
                                    uint64_t budget = 100'000'000ULL);

}  // namespace fatpoints
