#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fatpoints/ordering.hpp"
#include "fatpoints/simplex.hpp"

namespace fatpoints {

/// Per-row bookkeeping of one row-filling reduction step: the row's level
/// value, its size, the removal count u, the consumed capacity u', and the
/// capacity pool before the row was processed.
struct RowReductionRecord {
  long long level = 0;
  int row_size = 0;
  int u = 0;
  int u_prime = 0;
  std::vector<int> omega;
};

struct ReductionStep {
  int point_index = 0;  // 1-based index into the multiplicity tuple
  int multiplicity = 0;
  std::optional<MonomialOrdering> ordering;
  PointSet removed;
  std::vector<RowReductionRecord> rows;  // row-filling steps only
  int augmentation = 0;                  // sum of u' - u (phantom points, audit only)
  std::optional<int> chosen_c;           // minimal-subset steps only
};

struct ReductionTrace {
  PointSet initial;
  std::vector<ReductionStep> steps;
  PointSet final_set;
};

enum class CertStatus { nonspecial, undecided };

struct CertificationResult {
  long long bound = 0;
  CertStatus status = CertStatus::undecided;
  ReductionTrace trace;
  long long edim = 0;
};

struct MpReduction {
  PointSet removed;
  std::vector<RowReductionRecord> rows;
  int augmentation = 0;
};

/// The row-filling (m, <=)-reduction for n = 2: process the k = min(m, #rows)
/// <=-minimal rows with the capacity pool Omega = {1..m}; row j gives up its
/// u_j = min(max Omega_j, #R_j) <=-minimal points and consumes the capacity
/// u'_j = min{s in Omega_j : s >= u_j}. Validity as a reduction is guaranteed
/// by the augmentation argument and is not re-verified at runtime.
MpReduction mp_reduction(std::span<const ExponentVector> D, int m,
                         const MonomialOrdering& ord);

/// Row-filling reduction chain on D(d), n = 2. Orderings are given in the
/// order the steps run: step j reduces for point index r+1-j with
/// multiplicity m[r-j]. Requires #ords = #m.
CertificationResult algorithm1(int d, std::span<const int> m,
                               std::span<const MonomialOrdering> ords);

/// First (<=-lex-minimal) c-subset E of D with (n, E, (m)) non-special, or
/// nullopt when none exists. Cheap combinatorial certificates cut the search:
/// special prefixes cannot extend to non-special sets, so they are pruned.
std::optional<PointSet> minimal_nonspecial(int n, std::span<const ExponentVector> D,
                                           int c, int m, const MonomialOrdering& ord);

/// Minimal-subset reduction chain on an arbitrary D: each step takes the
/// largest c <= C(m_i+n-1, n) with a non-special c-subset and removes the
/// <=-lex-minimal one. Orderings are consumed in execution order as in
/// algorithm1.
CertificationResult algorithm0(int n, std::span<const ExponentVector> D,
                               std::span<const int> m,
                               std::span<const MonomialOrdering> ords);

}  // namespace fatpoints
