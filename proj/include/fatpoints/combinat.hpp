#pragma once

#include <span>
#include <vector>

#include "fatpoints/simplex.hpp"

namespace fatpoints {

/// A family of parallel hyperplane slices through the degree-d slice: a
/// direction (coordinate axis or integer normal vector) together with the
/// selected level values H_1, ..., H_k.
struct ParallelSlices {
  int axis = -1;                  // -1 when normal is used
  std::vector<long long> normal;  // empty for coordinate axes
  std::vector<long long> levels;  // pairwise distinct

  static ParallelSlices along_axis(int axis, std::vector<long long> levels);
  static ParallelSlices along_normal(std::vector<long long> normal,
                                     std::vector<long long> levels);

  long long value_at(const ExponentVector& a) const;
  void validate(int m) const;  // distinct levels, k <= m
};

/// Overload criterion: with k selected slices, (n, E, (m)) is special when
/// #(E intersect slices) > C(m+n-1, n) - C(m-k+n-1, n). Returns true exactly
/// when that certificate fires. Throws when k > m.
bool slice_overload_special(int n, std::span<const ExponentVector> E, int m,
                            const ParallelSlices& slices);

enum class ScrambledCert { certified_nonspecial, no_certificate };

/// Searches axis-aligned parallel slicings (plus any user-supplied normal
/// directions) for a recursive witness that E is a subset of a scrambled
/// n-simplex of size m, which certifies (n, E, (m)) non-special. Base case
/// n = 1: at most u collinear points. no_certificate is a valid outcome, not
/// an error.
ScrambledCert scrambled_simplex_nonspecial(
    int n, std::span<const ExponentVector> E, int m,
    std::span<const std::vector<long long>> extra_normals = {});

enum class AfClass { special, nonspecial, inconclusive };

/// n = 2 row criteria: tries the three coordinate directions; special when
/// some k < m rows hold more than C(m+1,2) - C(m+1-k,2) points of E,
/// non-special when the occupied rows of some direction fit capacities
/// 1..m injectively (greedy largest-demand-first assignment).
AfClass af_classify(std::span<const ExponentVector> E, int m);

/// True when all points lie on one affine line (sets of size <= 2 included).
bool collinear(std::span<const ExponentVector> pts);

}  // namespace fatpoints
