#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fatpoints/exact.hpp"
#include "fatpoints/simplex.hpp"

namespace fatpoints {

/// Deterministic 64-bit stream (splitmix64). Used instead of std::random so
/// that identical seeds replay identically on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next();
  /// Uniform-ish value in [-2^31, 2^31] (bias < 2^-32, irrelevant and cheap).
  long long next_coordinate();

 private:
  uint64_t state_;
};

uint64_t mix_seed(uint64_t seed, uint64_t stream);

/// Row index (i, b) of the jet matrix: point index i (1-based) and a
/// derivative multi-index b of degree exactly m_i - 1.
struct JetRowIndex {
  int point = 0;
  ExponentVector b;
};

/// All jet rows of a triple, grouped by point, canonical order within each
/// D(m_i - 1) block.
std::vector<JetRowIndex> jet_rows(const Triple& t);

/// The integer coefficient of the monomial P^(a-b) in d^|b| X^a / dX^b:
/// the product over k of the falling factorial a_k (a_k - 1) ... (a_k - b_k + 1).
/// Zero exactly when b_k > a_k for some k.
mpz_class jet_coefficient(const ExponentVector& a, const ExponentVector& b);

/// Affine representative of a point of P^n: n+1 integers, not all zero.
struct PointSample {
  std::vector<long long> coords;
};

/// The jet matrix of the triple evaluated at the given samples (one per
/// point). Rows follow jet_rows(t), columns follow t.D. Entry:
/// jet_coefficient(a, b) * prod_k sample_k^(a_k - b_k), taken as 0 whenever
/// the coefficient vanishes so no negative exponents arise.
ExactMatrix build_evaluated_matrix(const Triple& t, std::span<const PointSample> samples);

struct OracleResult {
  long long dimension = 0;
  bool certified_nonspecial = false;
  int trials_used = 0;
  uint64_t seed = 0;
};

/// Randomized-evaluation dimension oracle: draws `trials` independent integer
/// samples, keeps the maximum evaluated rank rho, and reports
/// dimension = #D - rho. Evaluation can only lose rank, so the reported
/// dimension is always >= the generic dimension, with equality except with
/// vanishing probability; certified_nonspecial = (rho = min(#D, #U)) is a
/// true certificate. Stops early once certified.
OracleResult dim_linear_system(const Triple& t, int trials = 3, uint64_t seed = 0);

/// dim W^n(m-1, E): degree-(m-1) forms in n+1 variables vanishing at the
/// integer points of E. Exact, no randomness.
long long w_dimension(int n, int m, std::span<const ExponentVector> E);

enum class Speciality { special, nonspecial };

/// Single-fat-point test: an over- or well-determined (n, E, (m)) is
/// non-special iff dim W^n(m-1, E) = C(m+n-1, n) - #E. Throws when
/// #E > C(m+n-1, n).
Speciality is_special_single(int n, std::span<const ExponentVector> E, int m);

}  // namespace fatpoints
