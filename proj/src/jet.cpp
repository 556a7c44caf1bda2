#include "fatpoints/jet.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fatpoints {

uint64_t SplitMix64::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long SplitMix64::next_coordinate() {
  // 2^32 + 1 values covering [-2^31, 2^31] inclusive
  uint64_t v = next() % 4294967297ULL;
  return static_cast<long long>(v) - 2147483648LL;
}

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return rng.next();
}

std::vector<JetRowIndex> jet_rows(const Triple& t) {
  std::vector<JetRowIndex> out;
  for (int i = 0; i < t.r(); ++i) {
    for (auto& b : enumerate_simplex(t.n, t.m[size_t(i)] - 1))
      out.push_back(JetRowIndex{i + 1, b});
  }
  return out;
}

mpz_class jet_coefficient(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("jet_coefficient: dimension mismatch");
  mpz_class acc = 1;
  for (int k = 0; k < a.size(); ++k) {
    if (b[k] > a[k]) return 0;
    for (int j = 0; j < b[k]; ++j) acc *= a[k] - j;
  }
  return acc;
}

ExactMatrix build_evaluated_matrix(const Triple& t, std::span<const PointSample> samples) {
  if (static_cast<int>(samples.size()) != t.r())
    throw std::invalid_argument("build_evaluated_matrix: need one sample per point");
  for (const auto& s : samples) {
    if (static_cast<int>(s.coords.size()) != t.n + 1)
      throw std::invalid_argument("build_evaluated_matrix: sample has wrong length");
    bool nonzero = false;
    for (long long c : s.coords) nonzero |= (c != 0);
    if (!nonzero)
      throw std::invalid_argument("build_evaluated_matrix: zero sample vector");
  }

  // per point, powers of each coordinate up to degree d
  std::vector<std::vector<std::vector<mpz_class>>> pow(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    pow[i].resize(size_t(t.n) + 1);
    for (int k = 0; k <= t.n; ++k) {
      auto& pk = pow[i][size_t(k)];
      pk.resize(size_t(t.d) + 1);
      pk[0] = 1;
      for (int e = 1; e <= t.d; ++e)
        pk[size_t(e)] = pk[size_t(e) - 1] * static_cast<long>(samples[i].coords[size_t(k)]);
    }
  }

  auto rows_idx = jet_rows(t);
  ExactMatrix M(static_cast<int>(rows_idx.size()), static_cast<int>(t.D.size()));
  for (int ri = 0; ri < M.rows(); ++ri) {
    const auto& [pt, b] = rows_idx[size_t(ri)];
    for (int ci = 0; ci < M.cols(); ++ci) {
      const ExponentVector& a = t.D[size_t(ci)];
      mpz_class coeff = jet_coefficient(a, b);
      if (coeff == 0) continue;  // entry stays 0; avoids negative exponents
      for (int k = 0; k <= t.n; ++k) coeff *= pow[size_t(pt) - 1][size_t(k)][size_t(a[k] - b[k])];
      M.at(ri, ci) = coeff;
    }
  }
  return M;
}

OracleResult dim_linear_system(const Triple& t, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("dim_linear_system: trials must be >= 1");
  const long long cols = static_cast<long long>(t.D.size());
  const long long full = std::min(cols, t.u_size());
  // Multiplicity m_i > d+1 imposes the same vanishing as d+1 (all order-d
  // derivatives of a degree-d form vanishing kills it), and the order-(m-1)
  // rank criterion is only valid up to there, so the matrix is built at the
  // clamped order. The reported bookkeeping stays in terms of t itself.
  Triple clamped = t;
  bool any_clamped = false;
  for (int& mi : clamped.m) {
    if (mi > t.d + 1) {
      mi = t.d + 1;
      any_clamped = true;
    }
  }
  const Triple& eval_t = any_clamped ? clamped : t;
  OracleResult res;
  res.seed = seed;
  long long best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(trial)));
    std::vector<PointSample> samples(static_cast<size_t>(t.r()));
    for (auto& s : samples) {
      do {
        s.coords.clear();
        for (int k = 0; k <= t.n; ++k) s.coords.push_back(rng.next_coordinate());
      } while (std::all_of(s.coords.begin(), s.coords.end(),
                           [](long long c) { return c == 0; }));
    }
    ExactMatrix M = build_evaluated_matrix(eval_t, samples);
    best = std::max<long long>(best, exact_rank(M));
    res.trials_used = trial + 1;
    if (best == full) break;  // rank can only be lost by evaluation
  }
  res.dimension = cols - best;
  res.certified_nonspecial = (best == full);
  return res;
}

long long w_dimension(int n, int m, std::span<const ExponentVector> E) {
  if (m < 1) throw std::invalid_argument("w_dimension: m must be >= 1");
  PointSet monomials = enumerate_simplex(n, m - 1);
  IntMatrix V(static_cast<int>(E.size()), static_cast<int>(monomials.size()));
  mpz_class tmp;
  for (int i = 0; i < V.rows(); ++i) {
    const ExponentVector& a = E[size_t(i)];
    if (a.size() != n + 1)
      throw std::invalid_argument("w_dimension: point has wrong length");
    for (int j = 0; j < V.cols(); ++j) {
      const ExponentVector& beta = monomials[size_t(j)];
      tmp = 1;
      for (int k = 0; k <= n; ++k) {
        for (int e = 0; e < beta[k]; ++e) tmp *= a[k];
      }
      V.at(i, j) = tmp;
    }
  }
  return static_cast<long long>(monomials.size()) - exact_rank(V);
}

Speciality is_special_single(int n, std::span<const ExponentVector> E, int m) {
  const long long cap = binomial(m + n - 1, n);
  if (static_cast<long long>(E.size()) > cap)
    throw std::invalid_argument(
        "is_special_single: under-determined instance (#E > C(m+n-1, n))");
  const long long expected = cap - static_cast<long long>(E.size());
  return w_dimension(n, m, E) == expected ? Speciality::nonspecial : Speciality::special;
}

}  // namespace fatpoints
