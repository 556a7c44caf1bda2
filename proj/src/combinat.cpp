#include "fatpoints/combinat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fatpoints {

ParallelSlices ParallelSlices::along_axis(int axis, std::vector<long long> levels) {
  ParallelSlices s;
  s.axis = axis;
  s.levels = std::move(levels);
  return s;
}

ParallelSlices ParallelSlices::along_normal(std::vector<long long> normal,
                                            std::vector<long long> levels) {
  ParallelSlices s;
  s.normal = std::move(normal);
  s.levels = std::move(levels);
  return s;
}

long long ParallelSlices::value_at(const ExponentVector& a) const {
  if (axis >= 0) {
    if (axis >= a.size()) throw std::invalid_argument("ParallelSlices: axis out of range");
    return a[axis];
  }
  if (normal.size() != static_cast<size_t>(a.size()))
    throw std::invalid_argument("ParallelSlices: normal has wrong length");
  long long v = 0;
  for (int k = 0; k < a.size(); ++k) v += normal[size_t(k)] * a[k];
  return v;
}

void ParallelSlices::validate(int m) const {
  std::set<long long> distinct(levels.begin(), levels.end());
  if (distinct.size() != levels.size())
    throw std::invalid_argument("ParallelSlices: repeated level");
  if (static_cast<int>(levels.size()) > m)
    throw std::invalid_argument("ParallelSlices: more slices than the multiplicity");
}

bool slice_overload_special(int n, std::span<const ExponentVector> E, int m,
                            const ParallelSlices& slices) {
  slices.validate(m);
  const int k = static_cast<int>(slices.levels.size());
  std::set<long long> wanted(slices.levels.begin(), slices.levels.end());
  long long hit = 0;
  for (const auto& p : E)
    if (wanted.count(slices.value_at(p))) ++hit;
  const long long threshold = binomial(m + n - 1, n) - binomial(m - k + n - 1, n);
  return hit > threshold;
}

bool collinear(std::span<const ExponentVector> pts) {
  if (pts.size() <= 2) return true;
  const ExponentVector& p0 = pts[0];
  std::vector<long long> v0;
  size_t first = 1;
  for (; first < pts.size(); ++first) {
    v0.clear();
    bool nz = false;
    for (int k = 0; k < p0.size(); ++k) {
      long long d = pts[first][k] - p0[k];
      v0.push_back(d);
      nz |= (d != 0);
    }
    if (nz) break;
  }
  if (first == pts.size()) return true;  // all points equal
  for (size_t i = first + 1; i < pts.size(); ++i) {
    for (int a = 0; a < p0.size(); ++a) {
      long long da = pts[i][a] - p0[a];
      for (int b = a + 1; b < p0.size(); ++b) {
        long long db = pts[i][b] - p0[b];
        if (v0[size_t(a)] * db - v0[size_t(b)] * da != 0) return false;
      }
    }
  }
  return true;
}

namespace {

struct CertSearcher {
  std::span<const std::vector<long long>> extra_normals;

  // minimal capacity u' <= cap with a level-k certificate for the group, or
  // -1 when none exists; certifiability is monotone in the capacity
  int min_capacity(const PointSet& g, int k, int cap) {
    if (g.empty()) return 1;
    if (k == 1) {
      if (!collinear(g)) return -1;
      return static_cast<int>(g.size()) <= cap ? static_cast<int>(g.size()) : -1;
    }
    for (int u = 1; u <= cap; ++u) {
      if (certify(g, k, u)) return u;
    }
    return -1;
  }

  bool certify(const PointSet& E, int k, int u) {
    if (E.empty()) return true;
    if (k == 1) return static_cast<int>(E.size()) <= u && collinear(E);
    const int dims = E[0].size();
    for (int dir = 0; dir < dims + static_cast<int>(extra_normals.size()); ++dir) {
      RowFamily fam = dir < dims
                          ? rows(E, dir)
                          : rows(E, std::span<const long long>(extra_normals[size_t(dir - dims)]));
      if (static_cast<int>(fam.levels.size()) > u) continue;
      std::vector<int> demands;
      bool feasible = true;
      for (const auto& [lvl, g] : fam.levels) {
        int need = min_capacity(g, k - 1, u);
        if (need < 0) {
          feasible = false;
          break;
        }
        demands.push_back(need);
      }
      if (!feasible) continue;
      // distinct capacities <= u exist iff, sorted descending, demand_j <= u - j
      std::sort(demands.rbegin(), demands.rend());
      bool ok = true;
      for (size_t j = 0; j < demands.size(); ++j)
        if (demands[j] > u - static_cast<int>(j)) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

ScrambledCert scrambled_simplex_nonspecial(
    int n, std::span<const ExponentVector> E, int m,
    std::span<const std::vector<long long>> extra_normals) {
  if (static_cast<long long>(E.size()) > binomial(m + n - 1, n))
    throw std::invalid_argument("scrambled_simplex_nonspecial: #E > C(m+n-1, n)");
  PointSet pts(E.begin(), E.end());
  CertSearcher s{extra_normals};
  return s.certify(pts, n, m) ? ScrambledCert::certified_nonspecial
                              : ScrambledCert::no_certificate;
}

AfClass af_classify(std::span<const ExponentVector> E, int m) {
  if (!E.empty() && E[0].size() != 3)
    throw std::invalid_argument("af_classify: requires n = 2");
  if (static_cast<long long>(E.size()) > binomial(m + 1, 2))
    throw std::invalid_argument("af_classify: #E > C(m+1, 2)");

  // condition 1: k < m rows holding > C(m+1,2) - C(m+1-k,2) points
  for (int axis = 0; axis < 3; ++axis) {
    RowFamily fam = rows(E, axis);
    std::vector<long long> sizes;
    for (const auto& [lvl, g] : fam.levels) sizes.push_back(static_cast<long long>(g.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    long long acc = 0;
    for (int k = 1; k <= std::min<int>(m - 1, static_cast<int>(sizes.size())); ++k) {
      acc += sizes[size_t(k) - 1];
      if (acc > binomial(m + 1, 2) - binomial(m + 1 - k, 2)) return AfClass::special;
    }
  }

  // condition 2: occupied rows of some direction fit capacities 1..m
  for (int axis = 0; axis < 3; ++axis) {
    RowFamily fam = rows(E, axis);
    if (static_cast<int>(fam.levels.size()) > m) continue;
    std::vector<int> sizes;
    for (const auto& [lvl, g] : fam.levels) sizes.push_back(static_cast<int>(g.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    bool ok = true;
    for (size_t j = 0; j < sizes.size(); ++j)
      if (sizes[j] > m - static_cast<int>(j)) {
        ok = false;
        break;
      }
    if (ok) return AfClass::nonspecial;
  }
  return AfClass::inconclusive;
}

}  // namespace fatpoints
