#include "fatpoints/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fatpoints/combinat.hpp"
#include "fatpoints/jet.hpp"

namespace fatpoints {

MpReduction mp_reduction(std::span<const ExponentVector> D, int m,
                         const MonomialOrdering& ord) {
  if (m < 1) throw std::invalid_argument("mp_reduction: m must be >= 1");
  if (!D.empty() && D[0].size() != 3)
    throw std::invalid_argument("mp_reduction: requires n = 2");

  MpReduction out;
  if (D.empty()) return out;

  RowFamily fam = rows(D, ord.row_axis());
  // <=-minimal rows come first: under lex the largest level is least, under
  // rlex the smallest level is least
  std::vector<long long> level_order;
  for (const auto& [lvl, pts] : fam.levels) level_order.push_back(lvl);
  if (ord.family == MonomialOrdering::Family::lex)
    std::sort(level_order.rbegin(), level_order.rend());
  else
    std::sort(level_order.begin(), level_order.end());

  const int k = std::min<int>(m, static_cast<int>(level_order.size()));
  std::set<int> omega;
  for (int s = 1; s <= m; ++s) omega.insert(s);

  for (int j = 0; j < k; ++j) {
    PointSet row = sort_points(ord, fam.levels.at(level_order[size_t(j)]));
    RowReductionRecord rec;
    rec.level = level_order[size_t(j)];
    rec.row_size = static_cast<int>(row.size());
    rec.omega.assign(omega.begin(), omega.end());
    rec.u = std::min<int>(*omega.rbegin(), rec.row_size);
    rec.u_prime = *omega.lower_bound(rec.u);
    omega.erase(rec.u_prime);
    for (int t = 0; t < rec.u; ++t) out.removed.push_back(row[size_t(t)]);
    out.augmentation += rec.u_prime - rec.u;
    out.rows.push_back(std::move(rec));
  }
  return out;
}

namespace {

PointSet set_difference_canonical(const PointSet& D, const PointSet& removed) {
  PointSet rem = canonicalize(removed);
  PointSet out;
  out.reserve(D.size());
  for (const auto& p : D)
    if (!contains_point(rem, p)) out.push_back(p);
  return out;
}

CertificationResult finish(const Triple& like, ReductionTrace trace, const PointSet& rest) {
  CertificationResult res;
  res.trace = std::move(trace);
  res.trace.final_set = rest;
  res.bound = static_cast<long long>(rest.size());
  res.edim = like.edim();
  res.status = res.bound == res.edim ? CertStatus::nonspecial : CertStatus::undecided;
  return res;
}

}  // namespace

CertificationResult algorithm1(int d, std::span<const int> m,
                               std::span<const MonomialOrdering> ords) {
  if (m.size() != ords.size())
    throw std::invalid_argument("algorithm1: need one ordering per point");
  Triple t = Triple::full(2, d, {m.begin(), m.end()});
  PointSet current = t.D;
  ReductionTrace trace;
  trace.initial = current;
  const int r = t.r();
  for (int j = 0; j < r; ++j) {
    const int point = r - j;  // step j reduces for the point of index r-j
    const MonomialOrdering& ord = ords[size_t(j)];
    MpReduction red = mp_reduction(current, m[size_t(point) - 1], ord);
    ReductionStep step;
    step.point_index = point;
    step.multiplicity = m[size_t(point) - 1];
    step.ordering = ord;
    step.removed = red.removed;
    step.rows = std::move(red.rows);
    step.augmentation = red.augmentation;
    current = set_difference_canonical(current, red.removed);
    trace.steps.push_back(std::move(step));
  }
  return finish(t, std::move(trace), current);
}

namespace {

/// Speciality of (n, E, (m)) for the subset search: combinatorial
/// certificates first, exact W-space test when inconclusive.
bool is_special_set(int n, const PointSet& E, int m) {
  if (E.size() <= 1) return false;
  if (n == 2) {
    switch (af_classify(E, m)) {
      case AfClass::special: return true;
      case AfClass::nonspecial: return false;
      case AfClass::inconclusive: break;
    }
  } else if (scrambled_simplex_nonspecial(n, E, m) == ScrambledCert::certified_nonspecial) {
    return false;
  }
  return is_special_single(n, E, m) == Speciality::special;
}

struct SubsetSearch {
  int n;
  int m;
  const PointSet& sorted;  // ascending under the ordering
  std::unordered_map<std::vector<bool>, bool> memo;

  bool special(const PointSet& E, const std::vector<bool>& mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    bool s = is_special_set(n, E, m);
    memo.emplace(mask, s);
    return s;
  }

  // depth-first in index order = <=-lex order on subsets; a special prefix
  // cannot extend to a non-special set, so the subtree is cut
  bool dfs(size_t start, int need, PointSet& acc, std::vector<bool>& mask,
           PointSet& out) {
    if (need == 0) {
      out = acc;
      return true;
    }
    for (size_t i = start; i + size_t(need) <= sorted.size(); ++i) {
      acc.push_back(sorted[i]);
      mask[i] = true;
      if (!special(acc, mask) && dfs(i + 1, need - 1, acc, mask, out)) return true;
      mask[i] = false;
      acc.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<PointSet> minimal_nonspecial(int n, std::span<const ExponentVector> D,
                                           int c, int m, const MonomialOrdering& ord) {
  if (c > static_cast<long long>(binomial(m + n - 1, n)))
    throw std::invalid_argument("minimal_nonspecial: c exceeds C(m+n-1, n)");
  if (c < 0 || c > static_cast<int>(D.size())) return std::nullopt;
  if (c == 0) return PointSet{};
  PointSet sorted = sort_points(ord, D);
  SubsetSearch search{n, m, sorted, {}};
  PointSet acc, out;
  std::vector<bool> mask(sorted.size(), false);
  if (search.dfs(0, c, acc, mask, out)) return out;
  return std::nullopt;
}

CertificationResult algorithm0(int n, std::span<const ExponentVector> D,
                               std::span<const int> m,
                               std::span<const MonomialOrdering> ords) {
  if (m.size() != ords.size())
    throw std::invalid_argument("algorithm0: need one ordering per point");
  PointSet initial = canonicalize(PointSet(D.begin(), D.end()));
  int d = initial.empty() ? 1 : initial[0].degree();
  Triple t(n, d, initial, {m.begin(), m.end()});
  PointSet current = t.D;
  ReductionTrace trace;
  trace.initial = current;
  const int r = t.r();
  for (int j = 0; j < r; ++j) {
    const int point = r - j;
    const int mi = m[size_t(point) - 1];
    const MonomialOrdering& ord = ords[size_t(j)];
    ReductionStep step;
    step.point_index = point;
    step.multiplicity = mi;
    step.ordering = ord;
    // largest feasible c; non-special families are downward closed, but the
    // scan stays linear and stops at the first success from the cap
    int cap = static_cast<int>(
        std::min<long long>(binomial(mi + n - 1, n), static_cast<long long>(current.size())));
    for (int c = cap; c >= 1; --c) {
      auto found = minimal_nonspecial(n, current, c, mi, ord);
      if (found) {
        step.chosen_c = c;
        step.removed = *found;
        break;
      }
    }
    current = set_difference_canonical(current, step.removed);
    trace.steps.push_back(std::move(step));
  }
  return finish(t, std::move(trace), current);
}

}  // namespace fatpoints
