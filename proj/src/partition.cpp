#include "fatpoints/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fatpoints/combinat.hpp"
#include "fatpoints/exact.hpp"
#include "fatpoints/jet.hpp"

namespace fatpoints {

void PartitionPlan::validate() const {
  if (parts.size() != static_cast<size_t>(triple.r()) ||
      row_selection.size() != parts.size())
    throw std::invalid_argument("PartitionPlan: need one part and one row set per point");
  std::set<std::vector<int>> seen;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != row_selection[i].size())
      throw std::invalid_argument("PartitionPlan: #U'_i != #E_i");
    for (const auto& p : parts[i]) {
      if (!contains_point(triple.D, p))
        throw std::invalid_argument("PartitionPlan: part point outside D");
      if (!seen.insert(p.entries()).second)
        throw std::invalid_argument("PartitionPlan: parts overlap");
    }
    for (const auto& b : row_selection[i]) {
      if (b.size() != triple.n + 1 || b.degree() != triple.m[i] - 1)
        throw std::invalid_argument("PartitionPlan: row multi-index of wrong degree");
    }
  }
}

long long PartitionPlan::removed_count() const {
  long long t = 0;
  for (const auto& part : parts) t += static_cast<long long>(part.size());
  return t;
}

mpz_class sigma_coefficient(std::span<const ExponentVector> row_bs,
                            std::span<const ExponentVector> part) {
  if (row_bs.size() != part.size())
    throw std::invalid_argument("sigma_coefficient: row/column size mismatch");
  const int n = static_cast<int>(part.size());
  IntMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M.at(i, j) = jet_coefficient(part[size_t(j)], row_bs[size_t(i)]);
  return det_bareiss(std::move(M));
}

namespace {

struct RivalSearch {
  const PointSet& D;
  const std::vector<PointSet>& parts;          // E_i, canonical order inside
  const std::vector<PointSet>& row_selection;  // U'_i
  uint64_t budget;
  uint64_t nodes = 0;
  bool out_of_budget = false;

  std::vector<std::vector<int>> targets;    // part sums
  std::vector<std::vector<int>> pools;      // candidate point ids per part
  std::vector<int> order;                   // parts, most constrained first
  std::vector<std::vector<int>> chosen;     // current F_i as point ids
  std::vector<char> used;
  std::vector<std::unordered_map<std::vector<bool>, bool>> kappa_cache;

  explicit RivalSearch(const PartitionPlan& plan, uint64_t budget_)
      : D(plan.triple.D), parts(plan.parts), row_selection(plan.row_selection),
        budget(budget_) {
    const int dims = plan.triple.n + 1;
    for (const auto& part : parts) {
      targets.push_back(part.empty() ? std::vector<int>(size_t(dims), 0)
                                     : part_sum(part, dims).entries());
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      std::vector<int> pool;
      for (size_t pid = 0; pid < D.size(); ++pid) {
        bool fits = true;
        for (int k = 0; k < dims; ++k) fits &= D[pid][k] <= targets[i][size_t(k)];
        if (fits) pool.push_back(static_cast<int>(pid));
      }
      pools.push_back(std::move(pool));
    }
    order.resize(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pools[size_t(a)].size() < pools[size_t(b)].size(); });
    chosen.resize(parts.size());
    used.assign(D.size(), 0);
    kappa_cache.resize(parts.size());
  }

  bool kappa_nonzero(int part_idx, const std::vector<int>& ids) {
    std::vector<bool> key(D.size(), false);
    for (int id : ids) key[size_t(id)] = true;
    auto& cache = kappa_cache[size_t(part_idx)];
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PointSet pts;
    for (int id : ids) pts.push_back(D[size_t(id)]);
    bool nz = sigma_coefficient(row_selection[size_t(part_idx)], pts) != 0;
    cache.emplace(std::move(key), nz);
    return nz;
  }

  bool differs_from_plan() const {
    for (size_t i = 0; i < parts.size(); ++i) {
      PointSet f;
      for (int id : chosen[i]) f.push_back(D[size_t(id)]);
      if (canonicalize(f) != parts[i]) return true;
    }
    return false;
  }

  // true when a rival was found
  bool search_part(size_t oi) {
    if (oi == order.size()) return differs_from_plan();
    const int i = order[oi];
    std::vector<int> avail;
    for (int id : pools[size_t(i)])
      if (!used[size_t(id)]) avail.push_back(id);
    chosen[size_t(i)].clear();
    std::vector<int> rem = targets[size_t(i)];
    return extend(oi, i, avail, 0, static_cast<int>(parts[size_t(i)].size()), rem);
  }

  bool extend(size_t oi, int i, const std::vector<int>& avail, size_t start, int need,
              std::vector<int>& rem) {
    if (out_of_budget) return false;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (need == 0) {
      if (std::any_of(rem.begin(), rem.end(), [](int v) { return v != 0; })) return false;
      if (!kappa_nonzero(i, chosen[size_t(i)])) return false;  // sigma(F) = 0, harmless
      for (int id : chosen[size_t(i)]) used[size_t(id)] = 1;
      bool hit = search_part(oi + 1);
      for (int id : chosen[size_t(i)]) used[size_t(id)] = 0;
      return hit;
    }
    if (avail.size() - start < static_cast<size_t>(need)) return false;
    // per-coordinate reachability of the remaining sum
    const int dims = static_cast<int>(rem.size());
    for (int k = 0; k < dims; ++k) {
      std::vector<int> vals;
      vals.reserve(avail.size() - start);
      for (size_t t = start; t < avail.size(); ++t) vals.push_back(D[size_t(avail[t])][k]);
      std::sort(vals.rbegin(), vals.rend());
      int hi = std::accumulate(vals.begin(), vals.begin() + need, 0);
      int lo = std::accumulate(vals.end() - need, vals.end(), 0);
      if (rem[size_t(k)] > hi || rem[size_t(k)] < lo) return false;
    }
    for (size_t t = start; t < avail.size(); ++t) {
      const int id = avail[t];
      bool fits = true;
      for (int k = 0; k < dims; ++k) fits &= D[size_t(id)][k] <= rem[size_t(k)];
      if (!fits) continue;
      chosen[size_t(i)].push_back(id);
      for (int k = 0; k < dims; ++k) rem[size_t(k)] -= D[size_t(id)][k];
      if (extend(oi, i, avail, t + 1, need - 1, rem)) return true;
      for (int k = 0; k < dims; ++k) rem[size_t(k)] += D[size_t(id)][k];
      chosen[size_t(i)].pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

VerifyOutcome verify_exceptional(const PartitionPlan& plan, uint64_t budget) {
  plan.validate();
  VerifyOutcome out;

  // condition 1: every block nonsingular
  for (size_t i = 0; i < plan.parts.size(); ++i) {
    if (sigma_coefficient(plan.row_selection[i], plan.parts[i]) == 0) {
      out.verdict = ExceptionalVerdict::not_exceptional;
      out.witness = plan.parts;  // the plan itself fails, sigma(E) = 0
      return out;
    }
  }

  // condition 2: no rival with equal sums and all blocks nonsingular
  RivalSearch search(plan, budget);
  bool hit = search.search_part(0);
  out.nodes = search.nodes;
  if (search.out_of_budget) {
    out.verdict = ExceptionalVerdict::budget_exceeded;
    return out;
  }
  if (hit) {
    std::vector<PointSet> witness(plan.parts.size());
    for (size_t i = 0; i < plan.parts.size(); ++i)
      for (int id : search.chosen[i]) witness[i].push_back(plan.triple.D[size_t(id)]);
    for (auto& w : witness) w = canonicalize(std::move(w));
    out.verdict = ExceptionalVerdict::not_exceptional;
    out.witness = std::move(witness);
    return out;
  }
  out.verdict = ExceptionalVerdict::exceptional;
  return out;
}

StrictPartitionParams StrictPartitionParams::with_defaults(int n, int d, int m, int s) {
  StrictPartitionParams p;
  p.n = n;
  p.d = d;
  p.m = m;
  p.s = s;
  if (n < 1 || d < 1 || m < 1 || s < 1 || d >= static_cast<long long>(m) * s)
    throw std::invalid_argument("strict partition needs d < m*s");
  p.mu = mpq_class(d, s) + mpq_class(1, 2L * s * (d + 1));
  p.mu.canonicalize();
  for (int attempt = 1;; ++attempt) {
    try {
      p.validate();
      return p;
    } catch (const std::invalid_argument&) {
      p.mu += mpq_class(1, 4L * s * (d + 1) * attempt);
      p.mu.canonicalize();
    }
  }
}

void StrictPartitionParams::validate() const {
  if (mu <= mpq_class(d, s) || mu >= m)
    throw std::invalid_argument("strict partition: mu outside (d/s, m)");
  for (int c = 1; c < s; ++c) {
    mpq_class v = mpq_class(c) * mu;
    v.canonicalize();
    if (v.get_den() == 1 && v.get_num() >= 0 && v.get_num() <= d) {
      std::ostringstream os;
      os << "strict partition: cut c=" << c << " passes through lattice sum "
         << v.get_num().get_str();
      throw std::invalid_argument(os.str());
    }
  }
}

namespace {

/// Independent jet rows for a part: canonical prefix of D(m-1) when it is
/// nonsingular, otherwise the first row subset found by exact column-style
/// elimination. Non-special parts always admit one.
PointSet select_rows_for_part(const PointSet& part, int n, int m) {
  PointSet all_rows = enumerate_simplex(n, m - 1);
  const size_t need = part.size();
  assert(need <= all_rows.size());
  PointSet prefix(all_rows.begin(), all_rows.begin() + static_cast<long>(need));
  if (sigma_coefficient(prefix, part) != 0) return prefix;

  // eliminate over Q, greedily keeping the first independent rows
  ExactMatrix M(static_cast<int>(all_rows.size()), static_cast<int>(need));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      M.at(i, j) = mpq_class(jet_coefficient(part[size_t(j)], all_rows[size_t(i)]));
  std::vector<int> picked;
  std::vector<char> taken(all_rows.size(), 0);
  for (int col = 0; col < M.cols(); ++col) {
    int piv = -1;
    for (int i = 0; i < M.rows(); ++i) {
      if (!taken[size_t(i)] && M.at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0)
      throw std::runtime_error("select_rows_for_part: part is singular in every row set");
    taken[size_t(piv)] = 1;
    picked.push_back(piv);
    for (int i = 0; i < M.rows(); ++i) {
      if (taken[size_t(i)] || M.at(i, col) == 0) continue;
      mpq_class f = M.at(i, col) / M.at(piv, col);
      for (int j = col; j < M.cols(); ++j) M.at(i, j) -= f * M.at(piv, j);
    }
  }
  std::sort(picked.begin(), picked.end());
  PointSet rows_out;
  for (int i : picked) rows_out.push_back(all_rows[size_t(i)]);
  return rows_out;
}

}  // namespace

PartitionPlan strict_partition(const StrictPartitionParams& params) {
  params.validate();
  const int n = params.n, d = params.d, m = params.m, s = params.s;
  PointSet D = enumerate_simplex(n, d);

  // label = floors of all consecutive-coordinate window sums divided by mu
  std::map<std::vector<long long>, PointSet> cells;
  const mpz_class num = params.mu.get_num();
  const mpz_class den = params.mu.get_den();
  for (const auto& a : D) {
    std::vector<long long> label;
    for (int i = 0; i <= n; ++i) {
      long long window = 0;
      for (int j = i + 1; j <= n; ++j) {
        window += a[j];
        mpz_class q = (static_cast<long>(window) * den) / num;  // floor, everything nonnegative
        label.push_back(q.get_si());
      }
    }
    cells[std::move(label)].push_back(a);
  }

  long long expected_parts = 1;
  for (int k = 0; k < n; ++k) expected_parts *= s;
  if (static_cast<long long>(cells.size()) != expected_parts)
    throw std::runtime_error("strict_partition: cell count differs from s^n");

  PartitionPlan plan;
  plan.triple = Triple(n, d, D, std::vector<int>(static_cast<size_t>(expected_parts), m));
  for (auto& [label, pts] : cells) {
    PointSet part = canonicalize(std::move(pts));
    if (scrambled_simplex_nonspecial(n, part, m) != ScrambledCert::certified_nonspecial)
      throw std::runtime_error("strict_partition: part not scrambled-certified");
    plan.row_selection.push_back(select_rows_for_part(part, n, m));
    plan.parts.push_back(std::move(part));
  }
  plan.validate();
  return plan;
}

PlanRunOutcome run_generalized_plan(const Triple& t, std::span<const PlanStep> steps,
                                    uint64_t budget) {
  PlanRunOutcome out;
  PointSet current = t.D;
  ReductionTrace trace;
  trace.initial = current;
  int cursor = t.r();  // next unconsumed point index (from the back)
  bool all_verified = true;

  for (const auto& step : steps) {
    PlanStepReport report;
    ReductionStep tstep;
    if (std::holds_alternative<MonomialOrdering>(step.action)) {
      if (cursor < 1)
        throw std::invalid_argument("run_generalized_plan: more steps than points");
      const auto& ord = std::get<MonomialOrdering>(step.action);
      if (t.n != 2)
        throw std::invalid_argument("run_generalized_plan: row-filling steps need n = 2");
      MpReduction red = mp_reduction(current, t.m[size_t(cursor) - 1], ord);
      report.first_point = report.last_point = cursor;
      report.verified = true;  // theorem-backed
      report.verdict = ExceptionalVerdict::exceptional;
      report.removed = static_cast<long long>(red.removed.size());
      tstep.point_index = cursor;
      tstep.multiplicity = t.m[size_t(cursor) - 1];
      tstep.ordering = ord;
      tstep.removed = red.removed;
      tstep.rows = std::move(red.rows);
      tstep.augmentation = red.augmentation;
      current = [&] {
        PointSet rem = canonicalize(tstep.removed);
        PointSet next;
        for (const auto& p : current)
          if (!contains_point(rem, p)) next.push_back(p);
        return next;
      }();
      cursor -= 1;
    } else {
      const auto& plan = std::get<PartitionPlan>(step.action);
      const int g = plan.triple.r();
      if (cursor - g < 0)
        throw std::invalid_argument("run_generalized_plan: more steps than points");
      for (int i = 0; i < g; ++i) {
        if (plan.triple.m[size_t(i)] != t.m[size_t(cursor - g + i)])
          throw std::invalid_argument(
              "run_generalized_plan: partition multiplicities do not match the group");
      }
      if (plan.triple.n != t.n || plan.triple.D != current)
        throw std::invalid_argument(
            "run_generalized_plan: partition plan does not target the current point set");
      VerifyOutcome verdict = verify_exceptional(plan, budget);
      report.is_partition = true;
      report.first_point = cursor - g + 1;
      report.last_point = cursor;
      report.verdict = verdict.verdict;
      report.verified = verdict.verdict == ExceptionalVerdict::exceptional;

      PointSet removed;
      for (const auto& part : plan.parts)
        removed.insert(removed.end(), part.begin(), part.end());
      removed = canonicalize(std::move(removed));
      if (removed.size() != static_cast<size_t>(plan.removed_count()))
        throw std::invalid_argument("run_generalized_plan: overlapping removals");
      report.removed = static_cast<long long>(removed.size());
      tstep.point_index = cursor - g + 1;
      tstep.removed = removed;
      PointSet next;
      for (const auto& p : current)
        if (!contains_point(removed, p)) next.push_back(p);
      if (current.size() - next.size() != removed.size())
        throw std::invalid_argument("run_generalized_plan: removal outside current set");
      current = std::move(next);
      cursor -= g;
    }
    all_verified &= report.verified;
    out.steps.push_back(report);
    trace.steps.push_back(std::move(tstep));
  }
  if (cursor != 0)
    throw std::invalid_argument("run_generalized_plan: steps do not cover all points");

  trace.final_set = current;
  out.cert.trace = std::move(trace);
  out.cert.bound = static_cast<long long>(current.size());
  out.cert.edim = t.edim();
  out.cert.status = (out.cert.bound == out.cert.edim && all_verified)
                        ? CertStatus::nonspecial
                        : CertStatus::undecided;
  return out;
}

}  // namespace fatpoints
