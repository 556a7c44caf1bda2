#include "fatpoints/seshadri.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fatpoints/jet.hpp"

namespace fatpoints {

mpq_class SeshadriCandidate::ratio() const {
  long long total = std::accumulate(m.begin(), m.end(), 0LL);
  mpq_class q(d, static_cast<long>(total));
  q.canonicalize();
  return q;
}

std::optional<mpq_class> f_value(int r, const mpq_class& e) {
  mpq_class re2 = e * e * r;
  re2.canonicalize();
  if (re2 >= 1) return std::nullopt;
  mpq_class f = 1 / (1 - re2);
  f.canonicalize();
  return f;
}

namespace {

std::vector<MonomialOrdering> random_tuple(const std::vector<MonomialOrdering>& pool,
                                           size_t r, SplitMix64& rng) {
  std::vector<MonomialOrdering> out;
  out.reserve(r);
  for (size_t k = 0; k < r; ++k)
    out.push_back(pool[rng.next() % pool.size()]);
  return out;
}

}  // namespace

SeshadriReport seshadri_verify(int r, std::span<const SeshadriCandidate> candidates,
                               int budget, uint64_t seed) {
  if (candidates.empty())
    throw std::invalid_argument("seshadri_verify: empty candidate list");
  SeshadriReport report;
  report.r = r;
  report.seed = seed;

  const std::vector<MonomialOrdering> pool = all_orderings(2);
  for (size_t ci = 0; ci < candidates.size(); ++ci) {
    const SeshadriCandidate& cand = candidates[ci];
    if (static_cast<int>(cand.m.size()) != r) {
      std::ostringstream os;
      os << "seshadri_verify: candidate d=" << cand.d << " has " << cand.m.size()
         << " multiplicities, expected r=" << r;
      throw std::invalid_argument(os.str());
    }
    Triple t = Triple::full(2, cand.d, cand.m);
    if (t.determinacy() == Determinacy::under) {
      std::ostringstream os;
      os << "seshadri_verify: candidate d=" << cand.d
         << " is under-determined (edim=" << t.edim() << "); rejected";
      throw std::invalid_argument(os.str());
    }

    CandidateOutcome outcome;
    outcome.d = cand.d;
    outcome.m = cand.m;

    auto try_tuple = [&](const std::vector<MonomialOrdering>& ords) {
      if (static_cast<int>(ords.size()) != r)
        throw std::invalid_argument("seshadri_verify: ordering tuple of wrong length");
      CertificationResult res = algorithm1(cand.d, cand.m, ords);
      ++outcome.tuples_tried;
      if (outcome.bound < 0 || res.bound < outcome.bound) outcome.bound = res.bound;
      if (res.status == CertStatus::nonspecial) {
        outcome.certified = true;
        outcome.certifying_ords = ords;
        return true;
      }
      return false;
    };

    bool done = false;
    for (const auto& pinned : cand.pinned) {
      if ((done = try_tuple(pinned))) break;
    }
    if (!done) {
      SplitMix64 rng(mix_seed(seed, ci));
      for (int trial = 0; trial < budget && !done; ++trial)
        done = try_tuple(random_tuple(pool, static_cast<size_t>(r), rng));
    }
    report.outcomes.push_back(std::move(outcome));
  }

  report.all_certified = std::all_of(report.outcomes.begin(), report.outcomes.end(),
                                     [](const CandidateOutcome& o) { return o.certified; });
  if (report.all_certified) {
    mpq_class e = candidates[0].ratio();
    for (const auto& cand : candidates) e = std::min(e, cand.ratio());
    report.e = e;
    report.f = f_value(r, e);
  }
  return report;
}

}  // namespace fatpoints
