#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fatpoints/ordering.hpp"
#include "fatpoints/reduction.hpp"

namespace fatpoints {

/// One Seshadri candidate (2, d, m): its non-speciality contributes to ruling
/// out one rational value of epsilon(r). Candidate lists are user input;
/// pinned ordering tuples are tried before any random ones.
struct SeshadriCandidate {
  int d = 0;
  std::vector<int> m;
  std::vector<std::vector<MonomialOrdering>> pinned;

  mpq_class ratio() const;  // d / (m_1 + ... + m_r)
};

struct CandidateOutcome {
  int d = 0;
  std::vector<int> m;
  bool certified = false;
  std::optional<std::vector<MonomialOrdering>> certifying_ords;
  long long bound = -1;  // best bound seen across tuples
  int tuples_tried = 0;
};

struct SeshadriReport {
  int r = 0;
  uint64_t seed = 0;
  std::vector<CandidateOutcome> outcomes;
  bool all_certified = false;
  std::optional<mpq_class> e;  // claimed bound: min candidate ratio, when all certified
  std::optional<mpq_class> f;  // 1 / (1 - r e^2), reported only when r e^2 < 1
};

/// f such that e = (1/sqrt r) sqrt(1 - 1/f), computed exactly; nullopt when
/// r e^2 >= 1.
std::optional<mpq_class> f_value(int r, const mpq_class& e);

/// Runs algorithm1 on every candidate: pinned ordering tuples first, then up
/// to `budget` random tuples drawn uniformly from the 12 orderings per slot
/// (split deterministically from the seed). A candidate is certified by its
/// first non-special run; the bound e and its f-value are reported only when
/// every candidate certifies. Rejects under-determined candidates.
SeshadriReport seshadri_verify(int r, std::span<const SeshadriCandidate> candidates,
                               int budget, uint64_t seed);

}  // namespace fatpoints
