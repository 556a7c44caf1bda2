#include <doctest.h>

#include <algorithm>

#include "fatpoints/combinat.hpp"
#include "fatpoints/jet.hpp"

using namespace fatpoints;

namespace {

ExponentVector ev(std::vector<int> e) { return ExponentVector(std::move(e)); }

// distinct small primes for deterministic "general position" evaluations
const long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

std::vector<PointSample> prime_samples(int r, int n) {
  std::vector<PointSample> out(static_cast<size_t>(r));
  int next = 0;
  for (auto& s : out) {
    s.coords.clear();
    for (int k = 0; k <= n; ++k) {
      s.coords.push_back(kPrimes[next % 16] * (1 + next / 16));
      ++next;
    }
  }
  return out;
}

PointSet random_subset(SplitMix64& rng, const PointSet& D, size_t count) {
  std::vector<size_t> idx(D.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (size_t i = 0; i < idx.size(); ++i)
    std::swap(idx[i], idx[i + rng.next() % (idx.size() - i)]);
  PointSet out;
  for (size_t i = 0; i < count && i < idx.size(); ++i) out.push_back(D[idx[i]]);
  return canonicalize(std::move(out));
}

// a scrambled 2-simplex of size m in D(d): m distinct levels of one axis,
// the level with capacity i carrying i points of that row
PointSet random_scrambled(SplitMix64& rng, int d, int m) {
  while (true) {
    int axis = static_cast<int>(rng.next() % 3);
    PointSet D = enumerate_simplex(2, d);
    RowFamily fam = rows(D, axis);
    std::vector<long long> levels;
    for (const auto& [lvl, pts] : fam.levels) levels.push_back(lvl);
    for (size_t i = 0; i < levels.size(); ++i)
      std::swap(levels[i], levels[i + rng.next() % (levels.size() - i)]);
    if (static_cast<int>(levels.size()) < m) continue;
    std::vector<int> caps(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) caps[size_t(i)] = i + 1;
    for (size_t i = 0; i < caps.size(); ++i)
      std::swap(caps[i], caps[i + rng.next() % (caps.size() - i)]);
    PointSet out;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const PointSet& row = fam.levels.at(levels[size_t(i)]);
      if (static_cast<int>(row.size()) < caps[size_t(i)]) {
        ok = false;
        break;
      }
      PointSet chosen = random_subset(rng, row, static_cast<size_t>(caps[size_t(i)]));
      out.insert(out.end(), chosen.begin(), chosen.end());
    }
    if (ok) return canonicalize(std::move(out));
  }
}

}  // namespace

TEST_SUITE_BEGIN("jet");

TEST_CASE("jet coefficients are falling factorials") {
  CHECK(jet_coefficient(ev({3, 0, 0}), ev({2, 0, 0})) == 6);
  CHECK(jet_coefficient(ev({1, 2, 0}), ev({0, 0, 1})) == 0);
  CHECK(jet_coefficient(ev({2, 2, 3}), ev({1, 1, 1})) == 12);
  CHECK(jet_coefficient(ev({4, 1}), ev({0, 0})) == 1);
  CHECK_THROWS_AS(jet_coefficient(ev({1, 0}), ev({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("evaluated matrix: shapes and hand-checked entries") {
  // degree-1 monomials evaluated at (1,1,1)
  Triple lines = Triple::full(2, 1, {1});
  std::vector<PointSample> s1 = {{{1, 1, 1}}};
  ExactMatrix m1 = build_evaluated_matrix(lines, s1);
  REQUIRE(m1.rows() == 1);
  REQUIRE(m1.cols() == 3);
  for (int j = 0; j < 3; ++j) CHECK(m1.at(0, j) == 1);

  // double point on the line: derivative rows indexed by D(1) in two variables
  Triple conic = Triple::full(1, 2, {2});
  std::vector<PointSample> s2 = {{{1, 0}}};
  ExactMatrix m2 = build_evaluated_matrix(conic, s2);
  REQUIRE(m2.rows() == 2);  // C(m+n-1, n) = C(2, 1)
  REQUIRE(m2.cols() == 3);
  // columns (2,0),(1,1),(0,2); rows b=(1,0), b=(0,1)
  CHECK(m2.at(0, 0) == 2);
  CHECK(m2.at(0, 1) == 0);
  CHECK(m2.at(0, 2) == 0);
  CHECK(m2.at(1, 0) == 0);
  CHECK(m2.at(1, 1) == 1);
  CHECK(m2.at(1, 2) == 0);

  Triple t = Triple::full(2, 5, {3, 2, 1});
  std::vector<PointSample> s3 = prime_samples(3, 2);
  ExactMatrix m3 = build_evaluated_matrix(t, s3);
  CHECK(m3.rows() == t.u_size());
  CHECK(m3.cols() == static_cast<int>(t.D.size()));

  std::vector<PointSample> bad = {{{0, 0, 0}}};
  CHECK_THROWS_AS(build_evaluated_matrix(lines, bad), std::invalid_argument);
}

TEST_CASE("oracle: headline values") {
  OracleResult r1 = dim_linear_system(Triple::full(2, 7, {3, 3, 3, 3, 3, 3}), 3, 1);
  CHECK(r1.dimension == 0);
  CHECK(r1.certified_nonspecial);

  // a triple point kills all conics
  OracleResult r2 = dim_linear_system(Triple::full(2, 2, {3}), 3, 1);
  CHECK(r2.dimension == 0);
  CHECK(r2.certified_nonspecial);

  // four double points on quartics: 15 - 12 = 3
  for (uint64_t seed : {11ULL, 22ULL, 33ULL}) {
    OracleResult r3 = dim_linear_system(Triple::full(2, 4, {2, 2, 2, 2}), 3, seed);
    CHECK(r3.dimension == 3);
    CHECK(r3.certified_nonspecial);
  }
}

TEST_CASE("four double points via deterministic prime coordinates") {
  // independent cross-check of the quartic example: distinct primes stand in
  // for general points, and the rank is exact
  Triple t = Triple::full(2, 4, {2, 2, 2, 2});
  ExactMatrix m = build_evaluated_matrix(t, prime_samples(4, 2));
  CHECK(exact_rank(m) == 12);
  CHECK(static_cast<long long>(t.D.size()) - 12 == 3);
}

TEST_CASE("w_dimension examples") {
  CHECK(w_dimension(2, 3, PointSet{}) == 6);
  CHECK(w_dimension(2, 2, PointSet{ev({1, 0, 0})}) == 2);
  // four points on a line plus one off it: the pencil of conics through them
  PointSet E = {ev({7, 0, 0}), ev({5, 2, 0}), ev({3, 4, 0}), ev({1, 6, 0}),
                ev({0, 0, 7})};
  CHECK(w_dimension(2, 3, E) == 2);
}

TEST_CASE("is_special_single") {
  PointSet E = {ev({7, 0, 0}), ev({5, 2, 0}), ev({3, 4, 0}), ev({1, 6, 0}),
                ev({0, 0, 7})};
  CHECK(is_special_single(2, E, 3) == Speciality::special);

  PointSet D = enumerate_simplex(2, 6);
  SplitMix64 rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    PointSet single = {D[rng.next() % D.size()]};
    int m = 1 + static_cast<int>(rng.next() % 4);
    CHECK(is_special_single(2, single, m) == Speciality::nonspecial);
  }

  PointSet big = random_subset(rng, D, 5);
  CHECK_THROWS_AS(is_special_single(2, big, 2), std::invalid_argument);  // 5 > C(3,2)
}

TEST_CASE("scrambled simplices are never special") {
  SplitMix64 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    int m = 2 + static_cast<int>(rng.next() % 3);
    int d = m + 2 + static_cast<int>(rng.next() % 4);
    PointSet E = random_scrambled(rng, d, m);
    CHECK(is_special_single(2, E, m) == Speciality::nonspecial);
  }
}

TEST_CASE("adding a point drops the W dimension by zero or one") {
  SplitMix64 rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    int d = 2 + static_cast<int>(rng.next() % 6);
    int m = 1 + static_cast<int>(rng.next() % 4);
    PointSet D = enumerate_simplex(2, d);
    PointSet E = random_subset(rng, D, rng.next() % 8);
    const ExponentVector& a = D[rng.next() % D.size()];
    long long before = w_dimension(2, m, E);
    PointSet with = E;
    with.push_back(a);
    long long after = w_dimension(2, m, canonicalize(with));
    CHECK(before - after >= 0);
    CHECK(before - after <= 1);
  }
}

TEST_CASE("oracle agrees with the W-space test on single fat points") {
  SplitMix64 rng(123);
  int done = 0;
  while (done < 60) {
    int d = 2 + static_cast<int>(rng.next() % 7);
    int m = 1 + static_cast<int>(rng.next() % 4);
    long long cap = binomial(m + 1, 2);
    PointSet D = enumerate_simplex(2, d);
    PointSet E = random_subset(rng, D, 1 + rng.next() % static_cast<uint64_t>(cap));
    if (E.empty()) continue;
    Triple t(2, d, E, {m});
    OracleResult oracle = dim_linear_system(t, 3, rng.next());
    bool oracle_nonspecial = oracle.certified_nonspecial && oracle.dimension == t.edim();
    bool w_nonspecial = is_special_single(2, E, m) == Speciality::nonspecial;
    CHECK(oracle_nonspecial == w_nonspecial);
    ++done;
  }
}

TEST_CASE("non-special subsets stay non-special") {
  SplitMix64 rng(321);
  int done = 0;
  while (done < 40) {
    int d = 2 + static_cast<int>(rng.next() % 6);
    int m = 2 + static_cast<int>(rng.next() % 3);
    PointSet D = enumerate_simplex(2, d);
    PointSet F = random_subset(rng, D, 1 + rng.next() % static_cast<uint64_t>(binomial(m + 1, 2)));
    if (F.empty() || is_special_single(2, F, m) == Speciality::special) continue;
    PointSet E = random_subset(rng, F, 1 + rng.next() % F.size());
    CHECK(is_special_single(2, E, m) == Speciality::nonspecial);
    ++done;
  }
}

TEST_CASE("reported dimension never undershoots edim") {
  SplitMix64 rng(999);
  for (int rep = 0; rep < 30; ++rep) {
    int d = 1 + static_cast<int>(rng.next() % 6);
    int r = 1 + static_cast<int>(rng.next() % 3);
    std::vector<int> m(static_cast<size_t>(r));
    for (auto& mi : m) mi = 1 + static_cast<int>(rng.next() % 3);
    Triple t = Triple::full(2, d, m);
    OracleResult res = dim_linear_system(t, 2, rng.next());
    CHECK(res.dimension >= t.edim());
    if (res.certified_nonspecial) CHECK(res.dimension == t.edim());
  }
}

TEST_CASE("identical seeds replay identically") {
  Triple t = Triple::full(2, 5, {2, 2, 2});
  OracleResult a = dim_linear_system(t, 3, 424242);
  OracleResult b = dim_linear_system(t, 3, 424242);
  CHECK(a.dimension == b.dimension);
  CHECK(a.trials_used == b.trials_used);
  CHECK(a.certified_nonspecial == b.certified_nonspecial);
}

TEST_SUITE_END();
