#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fatpoints {

/// Binomial coefficient C(a, b) in 64-bit arithmetic. Returns 0 when b < 0 or
/// a < b, so expressions like C(m-k+n-1, n) degrade gracefully at k = m.
long long binomial(long long a, long long b);

/// An exponent vector a = (a_0, ..., a_n) of a monomial X^a in n+1 variables.
/// Immutable once built; compared and hashed by content.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries);

  static ExponentVector zero(int n);

  int size() const { return static_cast<int>(e_.size()); }
  /// Projective ambient dimension n (one less than the entry count).
  int dim() const { return size() - 1; }
  int operator[](int k) const { return e_[static_cast<size_t>(k)]; }
  const std::vector<int>& entries() const { return e_; }

  int degree() const;

  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;  // entries may not go negative

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  std::vector<int> e_;
};

/// Canonical strict order used for matrix column layouts and traces: compare
/// the highest-index entry first, ascending. Deterministic and degree-free.
bool canonical_less(const ExponentVector& a, const ExponentVector& b);

struct ExponentVectorHash {
  size_t operator()(const ExponentVector& v) const;
};

using PointSet = std::vector<ExponentVector>;

/// All exponent vectors of degree exactly d in n+1 variables, in canonical
/// order. Cardinality C(d+n, n). d = 0 yields the single zero vector.
PointSet enumerate_simplex(int n, int d);

/// Componentwise sum over a set of equal-length vectors; the empty set maps
/// to the zero vector of the given ambient size (n+1 entries).
ExponentVector part_sum(std::span<const ExponentVector> pts, int size_hint = 0);

/// The lattice set D partitioned by the value of one linear functional:
/// either a coordinate (axis) or an integer normal vector.
struct RowFamily {
  int axis = -1;                  // -1 when a general normal is used
  std::vector<long long> normal;  // empty for coordinate axes
  std::map<long long, PointSet> levels;

  size_t total_points() const;
};

RowFamily rows(std::span<const ExponentVector> D, int axis);
RowFamily rows(std::span<const ExponentVector> D, std::span<const long long> normal);

long long level_of(const ExponentVector& a, const RowFamily& f);

enum class Determinacy { over, under, well };

/// The data (n, D, m): a point set D inside D(d) and a multiplicity tuple.
/// D is kept sorted in canonical order with duplicates removed.
struct Triple {
  int n = 0;
  int d = 0;
  PointSet D;
  std::vector<int> m;

  Triple() = default;
  Triple(int n, int d, PointSet D, std::vector<int> m);

  /// D = all of D(d).
  static Triple full(int n, int d, std::vector<int> m);

  int r() const { return static_cast<int>(m.size()); }
  bool is_full() const;

  /// Number of vanishing conditions #U = sum_i C(m_i + n - 1, n).
  long long u_size() const;
  /// Expected dimension max{#D - #U, 0}.
  long long edim() const;
  Determinacy determinacy() const;
};

/// Sort into canonical order and drop duplicates.
PointSet canonicalize(PointSet pts);

bool contains_point(const PointSet& sorted_canonical, const ExponentVector& p);

}  // namespace fatpoints
