#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/simplex.hpp"

namespace fatpoints {

enum class Cmp { LT, EQ, GT };

/// A monomial ordering restricted to fixed-degree exponent vectors, given by
/// a family and a permutation (i_0, ..., i_n) of the variable indices with
/// the convention X_{i_0} < X_{i_1} < ... < X_{i_n}.
///
/// Operationally, both families scan coordinates in permutation order and
/// decide at the first difference:
///   lex:  the larger exponent makes the *smaller* monomial (graded reverse
///         lexicographic with X_{i_0} least),
///   rlex: the larger exponent makes the *larger* monomial (pure
///         lexicographic with X_{i_0} of highest priority).
/// Both satisfy the row rule on R(k) = {a : a_{i_0} = k}: under lex,
/// R(k) > R(l) iff k < l; under rlex, R(k) > R(l) iff k > l.
struct MonomialOrdering {
  enum class Family { lex, rlex };

  Family family = Family::lex;
  std::vector<int> perm;  // permutation of {0..n}; perm[0] keys the rows

  MonomialOrdering() = default;
  MonomialOrdering(Family f, std::vector<int> p);

  int row_axis() const { return perm[0]; }

  /// Text form "lex(0,1,2)" / "rlex(1,2,0)".
  std::string str() const;
  static MonomialOrdering parse(std::string_view text);

  friend bool operator==(const MonomialOrdering& a, const MonomialOrdering& b) {
    return a.family == b.family && a.perm == b.perm;
  }
};

/// Strict total order on each fixed-degree slice. Throws when the vectors
/// disagree in length or degree.
Cmp compare_points(const MonomialOrdering& ord, const ExponentVector& a,
                   const ExponentVector& b);

bool point_less(const MonomialOrdering& ord, const ExponentVector& a,
                const ExponentVector& b);

/// The <=-lexicographic ordering on equal-size subsets: sort each side
/// ascending, compare elementwise, first strict difference decides.
Cmp compare_subsets(const MonomialOrdering& ord, std::span<const ExponentVector> E,
                    std::span<const ExponentVector> F);

/// Sorted copy, ascending under the ordering.
PointSet sort_points(const MonomialOrdering& ord, std::span<const ExponentVector> pts);

/// All 2 * (n+1)! orderings for ambient dimension n (12 for n = 2).
std::vector<MonomialOrdering> all_orderings(int n);

/// Lazily yields every c-subset of D in strictly increasing <=-lexicographic
/// order. Callers may stop early.
class SubsetStream {
 public:
  SubsetStream(PointSet D, int c, const MonomialOrdering& ord);

  /// Next subset (sorted ascending under the ordering), or nullopt when done.
  std::optional<PointSet> next();

 private:
  PointSet sorted_;
  std::vector<int> idx_;
  int c_;
  bool first_ = true;
  bool done_ = false;
};

/// Comma-separated ordering list, e.g. "lex(1,2,0),rlex(0,1,2)".
std::vector<MonomialOrdering> parse_ordering_list(std::string_view text);
std::string format_ordering_list(std::span<const MonomialOrdering> ords);

}  // namespace fatpoints
