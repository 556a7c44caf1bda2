#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fatpoints {

/// Dense matrix with arbitrary-precision rational entries.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const mpq_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> a_;
};

/// Dense matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

/// Clear denominators row by row; preserves the rank.
IntMatrix clear_denominators(const ExactMatrix& a);

/// Rank of the matrix reduced mod p, p an odd prime below 2^62.
/// A modular rank is a lower bound on the rational rank; if it equals
/// min(rows, cols), the rational matrix has full rank.
int rank_mod_prime(const IntMatrix& a, uint64_t p);         // OpenMP row updates
int rank_mod_prime_serial(const IntMatrix& a, uint64_t p);  // reference

/// Exact rank over Q by fraction-free (Bareiss) elimination with column
/// skipping and smallest-pivot row selection. Deterministic.
int rank_bareiss(IntMatrix a);         // OpenMP row updates
int rank_bareiss_serial(IntMatrix a);  // reference

/// Exact rank over Q. Tries a fixed list of word-size primes first (full
/// modular rank certifies full rational rank), then falls back to exact
/// fraction-free elimination. Deterministic.
int exact_rank(const ExactMatrix& a);
int exact_rank(const IntMatrix& a);

/// Reference path: exact fraction-free elimination only, single-threaded.
int exact_rank_serial(const ExactMatrix& a);
int exact_rank_serial(const IntMatrix& a);

/// Exact determinant of a square integer matrix (Bareiss). det of the empty
/// 0x0 matrix is 1.
mpz_class det_bareiss(IntMatrix a);

/// The fixed primes used by the modular fast path.
std::vector<uint64_t> modular_rank_primes();

}  // namespace fatpoints
