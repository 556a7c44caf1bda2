#include "fatpoints/exact.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace fatpoints {

namespace {

// All below 2^62, so sums of two residues fit in a uint64_t.
constexpr uint64_t kPrimes[] = {4611686018427387847ULL, 4611686018427387817ULL,
                                4611686018427387787ULL};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

std::vector<uint64_t> reduce_mod(const IntMatrix& a, uint64_t p) {
  std::vector<uint64_t> m(size_t(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m[size_t(i) * a.cols() + j] = mpz_fdiv_ui(a.at(i, j).get_mpz_t(), p);
  return m;
}

template <bool Parallel>
int rank_mod_impl(const IntMatrix& a, uint64_t p) {
  const int rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<uint64_t> m = reduce_mod(a, p);
  auto at = [&](int i, int j) -> uint64_t& { return m[size_t(i) * cols + j]; };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    const uint64_t inv = invmod(at(rank, col), p);
#pragma omp parallel for schedule(static) if (Parallel && rows - rank > 32)
    for (int i = rank + 1; i < rows; ++i) {
      uint64_t f = at(i, col);
      if (f == 0) continue;
      f = mulmod(f, inv, p);
      at(i, col) = 0;
      for (int j = col + 1; j < cols; ++j) {
        uint64_t sub = mulmod(f, at(rank, j), p);
        uint64_t v = at(i, j);
        at(i, j) = v >= sub ? v - sub : v + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination; intermediate entries are minors of the input, so
// every division below is exact. Zero columns are skipped, which leaves the
// relevant minors untouched.
template <bool Parallel>
int rank_bareiss_impl(IntMatrix a) {
  const int rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return 0;
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    size_t piv_bits = 0;
    for (int i = rank; i < rows; ++i) {
      if (a.at(i, col) == 0) continue;
      size_t bits = mpz_sizeinbase(a.at(i, col).get_mpz_t(), 2);
      if (piv < 0 || bits < piv_bits) {
        piv = i;
        piv_bits = bits;
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < cols; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    const mpz_class& pivot = a.at(rank, col);
#pragma omp parallel for schedule(dynamic) if (Parallel && rows - rank > 8)
    for (int i = rank + 1; i < rows; ++i) {
      if (a.at(i, col) == 0) {
        if (prev != 1)
          for (int j = col + 1; j < cols; ++j) {
            a.at(i, j) *= pivot;
            mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(),
                         prev.get_mpz_t());
          }
        else
          for (int j = col + 1; j < cols; ++j) a.at(i, j) *= pivot;
        continue;
      }
      mpz_class tmp;
      for (int j = col + 1; j < cols; ++j) {
        tmp = a.at(i, col) * a.at(rank, j);
        a.at(i, j) *= pivot;
        a.at(i, j) -= tmp;
        mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<uint64_t> modular_rank_primes() {
  return {std::begin(kPrimes), std::end(kPrimes)};
}

IntMatrix clear_denominators(const ExactMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  mpz_class lcm, tmp;
  for (int i = 0; i < a.rows(); ++i) {
    lcm = 1;
    for (int j = 0; j < a.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.at(i, j).get_den_mpz_t());
    for (int j = 0; j < a.cols(); ++j) {
      mpz_divexact(tmp.get_mpz_t(), lcm.get_mpz_t(), a.at(i, j).get_den_mpz_t());
      out.at(i, j) = a.at(i, j).get_num() * tmp;
    }
  }
  return out;
}

int rank_mod_prime(const IntMatrix& a, uint64_t p) { return rank_mod_impl<true>(a, p); }
int rank_mod_prime_serial(const IntMatrix& a, uint64_t p) {
  return rank_mod_impl<false>(a, p);
}

int rank_bareiss(IntMatrix a) { return rank_bareiss_impl<true>(std::move(a)); }
int rank_bareiss_serial(IntMatrix a) { return rank_bareiss_impl<false>(std::move(a)); }

int exact_rank(const IntMatrix& a) {
  const int bound = std::min(a.rows(), a.cols());
  if (bound == 0) return 0;
  for (uint64_t p : kPrimes) {
    if (rank_mod_prime(a, p) == bound) return bound;
  }
  return rank_bareiss(a);
}

int exact_rank(const ExactMatrix& a) { return exact_rank(clear_denominators(a)); }

int exact_rank_serial(const IntMatrix& a) { return rank_bareiss_serial(a); }

int exact_rank_serial(const ExactMatrix& a) {
  return rank_bareiss_serial(clear_denominators(a));
}

mpz_class det_bareiss(IntMatrix a) {
  const int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1, tmp;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        tmp = a.at(i, k) * a.at(k, j);
        a.at(i, j) *= a.at(k, k);
        a.at(i, j) -= tmp;
        mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace fatpoints
