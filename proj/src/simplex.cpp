#include "fatpoints/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

long long binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  long long result = 1;
  for (long long i = 1; i <= b; ++i) {
    // a <= ~1e5 and b <= ~5 in every caller, so this cannot overflow.
    result = result * (a - b + i) / i;
  }
  return result;
}

ExponentVector::ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw std::invalid_argument("ExponentVector: empty entry list");
  for (int v : e_) {
    if (v < 0) throw std::invalid_argument("ExponentVector: negative entry");
  }
}

ExponentVector ExponentVector::zero(int n) {
  return ExponentVector(std::vector<int>(static_cast<size_t>(n) + 1, 0));
}

int ExponentVector::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  assert(size() == o.size());
  std::vector<int> out(e_);
  for (size_t k = 0; k < out.size(); ++k) out[k] += o.e_[k];
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  assert(size() == o.size());
  std::vector<int> out(e_);
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] -= o.e_[k];
    if (out[k] < 0) throw std::invalid_argument("ExponentVector: negative difference");
  }
  return ExponentVector(std::move(out));
}

std::string ExponentVector::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < e_.size(); ++k) {
    if (k) os << ',';
    os << e_[k];
  }
  os << ')';
  return os.str();
}

bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
  assert(a.size() == b.size());
  for (int k = a.size() - 1; k >= 0; --k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

size_t ExponentVectorHash::operator()(const ExponentVector& v) const {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (int k = 0; k < v.size(); ++k) {
    h ^= static_cast<size_t>(v[k]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate_rec(int k, int remaining, std::vector<int>& scratch, PointSet& out) {
  if (k == 0) {
    scratch[0] = remaining;
    out.emplace_back(scratch);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    scratch[static_cast<size_t>(k)] = v;
    enumerate_rec(k - 1, remaining - v, scratch, out);
  }
}

}  // namespace

PointSet enumerate_simplex(int n, int d) {
  if (n < 1) throw std::invalid_argument("enumerate_simplex: n must be >= 1");
  if (d < 0) throw std::invalid_argument("enumerate_simplex: d must be >= 0");
  PointSet out;
  out.reserve(static_cast<size_t>(binomial(d + n, n)));
  std::vector<int> scratch(static_cast<size_t>(n) + 1, 0);
  enumerate_rec(n, d, scratch, out);
  return out;
}

ExponentVector part_sum(std::span<const ExponentVector> pts, int size_hint) {
  if (pts.empty()) {
    if (size_hint <= 0) throw std::invalid_argument("part_sum: empty set needs a size hint");
    return ExponentVector(std::vector<int>(static_cast<size_t>(size_hint), 0));
  }
  std::vector<int> acc(static_cast<size_t>(pts[0].size()), 0);
  for (const auto& p : pts) {
    assert(p.size() == static_cast<int>(acc.size()));
    for (size_t k = 0; k < acc.size(); ++k) acc[k] += p[k];
  }
  return ExponentVector(std::move(acc));
}

size_t RowFamily::total_points() const {
  size_t t = 0;
  for (const auto& [lvl, pts] : levels) t += pts.size();
  return t;
}

RowFamily rows(std::span<const ExponentVector> D, int axis) {
  RowFamily f;
  f.axis = axis;
  for (const auto& p : D) {
    if (axis < 0 || axis >= p.size()) throw std::invalid_argument("rows: axis out of range");
    f.levels[p[axis]].push_back(p);
  }
  return f;
}

RowFamily rows(std::span<const ExponentVector> D, std::span<const long long> normal) {
  RowFamily f;
  f.normal.assign(normal.begin(), normal.end());
  for (const auto& p : D) {
    if (static_cast<size_t>(p.size()) != normal.size())
      throw std::invalid_argument("rows: normal vector has wrong length");
    long long v = 0;
    for (int k = 0; k < p.size(); ++k) v += normal[static_cast<size_t>(k)] * p[k];
    f.levels[v].push_back(p);
  }
  return f;
}

long long level_of(const ExponentVector& a, const RowFamily& f) {
  if (f.axis >= 0) return a[f.axis];
  long long v = 0;
  for (int k = 0; k < a.size(); ++k) v += f.normal[static_cast<size_t>(k)] * a[k];
  return v;
}

PointSet canonicalize(PointSet pts) {
  std::sort(pts.begin(), pts.end(), canonical_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool contains_point(const PointSet& sorted_canonical, const ExponentVector& p) {
  return std::binary_search(sorted_canonical.begin(), sorted_canonical.end(), p,
                            canonical_less);
}

Triple::Triple(int n_, int d_, PointSet D_, std::vector<int> m_)
    : n(n_), d(d_), D(canonicalize(std::move(D_))), m(std::move(m_)) {
  if (n < 1) throw std::invalid_argument("Triple: n must be >= 1");
  if (d < 1) throw std::invalid_argument("Triple: d must be >= 1");
  for (const auto& p : D) {
    if (p.size() != n + 1) throw std::invalid_argument("Triple: point has wrong length");
    if (p.degree() != d) throw std::invalid_argument("Triple: point of degree != d");
  }
  if (m.empty()) throw std::invalid_argument("Triple: empty multiplicity tuple");
  for (int mi : m) {
    if (mi < 1) throw std::invalid_argument("Triple: multiplicity < 1");
  }
}

Triple Triple::full(int n, int d, std::vector<int> m) {
  return Triple(n, d, enumerate_simplex(n, d), std::move(m));
}

bool Triple::is_full() const {
  return static_cast<long long>(D.size()) == binomial(d + n, n);
}

long long Triple::u_size() const {
  long long total = 0;
  for (int mi : m) total += binomial(mi + n - 1, n);
  return total;
}

long long Triple::edim() const {
  return std::max<long long>(static_cast<long long>(D.size()) - u_size(), 0);
}

Determinacy Triple::determinacy() const {
  long long delta = static_cast<long long>(D.size()) - u_size();
  if (delta < 0) return Determinacy::over;
  if (delta > 0) return Determinacy::under;
  return Determinacy::well;
}

}  // namespace fatpoints
