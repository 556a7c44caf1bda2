#include "fatpoints/ordering.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

MonomialOrdering::MonomialOrdering(Family f, std::vector<int> p)
    : family(f), perm(std::move(p)) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("MonomialOrdering: perm is not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
  if (perm.empty()) throw std::invalid_argument("MonomialOrdering: empty permutation");
}

std::string MonomialOrdering::str() const {
  std::ostringstream os;
  os << (family == Family::lex ? "lex(" : "rlex(");
  for (size_t k = 0; k < perm.size(); ++k) {
    if (k) os << ',';
    os << perm[k];
  }
  os << ')';
  return os.str();
}

MonomialOrdering MonomialOrdering::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("cannot parse ordering '" + std::string(text) + "'");
  };
  size_t open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') fail();
  std::string_view name = text.substr(0, open);
  Family fam;
  if (name == "lex") fam = Family::lex;
  else if (name == "rlex") fam = Family::rlex;
  else fail();
  std::string body(text.substr(open + 1, text.size() - open - 2));
  std::vector<int> perm;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) fail();
    perm.push_back(v);
  }
  if (perm.empty()) fail();
  return MonomialOrdering(fam, std::move(perm));
}

Cmp compare_points(const MonomialOrdering& ord, const ExponentVector& a,
                   const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compare_points: dimension mismatch");
  if (a.degree() != b.degree())
    throw std::invalid_argument("compare_points: degree mismatch");
  if (static_cast<size_t>(a.size()) != ord.perm.size())
    throw std::invalid_argument("compare_points: ordering has wrong dimension");
  for (int j : ord.perm) {
    if (a[j] == b[j]) continue;
    bool a_bigger_exp = a[j] > b[j];
    if (ord.family == MonomialOrdering::Family::lex)
      return a_bigger_exp ? Cmp::LT : Cmp::GT;
    return a_bigger_exp ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

bool point_less(const MonomialOrdering& ord, const ExponentVector& a,
                const ExponentVector& b) {
  return compare_points(ord, a, b) == Cmp::LT;
}

Cmp compare_subsets(const MonomialOrdering& ord, std::span<const ExponentVector> E,
                    std::span<const ExponentVector> F) {
  if (E.size() != F.size())
    throw std::invalid_argument("compare_subsets: size mismatch");
  PointSet se = sort_points(ord, E);
  PointSet sf = sort_points(ord, F);
  for (size_t k = 0; k < se.size(); ++k) {
    Cmp c = compare_points(ord, se[k], sf[k]);
    if (c != Cmp::EQ) return c;
  }
  return Cmp::EQ;
}

PointSet sort_points(const MonomialOrdering& ord, std::span<const ExponentVector> pts) {
  PointSet out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end(),
            [&](const ExponentVector& a, const ExponentVector& b) {
              return point_less(ord, a, b);
            });
  return out;
}

std::vector<MonomialOrdering> all_orderings(int n) {
  std::vector<int> perm(static_cast<size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MonomialOrdering> out;
  do {
    out.emplace_back(MonomialOrdering::Family::lex, perm);
    out.emplace_back(MonomialOrdering::Family::rlex, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SubsetStream::SubsetStream(PointSet D, int c, const MonomialOrdering& ord)
    : sorted_(sort_points(ord, D)), c_(c) {
  if (c_ < 0 || c_ > static_cast<int>(sorted_.size())) {
    done_ = true;
    return;
  }
  idx_.resize(static_cast<size_t>(c_));
  std::iota(idx_.begin(), idx_.end(), 0);
}

std::optional<PointSet> SubsetStream::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    // advance the index combination lexicographically
    int n = static_cast<int>(sorted_.size());
    int k = c_ - 1;
    while (k >= 0 && idx_[static_cast<size_t>(k)] == n - c_ + k) --k;
    if (k < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++idx_[static_cast<size_t>(k)];
    for (int j = k + 1; j < c_; ++j)
      idx_[static_cast<size_t>(j)] = idx_[static_cast<size_t>(j - 1)] + 1;
  }
  first_ = false;
  PointSet out;
  out.reserve(static_cast<size_t>(c_));
  for (int i : idx_) out.push_back(sorted_[static_cast<size_t>(i)]);
  if (c_ == 0) done_ = true;  // single empty subset
  return out;
}

std::vector<MonomialOrdering> parse_ordering_list(std::string_view text) {
  std::vector<MonomialOrdering> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw std::invalid_argument("cannot parse ordering list '" + std::string(text) + "'");
    std::string_view item = text.substr(pos, close - pos + 1);
    while (!item.empty() && (item.front() == ',' || item.front() == ' '))
      item.remove_prefix(1);
    out.push_back(MonomialOrdering::parse(item));
    pos = close + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty ordering list");
  return out;
}

std::string format_ordering_list(std::span<const MonomialOrdering> ords) {
  std::ostringstream os;
  for (size_t k = 0; k < ords.size(); ++k) {
    if (k) os << ',';
    os << ords[k].str();
  }
  return os.str();
}

}  // namespace fatpoints
