#include "coincidence/exterior.hpp"

#include "coincidence/kernels.hpp"

#include <sstream>

namespace coincidence::exterior {

namespace {

void require_rank(int rank) {
  if (rank <= 0)
    throw Error(Errc::InvalidArgument,
                "exterior algebra rank must be positive, got " +
                    std::to_string(rank));
}

void validate_subset(int rank, const IndexSet &subset) {
  int prev = 0;
  for (int i : subset) {
    if (i <= prev || i > rank)
      throw Error(Errc::InvalidArgument,
                  "index subset must be strictly increasing within {1.." +
                      std::to_string(rank) + "}");
    prev = i;
  }
}

void require_same_rank(const ExteriorElement &a, const ExteriorElement &b) {
  if (a.rank() != b.rank())
    throw Error(Errc::RankMismatch, "ranks " + std::to_string(a.rank()) +
                                        " and " + std::to_string(b.rank()));
}

// Merge two sorted disjoint subsets; the sign is the parity of the number of
// pairs (s in lhs, t in rhs) with s > t. Returns 0 if they intersect.
int merge_sign(const IndexSet &lhs, const IndexSet &rhs, IndexSet &merged) {
  merged.clear();
  merged.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  long inversions = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (lhs[i] == rhs[j])
      return 0;
    if (lhs[i] < rhs[j]) {
      merged.push_back(lhs[i++]);
    } else {
      inversions += static_cast<long>(lhs.size() - i);
      merged.push_back(rhs[j++]);
    }
  }
  merged.insert(merged.end(), lhs.begin() + static_cast<long>(i), lhs.end());
  merged.insert(merged.end(), rhs.begin() + static_cast<long>(j), rhs.end());
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

ExteriorElement::ExteriorElement(int rank) : rank_(rank) { require_rank(rank); }

ExteriorElement::ExteriorElement(
    int rank, const std::vector<std::pair<IndexSet, int64_t>> &terms)
    : ExteriorElement(rank) {
  for (const auto &[subset, coeff] : terms) {
    validate_subset(rank, subset);
    add_term(subset, coeff);
  }
}

ExteriorElement ExteriorElement::scalar(int rank, int64_t value) {
  return monomial(rank, {}, value);
}

ExteriorElement ExteriorElement::generator(int rank, int i) {
  return monomial(rank, {i}, 1);
}

ExteriorElement ExteriorElement::monomial(int rank, IndexSet subset,
                                          int64_t coeff) {
  return {rank, {{std::move(subset), coeff}}};
}

ExteriorElement ExteriorElement::top(int rank) {
  require_rank(rank);
  IndexSet all(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    all[static_cast<std::size_t>(i)] = i + 1;
  return monomial(rank, std::move(all), 1);
}

void ExteriorElement::add_term(const IndexSet &subset, int64_t coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(subset, coeff);
  if (inserted)
    return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0)
    terms_.erase(it);
}

int64_t ExteriorElement::coefficient(const IndexSet &subset) const {
  auto it = terms_.find(subset);
  return it == terms_.end() ? 0 : it->second;
}

int ExteriorElement::homogeneous_degree() const {
  if (terms_.empty())
    return 0;
  const auto deg = static_cast<int>(terms_.begin()->first.size());
  for (const auto &[subset, coeff] : terms_)
    if (static_cast<int>(subset.size()) != deg)
      return -1;
  return deg;
}

ExteriorElement ExteriorElement::scaled(int64_t factor) const {
  ExteriorElement out(rank_);
  for (const auto &[subset, coeff] : terms_)
    out.add_term(subset, checked_mul(coeff, factor));
  return out;
}

std::string ExteriorElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[subset, coeff] : terms_) {
    if (!first)
      os << (coeff < 0 ? " - " : " + ");
    else if (coeff < 0)
      os << '-';
    first = false;
    const int64_t mag = coeff < 0 ? -coeff : coeff;
    if (subset.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << '*';
    os << 'e';
    for (std::size_t i = 0; i < subset.size(); ++i)
      os << (i ? "," : "") << subset[i];
  }
  return os.str();
}

ExteriorElement operator+(const ExteriorElement &a, const ExteriorElement &b) {
  require_same_rank(a, b);
  ExteriorElement out = a;
  for (const auto &[subset, coeff] : b.terms_)
    out.add_term(subset, coeff);
  return out;
}

ExteriorElement operator-(const ExteriorElement &a, const ExteriorElement &b) {
  return a + b.scaled(-1);
}

ExteriorElement wedge(const ExteriorElement &a, const ExteriorElement &b) {
  require_same_rank(a, b);
  std::vector<std::pair<IndexSet, int64_t>> products;
  IndexSet merged;
  for (const auto &[s, cs] : a.terms())
    for (const auto &[t, ct] : b.terms()) {
      const int sign = merge_sign(s, t, merged);
      if (sign == 0)
        continue;
      products.emplace_back(merged, checked_mul(sign, checked_mul(cs, ct)));
    }
  return {a.rank(), products};
}

ExteriorElement pullback(const IntegerMatrix &map, const ExteriorElement &x,
                         Execution exec) {
  if (x.rank() != map.rows())
    throw Error(Errc::RankMismatch,
                "pullback of a rank " + std::to_string(x.rank()) +
                    " element along a matrix with " +
                    std::to_string(map.rows()) + " rows");
  const int m = map.cols();
  std::vector<std::pair<IndexSet, int64_t>> out;
  for (const auto &[subset, coeff] : x.terms()) {
    const auto p = static_cast<int>(subset.size());
    if (p == 0) {
      out.emplace_back(IndexSet{}, coeff);
      continue;
    }
    if (p > m)
      continue;
    std::vector<int> rows(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
      rows[i] = subset[i] - 1;
    const auto targets = subsets_of_size(m, p);
    std::vector<std::vector<int>> cols;
    cols.reserve(targets.size());
    for (const auto &t : targets) {
      std::vector<int> c(t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        c[i] = t[i] - 1;
      cols.push_back(std::move(c));
    }
    const auto dets =
        exec == Execution::Parallel
            ? kernels::minor_determinants_parallel(map, rows, cols)
            : kernels::minor_determinants_serial(map, rows, cols);
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (dets[i] != 0)
        out.emplace_back(targets[i], checked_mul(dets[i], coeff));
  }
  return {m, out};
}

int64_t top_coefficient(const ExteriorElement &x) {
  return x.coefficient(ExteriorElement::top(x.rank()).terms().begin()->first);
}

std::vector<IndexSet> subsets_of_size(int m, int p) {
  std::vector<IndexSet> out;
  if (p < 0 || p > m)
    return out;
  IndexSet cur(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i)
    cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - p + i + 1)
      --i;
    if (i < 0)
      break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

} // namespace coincidence::exterior
