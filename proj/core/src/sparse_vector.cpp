#include "operadkit/sparse_vector.hpp"

#include <algorithm>

namespace operadkit {

SparseVector SparseVector::unit(std::size_t index, const Rational& value) {
  SparseVector v;
  if (sgn(value) != 0) v.entries_.emplace_back(index, value);
  return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      if (!v.entries_.empty() && sgn(v.entries_.back().second) == 0) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && sgn(v.entries_.back().second) == 0) v.entries_.pop_back();
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) v.entries_.emplace_back(i, dense[i]);
  }
  return v;
}

Rational SparseVector::get(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

std::vector<Rational> SparseVector::to_dense(std::size_t length) const {
  std::vector<Rational> dense(length);
  for (const auto& [i, x] : entries_) {
    if (i < length) dense[i] = x;
  }
  return dense;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (sgn(factor) == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  axpy(Rational(1), other);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  axpy(Rational(-1), other);
  return *this;
}

SparseVector& SparseVector::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.second *= factor;
  }
  return *this;
}

}  // namespace operadkit
