#include "operadkit/semigroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace operadkit {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw std::invalid_argument("a semigroup needs at least one element");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    throw std::invalid_argument("semigroup labels must be distinct");
  }
}

}  // namespace

Semigroup::Semigroup(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& table)
    : labels_(std::move(labels)) {
  check_labels(labels_);
  const std::size_t n = labels_.size();
  if (table.size() != n) throw std::invalid_argument("semigroup table must have one row per element");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw std::invalid_argument("semigroup table row " + labels_[a] + " has the wrong length");
    }
    std::vector<std::size_t> row;
    for (const auto& name : table[a]) {
      auto it = std::find(labels_.begin(), labels_.end(), name);
      if (it == labels_.end()) throw std::invalid_argument("semigroup table names unknown element '" + name + "'");
      row.push_back(static_cast<std::size_t>(it - labels_.begin()));
    }
    table_.push_back(std::move(row));
  }
}

Semigroup::Semigroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  check_labels(labels_);
  const std::size_t n = labels_.size();
  if (table_.size() != n) throw std::invalid_argument("semigroup table must have one row per element");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("semigroup table row has the wrong length");
    for (std::size_t c : row) {
      if (c >= n) throw std::invalid_argument("semigroup table entry out of range");
    }
  }
}

Semigroup Semigroup::singleton() { return Semigroup({"e"}, std::vector<std::vector<std::size_t>>{{0}}); }

Semigroup Semigroup::left_zero(std::size_t order) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t a = 0; a < order; ++a) {
    labels.push_back("l" + std::to_string(a));
    table.emplace_back(order, a);
  }
  return Semigroup(std::move(labels), std::move(table));
}

Semigroup Semigroup::min_semilattice() {
  return Semigroup({"0", "1"}, std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}});
}

Semigroup Semigroup::cyclic_group(std::size_t order) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(order);
  for (std::size_t a = 0; a < order; ++a) {
    labels.push_back("z" + std::to_string(a));
    for (std::size_t b = 0; b < order; ++b) table[a].push_back((a + b) % order);
  }
  return Semigroup(std::move(labels), std::move(table));
}

std::size_t Semigroup::product(std::span<const std::size_t> xs) const {
  if (xs.empty()) throw std::invalid_argument("empty product in a semigroup without unit");
  std::size_t acc = xs[0];
  for (std::size_t p = 1; p < xs.size(); ++p) acc = table_[acc][xs[p]];
  return acc;
}

bool Semigroup::is_associative() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) return false;
      }
    }
  }
  return true;
}

std::string Semigroup::describe_tuple(std::span<const std::size_t> xs) const {
  std::string s = "(";
  for (std::size_t p = 0; p < xs.size(); ++p) s += (p ? "," : "") + labels_.at(xs[p]);
  return s + ")";
}

bool validate_semigroup(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& table) {
  return Semigroup(labels, table).is_associative();
}

}  // namespace operadkit
