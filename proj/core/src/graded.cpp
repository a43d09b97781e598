#include "operadkit/graded.hpp"

#include <set>
#include <stdexcept>

#include "operadkit/errors.hpp"

namespace operadkit {

GradedModule::GradedModule(std::vector<std::string> labels, std::vector<int> degrees)
    : labels_(std::move(labels)), degrees_(std::move(degrees)) {
  if (labels_.empty()) throw std::invalid_argument("a graded module needs at least one basis element");
  if (labels_.size() != degrees_.size()) throw std::invalid_argument("one degree per basis element is required");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw std::invalid_argument("basis labels must be distinct");
  }
  for (int d : degrees_) {
    if (d < kMinDegree || d > kMaxDegree) {
      throw std::invalid_argument("degree " + std::to_string(d) + " outside the supported range");
    }
  }
}

GradedModule GradedModule::concentrated(std::vector<std::string> labels) {
  std::vector<int> degrees(labels.size(), 0);
  return GradedModule(std::move(labels), std::move(degrees));
}

bool GradedModule::is_concentrated_in_degree_zero() const {
  for (int d : degrees_) {
    if (d != 0) return false;
  }
  return true;
}

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t dimension) : arity_(arity), dimension_(dimension) {
  if (arity < 1 || dimension < 1) throw std::invalid_argument("multilinear map needs arity and dimension >= 1");
  std::size_t size = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    if (size > (std::size_t{1} << 24) / dimension) throw ArityOverflow("multilinear map table too large");
    size *= dimension;
  }
  table_.resize(size);
}

std::size_t MultilinearMap::tuple(std::span<const std::size_t> inputs) const {
  if (inputs.size() != arity_) throw DimensionMismatch("wrong number of inputs");
  std::size_t t = 0;
  for (std::size_t x : inputs) {
    if (x >= dimension_) throw DimensionMismatch("input index out of range");
    t = t * dimension_ + x;
  }
  return t;
}

void MultilinearMap::decode(std::size_t t, std::vector<std::size_t>& inputs) const {
  inputs.resize(arity_);
  for (std::size_t p = arity_; p-- > 0;) {
    inputs[p] = t % dimension_;
    t /= dimension_;
  }
}

void MultilinearMap::add(std::span<const std::size_t> inputs, std::size_t output, const Rational& value) {
  if (output >= dimension_) throw DimensionMismatch("output index out of range");
  table_[tuple(inputs)].axpy(value, SparseVector::unit(output));
}

SparseVector MultilinearMap::apply(std::span<const SparseVector> args) const {
  if (args.size() != arity_) throw DimensionMismatch("wrong number of arguments");
  SparseVector out;
  std::vector<std::size_t> in(arity_);
  // Expand only over the supports of the arguments.
  std::vector<std::size_t> pos(arity_, 0);
  for (const auto& a : args) {
    if (a.empty()) return out;
  }
  while (true) {
    Rational coeff = 1;
    for (std::size_t p = 0; p < arity_; ++p) {
      const auto& [idx, x] = args[p].entries()[pos[p]];
      in[p] = idx;
      coeff *= x;
    }
    out.axpy(coeff, on_basis(in));
    std::size_t p = arity_;
    while (p > 0) {
      --p;
      if (++pos[p] < args[p].nonzeros()) break;
      pos[p] = 0;
      if (p == 0) return out;
    }
  }
}

bool MultilinearMap::is_zero() const {
  for (const auto& v : table_) {
    if (!v.empty()) return false;
  }
  return true;
}

void MultilinearMap::require_degree(const GradedModule& module, int degree, const std::string& what) const {
  if (module.dimension() != dimension_) throw DimensionMismatch(what + ": module dimension mismatch");
  for_each([&](std::span<const std::size_t> in, const SparseVector& image) {
    int src = 0;
    for (std::size_t x : in) src += module.degree(x);
    for (const auto& [k, c] : image) {
      if (module.degree(k) - src != degree) {
        std::string inputs;
        for (std::size_t x : in) inputs += (inputs.empty() ? "" : ",") + module.label(x);
        throw DegreeError(what + " must have degree " + std::to_string(degree) + " but sends (" + inputs +
                          ") to " + module.label(k) + " (degree shift " + std::to_string(module.degree(k) - src) +
                          ")");
      }
    }
  });
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& other) {
  if (other.arity_ != arity_ || other.dimension_ != dimension_) throw DimensionMismatch("adding unlike maps");
  for (std::size_t t = 0; t < table_.size(); ++t) table_[t] += other.table_[t];
  return *this;
}

}  // namespace operadkit
