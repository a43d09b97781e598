#include "operadkit/end_operad.hpp"

#include <limits>
#include <set>

#include "operadkit/errors.hpp"

namespace operadkit {

FiniteModule::FiniteModule(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("a module needs at least one basis element");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw std::invalid_argument("basis labels must be distinct");
}

FiniteModule FiniteModule::standard(std::size_t dimension) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dimension; ++i) labels.push_back("e" + std::to_string(i));
  return FiniteModule(std::move(labels));
}

EndOperad::EndOperad(FiniteModule module, std::size_t max_arity)
    : Operad(max_arity), module_(std::move(module)) {
  if (max_arity < 2) throw std::invalid_argument("End_A needs an arity window of at least 2");
  const std::size_t d = module_.dimension();
  powers_.push_back(1);
  for (std::size_t e = 1; e <= max_arity + 1; ++e) {
    if (powers_.back() > std::numeric_limits<std::size_t>::max() / d) {
      throw ArityOverflow("End_A basis size overflows at arity " + std::to_string(e));
    }
    powers_.push_back(powers_.back() * d);
  }
}

std::size_t EndOperad::dimension(std::size_t arity) const { return power(arity + 1); }

OperadElement EndOperad::identity() const {
  std::vector<SparseVector::Entry> entries;
  for (std::size_t i = 0; i < module_.dimension(); ++i) entries.emplace_back(i * module_.dimension() + i, 1);
  return {1, SparseVector::from_entries(std::move(entries))};
}

std::size_t EndOperad::index_of(std::span<const std::size_t> inputs, std::size_t output) const {
  const std::size_t d = module_.dimension();
  if (output >= d) throw DimensionMismatch("output index out of range");
  std::size_t idx = output;
  for (std::size_t x : inputs) {
    if (x >= d) throw DimensionMismatch("input index out of range");
    idx = idx * d + x;
  }
  return idx;
}

std::size_t EndOperad::decode(std::size_t arity, std::size_t index, std::vector<std::size_t>& inputs) const {
  const std::size_t d = module_.dimension();
  inputs.resize(arity);
  for (std::size_t p = arity; p-- > 0;) {
    inputs[p] = index % d;
    index /= d;
  }
  return index;
}

std::string EndOperad::describe_basis(std::size_t arity, std::size_t index) const {
  std::vector<std::size_t> in;
  const std::size_t out = decode(arity, index, in);
  std::string s = "[";
  for (std::size_t p = 0; p < in.size(); ++p) s += (p ? "," : "") + module_.label(in[p]);
  return s + "->" + module_.label(out) + "]";
}

OperadElement EndOperad::element(std::size_t arity, const std::vector<TensorEntry>& entries) const {
  OperadElement f = zero(arity);
  std::vector<SparseVector::Entry> coords;
  coords.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.inputs.size() != arity) throw DimensionMismatch("structure constant has the wrong number of inputs");
    coords.emplace_back(index_of(e.inputs, e.output), e.value);
  }
  f.coeffs = SparseVector::from_entries(std::move(coords));
  return f;
}

SparseVector EndOperad::apply(const OperadElement& f, std::span<const SparseVector> args) const {
  validate(f);
  if (args.size() != f.arity) throw DimensionMismatch("wrong number of arguments");
  std::vector<SparseVector::Entry> out;
  std::vector<std::size_t> in;
  for (const auto& [idx, c] : f.coeffs) {
    const std::size_t k = decode(f.arity, idx, in);
    Rational value = c;
    for (std::size_t p = 0; p < in.size() && sgn(value) != 0; ++p) value *= args[p].get(in[p]);
    if (sgn(value) != 0) out.emplace_back(k, value);
  }
  return SparseVector::from_entries(std::move(out));
}

OperadElement EndOperad::compose_unchecked(const OperadElement& f, std::size_t slot,
                                           const OperadElement& g) const {
  const std::size_t m = f.arity;
  const std::size_t n = g.arity;
  const std::size_t d = module_.dimension();
  // Group g's structure constants by output: the slot input of f must match it.
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> g_by_output(d);
  for (const auto& [idx, c] : g.coeffs) {
    g_by_output[idx / power(n)].emplace_back(idx % power(n), &c);
  }
  // With f's inputs (x_1..x_m) = before | x_slot | after, the composite index is
  // out * d^{m+n-1} + before * d^{n+m-slot} + g_inputs * d^{m-slot} + after.
  const std::size_t after_span = power(m - slot);
  std::vector<SparseVector::Entry> out;
  for (const auto& [idx, a] : f.coeffs) {
    const std::size_t out_k = idx / power(m);
    const std::size_t inputs = idx % power(m);
    const std::size_t after = inputs % after_span;
    const std::size_t x = (inputs / after_span) % d;
    const std::size_t before = inputs / (after_span * d);
    const std::size_t head = (out_k * power(slot - 1) + before) * power(n);
    for (const auto& [g_inputs, b] : g_by_output[x]) {
      out.emplace_back((head + g_inputs) * after_span + after, a * *b);
    }
  }
  return {m + n - 1, SparseVector::from_entries(std::move(out))};
}

std::shared_ptr<const EndOperad> end_operad(FiniteModule module, std::size_t max_arity) {
  return std::make_shared<const EndOperad>(std::move(module), max_arity);
}

}  // namespace operadkit
