#include "operadkit/omega.hpp"

#include <map>
#include <stdexcept>

#include "operadkit/errors.hpp"

namespace operadkit {

std::size_t tuple_index(std::span<const std::size_t> xs, std::size_t base) {
  std::size_t idx = 0;
  for (std::size_t x : xs) idx = idx * base + x;
  return idx;
}

void tuple_decode(std::size_t index, std::size_t length, std::size_t base, std::vector<std::size_t>& out) {
  out.resize(length);
  for (std::size_t p = length; p-- > 0;) {
    out[p] = index % base;
    index /= base;
  }
}

std::size_t int_power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t e = 0; e < exponent; ++e) r *= base;
  return r;
}

OmegaOperad::OmegaOperad(OperadPtr base, Semigroup omega)
    : Operad(base->max_arity()), base_(std::move(base)), omega_(std::move(omega)) {
  if (!omega_.is_associative()) throw PreconditionFailure("Omega is not associative");
}

std::size_t OmegaOperad::dimension(std::size_t arity) const {
  return int_power(omega_.order(), arity) * base_->dimension(arity);
}

OperadElement OmegaOperad::identity() const {
  const OperadElement unit = base_->identity();
  return from_family(1, [&](std::span<const std::size_t>) { return unit; });
}

std::string OmegaOperad::describe_basis(std::size_t arity, std::size_t index) const {
  const std::size_t d = base_->dimension(arity);
  std::vector<std::size_t> alpha;
  tuple_decode(index / d, arity, omega_.order(), alpha);
  return omega_.describe_tuple(alpha) + base_->describe_basis(arity, index % d);
}

OperadElement OmegaOperad::from_family(
    std::size_t arity, const std::function<OperadElement(std::span<const std::size_t>)>& family) const {
  OperadElement f = zero(arity);
  const std::size_t d = base_->dimension(arity);
  const std::size_t blocks = int_power(omega_.order(), arity);
  std::vector<std::size_t> alpha;
  std::vector<SparseVector::Entry> entries;
  for (std::size_t t = 0; t < blocks; ++t) {
    tuple_decode(t, arity, omega_.order(), alpha);
    const OperadElement part = family(alpha);
    if (part.arity != arity) throw DimensionMismatch("family member has the wrong arity");
    base_->validate(part);
    for (const auto& [i, x] : part.coeffs) entries.emplace_back(t * d + i, x);
  }
  f.coeffs = SparseVector::from_entries(std::move(entries));
  return f;
}

OperadElement OmegaOperad::block(const OperadElement& f, std::span<const std::size_t> alpha) const {
  validate(f);
  if (alpha.size() != f.arity) throw DimensionMismatch("tuple length must equal the arity");
  const std::size_t d = base_->dimension(f.arity);
  const std::size_t t = tuple_index(alpha, omega_.order());
  std::vector<SparseVector::Entry> entries;
  for (const auto& [i, x] : f.coeffs) {
    if (i / d == t) entries.emplace_back(i % d, x);
  }
  return {f.arity, SparseVector::from_entries(std::move(entries))};
}

namespace {

struct Block {
  std::size_t tuple;
  OperadElement element;
};

// Coefficients are sorted by index, so each tuple's block is a contiguous run.
std::vector<Block> split_blocks(const OperadElement& f, std::size_t base_dim) {
  std::vector<Block> blocks;
  for (const auto& [i, x] : f.coeffs) {
    const std::size_t t = i / base_dim;
    if (blocks.empty() || blocks.back().tuple != t) blocks.push_back({t, {f.arity, {}}});
    blocks.back().element.coeffs.axpy(1, SparseVector::unit(i % base_dim, x));
  }
  return blocks;
}

}  // namespace

OperadElement OmegaOperad::compose_unchecked(const OperadElement& f, std::size_t slot,
                                             const OperadElement& g) const {
  const std::size_t m = f.arity;
  const std::size_t n = g.arity;
  const std::size_t q = omega_.order();
  const std::size_t arity = m + n - 1;
  const std::size_t out_dim = base_->dimension(arity);
  const auto f_blocks = split_blocks(f, base_->dimension(m));
  const auto g_blocks = split_blocks(g, base_->dimension(n));

  // Output tuple = beta_1..beta_{slot-1}, gamma, beta_{slot+1}..beta_m, whenever the
  // product of gamma equals beta_slot.
  std::vector<std::size_t> beta;
  std::vector<std::size_t> gamma;
  std::vector<std::size_t> g_products;
  for (const auto& gb : g_blocks) {
    tuple_decode(gb.tuple, n, q, gamma);
    g_products.push_back(omega_.product(gamma));
  }
  const std::size_t tail_span = int_power(q, m - slot);
  std::vector<SparseVector::Entry> entries;
  for (const auto& fb : f_blocks) {
    tuple_decode(fb.tuple, m, q, beta);
    const std::size_t head = fb.tuple / (tail_span * q);
    const std::size_t tail = fb.tuple % tail_span;
    for (std::size_t k = 0; k < g_blocks.size(); ++k) {
      if (g_products[k] != beta[slot - 1]) continue;
      const std::size_t t = (head * int_power(q, n) + g_blocks[k].tuple) * tail_span + tail;
      const OperadElement c = base_->compose(fb.element, slot, g_blocks[k].element);
      for (const auto& [i, x] : c.coeffs) entries.emplace_back(t * out_dim + i, x);
    }
  }
  return {arity, SparseVector::from_entries(std::move(entries))};
}

std::shared_ptr<const OmegaOperad> omega_operad(OperadPtr base, Semigroup omega) {
  return std::make_shared<const OmegaOperad>(std::move(base), std::move(omega));
}

FamDendOperad::FamDendOperad(OperadPtr base, Semigroup omega)
    : Operad(base->max_arity()),
      omega_(operadkit::omega_operad(std::move(base), std::move(omega))),
      ambient_(dend_operad(omega_)) {}

std::size_t FamDendOperad::dimension(std::size_t arity) const {
  return arity * int_power(semigroup().order(), arity - 1) * base().dimension(arity);
}

OperadElement FamDendOperad::identity() const {
  const OperadElement unit = base().identity();
  return from_components(1, [&](std::size_t, std::span<const std::size_t>) { return unit; });
}

std::string FamDendOperad::describe_basis(std::size_t arity, std::size_t index) const {
  const std::size_t d = base().dimension(arity);
  const std::size_t per_component = int_power(semigroup().order(), arity - 1);
  const std::size_t r = index / d / per_component + 1;
  std::vector<std::size_t> reduced;
  tuple_decode((index / d) % per_component, arity - 1, semigroup().order(), reduced);
  std::string tuple = "(";
  for (std::size_t p = 0, k = 0; p < arity; ++p) {
    if (p) tuple += ",";
    tuple += (p + 1 == r) ? std::string("-") : semigroup().label(reduced[k++]);
  }
  return "[" + std::to_string(r) + "]" + tuple + ")" + base().describe_basis(arity, index % d);
}

OperadElement FamDendOperad::from_components(std::size_t arity, const ComponentFamily& family) const {
  OperadElement f = zero(arity);
  const std::size_t d = base().dimension(arity);
  const std::size_t q = semigroup().order();
  const std::size_t per_component = int_power(q, arity - 1);
  std::vector<std::size_t> reduced;
  std::vector<SparseVector::Entry> entries;
  for (std::size_t r = 1; r <= arity; ++r) {
    for (std::size_t t = 0; t < per_component; ++t) {
      tuple_decode(t, arity - 1, q, reduced);
      const OperadElement part = family(r, reduced);
      if (part.arity != arity) throw DimensionMismatch("component has the wrong arity");
      base().validate(part);
      for (const auto& [i, x] : part.coeffs) entries.emplace_back(((r - 1) * per_component + t) * d + i, x);
    }
  }
  f.coeffs = SparseVector::from_entries(std::move(entries));
  return f;
}

OperadElement FamDendOperad::component(const OperadElement& f, std::size_t r,
                                       std::span<const std::size_t> reduced) const {
  validate(f);
  if (r < 1 || r > f.arity || reduced.size() + 1 != f.arity) throw DimensionMismatch("bad component selector");
  const std::size_t d = base().dimension(f.arity);
  const std::size_t block = (r - 1) * int_power(semigroup().order(), f.arity - 1) +
                            tuple_index(reduced, semigroup().order());
  std::vector<SparseVector::Entry> entries;
  for (const auto& [i, x] : f.coeffs) {
    if (i / d == block) entries.emplace_back(i % d, x);
  }
  return {f.arity, SparseVector::from_entries(std::move(entries))};
}

OperadElement FamDendOperad::embed(const OperadElement& f) const {
  validate(f);
  const std::size_t n = f.arity;
  const std::size_t d = base().dimension(n);
  const std::size_t q = semigroup().order();
  const std::size_t per_component = int_power(q, n - 1);
  const std::size_t omega_dim = omega_->dimension(n);
  std::vector<std::size_t> reduced;
  std::vector<std::size_t> alpha(n);
  std::vector<SparseVector::Entry> entries;
  for (const auto& [idx, x] : f.coeffs) {
    const std::size_t b = idx % d;
    const std::size_t block = idx / d;
    const std::size_t r = block / per_component + 1;
    tuple_decode(block % per_component, n - 1, q, reduced);
    for (std::size_t w = 0; w < q; ++w) {
      for (std::size_t p = 0, k = 0; p < n; ++p) alpha[p] = (p + 1 == r) ? w : reduced[k++];
      entries.emplace_back((r - 1) * omega_dim + tuple_index(alpha, q) * d + b, x);
    }
  }
  return {n, SparseVector::from_entries(std::move(entries))};
}

OperadElement FamDendOperad::project(const OperadElement& x) const {
  ambient_->validate(x);
  const std::size_t n = x.arity;
  const std::size_t d = base().dimension(n);
  const std::size_t q = semigroup().order();
  const std::size_t per_component = int_power(q, n - 1);
  const std::size_t omega_dim = omega_->dimension(n);
  // (famdend index) -> value seen for each choice of the omitted slot.
  std::map<std::size_t, std::vector<Rational>> seen;
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> reduced(n - 1);
  for (const auto& [idx, v] : x.coeffs) {
    const std::size_t r = idx / omega_dim + 1;
    const std::size_t within = idx % omega_dim;
    tuple_decode(within / d, n, q, alpha);
    for (std::size_t p = 0, k = 0; p < n; ++p) {
      if (p + 1 != r) reduced[k++] = alpha[p];
    }
    const std::size_t key = ((r - 1) * per_component + tuple_index(reduced, q)) * d + within % d;
    auto& slots = seen.try_emplace(key, q, Rational(0)).first->second;
    slots[alpha[r - 1]] = v;
  }
  std::vector<SparseVector::Entry> entries;
  for (auto& [key, slots] : seen) {
    for (std::size_t w = 1; w < q; ++w) {
      if (slots[w] != slots[0]) {
        throw std::logic_error(name() + ": element depends on an omitted slot at " + describe_basis(n, key));
      }
    }
    entries.emplace_back(key, slots[0]);
  }
  return {n, SparseVector::from_entries(std::move(entries))};
}

OperadElement FamDendOperad::compose_unchecked(const OperadElement& f, std::size_t slot,
                                               const OperadElement& g) const {
  return project(ambient_->compose(embed(f), slot, embed(g)));
}

std::shared_ptr<const FamDendOperad> fam_dend_operad(OperadPtr base, Semigroup omega) {
  return std::make_shared<const FamDendOperad>(std::move(base), std::move(omega));
}

}  // namespace operadkit
