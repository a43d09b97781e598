#include "operadkit/comp.hpp"

#include "operadkit/errors.hpp"
#include "operadkit/structure.hpp"

namespace operadkit {

CompOperad::CompOperad(OperadPtr base) : Operad(base->max_arity()), base_(std::move(base)) {}

OperadElement CompOperad::identity() const { return pack({base_->identity()}); }

std::string CompOperad::describe_basis(std::size_t arity, std::size_t index) const {
  const std::size_t d = base_->dimension(arity);
  return "c" + std::to_string(index / d + 1) + ":" + base_->describe_basis(arity, index % d);
}

OperadElement CompOperad::pack(const std::vector<OperadElement>& components) const {
  const std::size_t n = components.size();
  OperadElement f = zero(n);
  const std::size_t d = base_->dimension(n);
  std::vector<SparseVector::Entry> entries;
  for (std::size_t k = 0; k < n; ++k) {
    if (components[k].arity != n) throw DimensionMismatch("O^comp component has the wrong arity");
    base_->validate(components[k]);
    for (const auto& [i, x] : components[k].coeffs) entries.emplace_back(k * d + i, x);
  }
  f.coeffs = SparseVector::from_entries(std::move(entries));
  return f;
}

OperadElement CompOperad::component(const OperadElement& f, std::size_t k) const {
  validate(f);
  if (k < 1 || k > f.arity) throw DimensionMismatch("O^comp component index out of range");
  const std::size_t d = base_->dimension(f.arity);
  std::vector<SparseVector::Entry> entries;
  for (const auto& [i, x] : f.coeffs) {
    if (i / d == k - 1) entries.emplace_back(i % d, x);
  }
  return {f.arity, SparseVector::from_entries(std::move(entries))};
}

std::vector<OperadElement> CompOperad::components(const OperadElement& f) const {
  validate(f);
  const std::size_t d = base_->dimension(f.arity);
  std::vector<std::vector<SparseVector::Entry>> parts(f.arity);
  for (const auto& [i, x] : f.coeffs) parts[i / d].emplace_back(i % d, x);
  std::vector<OperadElement> out;
  for (auto& p : parts) out.push_back({f.arity, SparseVector::from_entries(std::move(p))});
  return out;
}

OperadElement CompOperad::compose_unchecked(const OperadElement& f, std::size_t slot,
                                            const OperadElement& g) const {
  const auto fs = components(f);
  const auto gs = components(g);
  const std::size_t arity = f.arity + g.arity - 1;
  std::vector<OperadElement> out(arity, base_->zero(arity));
  for (std::size_t r = 0; r < fs.size(); ++r) {
    if (fs[r].is_zero()) continue;
    for (std::size_t s = 0; s < gs.size(); ++s) {
      if (gs[s].is_zero()) continue;
      out[r + s] += base_->compose(fs[r], slot, gs[s]);
    }
  }
  return pack(out);
}

std::shared_ptr<const CompOperad> comp_operad(OperadPtr base) {
  return std::make_shared<const CompOperad>(std::move(base));
}

OperadElement compatibility_defect(const Operad& base, const OperadElement& pi1, const OperadElement& pi2) {
  if (pi1.arity != 2 || pi2.arity != 2) throw PreconditionFailure("compatibility needs arity-2 elements");
  return base.compose(pi1, 1, pi2) + base.compose(pi2, 1, pi1) - base.compose(pi1, 2, pi2) -
         base.compose(pi2, 2, pi1);
}

bool is_compatible_pair(const Operad& base, const OperadElement& pi1, const OperadElement& pi2) {
  if (pi1.arity != 2 || pi2.arity != 2) throw PreconditionFailure("compatibility needs arity-2 elements");
  return is_multiplication(base, pi1) && is_multiplication(base, pi2) &&
         gerstenhaber_bracket(base, pi1, pi2).is_zero();
}

CompEquivalence comp_multiplication_equivalence(const CompOperad& comp, const OperadElement& pi1,
                                                const OperadElement& pi2) {
  const Operad& base = comp.base();
  const OperadElement pi = comp.pack({pi1, pi2});
  const OperadElement assoc = associator(comp, pi);
  const OperadElement expected =
      comp.pack({associator(base, pi1), compatibility_defect(base, pi1, pi2), associator(base, pi2)});
  CompEquivalence eq;
  eq.multiplication_in_comp = assoc.is_zero();
  eq.compatible = is_compatible_pair(base, pi1, pi2);
  eq.expansion_matches = assoc == expected;
  return eq;
}

OperadElement comp_bracket_closed(const CompOperad& comp, const OperadElement& f, const OperadElement& g) {
  const Operad& base = comp.base();
  const auto fs = comp.components(f);
  const auto gs = comp.components(g);
  const std::size_t arity = f.arity + g.arity - 1;
  std::vector<OperadElement> out(arity, base.zero(arity));
  for (std::size_t r = 0; r < fs.size(); ++r) {
    for (std::size_t s = 0; s < gs.size(); ++s) out[r + s] += gerstenhaber_bracket(base, fs[r], gs[s]);
  }
  return comp.pack(out);
}

OperadElement comp_differential_closed(const CompOperad& comp, const OperadElement& pi1,
                                       const OperadElement& pi2, const OperadElement& f) {
  const Operad& base = comp.base();
  const auto fs = comp.components(f);
  const std::size_t n = f.arity;
  std::vector<OperadElement> out(n + 1, base.zero(n + 1));
  for (std::size_t k = 1; k <= n + 1; ++k) {
    if (k <= n) out[k - 1] += differential(base, pi1, fs[k - 1]);
    if (k >= 2) out[k - 1] += differential(base, pi2, fs[k - 2]);
  }
  return comp.pack(out);
}

OperadElement comp_cup_closed(const CompOperad& comp, const OperadElement& pi1, const OperadElement& pi2,
                              const OperadElement& f, const OperadElement& g) {
  const Operad& base = comp.base();
  const auto fs = comp.components(f);
  const auto gs = comp.components(g);
  const std::size_t arity = f.arity + g.arity;
  std::vector<OperadElement> out(arity, base.zero(arity));
  // r + s = k + 1 with pi1 lands in 0-based slot r + s; r + s = k with pi2 in slot r + s + 1.
  for (std::size_t r = 0; r < fs.size(); ++r) {
    for (std::size_t s = 0; s < gs.size(); ++s) {
      out[r + s] += cup_product(base, pi1, fs[r], gs[s]);
      out[r + s + 1] += cup_product(base, pi2, fs[r], gs[s]);
    }
  }
  return comp.pack(out);
}

OperadMorphism sum_morphism(std::shared_ptr<const CompOperad> comp) {
  OperadPtr target = comp->base_ptr();
  const CompOperad* c = comp.get();
  return {comp, target,
          [c](const OperadElement& f) {
            OperadElement sum = c->base().zero(f.arity);
            for (const auto& part : c->components(f)) sum += part;
            return sum;
          },
          "sum"};
}

}  // namespace operadkit
