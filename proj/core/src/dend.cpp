#include "operadkit/dend.hpp"

#include <stdexcept>

#include "operadkit/errors.hpp"
#include "operadkit/structure.hpp"

namespace operadkit {

namespace {

void check_box_args(std::size_t m, std::size_t n, std::size_t i, std::size_t r) {
  if (m < 1 || n < 1 || i < 1 || i > m || r < 1 || r > m + n - 1) {
    throw std::out_of_range("box map arguments out of range: m=" + std::to_string(m) + " n=" +
                            std::to_string(n) + " i=" + std::to_string(i) + " r=" + std::to_string(r));
  }
}

void require_binary(std::initializer_list<const OperadElement*> xs) {
  for (const auto* x : xs) {
    if (x->arity != 2) throw PreconditionFailure("expected arity-2 elements");
  }
}

}  // namespace

FormalSum FormalSum::all(std::size_t ambient) {
  FormalSum s;
  s.ambient = ambient;
  for (std::size_t v = 1; v <= ambient; ++v) s.values.push_back(v);
  return s;
}

BoxIndex r0_map(std::size_t m, std::size_t n, std::size_t i, std::size_t r) {
  check_box_args(m, n, i, r);
  if (r < i) return {r, m};
  if (r <= i + n - 1) return {i, m};
  return {r - n + 1, m};
}

BoxOrSum ri_map(std::size_t m, std::size_t n, std::size_t i, std::size_t r) {
  check_box_args(m, n, i, r);
  if (r >= i && r <= i + n - 1) return BoxIndex{r - i + 1, n};
  return FormalSum::all(n);
}

DendOperad::DendOperad(OperadPtr base) : Operad(base->max_arity()), base_(std::move(base)) {}

OperadElement DendOperad::identity() const { return pack({base_->identity()}); }

std::string DendOperad::describe_basis(std::size_t arity, std::size_t index) const {
  const std::size_t d = base_->dimension(arity);
  return "[" + std::to_string(index / d + 1) + "]" + base_->describe_basis(arity, index % d);
}

OperadElement DendOperad::pack(const std::vector<OperadElement>& components) const {
  const std::size_t n = components.size();
  OperadElement f = zero(n);
  const std::size_t d = base_->dimension(n);
  std::vector<SparseVector::Entry> entries;
  for (std::size_t k = 0; k < n; ++k) {
    if (components[k].arity != n) throw DimensionMismatch("O^Dend component has the wrong arity");
    base_->validate(components[k]);
    for (const auto& [i, x] : components[k].coeffs) entries.emplace_back(k * d + i, x);
  }
  f.coeffs = SparseVector::from_entries(std::move(entries));
  return f;
}

std::vector<OperadElement> DendOperad::components(const OperadElement& f) const {
  validate(f);
  const std::size_t d = base_->dimension(f.arity);
  std::vector<std::vector<SparseVector::Entry>> parts(f.arity);
  for (const auto& [i, x] : f.coeffs) parts[i / d].emplace_back(i % d, x);
  std::vector<OperadElement> out;
  for (auto& p : parts) out.push_back({f.arity, SparseVector::from_entries(std::move(p))});
  return out;
}

OperadElement DendOperad::component(const OperadElement& f, std::size_t r) const {
  if (r < 1 || r > f.arity) throw DimensionMismatch("O^Dend component index out of range");
  return components(f)[r - 1];
}

OperadElement DendOperad::evaluate(const std::vector<OperadElement>& components, const BoxOrSum& at) const {
  if (const auto* box = std::get_if<BoxIndex>(&at)) return components.at(box->value - 1);
  const auto& sum = std::get<FormalSum>(at);
  OperadElement total = base_->zero(components.at(0).arity);
  for (std::size_t v : sum.values) total += components.at(v - 1);
  return total;
}

OperadElement DendOperad::compose_unchecked(const OperadElement& f, std::size_t slot,
                                            const OperadElement& g) const {
  const std::size_t m = f.arity;
  const std::size_t n = g.arity;
  const auto fs = components(f);
  const auto gs = components(g);
  const OperadElement g_total = evaluate(gs, FormalSum::all(n));
  std::vector<OperadElement> out;
  out.reserve(m + n - 1);
  for (std::size_t r = 1; r <= m + n - 1; ++r) {
    const OperadElement& left = fs[r0_map(m, n, slot, r).value - 1];
    const BoxOrSum inner = ri_map(m, n, slot, r);
    const OperadElement& right =
        std::holds_alternative<BoxIndex>(inner) ? gs[std::get<BoxIndex>(inner).value - 1] : g_total;
    out.push_back(base_->compose(left, slot, right));
  }
  return pack(out);
}

std::shared_ptr<const DendOperad> dend_operad(OperadPtr base) {
  return std::make_shared<const DendOperad>(std::move(base));
}

std::array<OperadElement, 3> dendriform_defects(const Operad& base, const OperadElement& prec,
                                                const OperadElement& succ) {
  require_binary({&prec, &succ});
  const OperadElement total = prec + succ;
  return {base.compose(prec, 1, prec) - base.compose(prec, 2, total),
          base.compose(prec, 1, succ) - base.compose(succ, 2, prec),
          base.compose(succ, 1, total) - base.compose(succ, 2, succ)};
}

bool is_dendriform_multiplication(const Operad& base, const OperadElement& prec, const OperadElement& succ) {
  for (const auto& d : dendriform_defects(base, prec, succ)) {
    if (!d.is_zero()) return false;
  }
  return true;
}

bool is_rota_baxter_element(const Operad& base, const OperadElement& pi, const OperadElement& R,
                            const Rational& weight) {
  if (pi.arity != 2 || R.arity != 1) throw PreconditionFailure("Rota-Baxter check needs arity(pi)=2, arity(R)=1");
  if (!is_multiplication(base, pi)) throw PreconditionFailure("pi is not a multiplication");
  const OperadElement lhs = base.compose(base.compose(pi, 2, R), 1, R);
  OperadElement inner = base.compose(pi, 1, R) + base.compose(pi, 2, R);
  if (sgn(weight) != 0) inner += weight * pi;
  return lhs == base.compose(R, 1, inner);
}

std::pair<OperadElement, OperadElement> split_by_rota_baxter(const Operad& base, const OperadElement& pi,
                                                             const OperadElement& R) {
  if (!is_rota_baxter_element(base, pi, R)) throw PreconditionFailure("R is not a Rota-Baxter element for pi");
  return {base.compose(pi, 2, R), base.compose(pi, 1, R)};
}

std::array<OperadElement, 7> tridendriform_defects(const Operad& base, const TriDendTriple& t) {
  const auto& [p, s, o] = t;
  require_binary({&p, &s, &o});
  const OperadElement total = p + s + o;
  return {base.compose(p, 1, p) - base.compose(p, 2, total),  //
          base.compose(p, 1, s) - base.compose(s, 2, p),      //
          base.compose(s, 1, total) - base.compose(s, 2, s),  //
          base.compose(p, 1, o) - base.compose(o, 2, p),      //
          base.compose(o, 1, p) - base.compose(o, 2, s),      //
          base.compose(o, 1, s) - base.compose(s, 2, o),      //
          base.compose(o, 1, o) - base.compose(o, 2, o)};
}

bool is_tridendriform_multiplication(const Operad& base, const TriDendTriple& t) {
  for (const auto& d : tridendriform_defects(base, t)) {
    if (!d.is_zero()) return false;
  }
  return true;
}

std::pair<OperadElement, OperadElement> tridend_to_dend(const Operad& base, const TriDendTriple& t) {
  if (!is_tridendriform_multiplication(base, t)) throw PreconditionFailure("not a tridendriform-multiplication");
  return {t.prec + t.odot, t.succ};
}

TriDendTriple tridend_from_rota_baxter(const Operad& base, const OperadElement& pi, const OperadElement& R,
                                       const Rational& weight) {
  if (!is_rota_baxter_element(base, pi, R, weight)) {
    throw PreconditionFailure("R is not a Rota-Baxter element of weight " + to_string(weight));
  }
  return {base.compose(pi, 2, R), base.compose(pi, 1, R), weight * pi};
}

OperadMorphism total_morphism(std::shared_ptr<const DendOperad> dend) {
  OperadPtr target = dend->base_ptr();
  const DendOperad* d = dend.get();
  return {dend, target,
          [d](const OperadElement& f) { return d->evaluate(d->components(f), FormalSum::all(f.arity)); },
          "total"};
}

}  // namespace operadkit
