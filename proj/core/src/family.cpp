#include "operadkit/family.hpp"

#include "operadkit/errors.hpp"
#include "operadkit/structure.hpp"

namespace operadkit {

namespace {

void check_family_shape(const std::vector<OperadElement>& xs, std::size_t count, std::size_t arity,
                        const char* what) {
  if (xs.size() != count) {
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(count) + " operations");
  }
  for (const auto& x : xs) {
    if (x.arity != arity) throw DimensionMismatch(std::string(what) + ": operation has the wrong arity");
  }
}

void check_dend_family_shape(const Semigroup& omega, const DendFamily& fam) {
  check_family_shape(fam.prec, omega.order(), 2, "dendriform family");
  check_family_shape(fam.succ, omega.order(), 2, "dendriform family");
}

// Moves a structure constant of a map on A to one on A (x) kOmega.
std::size_t tensor_basis(std::size_t a, std::size_t w, const Semigroup& omega) { return a * omega.order() + w; }

}  // namespace

DendFamily zero_dend_family(const EndOperad& end, const Semigroup& omega) {
  return {std::vector<OperadElement>(omega.order(), end.zero(2)),
          std::vector<OperadElement>(omega.order(), end.zero(2))};
}

CheckReport check_dendriform_family(const EndOperad& end, const Semigroup& omega, const DendFamily& fam) {
  check_dend_family_shape(omega, fam);
  CheckReport report;
  for (std::size_t a = 0; a < omega.order(); ++a) {
    for (std::size_t b = 0; b < omega.order(); ++b) {
      const std::size_t ab = omega.multiply(a, b);
      const auto& pa = fam.prec[a];
      const auto& pb = fam.prec[b];
      const auto& sa = fam.succ[a];
      const auto& sb = fam.succ[b];
      const OperadElement mixed = pb + sa;
      const std::string where = "alpha=" + omega.label(a) + " beta=" + omega.label(b);
      const OperadElement d1 = end.compose(pb, 1, pa) - end.compose(fam.prec[ab], 2, mixed);
      const OperadElement d2 = end.compose(pb, 1, sa) - end.compose(sa, 2, pb);
      const OperadElement d3 = end.compose(fam.succ[ab], 1, mixed) - end.compose(sa, 2, sb);
      report.expect(d1.is_zero(), "dend-family-1", [&] { return where + ", defect " + end.describe(d1); });
      report.expect(d2.is_zero(), "dend-family-2", [&] { return where + ", defect " + end.describe(d2); });
      report.expect(d3.is_zero(), "dend-family-3", [&] { return where + ", defect " + end.describe(d3); });
    }
  }
  return report;
}

bool is_dendriform_family(const EndOperad& end, const Semigroup& omega, const DendFamily& fam) {
  return check_dendriform_family(end, omega, fam).ok();
}

OperadElement encode_dend_family(const FamDendOperad& fam_op, const DendFamily& fam) {
  check_dend_family_shape(fam_op.semigroup(), fam);
  return fam_op.from_components(2, [&](std::size_t r, std::span<const std::size_t> reduced) {
    return r == 1 ? fam.prec.at(reduced[0]) : fam.succ.at(reduced[0]);
  });
}

DendFamily decode_dend_family(const FamDendOperad& fam_op, const OperadElement& pi) {
  if (pi.arity != 2) throw PreconditionFailure("a dendriform family is encoded in arity 2");
  DendFamily fam;
  for (std::size_t w = 0; w < fam_op.semigroup().order(); ++w) {
    const std::array<std::size_t, 1> t{w};
    fam.prec.push_back(fam_op.component(pi, 1, t));
    fam.succ.push_back(fam_op.component(pi, 2, t));
  }
  return fam;
}

std::shared_ptr<const EndOperad> tensor_end_operad(const EndOperad& end, const Semigroup& omega) {
  std::vector<std::string> labels;
  for (const auto& a : end.module().labels()) {
    for (const auto& w : omega.labels()) labels.push_back(a + "(x)" + w);
  }
  return operadkit::end_operad(FiniteModule(std::move(labels)), end.max_arity());
}

TensorDendriform family_to_dendriform(const EndOperad& end, const Semigroup& omega, const DendFamily& fam) {
  if (!is_dendriform_family(end, omega, fam)) throw PreconditionFailure("not a dendriform family");
  auto tensor = tensor_end_operad(end, omega);
  std::vector<TensorEntry> prec;
  std::vector<TensorEntry> succ;
  std::vector<std::size_t> in;
  for (std::size_t x = 0; x < omega.order(); ++x) {
    for (std::size_t y = 0; y < omega.order(); ++y) {
      const std::size_t xy = omega.multiply(x, y);
      for (const auto& [idx, c] : fam.prec[y].coeffs) {
        const std::size_t out = end.decode(2, idx, in);
        prec.push_back({{tensor_basis(in[0], x, omega), tensor_basis(in[1], y, omega)}, tensor_basis(out, xy, omega), c});
      }
      for (const auto& [idx, c] : fam.succ[x].coeffs) {
        const std::size_t out = end.decode(2, idx, in);
        succ.push_back({{tensor_basis(in[0], x, omega), tensor_basis(in[1], y, omega)}, tensor_basis(out, xy, omega), c});
      }
    }
  }
  TensorDendriform result{tensor, tensor->element(2, prec), tensor->element(2, succ)};
  return result;
}

bool is_rota_baxter_family(const EndOperad& end, const Semigroup& omega, const OperadElement& pi,
                           const OperatorFamily& R) {
  check_family_shape(R, omega.order(), 1, "Rota-Baxter family");
  if (pi.arity != 2 || !is_multiplication(end, pi)) throw PreconditionFailure("pi is not associative");
  for (std::size_t a = 0; a < omega.order(); ++a) {
    for (std::size_t b = 0; b < omega.order(); ++b) {
      const OperadElement lhs = end.compose(end.compose(pi, 2, R[b]), 1, R[a]);
      const OperadElement inner = end.compose(pi, 1, R[a]) + end.compose(pi, 2, R[b]);
      if (lhs != end.compose(R[omega.multiply(a, b)], 1, inner)) return false;
    }
  }
  return true;
}

DendFamily rb_family_split(const EndOperad& end, const Semigroup& omega, const OperadElement& pi,
                           const OperatorFamily& R) {
  if (!is_rota_baxter_family(end, omega, pi, R)) throw PreconditionFailure("not a Rota-Baxter family");
  DendFamily fam;
  for (const auto& r : R) {
    fam.prec.push_back(end.compose(pi, 2, r));
    fam.succ.push_back(end.compose(pi, 1, r));
  }
  return fam;
}

CheckReport check_relative_associative(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots) {
  const std::size_t q = omega.order();
  check_family_shape(dots.dot, q * q, 2, "relative products");
  CheckReport report;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      for (std::size_t c = 0; c < q; ++c) {
        const OperadElement lhs = end.compose(dots.at(omega, omega.multiply(a, b), c), 1, dots.at(omega, a, b));
        const OperadElement rhs = end.compose(dots.at(omega, a, omega.multiply(b, c)), 2, dots.at(omega, b, c));
        report.expect(lhs == rhs, "relative-associativity", [&] {
          return "alpha=" + omega.label(a) + " beta=" + omega.label(b) + " gamma=" + omega.label(c) +
                 ", defect " + end.describe(lhs - rhs);
        });
      }
    }
  }
  return report;
}

bool is_relative_associative(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots) {
  return check_relative_associative(end, omega, dots).ok();
}

OperadElement encode_relative(const OmegaOperad& omega_op, const RelativeProducts& dots) {
  const Semigroup& omega = omega_op.semigroup();
  check_family_shape(dots.dot, omega.order() * omega.order(), 2, "relative products");
  return omega_op.from_family(2, [&](std::span<const std::size_t> ab) { return dots.at(omega, ab[0], ab[1]); });
}

RelativeProducts family_to_relative(const EndOperad& end, const Semigroup& omega, const DendFamily& fam) {
  if (!is_dendriform_family(end, omega, fam)) throw PreconditionFailure("not a dendriform family");
  RelativeProducts dots;
  for (std::size_t a = 0; a < omega.order(); ++a) {
    for (std::size_t b = 0; b < omega.order(); ++b) dots.dot.push_back(fam.prec[b] + fam.succ[a]);
  }
  return dots;
}

OperadElement relative_to_tensor(const EndOperad& end, const Semigroup& omega, const RelativeProducts& dots,
                                 const EndOperad& tensor_end) {
  const std::size_t q = omega.order();
  check_family_shape(dots.dot, q * q, 2, "relative products");
  if (tensor_end.module().dimension() != end.module().dimension() * q) {
    throw DimensionMismatch("tensor module has the wrong dimension");
  }
  std::vector<TensorEntry> entries;
  std::vector<std::size_t> in;
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      for (const auto& [idx, c] : dots.at(omega, x, y).coeffs) {
        const std::size_t out = end.decode(2, idx, in);
        entries.push_back({{tensor_basis(in[0], x, omega), tensor_basis(in[1], y, omega)},
                           tensor_basis(out, omega.multiply(x, y), omega), c});
      }
    }
  }
  return tensor_end.element(2, entries);
}

}  // namespace operadkit
