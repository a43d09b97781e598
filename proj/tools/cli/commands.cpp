#include "commands.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "operadkit/axioms.hpp"
#include "operadkit/cohomology.hpp"
#include "operadkit/comp.hpp"
#include "operadkit/dend.hpp"
#include "operadkit/end_operad.hpp"
#include "operadkit/errors.hpp"
#include "operadkit/family.hpp"
#include "operadkit/homotopy.hpp"
#include "operadkit/morphism.hpp"
#include "operadkit/omega.hpp"
#include "operadkit/structure.hpp"

namespace operadkit::cli {

using nlohmann::json;

namespace {

std::string witness(const Operad& op, const OperadElement& f, std::size_t max_terms = 4) {
  if (f.is_zero()) return "0";
  std::string out;
  std::size_t k = 0;
  for (const auto& [i, x] : f.coeffs) {
    if (k == max_terms) {
      out += " + ... (" + std::to_string(f.coeffs.nonzeros()) + " terms)";
      break;
    }
    out += (k ? " + " : "") + ("(" + to_string(x) + ")*" + op.describe_basis(f.arity, i));
    ++k;
  }
  return out;
}

class Job {
 public:
  Job(const Options& options, const InputSet& inputs) : opt_(options), in_(inputs) {
    report_.command = options.command;
    report_.nmax = options.nmax;
    report_.samples = options.samples;
    report_.seed = options.seed;
    for (const auto& a : inputs.algebras) report_.inputs.push_back(a.source);
    for (const auto& s : inputs.semigroups) report_.inputs.push_back(s.source);
  }

  JobReport run();

 private:
  // ---- inputs -------------------------------------------------------------
  const AlgebraSpec& algebra() const {
    if (in_.algebras.size() != 1) {
      throw UsageError(opt_.command + " needs exactly one algebra input, got " + std::to_string(in_.algebras.size()));
    }
    const AlgebraSpec& a = in_.algebras.front();
    if (a.dimension() > opt_.max_dim) {
      throw WorkLimitExceeded("algebra dimension " + std::to_string(a.dimension()) + " exceeds the cap " +
                              std::to_string(opt_.max_dim) + " (raise --max-dim)");
    }
    return a;
  }

  bool has_semigroup() const { return !in_.semigroups.empty(); }

  Semigroup semigroup() const {
    if (in_.semigroups.size() > 1) throw UsageError("at most one semigroup input is allowed");
    if (in_.semigroups.empty()) return Semigroup::singleton();
    Semigroup s = in_.semigroups.front().build();
    if (s.order() > opt_.max_omega) {
      throw WorkLimitExceeded("semigroup order " + std::to_string(s.order()) + " exceeds the cap " +
                              std::to_string(opt_.max_omega) + " (raise --max-omega)");
    }
    return s;
  }

  std::shared_ptr<const EndOperad> end(std::size_t window) const {
    return end_operad(FiniteModule(algebra().labels), std::max<std::size_t>(window, 2));
  }

  static OperadElement element(const EndOperad& e, const OperationSpec& op) {
    std::vector<TensorEntry> entries;
    for (const auto& x : op.entries) entries.push_back({x.inputs, x.output, x.value});
    return e.element(op.arity, entries);
  }

  const OperationSpec* plain(const std::string& name, std::size_t arity) const {
    const OperationSpec* found = nullptr;
    for (const auto* op : algebra().find(name)) {
      if (!op->omega.empty() || op->component) continue;
      if (found) throw UsageError("operation '" + name + "' is given twice in " + algebra().source);
      if (op->arity != arity) {
        throw UsageError("operation '" + name + "' must have arity " + std::to_string(arity) + " in " + algebra().source);
      }
      found = op;
    }
    return found;
  }

  OperadElement require(const EndOperad& e, const std::string& name, std::size_t arity) const {
    const OperationSpec* op = plain(name, arity);
    if (!op) {
      throw UsageError(opt_.command + " needs operation '" + name + "' of arity " + std::to_string(arity) + " in " +
                       algebra().source);
    }
    return element(e, *op);
  }

  std::size_t omega_index(const Semigroup& omega, const std::string& label, const std::string& op_name) const {
    const auto& labels = omega.labels();
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw UsageError("operation '" + op_name + "' names unknown semigroup element '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }

  // Members indexed by omega tuples of the given length; absent members are zero.
  std::map<std::vector<std::size_t>, const OperationSpec*> indexed(const std::string& name, std::size_t arity,
                                                                   std::size_t tuple_length, const Semigroup& omega,
                                                                   std::optional<std::size_t> component = {}) const {
    std::map<std::vector<std::size_t>, const OperationSpec*> out;
    for (const auto* op : algebra().find(name)) {
      if (op->arity != arity || op->component != component) continue;
      std::vector<std::size_t> t;
      if (op->omega.empty() && omega.order() == 1) {
        t.assign(tuple_length, 0);
      } else {
        if (op->omega.size() != tuple_length) {
          throw UsageError("operation '" + name + "' needs " + std::to_string(tuple_length) + " semigroup labels");
        }
        for (const auto& l : op->omega) t.push_back(omega_index(omega, l, name));
      }
      if (!out.emplace(t, op).second) throw UsageError("operation '" + name + "' is given twice for one index");
    }
    return out;
  }

  std::vector<OperadElement> family(const EndOperad& e, const Semigroup& omega, const std::string& name,
                                    std::size_t arity) const {
    const auto members = indexed(name, arity, 1, omega);
    if (members.empty()) throw UsageError(opt_.command + " needs a family '" + name + "' indexed by the semigroup");
    std::vector<OperadElement> out;
    for (std::size_t w = 0; w < omega.order(); ++w) {
      const auto it = members.find({w});
      out.push_back(it == members.end() ? e.zero(arity) : element(e, *it->second));
    }
    return out;
  }

  GradedModule graded_module() const {
    const AlgebraSpec& a = algebra();
    if (a.grading.empty()) return GradedModule::concentrated(a.labels);
    try {
      return GradedModule(a.labels, a.grading);
    } catch (const std::invalid_argument& e) {
      throw UsageError(a.source + ": grading: " + e.what());
    }
  }

  static MultilinearMap multilinear(const OperationSpec& op, std::size_t dim) {
    MultilinearMap m(op.arity, dim);
    for (const auto& x : op.entries) m.add(x.inputs, x.output, x.value);
    return m;
  }

  std::size_t max_arity_of(const std::string& name) const {
    std::size_t k = 0;
    for (const auto* op : algebra().find(name)) k = std::max(k, op->arity);
    return k;
  }

  std::size_t homotopy_cap(const std::string& name) const {
    return std::max({max_arity_of(name), (opt_.nmax + 2) / 2, std::size_t{1}});
  }

  // ---- work estimates -------------------------------------------------------
  void ensure_work(double estimate, const std::string& what) const {
    if (estimate > opt_.max_work) {
      std::ostringstream os;
      os << what << ": estimated cost " << estimate << " exceeds the work limit " << opt_.max_work
         << " (lower --nmax or raise --max-work)";
      throw WorkLimitExceeded(os.str());
    }
  }

  double axiom_cost(const std::function<double(std::size_t)>& dim, std::size_t cap) const {
    const double limit = 100000.0;
    double cost = 0;
    for (std::size_t a = 1; a <= cap; ++a) {
      for (std::size_t b = 1; a + b - 1 <= cap; ++b) {
        for (std::size_t c = 1; a + b + c - 2 <= cap; ++c) {
          cost += std::min(dim(a) * dim(b) * dim(c), limit) * static_cast<double>(a + b) * dim(a + b + c - 2);
        }
      }
    }
    return cost;
  }

  void ensure_cohomology_work(const Operad& op, std::size_t nmax, const std::string& what) const {
    double cost = 0;
    for (std::size_t n = 1; n <= nmax; ++n) {
      const double a = static_cast<double>(op.dimension(n));
      const double b = static_cast<double>(op.dimension(n + 1));
      cost += a * b * (1 + std::min(a, b));
    }
    ensure_work(cost, what);
  }

  SamplingPolicy policy() const {
    SamplingPolicy p;
    p.random_samples = opt_.samples;
    p.seed = opt_.seed;
    return p;
  }

  // ---- report helpers -------------------------------------------------------
  void add(const std::string& name, const CheckReport& r) {
    CheckResult c;
    c.name = name;
    c.pass = r.ok();
    c.checked = r.checked();
    c.exhaustive = r.exhaustive();
    c.violation_count = r.violation_count();
    c.witnesses = r.violations();
    report_.checks.push_back(std::move(c));
  }

  void add(const std::string& name, bool holds, const std::string& rule, const std::function<std::string()>& describe) {
    CheckReport r;
    r.expect(holds, rule, describe);
    add(name, r);
  }

  void add_zero(const std::string& name, const Operad& op, const OperadElement& defect, const std::string& rule) {
    add(name, defect.is_zero(), rule, [&] { return "defect " + witness(op, defect); });
  }

  bool associative(const std::string& name, const EndOperad& e, const OperadElement& pi) {
    const OperadElement a = associator(e, pi);
    add_zero(name + "-associative", e, a, "associativity");
    return a.is_zero();
  }

  void add_table(const std::string& complex, const CohomologyReport& r) {
    report_.cohomology.push_back({complex, r.degrees, r.cochain_dims, r.differential_ranks, r.dims, r.square_zero});
    add("square-zero", r.square_zero, "delta^2", [] { return std::string("delta_{n+1} delta_n != 0"); });
  }

  OperationSpec op_spec(const EndOperad& e, const std::string& name, const OperadElement& f,
                        std::vector<std::string> omega = {}, std::optional<std::size_t> component = {}) const {
    OperationSpec op;
    op.name = name;
    op.arity = f.arity;
    op.omega = std::move(omega);
    op.component = component;
    std::vector<std::size_t> in;
    for (const auto& [idx, c] : f.coeffs) {
      const std::size_t out = e.decode(f.arity, idx, in);
      op.entries.push_back({in, out, c});
    }
    return op;
  }

  AlgebraSpec produced_base(const std::string& suffix) const {
    AlgebraSpec out;
    out.name = algebra().name + " " + suffix;
    out.labels = algebra().labels;
    out.grading = algebra().grading;
    return out;
  }

  // ---- commands -------------------------------------------------------------
 public:
  void validate_operad();
  void check_assoc();
  void check_compatible();
  void check_dendriform();
  void check_tridendriform();
  void check_rb();
  void split_rb();
  void check_family();
  void split_rb_family();
  void check_relative();
  void cohomology();
  void cohomology_comp();
  void cohomology_dend();
  void cohomology_family();
  void gerstenhaber_check();
  void morphism_check();
  void check_ainf();
  void check_dendinf();
  void split_rb_homotopy();

 private:
  HomotopyFamilyOps ainf_ops(const Semigroup& omega, std::size_t cap) const;
  void chain_map(const std::string& name, const InducedMapReport& r);

  const Options& opt_;
  const InputSet& in_;
  JobReport report_;
};

using Handler = void (Job::*)();

const std::vector<std::pair<std::string, Handler>>& handlers_table();

}  // namespace

namespace {

void Job::validate_operad() {
  const std::size_t N = opt_.nmax;
  const auto e = end(N);
  const SamplingPolicy p = policy();
  auto run = [&](const std::string& name, const Operad& op) {
    ensure_work(axiom_cost([&](std::size_t n) { return static_cast<double>(op.dimension(n)); }, N), name);
    add("axioms " + name, check_operad_axioms(op, N, p));
  };
  run("End_A", *e);
  run("End_A^comp", *comp_operad(e));
  run("End_A^Dend", *dend_operad(e));
  if (has_semigroup()) {
    const Semigroup omega = semigroup();
    run("End_A^Omega", *omega_operad(e, omega));
    run("Fam(End_A^Omega)^Dend", *fam_dend_operad(e, omega));
  }
}

void Job::check_assoc() {
  const auto e = end(3);
  associative("mul", *e, require(*e, "mul", 2));
}

void Job::check_compatible() {
  const auto e = end(3);
  const OperadElement p1 = require(*e, "mul1", 2);
  const OperadElement p2 = require(*e, "mul2", 2);
  associative("mul1", *e, p1);
  associative("mul2", *e, p2);
  add_zero("compatible", *e, compatibility_defect(*e, p1, p2), "compatibility");
  const auto comp = comp_operad(e);
  const CompEquivalence eq = comp_multiplication_equivalence(*comp, p1, p2);
  add("comp-multiplication", eq.multiplication_in_comp, "comp-associativity",
      [] { return std::string("(mul1, mul2) is not a multiplication in End_A^comp"); });
  add("comp-equivalence", eq.agree(), "equivalence", [&] {
    return std::string("multiplication in comp: ") + (eq.multiplication_in_comp ? "yes" : "no") +
           ", compatible: " + (eq.compatible ? "yes" : "no");
  });
}

void Job::check_dendriform() {
  const auto e = end(3);
  const OperadElement prec = require(*e, "prec", 2);
  const OperadElement succ = require(*e, "succ", 2);
  const auto defects = dendriform_defects(*e, prec, succ);
  for (std::size_t k = 0; k < defects.size(); ++k) {
    add_zero("dendriform-" + std::to_string(k + 1), *e, defects[k], "dendriform identity " + std::to_string(k + 1));
  }
  associative("total", *e, prec + succ);
}

void Job::check_tridendriform() {
  const auto e = end(3);
  const TriDendTriple t{require(*e, "prec", 2), require(*e, "succ", 2), require(*e, "odot", 2)};
  const auto defects = tridendriform_defects(*e, t);
  for (std::size_t k = 0; k < defects.size(); ++k) {
    add_zero("tridendriform-" + std::to_string(k + 1), *e, defects[k], "tridendriform identity " + std::to_string(k + 1));
  }
  associative("total", *e, t.prec + t.succ + t.odot);
  const auto [p, s] = tridend_to_dend(*e, t);
  add("dendriform-pair", is_dendriform_multiplication(*e, p, s), "dendriform",
      [] { return std::string("(prec + odot, succ) is not dendriform"); });
}

namespace {

OperadElement rb_defect(const Operad& op, const OperadElement& pi, const OperadElement& R, const Rational& weight) {
  const OperadElement lhs = op.compose(op.compose(pi, 2, R), 1, R);
  OperadElement inner = op.compose(pi, 1, R) + op.compose(pi, 2, R);
  if (weight != 0) inner += weight * pi;
  return lhs - op.compose(R, 1, inner);
}

}  // namespace

void Job::check_rb() {
  const auto e = end(3);
  const OperadElement pi = require(*e, "mul", 2);
  const OperadElement R = require(*e, "R", 1);
  const Rational weight = plain("R", 1)->weight.value_or(0);
  if (!associative("mul", *e, pi)) return;
  add_zero("rota-baxter", *e, rb_defect(*e, pi, R, weight), "rota-baxter weight " + to_string(weight));
}

void Job::split_rb() {
  const auto e = end(3);
  const OperadElement pi = require(*e, "mul", 2);
  const OperadElement R = require(*e, "R", 1);
  const Rational weight = plain("R", 1)->weight.value_or(0);
  if (!associative("mul", *e, pi)) return;
  const OperadElement defect = rb_defect(*e, pi, R, weight);
  add_zero("rota-baxter", *e, defect, "rota-baxter weight " + to_string(weight));
  if (!defect.is_zero()) return;
  AlgebraSpec out = produced_base("split");
  if (weight == 0) {
    const auto [prec, succ] = split_by_rota_baxter(*e, pi, R);
    add("split-dendriform", is_dendriform_multiplication(*e, prec, succ), "dendriform",
        [] { return std::string("split pair is not dendriform"); });
    out.operations = {op_spec(*e, "prec", prec), op_spec(*e, "succ", succ)};
  } else {
    const TriDendTriple t = tridend_from_rota_baxter(*e, pi, R, weight);
    add("split-tridendriform", is_tridendriform_multiplication(*e, t), "tridendriform",
        [] { return std::string("split triple is not tridendriform"); });
    out.operations = {op_spec(*e, "prec", t.prec), op_spec(*e, "succ", t.succ), op_spec(*e, "odot", t.odot)};
  }
  report_.produced = std::move(out);
}

void Job::check_family() {
  const Semigroup omega = semigroup();
  const auto e = end(3);
  const DendFamily fam{family(*e, omega, "prec", 2), family(*e, omega, "succ", 2)};
  const CheckReport r = check_dendriform_family(*e, omega, fam);
  add("dendriform-family", r);
  const auto fam_op = fam_dend_operad(e, omega);
  const bool in_operad = is_multiplication(*fam_op, encode_dend_family(*fam_op, fam));
  add("famdend-equivalence", in_operad == r.ok(), "equivalence", [&] {
    return std::string("multiplication in Fam^Dend: ") + (in_operad ? "yes" : "no") +
           ", family identities: " + (r.ok() ? "hold" : "fail");
  });
  if (!r.ok()) return;
  const TensorDendriform td = family_to_dendriform(*e, omega, fam);
  add("tensor-dendriform", is_dendriform_multiplication(*td.end, td.prec, td.succ), "dendriform",
      [] { return std::string("structure on A (x) k Omega is not dendriform"); });
  const RelativeProducts dots = family_to_relative(*e, omega, fam);
  add("relative-associative", check_relative_associative(*e, omega, dots));
  const OperadElement via_relative = relative_to_tensor(*e, omega, dots, *td.end);
  add_zero("routes-agree", *td.end, via_relative - (td.prec + td.succ), "tensor routes");
}

void Job::split_rb_family() {
  const Semigroup omega = semigroup();
  const auto e = end(3);
  const OperadElement pi = require(*e, "mul", 2);
  const OperatorFamily R = family(*e, omega, "R", 1);
  if (!associative("mul", *e, pi)) return;
  CheckReport rb;
  for (std::size_t a = 0; a < omega.order(); ++a) {
    for (std::size_t b = 0; b < omega.order(); ++b) {
      const OperadElement lhs = e->compose(e->compose(pi, 2, R[b]), 1, R[a]);
      const OperadElement inner = e->compose(pi, 1, R[a]) + e->compose(pi, 2, R[b]);
      const OperadElement defect = lhs - e->compose(R[omega.multiply(a, b)], 1, inner);
      rb.expect(defect.is_zero(), "rota-baxter-family", [&] {
        return "alpha=" + omega.label(a) + " beta=" + omega.label(b) + ", defect " + witness(*e, defect);
      });
    }
  }
  add("rota-baxter-family", rb);
  if (!rb.ok()) return;
  const DendFamily fam = rb_family_split(*e, omega, pi, R);
  add("dendriform-family", check_dendriform_family(*e, omega, fam));
  AlgebraSpec out = produced_base("family split");
  for (std::size_t w = 0; w < omega.order(); ++w) {
    out.operations.push_back(op_spec(*e, "prec", fam.prec[w], {omega.label(w)}));
    out.operations.push_back(op_spec(*e, "succ", fam.succ[w], {omega.label(w)}));
  }
  report_.produced = std::move(out);
}

void Job::check_relative() {
  const Semigroup omega = semigroup();
  const auto e = end(3);
  const auto members = indexed("dot", 2, 2, omega);
  if (members.empty()) throw UsageError("check-relative needs products 'dot' indexed by pairs of semigroup elements");
  RelativeProducts dots;
  for (std::size_t a = 0; a < omega.order(); ++a) {
    for (std::size_t b = 0; b < omega.order(); ++b) {
      const auto it = members.find({a, b});
      dots.dot.push_back(it == members.end() ? e->zero(2) : element(*e, *it->second));
    }
  }
  const CheckReport r = check_relative_associative(*e, omega, dots);
  add("relative-associative", r);
  const auto om = omega_operad(e, omega);
  const bool in_operad = is_multiplication(*om, encode_relative(*om, dots));
  add("omega-equivalence", in_operad == r.ok(), "equivalence", [&] {
    return std::string("multiplication in End_A^Omega: ") + (in_operad ? "yes" : "no");
  });
}

void Job::cohomology() {
  const auto e = end(opt_.nmax + 1);
  const OperadElement pi = require(*e, "mul", 2);
  if (!associative("mul", *e, pi)) return;
  ensure_cohomology_work(*e, opt_.nmax, "cohomology");
  add_table("End_A", cohomology_dims(*e, pi, opt_.nmax));
}

void Job::cohomology_comp() {
  const auto e = end(opt_.nmax + 1);
  const OperadElement p1 = require(*e, "mul1", 2);
  const OperadElement p2 = require(*e, "mul2", 2);
  const auto comp = comp_operad(e);
  const OperadElement pi = comp->pack({p1, p2});
  add("comp-multiplication", is_multiplication(*comp, pi), "comp-associativity",
      [&] { return "defect " + witness(*comp, associator(*comp, pi)); });
  if (!report_.checks.back().pass) return;
  ensure_cohomology_work(*comp, opt_.nmax, "cohomology-comp");
  add_table("End_A^comp", cohomology_dims(*comp, pi, opt_.nmax));
}

void Job::cohomology_dend() {
  const auto e = end(opt_.nmax + 1);
  const OperadElement prec = require(*e, "prec", 2);
  const OperadElement succ = require(*e, "succ", 2);
  const auto dend = dend_operad(e);
  const OperadElement pi = dend->pack({prec, succ});
  add("dend-multiplication", is_multiplication(*dend, pi), "dend-associativity",
      [&] { return "defect " + witness(*dend, associator(*dend, pi)); });
  if (!report_.checks.back().pass) return;
  ensure_cohomology_work(*dend, opt_.nmax, "cohomology-dend");
  add_table("End_A^Dend", cohomology_dims(*dend, pi, opt_.nmax));
}

void Job::cohomology_family() {
  const Semigroup omega = semigroup();
  const auto e = end(opt_.nmax + 1);
  const DendFamily fam{family(*e, omega, "prec", 2), family(*e, omega, "succ", 2)};
  const auto fam_op = fam_dend_operad(e, omega);
  const OperadElement pi = encode_dend_family(*fam_op, fam);
  add("dendriform-family", check_dendriform_family(*e, omega, fam));
  if (!report_.checks.back().pass) return;
  ensure_cohomology_work(*fam_op, opt_.nmax, "cohomology-family");
  add_table("Fam(End_A^Omega)^Dend", cohomology_dims(*fam_op, pi, opt_.nmax));
}

void Job::gerstenhaber_check() {
  const std::size_t window = opt_.nmax + 1;
  const auto e = end(window);
  const OperadElement pi = require(*e, "mul", 2);
  if (!associative("mul", *e, pi)) return;
  ensure_cohomology_work(*e, opt_.nmax, "gerstenhaber-check");
  add("gerstenhaber", check_gerstenhaber_on_cohomology(*e, pi, 3, policy()));
}

void Job::chain_map(const std::string& name, const InducedMapReport& r) {
  CheckReport c;
  for (std::size_t k = 0; k < r.degrees.size(); ++k) {
    c.expect(r.commutes[k], "chain-map", [&] {
      return "phi delta_" + std::to_string(r.degrees[k]) + " != delta' phi at n = " + std::to_string(r.degrees[k]);
    });
  }
  add(name, c);
}

void Job::morphism_check() {
  const std::size_t N = opt_.nmax;
  const auto e = end(N);
  const auto comp = comp_operad(e);
  const auto dend = dend_operad(e);
  const SamplingPolicy p = policy();
  ensure_work(axiom_cost([&](std::size_t n) { return static_cast<double>(comp->dimension(n)); }, N), "morphism-check");
  add("sum-morphism", check_morphism(sum_morphism(comp), N, p));
  add("total-morphism", check_morphism(total_morphism(dend), N, p));
  if (plain("mul1", 2) && plain("mul2", 2)) {
    const OperadElement p1 = require(*e, "mul1", 2);
    const OperadElement p2 = require(*e, "mul2", 2);
    const OperadElement pi = comp->pack({p1, p2});
    if (is_multiplication(*comp, pi)) chain_map("sum-chain-map", induced_cohomology_map(sum_morphism(comp), pi, p1 + p2));
  }
  if (plain("prec", 2) && plain("succ", 2)) {
    const OperadElement prec = require(*e, "prec", 2);
    const OperadElement succ = require(*e, "succ", 2);
    const OperadElement pi = dend->pack({prec, succ});
    if (is_multiplication(*dend, pi)) {
      chain_map("total-chain-map", induced_cohomology_map(total_morphism(dend), pi, prec + succ));
    }
  }
}

HomotopyFamilyOps Job::ainf_ops(const Semigroup& omega, std::size_t cap) const {
  HomotopyFamilyOps ops(graded_module(), omega, cap);
  for (std::size_t k = 1; k <= cap; ++k) {
    for (const auto& [alpha, op] : indexed("mu", k, k, omega)) ops.mu_mut(k, alpha) = multilinear(*op, algebra().dimension());
  }
  try {
    ops.validate();
  } catch (const DegreeError& e) {
    throw UsageError(algebra().source + ": " + e.what());
  }
  return ops;
}

void Job::check_ainf() {
  const Semigroup omega = semigroup();
  const HomotopyFamilyOps ops = ainf_ops(omega, homotopy_cap("mu"));
  add("ainf", check_ainf_relative(ops, opt_.nmax, policy()));
}

void Job::check_dendinf() {
  const Semigroup omega = semigroup();
  const std::size_t cap = homotopy_cap("eta");
  DendInfFamilyOps ops(graded_module(), omega, cap);
  for (std::size_t k = 1; k <= cap; ++k) {
    for (std::size_t r = 1; r <= k; ++r) {
      for (const auto& [reduced, op] : indexed("eta", k, k - 1, omega, r)) {
        ops.eta_reduced_mut(k, r, reduced) = multilinear(*op, algebra().dimension());
      }
    }
  }
  try {
    ops.validate();
  } catch (const DegreeError& e) {
    throw UsageError(algebra().source + ": " + e.what());
  }
  add("dendinf", check_dendinf_family(ops, opt_.nmax, policy()));
}

void Job::split_rb_homotopy() {
  const Semigroup omega = semigroup();
  const std::size_t cap = homotopy_cap("mu");
  const HomotopyFamilyOps ops = ainf_ops(Semigroup::singleton(), cap);
  const auto R_members = indexed("R", 1, 1, omega);
  if (R_members.empty()) throw UsageError("split-rb-homotopy needs a family 'R' indexed by the semigroup");
  HomotopyRBFamily R;
  for (std::size_t w = 0; w < omega.order(); ++w) {
    const auto it = R_members.find({w});
    R.push_back(it == R_members.end() ? MultilinearMap(1, algebra().dimension())
                                      : multilinear(*it->second, algebra().dimension()));
  }
  const CheckReport ainf = check_ainf_relative(ops, 2 * cap - 1, policy());
  add("ainf", ainf);
  if (!ainf.ok()) return;
  CheckReport rb;
  try {
    rb = check_homotopy_rb_family(ops, omega, R, cap, policy());
  } catch (const DegreeError& e) {
    throw UsageError(algebra().source + ": " + e.what());
  }
  add("homotopy-rota-baxter", rb);
  if (!rb.ok()) return;
  const DendInfFamilyOps split = homotopy_rb_split(ops, omega, R);
  add("dendinf", check_dendinf_family(split, std::min(opt_.nmax, 2 * cap - 1), policy()));

  AlgebraSpec out = produced_base("homotopy split");
  for (std::size_t k = 1; k <= cap; ++k) {
    for (std::size_t r = 1; r <= k; ++r) {
      for (std::size_t t = 0; t < int_power(omega.order(), k - 1); ++t) {
        std::vector<std::size_t> reduced;
        tuple_decode(t, k - 1, omega.order(), reduced);
        const MultilinearMap& m = split.eta_reduced(k, r, reduced);
        if (m.is_zero()) continue;
        OperationSpec op;
        op.name = "eta";
        op.arity = k;
        op.component = r;
        for (std::size_t x : reduced) op.omega.push_back(omega.label(x));
        m.for_each([&](std::span<const std::size_t> in, const SparseVector& image) {
          for (const auto& [b, c] : image) op.entries.push_back({{in.begin(), in.end()}, b, c});
        });
        out.operations.push_back(std::move(op));
      }
    }
  }
  report_.produced = std::move(out);
}

const std::vector<std::pair<std::string, Handler>>& handlers_table() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"validate-operad", &Job::validate_operad},
      {"check-assoc", &Job::check_assoc},
      {"check-compatible", &Job::check_compatible},
      {"check-dendriform", &Job::check_dendriform},
      {"check-tridendriform", &Job::check_tridendriform},
      {"check-rb", &Job::check_rb},
      {"split-rb", &Job::split_rb},
      {"check-family", &Job::check_family},
      {"split-rb-family", &Job::split_rb_family},
      {"check-relative", &Job::check_relative},
      {"cohomology", &Job::cohomology},
      {"cohomology-comp", &Job::cohomology_comp},
      {"cohomology-dend", &Job::cohomology_dend},
      {"cohomology-family", &Job::cohomology_family},
      {"gerstenhaber-check", &Job::gerstenhaber_check},
      {"morphism-check", &Job::morphism_check},
      {"check-ainf", &Job::check_ainf},
      {"check-dendinf", &Job::check_dendinf},
      {"split-rb-homotopy", &Job::split_rb_homotopy},
  };
  return table;
}

JobReport Job::run() {
  if (opt_.nmax < 2) throw UsageError("--nmax must be at least 2");
  const auto& table = handlers_table();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& h) { return h.first == opt_.command; });
  if (it == table.end()) throw UsageError("unknown command '" + opt_.command + "'");
  (this->*(it->second))();
  return std::move(report_);
}

}  // namespace

bool JobReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers_table()) out.push_back(name);
    return out;
  }();
  return names;
}

JobReport run_command(const Options& options, const InputSet& inputs) { return Job(options, inputs).run(); }

json to_json(const JobReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json w = json::array();
    for (const auto& v : c.witnesses) w.push_back({{"rule", v.rule}, {"instance", v.instance}});
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"checked", c.checked},
                      {"exhaustive", c.exhaustive},
                      {"violations", c.violation_count},
                      {"witnesses", std::move(w)}});
  }
  json tables = json::array();
  for (const auto& t : r.cohomology) {
    tables.push_back({{"complex", t.complex},
                      {"degrees", t.degrees},
                      {"cochain_dims", t.cochain_dims},
                      {"differential_ranks", t.differential_ranks},
                      {"dims", t.dims},
                      {"square_zero", t.square_zero}});
  }
  json j{{"command", r.command},
         {"inputs", r.inputs},
         {"nmax", r.nmax},
         {"samples", r.samples},
         {"seed", r.seed},
         {"verdict", r.pass() ? "pass" : "fail"},
         {"checks", std::move(checks)},
         {"cohomology", std::move(tables)}};
  if (r.produced) j["produced"] = to_json(*r.produced);
  return j;
}

std::string render_machine(const JobReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const JobReport& r) {
  std::ostringstream os;
  os << "operadkit " << r.command << " (nmax " << r.nmax << ", samples " << r.samples << ", seed " << r.seed << ")\n";
  for (const auto& in : r.inputs) os << "  input " << in << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.checked << " checked, "
       << (c.exhaustive ? "exhaustive" : "sampled");
    if (!c.pass) os << ", " << c.violation_count << " violations";
    os << "\n";
    for (std::size_t k = 0; k < c.witnesses.size() && k < 3; ++k) {
      os << "      " << c.witnesses[k].rule << ": " << c.witnesses[k].instance << "\n";
    }
  }
  for (const auto& t : r.cohomology) {
    os << "  cohomology of " << t.complex << "\n";
    for (std::size_t k = 0; k < t.degrees.size(); ++k) {
      os << "    n=" << t.degrees[k] << "  dim C=" << t.cochain_dims[k] << "  rank d=" << t.differential_ranks[k]
         << "  dim H=" << t.dims[k] << "\n";
    }
  }
  if (r.produced) os << "  produced " << r.produced->name << " with " << r.produced->operations.size() << " operations\n";
  os << "verdict: " << (r.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace operadkit::cli
