#pragma once

#include "operadkit/operad.hpp"
#include "operadkit/report.hpp"
#include "operadkit/sampling.hpp"

namespace operadkit {

/// Checks, for all arities whose composites stay within `arity_cap`:
///   sequential  (f o_i g) o_{i+j-1} h = f o_i (g o_j h)
///   parallel    (f o_i g) o_{j+n-1} h = (f o_j h) o_i g   for i < j
///   unit        f o_i 1 = f = 1 o_1 f
/// on basis tuples (or random tuples, per `policy`). Throws ArityOverflow if
/// arity_cap exceeds the operad's window.
CheckReport check_operad_axioms(const Operad& op, std::size_t arity_cap, const SamplingPolicy& policy = {});

}  // namespace operadkit
