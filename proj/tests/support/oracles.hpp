#pragma once

// Independent reference computations used only by the tests. Nothing here calls the
// library's composition or elimination code.

#include <cstdint>
#include <map>
#include <vector>

#include "operadkit/end_operad.hpp"
#include "operadkit/rational.hpp"

namespace operadkit::oracle {

/// A multilinear map A^n -> A as a plain (inputs, output) -> value dictionary.
struct Tensor {
  std::size_t arity = 1;
  std::size_t dim = 1;
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, Rational> entries;

  /// f(e_{in_1}, ..., e_{in_n}) as a dense vector.
  std::vector<Rational> eval(const std::vector<std::size_t>& inputs) const;
};

Tensor to_tensor(const EndOperad& end, const OperadElement& f);
OperadElement from_tensor(const EndOperad& end, const Tensor& t);

/// f o_i g by substitution, evaluated on every basis tuple.
Tensor substitute(const Tensor& f, std::size_t i, const Tensor& g);
Tensor add(const Tensor& a, const Tensor& b, const Rational& scale = 1);
bool equal(const Tensor& a, const Tensor& b);

/// Bracket as the four signed substitution sums, written out term by term.
Tensor bracket_by_terms(const Tensor& f, const Tensor& g);

/// Integer structure constants c[i][j][k]: e_i e_j = sum_k c e_k.
using Table = std::vector<std::vector<std::vector<std::int64_t>>>;

/// Hochschild cochain ranks from the textbook formula
///   (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(a_1..a_n) a_{n+1}
/// with ranks taken modulo the prime 2^31 - 1. Returns dim H^n for n = 1..n_max with C^0 omitted.
std::vector<std::size_t> hochschild_dims_modp(const Table& c, std::size_t n_max);

/// Rank modulo 2^31 - 1 of an integer matrix.
std::size_t rank_modp(std::vector<std::vector<std::int64_t>> rows);

/// Structure constants as an element of End_A(2).
OperadElement product_from_table(const EndOperad& end, const Table& c);

/// Integer entries of a linear map A -> A (r[i][k]: R(e_i) = sum_k r[i][k] e_k).
OperadElement unary_from_matrix(const EndOperad& end, const std::vector<std::vector<std::int64_t>>& r);

/// Visits every vector in {values}^length.
template <typename Visit>
void for_each_word(std::size_t length, const std::vector<std::int64_t>& values, Visit&& visit) {
  std::vector<std::size_t> idx(length, 0);
  std::vector<std::int64_t> word(length, values.empty() ? 0 : values[0]);
  while (true) {
    for (std::size_t p = 0; p < length; ++p) word[p] = values[idx[p]];
    visit(word);
    std::size_t p = length;
    while (p > 0) {
      --p;
      if (++idx[p] < values.size()) break;
      idx[p] = 0;
      if (p == 0) return;
    }
    if (length == 0) return;
  }
}

/// `count` End_A(arity) elements with coordinates in {-1, 0, 1}, in a fixed pseudo-random order.
std::vector<OperadElement> small_elements(const EndOperad& end, std::size_t arity, std::size_t count,
                                          std::uint64_t seed);

// Algebras used throughout the tests.
Table scalar_field();                 ///< k: e0 e0 = e0
Table product_field();                ///< k x k componentwise
Table dual_numbers();                 ///< k[eps]: 1 = e0, eps = e1, eps^2 = 0
Table left_unit_algebra();            ///< e0 e0 = e0, e0 e1 = e1, others zero

}  // namespace operadkit::oracle
