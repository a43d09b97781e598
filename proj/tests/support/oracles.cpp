#include "oracles.hpp"

#include <functional>
#include <random>

namespace operadkit::oracle {

namespace {

void for_each_tuple(std::size_t length, std::size_t dim,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> t(length, 0);
  while (true) {
    visit(t);
    std::size_t p = length;
    while (p > 0) {
      --p;
      if (++t[p] < dim) break;
      t[p] = 0;
      if (p == 0) return;
    }
    if (length == 0) return;
  }
}

constexpr std::int64_t kPrime = 2147483647;

std::int64_t mod(std::int64_t x) {
  x %= kPrime;
  return x < 0 ? x + kPrime : x;
}

std::int64_t inverse(std::int64_t a) {
  std::int64_t result = 1;
  std::int64_t base = mod(a);
  for (std::int64_t e = kPrime - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % kPrime;
    base = base * base % kPrime;
  }
  return result;
}

}  // namespace

std::vector<Rational> Tensor::eval(const std::vector<std::size_t>& inputs) const {
  std::vector<Rational> out(dim, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    auto it = entries.find({inputs, k});
    if (it != entries.end()) out[k] = it->second;
  }
  return out;
}

Tensor to_tensor(const EndOperad& end, const OperadElement& f) {
  Tensor t{f.arity, end.module().dimension(), {}};
  std::vector<std::size_t> in;
  for (const auto& [idx, c] : f.coeffs) {
    const std::size_t out = end.decode(f.arity, idx, in);
    t.entries[{in, out}] = c;
  }
  return t;
}

OperadElement from_tensor(const EndOperad& end, const Tensor& t) {
  std::vector<TensorEntry> entries;
  for (const auto& [key, c] : t.entries) entries.push_back({key.first, key.second, c});
  return end.element(t.arity, entries);
}

Tensor substitute(const Tensor& f, std::size_t i, const Tensor& g) {
  Tensor out{f.arity + g.arity - 1, f.dim, {}};
  for_each_tuple(out.arity, f.dim, [&](const std::vector<std::size_t>& a) {
    const std::vector<std::size_t> inner(a.begin() + (i - 1), a.begin() + (i - 1 + g.arity));
    const std::vector<Rational> gv = g.eval(inner);
    std::vector<std::size_t> outer(a.begin(), a.begin() + (i - 1));
    outer.push_back(0);
    outer.insert(outer.end(), a.begin() + (i - 1 + g.arity), a.end());
    std::vector<Rational> total(f.dim, 0);
    for (std::size_t b = 0; b < f.dim; ++b) {
      if (gv[b] == 0) continue;
      outer[i - 1] = b;
      const std::vector<Rational> fv = f.eval(outer);
      for (std::size_t k = 0; k < f.dim; ++k) total[k] += gv[b] * fv[k];
    }
    for (std::size_t k = 0; k < f.dim; ++k) {
      if (total[k] != 0) out.entries[{a, k}] = total[k];
    }
  });
  return out;
}

Tensor add(const Tensor& a, const Tensor& b, const Rational& scale) {
  Tensor out = a;
  for (const auto& [key, c] : b.entries) {
    Rational& slot = out.entries[key];
    slot += scale * c;
    if (slot == 0) out.entries.erase(key);
  }
  return out;
}

bool equal(const Tensor& a, const Tensor& b) { return a.arity == b.arity && a.entries == b.entries; }

Tensor bracket_by_terms(const Tensor& f, const Tensor& g) {
  const long long m = static_cast<long long>(f.arity);
  const long long n = static_cast<long long>(g.arity);
  Tensor out{f.arity + g.arity - 1, f.dim, {}};
  for (long long i = 1; i <= m; ++i) {
    out = add(out, substitute(f, static_cast<std::size_t>(i), g), ((n - 1) * (i - 1)) % 2 == 0 ? 1 : -1);
  }
  const int outer = ((m - 1) * (n - 1)) % 2 == 0 ? 1 : -1;
  for (long long i = 1; i <= n; ++i) {
    const int inner = ((m - 1) * (i - 1)) % 2 == 0 ? 1 : -1;
    out = add(out, substitute(g, static_cast<std::size_t>(i), f), -outer * inner);
  }
  return out;
}

std::size_t rank_modp(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (auto& r : rows) {
    for (auto& x : r) x = mod(x);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::int64_t inv = inverse(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * inv % kPrime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = mod(rows[r][k] - factor * rows[rank][k] % kPrime);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> hochschild_dims_modp(const Table& c, std::size_t n_max) {
  const std::size_t d = c.size();
  auto pow = [&](std::size_t e) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= d;
    return r;
  };
  // A cochain f in C^n has coordinates f[(tuple, out)] with index tuple * d + out.
  auto index = [&](const std::vector<std::size_t>& t, std::size_t out) {
    std::size_t idx = 0;
    for (std::size_t x : t) idx = idx * d + x;
    return idx * d + out;
  };
  std::vector<std::size_t> ranks(n_max + 1, 0);  // ranks[n] = rank d_n
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t src = pow(n + 1);
    const std::size_t dst = pow(n + 2);
    std::vector<std::vector<std::int64_t>> M(dst, std::vector<std::int64_t>(src, 0));
    // Column for basis cochain f = (input tuple u) -> e_w.
    for_each_tuple(n, d, [&](const std::vector<std::size_t>& u) {
      for (std::size_t w = 0; w < d; ++w) {
        const std::size_t col = index(u, w);
        for_each_tuple(n + 1, d, [&](const std::vector<std::size_t>& a) {
          std::vector<std::int64_t> value(d, 0);
          // a_1 f(a_2..a_{n+1})
          if (std::vector<std::size_t>(a.begin() + 1, a.end()) == u) {
            for (std::size_t k = 0; k < d; ++k) value[k] += c[a[0]][w][k];
          }
          // (-1)^i f(.., a_i a_{i+1}, ..)
          for (std::size_t i = 1; i <= n; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            for (std::size_t b = 0; b < d; ++b) {
              const std::int64_t coeff = c[a[i - 1]][a[i]][b];
              if (coeff == 0) continue;
              std::vector<std::size_t> merged(a.begin(), a.begin() + (i - 1));
              merged.push_back(b);
              merged.insert(merged.end(), a.begin() + (i + 1), a.end());
              if (merged == u) value[w] += sign * coeff;
            }
          }
          // (-1)^{n+1} f(a_1..a_n) a_{n+1}
          if (std::vector<std::size_t>(a.begin(), a.end() - 1) == u) {
            const int sign = ((n + 1) % 2 == 0) ? 1 : -1;
            for (std::size_t k = 0; k < d; ++k) value[k] += sign * c[w][a[n]][k];
          }
          for (std::size_t k = 0; k < d; ++k) {
            if (value[k] != 0) M[index(a, k)][col] += value[k];
          }
        });
      }
    });
    ranks[n] = rank_modp(M);
  }
  std::vector<std::size_t> dims;
  for (std::size_t n = 1; n + 1 <= n_max + 1 && n <= n_max; ++n) {
    dims.push_back(pow(n + 1) - ranks[n] - (n >= 2 ? ranks[n - 1] : 0));
  }
  return dims;
}

OperadElement product_from_table(const EndOperad& end, const Table& c) {
  std::vector<TensorEntry> entries;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[i][j][k] != 0) entries.push_back({{i, j}, k, Rational(static_cast<long>(c[i][j][k]))});
      }
    }
  }
  return end.element(2, entries);
}

OperadElement unary_from_matrix(const EndOperad& end, const std::vector<std::vector<std::int64_t>>& r) {
  std::vector<TensorEntry> entries;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t k = 0; k < r[i].size(); ++k) {
      if (r[i][k] != 0) entries.push_back({{i}, k, Rational(static_cast<long>(r[i][k]))});
    }
  }
  return end.element(1, entries);
}

std::vector<OperadElement> small_elements(const EndOperad& end, std::size_t arity, std::size_t count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OperadElement> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<SparseVector::Entry> entries;
    for (std::size_t i = 0; i < end.dimension(arity); ++i) {
      const long v = static_cast<long>(rng() % 3) - 1;
      if (v != 0) entries.emplace_back(i, Rational(v));
    }
    out.push_back({arity, SparseVector::from_entries(std::move(entries))});
  }
  return out;
}

Table scalar_field() { return {{{1}}}; }

Table product_field() {
  Table c(2, std::vector<std::vector<std::int64_t>>(2, std::vector<std::int64_t>(2, 0)));
  c[0][0][0] = 1;
  c[1][1][1] = 1;
  return c;
}

Table dual_numbers() {
  Table c(2, std::vector<std::vector<std::int64_t>>(2, std::vector<std::int64_t>(2, 0)));
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  c[1][0][1] = 1;
  return c;
}

Table left_unit_algebra() {
  Table c(2, std::vector<std::vector<std::int64_t>>(2, std::vector<std::int64_t>(2, 0)));
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  return c;
}

}  // namespace operadkit::oracle
