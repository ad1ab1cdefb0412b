#pragma once

// Independent reference computations for the tests: plain truncated power
// series over Q as coefficient vectors, with schoolbook arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "hahn/series.hpp"
#include "hahn/text.hpp"

namespace oracle {

// p[k] is the coefficient of t^k; everything is taken modulo t^size.
using Poly = std::vector<mpq_class>;

inline Poly mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// f(g) mod t^n for g(0) = 0, by Horner.
inline Poly substitute(const Poly& f, const Poly& g, std::size_t n) {
  Poly acc(n, 0);
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = mul(acc, g, n);
    acc[0] += f[k];
  }
  return acc;
}

// 1/a mod t^n for a(0) ≠ 0, by solving a·b = 1 coefficient by coefficient.
inline Poly reciprocal(const Poly& a, std::size_t n) {
  Poly b(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class s = k == 0 ? 1 : 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s -= a[i] * b[k - i];
    b[k] = s / a[0];
  }
  return b;
}

// Generalized binomial coefficient C(q, k) for rational q.
inline mpq_class binomial(const mpq_class& q, std::size_t k) {
  mpq_class r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (q - static_cast<long>(i)) / static_cast<long>(i + 1);
  return r;
}

// (1 + t)^q mod t^n.
inline Poly binomial_series(const mpq_class& q, std::size_t n) {
  Poly p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = binomial(q, k);
  return p;
}

inline mpz_class catalan(unsigned k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
  return c / (k + 1);
}

// The library series Σ p[k] t^{(k + shift)/level} + O(t^{(size + shift)/level})
// over the one-dimensional group of the given level; `exact` drops the O-term.
inline hahn::Series to_series(const Poly& p, std::int64_t shift = 0, std::int64_t level = 1,
                              bool exact = false) {
  const auto group = level == 1 ? hahn::GroupDescriptor::integers(1)
                                : hahn::GroupDescriptor::rationals(1, level);
  std::vector<hahn::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    terms.push_back({hahn::Exponent{hahn::ExpRational(static_cast<std::int64_t>(k) + shift, level)},
                     hahn::FieldElement(hahn::Rational(p[k]))});
  }
  const hahn::Bound cutoff =
      exact ? hahn::Bound()
            : hahn::Bound(hahn::Exponent{hahn::ExpRational(static_cast<std::int64_t>(p.size()) + shift, level)});
  return hahn::Series::from_terms(group, hahn::FieldDescriptor::rationals(), std::move(terms), cutoff);
}

}  // namespace oracle
