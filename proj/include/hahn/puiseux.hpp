#pragma once

// G = Q: Puiseux series a = Σ a_n t^{n/n_a}, stored as a series in s = t^{1/n_a}
// with minimal ramification n_a.

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "hahn/autalg.hpp"

namespace hahn {

class PuiseuxSeries {
 public:
  // `body` is a series over Z in s = t^{1/ramification}; `cutoff` is the
  // exponent in t below which coefficients are exact (nullopt: exact series).
  // The ramification is reduced to its minimum.
  PuiseuxSeries(std::int64_t ramification, const Series& body,
                std::optional<ExpRational> cutoff = std::nullopt);

  std::int64_t ramification() const { return ramification_; }
  const Series& body() const { return body_; }
  const std::optional<ExpRational>& cutoff() const { return cutoff_; }
  const FieldDescriptor& field() const { return body_.field(); }

  bool operator==(const PuiseuxSeries& other) const;

 private:
  std::int64_t ramification_;
  Series body_;
  std::optional<ExpRational> cutoff_;
};

std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& p);

// The series over Q at level lcm(n_a, denominator of the cutoff).
Series puiseux_to_lattice(const PuiseuxSeries& p);
// Requires a one-dimensional rational lattice; n_a = lcm of support denominators.
PuiseuxSeries lattice_to_puiseux(const Series& a);

enum class PuiseuxOp { Add, Sub, Mul, Neg, Inv };

// Binary ops need `q`; Inv inverts any nonzero series.
PuiseuxSeries puiseux_arith(PuiseuxOp op, const PuiseuxSeries& p,
                            const std::optional<PuiseuxSeries>& q = std::nullopt);

// Exponent scaling e ↦ scale·e; throws NonPositiveScale.
PuiseuxSeries puiseux_oaut_apply(const ExpRational& scale, const PuiseuxSeries& p);

// u^{num/den} = (den-th root of u)^num; the fraction is taken as given.
Series puiseux_unit_pow_q(const Series& u, std::int64_t num, std::int64_t den);
Series puiseux_unit_pow_q(const Series& u, const ExpRational& q);

// σ over a one-dimensional rational lattice applied to p. The u-part is
// evaluated at any rational exponent through roots of 1-units; the x-part
// must stay on σ's lattice (LevelExceeded otherwise).
PuiseuxSeries puiseux_apply_aut(const AutNormalForm& sigma, const PuiseuxSeries& p);

}  // namespace hahn
