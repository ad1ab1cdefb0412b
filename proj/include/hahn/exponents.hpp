#pragma once

// Exponent groups (Z^n, <lex) and (Q^d, <lex) realized on lattices (1/L)Z^d,
// together with their order-automorphism groups UUT_n(Z) and UPT_d(Q).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/rational.hpp>

namespace hahn {

using ExpRational = boost::rational<std::int64_t>;

std::int64_t lcm64(std::int64_t a, std::int64_t b);

enum class GroupKind { IntLattice, RationalLattice };

struct GroupDescriptor {
  GroupKind kind = GroupKind::IntLattice;
  int dimension = 1;
  std::int64_t level = 1;

  static GroupDescriptor integers(int dimension);
  static GroupDescriptor rationals(int dimension, std::int64_t level);

  // Same kind and dimension; levels may differ.
  bool compatible(const GroupDescriptor& other) const {
    return kind == other.kind && dimension == other.dimension;
  }
  // Least common refinement of two compatible descriptors.
  GroupDescriptor refined(const GroupDescriptor& other) const;
  GroupDescriptor with_level(std::int64_t new_level) const;

  bool operator==(const GroupDescriptor&) const = default;
};

class Exponent {
 public:
  using Coords = boost::container::small_vector<ExpRational, 2>;

  Exponent() = default;
  explicit Exponent(Coords coords) : coords_(std::move(coords)) {}
  Exponent(std::initializer_list<ExpRational> coords) : coords_(coords) {}

  static Exponent zero(int dimension);
  static Exponent unit(int dimension, int index, ExpRational scale = 1);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const ExpRational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const Coords& coords() const { return coords_; }

  bool is_zero() const;
  // Least L with every coordinate in (1/L)Z.
  std::int64_t level() const;
  bool on_lattice(std::int64_t level) const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic, smallest index most significant. Dimensions must agree.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend Exponent operator-(const Exponent& a);
  friend Exponent operator*(const ExpRational& q, const Exponent& a);

  Exponent& operator+=(const Exponent& b);

 private:
  Coords coords_;
};

std::ostream& operator<<(std::ostream& os, const Exponent& e);

enum class Ordering { Less, Equal, Greater };

Ordering exp_compare(const Exponent& a, const Exponent& b);
Exponent exp_add(const Exponent& a, const Exponent& b);
Exponent exp_neg(const Exponent& a);
// Throws LevelExceeded when q·a leaves the lattice of `group`.
Exponent exp_scale(const ExpRational& q, const Exponent& a, const GroupDescriptor& group);

// Throws LevelExceeded if e is not on the lattice of `group`, DimensionError on
// a dimension mismatch.
void require_on_lattice(const Exponent& e, const GroupDescriptor& group);

// True if n·step >= target for some natural n (step must be lex positive).
// Fails exactly when target escapes the convex subgroup generated by step.
bool reaches(const Exponent& step, const Exponent& target);

// An element of UUT_n(Z) (IntLattice) or UPT_d(Q) (RationalLattice), acting on
// row vectors: g ↦ g·M. Only constructible through oaut_check.
class OrderAutMatrix {
 public:
  using Matrix = std::vector<std::vector<ExpRational>>;

  GroupKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(entries_.size()); }
  const Matrix& entries() const { return entries_; }
  const ExpRational& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  bool is_identity() const;

  static OrderAutMatrix identity(GroupKind kind, int dimension);

  bool operator==(const OrderAutMatrix&) const = default;

 private:
  friend OrderAutMatrix oaut_check(const Matrix& m, GroupKind kind);
  OrderAutMatrix(GroupKind kind, Matrix entries) : kind_(kind), entries_(std::move(entries)) {}

  GroupKind kind_;
  Matrix entries_;
};

std::ostream& operator<<(std::ostream& os, const OrderAutMatrix& m);

OrderAutMatrix oaut_check(const OrderAutMatrix::Matrix& m, GroupKind kind);
// g·M. For rational matrices the result may need a finer lattice.
Exponent oaut_apply(const OrderAutMatrix& m, const Exponent& g);
// The automorphism "apply inner, then outer".
OrderAutMatrix oaut_compose(const OrderAutMatrix& outer, const OrderAutMatrix& inner);
OrderAutMatrix oaut_invert(const OrderAutMatrix& m);

}  // namespace hahn
