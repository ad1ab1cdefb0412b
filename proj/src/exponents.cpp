#include "hahn/exponents.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "hahn/error.hpp"

namespace hahn {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return std::lcm(a, b);
}

GroupDescriptor GroupDescriptor::integers(int dimension) {
  if (dimension < 1) throw Error(ErrorCode::DimensionError, "dimension must be >= 1");
  return {GroupKind::IntLattice, dimension, 1};
}

GroupDescriptor GroupDescriptor::rationals(int dimension, std::int64_t level) {
  if (dimension < 1) throw Error(ErrorCode::DimensionError, "dimension must be >= 1");
  if (level < 1) throw Error(ErrorCode::LevelExceeded, "level must be >= 1");
  return {GroupKind::RationalLattice, dimension, level};
}

GroupDescriptor GroupDescriptor::refined(const GroupDescriptor& other) const {
  if (!compatible(other)) {
    throw Error(ErrorCode::DescriptorMismatch, "exponent groups differ");
  }
  return with_level(lcm64(level, other.level));
}

GroupDescriptor GroupDescriptor::with_level(std::int64_t new_level) const {
  if (kind == GroupKind::IntLattice && new_level != 1) {
    throw Error(ErrorCode::LevelExceeded, "integer lattice has level 1");
  }
  GroupDescriptor out = *this;
  out.level = new_level;
  return out;
}

Exponent Exponent::zero(int dimension) {
  return Exponent(Coords(static_cast<std::size_t>(dimension), ExpRational(0)));
}

Exponent Exponent::unit(int dimension, int index, ExpRational scale) {
  Exponent e = zero(dimension);
  e.coords_[static_cast<std::size_t>(index)] = scale;
  return e;
}

bool Exponent::is_zero() const {
  for (const auto& c : coords_) {
    if (c.numerator() != 0) return false;
  }
  return true;
}

std::int64_t Exponent::level() const {
  std::int64_t l = 1;
  for (const auto& c : coords_) l = lcm64(l, c.denominator());
  return l;
}

bool Exponent::on_lattice(std::int64_t level) const {
  for (const auto& c : coords_) {
    if (level % c.denominator() != 0) return false;
  }
  return true;
}

static void check_dims(const Exponent& a, const Exponent& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::DimensionError,
                "exponent dimensions " + std::to_string(a.dimension()) + " and " +
                    std::to_string(b.dimension()));
  }
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  check_dims(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent out = a;
  out += b;
  return out;
}

Exponent& Exponent::operator+=(const Exponent& b) {
  check_dims(*this, b);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
  return *this;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  check_dims(a, b);
  Exponent out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] -= b.coords_[i];
  return out;
}

Exponent operator-(const Exponent& a) {
  Exponent out = a;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Exponent operator*(const ExpRational& q, const Exponent& a) {
  Exponent out = a;
  for (auto& c : out.coords_) c *= q;
  return out;
}

static void print_rational(std::ostream& os, const ExpRational& q) {
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
}

std::ostream& operator<<(std::ostream& os, const Exponent& e) {
  if (e.dimension() == 1) {
    print_rational(os, e[0]);
    return os;
  }
  os << '[';
  for (int i = 0; i < e.dimension(); ++i) {
    if (i) os << ", ";
    print_rational(os, e[i]);
  }
  return os << ']';
}

Ordering exp_compare(const Exponent& a, const Exponent& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Exponent exp_add(const Exponent& a, const Exponent& b) { return a + b; }

Exponent exp_neg(const Exponent& a) { return -a; }

Exponent exp_scale(const ExpRational& q, const Exponent& a, const GroupDescriptor& group) {
  Exponent out = q * a;
  require_on_lattice(out, group);
  return out;
}

void require_on_lattice(const Exponent& e, const GroupDescriptor& group) {
  if (e.dimension() != group.dimension) {
    throw Error(ErrorCode::DimensionError, "exponent does not match group dimension");
  }
  if (!e.on_lattice(group.level)) {
    std::ostringstream msg;
    msg << "exponent " << e << " is not on the level-" << group.level << " lattice";
    throw Error(ErrorCode::LevelExceeded, msg.str());
  }
}

bool reaches(const Exponent& step, const Exponent& target) {
  check_dims(step, target);
  if (target <= Exponent::zero(target.dimension())) return true;
  int step_lead = -1;
  int target_lead = -1;
  for (int i = 0; i < step.dimension(); ++i) {
    if (step_lead < 0 && step[i].numerator() != 0) step_lead = i;
    if (target_lead < 0 && target[i].numerator() != 0) target_lead = i;
  }
  if (step_lead < 0 || step[step_lead] < 0) return false;
  return step_lead <= target_lead;
}

bool OrderAutMatrix::is_identity() const {
  for (int i = 0; i < dimension(); ++i) {
    for (int j = 0; j < dimension(); ++j) {
      if (at(i, j) != ExpRational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

OrderAutMatrix OrderAutMatrix::identity(GroupKind kind, int dimension) {
  Matrix m(static_cast<std::size_t>(dimension),
           std::vector<ExpRational>(static_cast<std::size_t>(dimension), ExpRational(0)));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return OrderAutMatrix(kind, std::move(m));
}

std::ostream& operator<<(std::ostream& os, const OrderAutMatrix& m) {
  os << '[';
  for (int i = 0; i < m.dimension(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (int j = 0; j < m.dimension(); ++j) {
      if (j) os << ", ";
      print_rational(os, m.at(i, j));
    }
    os << ']';
  }
  return os << ']';
}

OrderAutMatrix oaut_check(const OrderAutMatrix::Matrix& m, GroupKind kind) {
  const std::size_t d = m.size();
  if (d == 0) throw Error(ErrorCode::DimensionError, "empty matrix");
  for (const auto& row : m) {
    if (row.size() != d) throw Error(ErrorCode::DimensionError, "matrix is not square");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j].numerator() != 0) {
        throw Error(ErrorCode::NotUpperTriangular,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is nonzero");
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const auto& diag = m[i][i];
    if (kind == GroupKind::IntLattice ? diag != ExpRational(1) : diag <= 0) {
      throw Error(ErrorCode::BadDiagonal, "diagonal entry " + std::to_string(i) +
                                              (kind == GroupKind::IntLattice
                                                   ? " must be 1"
                                                   : " must be positive"));
    }
    if (kind == GroupKind::IntLattice) {
      for (std::size_t j = i; j < d; ++j) {
        if (m[i][j].denominator() != 1) {
          throw Error(ErrorCode::NotIntegral, "integer lattice needs integer entries");
        }
      }
    }
  }
  return OrderAutMatrix(kind, m);
}

Exponent oaut_apply(const OrderAutMatrix& m, const Exponent& g) {
  const int d = m.dimension();
  if (g.dimension() != d) {
    throw Error(ErrorCode::DimensionError, "exponent does not match matrix dimension");
  }
  Exponent::Coords out(static_cast<std::size_t>(d), ExpRational(0));
  for (int i = 0; i < d; ++i) {
    if (g[i].numerator() == 0) continue;
    // Upper triangular: row i only touches columns j >= i.
    for (int j = i; j < d; ++j) out[static_cast<std::size_t>(j)] += g[i] * m.at(i, j);
  }
  return Exponent(std::move(out));
}

OrderAutMatrix oaut_compose(const OrderAutMatrix& outer, const OrderAutMatrix& inner) {
  if (outer.kind() != inner.kind() || outer.dimension() != inner.dimension()) {
    throw Error(ErrorCode::DimensionError, "matrices belong to different groups");
  }
  const int d = outer.dimension();
  OrderAutMatrix::Matrix prod(static_cast<std::size_t>(d),
                              std::vector<ExpRational>(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ExpRational acc = 0;
      for (int k = 0; k < d; ++k) acc += inner.at(i, k) * outer.at(k, j);
      prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  }
  return oaut_check(prod, outer.kind());
}

OrderAutMatrix oaut_invert(const OrderAutMatrix& m) {
  const int d = m.dimension();
  OrderAutMatrix::Matrix inv(static_cast<std::size_t>(d),
                             std::vector<ExpRational>(static_cast<std::size_t>(d), 0));
  // Back substitution column by column on the upper triangular system.
  for (int j = 0; j < d; ++j) {
    for (int i = j; i >= 0; --i) {
      ExpRational acc = (i == j) ? 1 : 0;
      for (int k = i + 1; k <= j; ++k) {
        acc -= m.at(i, k) * inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc / m.at(i, i);
    }
  }
  return oaut_check(inv, m.kind());
}

}  // namespace hahn
