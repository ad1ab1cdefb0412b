#include "hahn/text.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "hahn/error.hpp"

namespace hahn {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Raw peek without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  // [-]digits[/digits], returned as numerator/denominator strings.
  std::pair<std::string, std::string> rational_parts() {
    std::string sign;
    if (accept('-')) sign = "-";
    std::string num = sign + digits();
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      den = digits();
    }
    return {num, den};
  }

  ExpRational exp_rational() {
    const std::size_t start = pos_;
    auto [num, den] = rational_parts();
    try {
      const long long n = std::stoll(num);
      const long long d = std::stoll(den);
      if (d == 0) throw SyntaxError(start, "zero denominator");
      return ExpRational(n, d);
    } catch (const std::out_of_range&) {
      throw SyntaxError(start, "exponent out of range");
    }
  }

  Rational rational() {
    const std::size_t start = pos_;
    auto [num, den] = rational_parts();
    Rational n(num), d(den);
    if (sgn(d) == 0) throw SyntaxError(start, "zero denominator");
    Rational q = n / d;
    q.canonicalize();
    return q;
  }

  Exponent exponent(int dimension) {
    Exponent::Coords coords;
    if (accept('[')) {
      coords.push_back(exp_rational());
      while (accept(',')) coords.push_back(exp_rational());
      expect(']');
    } else if (accept('(')) {
      coords.push_back(exp_rational());
      expect(')');
    } else {
      coords.push_back(exp_rational());
    }
    if (static_cast<int>(coords.size()) != dimension) {
      throw Error(ErrorCode::DimensionError, "exponent has " + std::to_string(coords.size()) +
                                                 " coordinates, group has " +
                                                 std::to_string(dimension));
    }
    return Exponent(std::move(coords));
  }

  // Inside parentheses: a sum of rationals and rational multiples of r.
  FieldElement quadratic(const FieldDescriptor& field) {
    Rational p(0), q(0);
    bool first = true;
    while (peek() != ')') {
      int sign = 1;
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Rational value(1);
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) value = rational();
      if (accept('r')) {
        if (field.is_rational()) fail("'r' used in the rational field");
        q += sign * value;
      } else {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number or 'r'");
        p += sign * value;
      }
      first = false;
    }
    if (first) fail("empty coefficient");
    expect(')');
    return field.is_rational() ? FieldElement(p) : FieldElement(p, q, field.radicand);
  }

  FieldElement coefficient(const FieldDescriptor& field) {
    if (accept('(')) return quadratic(field);
    return FieldElement(rational());
  }

  // After 't': optional '^' exponent.
  Exponent monomial_exponent(const GroupDescriptor& group) {
    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const char c = peek();
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '(' || c == '[')) {
        throw SyntaxError(at, "expected an exponent after '^'");
      }
      return exponent(group.dimension);
    }
    if (group.dimension != 1) fail("bare 't' needs an explicit vector exponent");
    return Exponent{ExpRational(1)};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_integer(const ExpRational& q) { return q.denominator() == 1; }

std::string monomial_text(const Exponent& e) {
  if (e.dimension() == 1) {
    const ExpRational& q = e[0];
    if (q == ExpRational(1)) return "t";
    if (is_integer(q)) return "t^" + std::to_string(q.numerator());
    return "t^(" + format_exp_rational(q) + ")";
  }
  std::string out = "t^[";
  for (int i = 0; i < e.dimension(); ++i) {
    if (i) out += ",";
    out += format_exp_rational(e[i]);
  }
  return out + "]";
}

}  // namespace

ExpRational parse_exp_rational(std::string_view text) {
  Parser p(text);
  ExpRational q = p.exp_rational();
  p.expect_end();
  return q;
}

Rational parse_rational(std::string_view text) {
  Parser p(text);
  Rational q = p.rational();
  p.expect_end();
  return q;
}

Exponent parse_exponent(std::string_view text, int dimension) {
  Parser p(text);
  Exponent e = p.exponent(dimension);
  p.expect_end();
  return e;
}

FieldElement parse_field_element(std::string_view text, const FieldDescriptor& field) {
  Parser p(text);
  FieldElement c;
  if (p.accept('-')) {
    c = -p.coefficient(field);
  } else {
    c = p.coefficient(field);
  }
  p.expect_end();
  return c;
}

Series parse_series(std::string_view text, const GroupDescriptor& group,
                    const FieldDescriptor& field, const Bound& default_cutoff) {
  Parser p(text);
  std::vector<Term> terms;
  Bound cutoff = default_cutoff;
  bool first = true;
  bool have_cutoff = false;
  while (!p.at_end()) {
    int sign = 1;
    if (p.accept('+')) {
      sign = 1;
    } else if (p.accept('-')) {
      sign = -1;
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    first = false;
    if (have_cutoff) p.fail("O-term must come last");
    const std::size_t term_start = p.pos();
    const char c = p.peek();
    if (c == 'O') {
      p.accept('O');
      p.expect('(');
      Exponent e = Exponent::zero(group.dimension);
      if (!p.accept('1')) {
        p.expect('t');
        e = p.monomial_exponent(group);
      }
      p.expect(')');
      if (sign < 0) throw SyntaxError(term_start, "O-term cannot be negated");
      cutoff = Bound(std::move(e));
      have_cutoff = true;
      continue;
    }
    FieldElement coef(1);
    Exponent exp = Exponent::zero(group.dimension);
    if (c == 't') {
      p.accept('t');
      exp = p.monomial_exponent(group);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
      coef = p.coefficient(field);
      if (p.accept('*')) {
        p.expect('t');
        exp = p.monomial_exponent(group);
      }
    } else {
      p.fail("expected a term");
    }
    if (!exp.on_lattice(group.level)) {
      std::ostringstream msg;
      msg << "exponent " << exp << " is not on the level-" << group.level << " lattice";
      throw Error(ErrorCode::LevelExceeded, msg.str());
    }
    terms.push_back({std::move(exp), sign < 0 ? -coef : coef});
  }
  if (first) p.fail("empty series");
  return Series::from_terms(group, field, std::move(terms), cutoff);
}

std::string format_exp_rational(const ExpRational& q) {
  std::string out = std::to_string(q.numerator());
  if (q.denominator() != 1) out += "/" + std::to_string(q.denominator());
  return out;
}

std::string format_exponent(const Exponent& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

std::string format_field_element(const FieldElement& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string format_series(const Series& a) {
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    FieldElement c = t.coef;
    bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.exp.is_zero()) {
      out += format_field_element(c);
    } else if (c.is_one()) {
      out += monomial_text(t.exp);
    } else {
      out += format_field_element(c) + "*" + monomial_text(t.exp);
    }
  }
  if (first) out = "0";
  if (a.cutoff().is_finite()) {
    const Exponent& c = a.cutoff().value();
    out += " + O(" + (c.is_zero() ? std::string("1") : monomial_text(c)) + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Series& a) { return os << format_series(a); }

}  // namespace hahn
