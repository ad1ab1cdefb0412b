#pragma once

// Literal syntax shared by the CLI and configuration files.
//
//   rational   3, -3/2
//   exponent   3, 3/2, [1, -2/3]
//   coeff      3/2, (1+2r), (-1/2r)       r stands for √m of the field
//   series     1 + 2*t^(1/2) - (1+1r)*t^[1,0] + O(t^2)
//
// Printing is canonical: terms by ascending exponent, cutoff as `+ O(t^e)`.

#include <iosfwd>
#include <string>
#include <string_view>

#include "hahn/series.hpp"

namespace hahn {

ExpRational parse_exp_rational(std::string_view text);
Rational parse_rational(std::string_view text);
Exponent parse_exponent(std::string_view text, int dimension);
FieldElement parse_field_element(std::string_view text, const FieldDescriptor& field);
// Exponents must lie on the group's lattice (LevelExceeded otherwise). A
// missing O-term gives `default_cutoff`.
Series parse_series(std::string_view text, const GroupDescriptor& group,
                    const FieldDescriptor& field, const Bound& default_cutoff);

std::string format_exp_rational(const ExpRational& q);
std::string format_exponent(const Exponent& e);
std::string format_field_element(const FieldElement& c);
std::string format_series(const Series& a);

std::ostream& operator<<(std::ostream& os, const Series& a);

}  // namespace hahn
