// Text notation for elements and vectors.
//
// Elements are arithmetic expressions over integers, e1, e2, e3, w and b (the
// field's primitive element, read as the canonical representative of b^k):
//
//   1+2e1+2e2+2e3    (1+e1-e2-e3)/2    -b    e2*b^15    w^2    (-1, 4)    (0,1,2,3)
//
// A two-entry tuple (a, b) is a + b*w; a four-entry tuple lists the real
// coordinates, which may be halves such as -5/2. Products are written with '*'
// or by juxtaposition. Unicode forms of beta, the hatted units and the minus
// sign are accepted.
//
// Vectors are comma-separated lists of elements, optionally in [ ].

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hurwitz/code.hpp"

namespace hurwitz {

class NotationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `field` may be null when b is not allowed.
HurwitzInt parse_element(std::string_view text, const ResidueField* field);
/// Requires the value to lie in Z[w].
EisensteinInt parse_eisenstein(std::string_view text, const ResidueField* field);
CodeVector parse_vector(std::string_view text, const ResidueField* field);

/// "0", "b^k" for canonical field elements, otherwise the quaternion.
std::string format_element(const HurwitzInt& x, const ResidueField& field);
std::string format_vector(std::span<const HurwitzInt> v, const ResidueField& field);
/// "(loc, value); (loc, value)".
std::string format_errors(const ErrorPattern& e, const ResidueField& field);
/// "loc:value; loc:value", with values in element notation.
ErrorPattern parse_errors(std::string_view text, const ResidueField* field);

}  // namespace hurwitz
