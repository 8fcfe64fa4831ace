#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "germ/poly.hpp"

namespace germ {

/// Syntax error with the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses the polynomial grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)* ;
///   term   := coef ('*' factor)* | factor ('*' factor)* ;
///   coef   := integer | '(' integer '/' positive-integer ')' ;
///   factor := ('x'|'y') ('^' positive-integer)? ;
/// Whitespace is insignificant. Coefficients are exact; overflow cannot occur.
Poly parse(std::string_view text);

/// Canonical text form, terms in canonical monomial order, minus signs
/// inline, coefficient 1 suppressed, rational coefficients parenthesized:
/// "x^5 - 10*x^3*y^2 + 5*x*y^4", "(1/3)*x*y", "0".
std::string format(const Poly& p);

}  // namespace germ
