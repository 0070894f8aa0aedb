#pragma once

#include <string>

#include "ellk3/fracpoly.hpp"
#include "ellk3/poly.hpp"

namespace ellk3 {

// Syntax error with 0-based input position.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

// Grammar (whitespace insignificant):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | 't' | '(' expr ')'
//   rational := int ('/' uint)?
// A '/' is consumed inside `rational` only when immediately followed by
// digits; parse_ratfun additionally accepts a top-level `expr '/' expr`.
QPoly parse_poly(const std::string& text);
RatFun parse_ratfun(const std::string& text);

// Canonical printing: descending exponents, explicit '*', "0" for zero.
std::string to_string(const QPoly& p);
std::string to_string(const RatFun& f);

}  // namespace ellk3
