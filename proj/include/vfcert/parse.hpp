#ifndef VFCERT_PARSE_HPP
#define VFCERT_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "vfcert/ratfunc.hpp"

namespace vfcert {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// Expression grammar:
///   expr     := term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*        -- '/' only in rational-function mode
///   factor   := base ('^' natural)?
///   base     := rational | variable | '(' expr ')' | '-' base
///   rational := integer ('/' positive-integer)?
///   variable := [A-Za-z][A-Za-z0-9_']*
/// Implicit multiplication is not accepted.
RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& vars);

/// Same grammar with '/' restricted to rational literals; the result is a
/// polynomial by construction.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace vfcert

#endif
