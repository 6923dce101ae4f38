#ifndef TOROIDAL_EXPR_HPP
#define TOROIDAL_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "toroidal/liealg.hpp"

namespace tor {

/// Parse or evaluation error; `position` is the 0-based offset into the input.
class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& msg, std::size_t position);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// @brief Evaluates a calculator expression and prints the result.
///
/// Grammar (no precedence beyond brackets and parentheses):
///
///     expr   := term (('+' | '-') term)*
///     term   := ['-'] factor ('*' factor)*        at most one non-scalar factor
///     factor := number ['/' number] | parameter | '(' expr ')'
///             | 'bracket' '[' expr ',' expr ']' | 'act' '(' expr ',' expr ')'
///             | 'vac' | 'k0' | 'k1' | 'loop(m0,m1,u)' | 'kmn(m,n)'
///             | 'der(m0,m1,i)' | 'dtilde(m0,m1)' | 'dbar(n,m)' | 'dvar(n,m)'
///
/// u is a basis label of g or its index; parameters are mu, ell, alpha, beta,
/// c.  `act(x, v)` acts on a vector of the vacuum module V(ell), built from
/// `vac`; x must lie in the algebra acting on it.  Toroidal results print in
/// the canonical basis with derivation pairs grouped as dtilde.
std::string eval_expr(const Toroidal& T, const std::string& text);

}  // namespace tor

#endif  // TOROIDAL_EXPR_HPP
