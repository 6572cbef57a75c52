#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liouville/foode.hpp"
#include "liouville/integrating_factor.hpp"
#include "liouville/ratfunc.hpp"

namespace liouville {

struct ParseOptions {
  // Named rational parameters; at most one is supported.
  std::vector<std::string> params;
};

// Accepts "dy/dx = <expr>" and "<expr1> * dy/dx + <expr2> = 0"; more
// generally any equation affine in dy/dx. Throws SyntaxError,
// NonRationalError or ZeroDenominatorError.
FOODE parse_foode(std::string_view text, const ParseOptions& opts = {});

// A rational expression in x, y (and the declared parameter).
RatFunc parse_rational(std::string_view text, const ParseOptions& opts = {});

// The rendered integrating-factor form: products and quotients of
// exp(<expr>), bases raised to rational exponents, and constants (which are
// dropped, since factors are compared up to scale).
IntegratingFactor parse_integrating_factor(std::string_view text, const ParseOptions& opts = {});

}  // namespace liouville
