#pragma once

#include <string>

#include "liouville/coeff.hpp"
#include "liouville/foode.hpp"
#include "liouville/integrating_factor.hpp"
#include "liouville/mpoly.hpp"
#include "liouville/ratfunc.hpp"

namespace liouville {

enum class RenderStyle {
  plain,            // "x^3 + 1", "exp(x) * y^-2"
  json_embeddable,  // compact: "x^3+1", "exp(x)*y^-2"
};

struct RenderOptions {
  RenderStyle style = RenderStyle::plain;
  std::string param_name = "b";
};

// All renderings use descending graded-lex term order and parse back under
// the input grammar.
std::string render(const Coeff& c, const RenderOptions& opts = {});
std::string render(const MPoly& p, const RenderOptions& opts = {});
std::string render(const RatFunc& f, const RenderOptions& opts = {});
std::string render(const FOODE& eq, const RenderOptions& opts = {});
std::string render(const IntegratingFactor& r, const RenderOptions& opts = {});

}  // namespace liouville
