#pragma once

// Function mini-language:
//   pow:A,a | ind:c1,c2,A | logpow:A,a,b,form[,ell] (form: el, l, dual)
//   sum:[expr;expr;...] | sampled:@file.csv | sampled:[x:v;x:v;...]
//   warp:k,[expr] | bliss:A,b,c
// Numbers may be "inf". With bindings, a number may also be a parameter
// name (optionally negated), e.g. "pow:1,alpha".

#include <map>
#include <string>

#include "sharphardy/funcspace.hpp"

namespace sharphardy {

using Bindings = std::map<std::string, double>;

FuncExpr parse_function(const std::string& text, const Bindings& bindings = {});

// Bindings for p, q, alpha, beta, a and ell.
Bindings bindings_for(const Exponents& e, double ell);

}  // namespace sharphardy
