#pragma once

#include <string>

#include "liesym/free_lie.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/poly.hpp"

namespace liesym {

/// Deterministic text form; parse_lie(print_canonical(e), spec) == e.
/// Linear terms first by index, then monomials in basis order, e.g.
/// "x1 + x2 - [x2,x1]x1^2x2".
std::string print_canonical(const MetabelianElement& e);

/// Free elements print through their Lyndon coordinates as nested brackets,
/// e.g. "[x1,[x1,x2]] + 2[[x1,x2],x2]".
std::string print_canonical(const FreeLieElement& e);

/// Polynomials print with explicit stars: "1 + 3/2*x1^2*x2 - x3".
std::string print_canonical(const CommPoly& p);

/// "[x2,x1]x1^2x2" (no coefficient).
std::string print_monomial(const BahturinMonomial& m);

/// "112" style word text for diagnostics.
std::string print_word(const NCWord& w);

}  // namespace liesym
