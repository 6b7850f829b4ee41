#pragma once

#include <string>
#include <variant>

#include "liesym/algebra_spec.hpp"
#include "liesym/free_lie.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/permutation.hpp"
#include "liesym/poly.hpp"

namespace liesym {

/// Result of parsing under a spec: free specs yield FreeLieElement,
/// metabelian and nilpotent specs yield MetabelianElement.
using Element = std::variant<FreeLieElement, MetabelianElement>;

/// Grammar (whitespace free between tokens):
///   lie   := ["-"] lterm (("+"|"-") lterm)*
///   lterm := [rat ["*"]] lfactor (["*"] powterm)*
///   lfactor := GEN | "[" lie "," lie "]" | "(" lie ")"
///   powterm := GEN ["^" INT]
///   rat  := INT ["/" INT]
///   GEN  := "x" INT
/// A powterm suffix is the module action and needs a factor with no linear
/// part; under a free spec it brackets on the right in written order.
/// Errors carry 1-based line and column.
Element parse_lie(const std::string& text, const AlgebraSpec& spec);

/// Commutative polynomials, e.g. "3/2*x1^2*x2 - x3 + 1"; stars optional.
CommPoly parse_poly(const std::string& text, int rank);

/// One-line images: "2,1,3", "2 1 3" or "(2 1 3)"; must be a bijection
/// of {1..n}.
Permutation parse_permutation(const std::string& text, int n);

}  // namespace liesym
