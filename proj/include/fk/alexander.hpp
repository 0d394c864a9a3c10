#pragma once

#include "fk/diagram.hpp"
#include "fk/laurent.hpp"

namespace fk {

// Alexander polynomial of a knot diagram via the crossing/arc presentation
// matrix, normalized palindromic with value 1 at t = 1. Small diagrams go
// through fraction-free symbolic elimination; large ones through modular
// evaluation, interpolation and CRT. Both routes agree exactly.
LaurentPolynomial alexander_polynomial(const LinkDiagram& d);

// The two determinant routes, exposed for cross-checking.
LaurentPolynomial alexander_symbolic(const LinkDiagram& d);
LaurentPolynomial alexander_modular(const LinkDiagram& d);

// |Delta(-1)|.
long long knot_determinant(const LinkDiagram& d);
long long knot_determinant(const LaurentPolynomial& normalized_alexander);

// Alexander polynomial of the (p,q) torus knot from the closed form
// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), by exact division.
LaurentPolynomial torus_alexander(int p, int q);

// Second Conway coefficient recovered from a normalized Alexander polynomial:
// a(K) = (1/2) * sum of n^2 * c_n. An algebraic route to a(K) independent of
// the skein recursion.
long long conway_a2_from_alexander(const LaurentPolynomial& normalized_alexander);

}  // namespace fk
