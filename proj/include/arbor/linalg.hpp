#pragma once

#include "arbor/matrix.hpp"
#include "arbor/polynomial.hpp"

namespace arbor {

// Exact determinant via fraction-free (Bareiss) elimination. Throws on
// non-square input. det of the 0x0 matrix is 1.
BigInt det(const IntMatrix& m);

// det of M with row i and column j deleted.
BigInt minor_det(const IntMatrix& m, int i, int j);

// Characteristic polynomial det(xI - M), monic of degree n, exact integer
// coefficients. Computed by evaluating det(xI - M) at x = 0..n and
// interpolating over the rationals; the result is provably integral.
IntPolynomial char_poly(const IntMatrix& m);

BigInt eval_poly(const IntPolynomial& p, const BigInt& x);
BigRat eval_poly(const IntPolynomial& p, const BigRat& x);

// Sum of det(M_{S,S}) over all k-subsets S. Direct subset enumeration,
// rejected above the cap (use the char-poly coefficient identity instead).
BigInt sum_principal_minors(const IntMatrix& m, int k, int enum_cap = 14);

// ||M||_F^2, kept integral.
BigInt frobenius_norm_sq(const IntMatrix& m);

}  // namespace arbor
