#include "arbor/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace arbor {

BigInt det(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix must be square");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; k++) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; r++)
                if (a.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = k; c < n; c++) swap(a.at(k, c), a.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++) {
                BigInt t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                // Bareiss: division by the previous pivot is exact
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = t;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

BigInt minor_det(const IntMatrix& m, int i, int j) {
    if (!m.square()) throw std::invalid_argument("minor_det: matrix must be square");
    if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols())
        throw std::invalid_argument("minor_det: index out of range");
    return det(m.without_row_col(i, j));
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix must be square");
    int n = m.rows();
    if (n == 0) return IntPolynomial({BigInt(1)});

    // values of det(xI - M) at x = 0..n
    std::vector<BigInt> val(n + 1);
    for (int x = 0; x <= n; x++) {
        IntMatrix a = m;
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) a.at(i, j) = (i == j ? BigInt(x) - m.at(i, j) : -m.at(i, j));
        val[x] = det(a);
    }

    // Lagrange interpolation over Q; the polynomial is integral so the
    // rational coefficients reduce to integers.
    std::vector<BigRat> coeff(n + 1, BigRat(0));
    std::vector<BigRat> basis;
    for (int i = 0; i <= n; i++) {
        // numerator polynomial prod_{j != i} (x - j), denominator prod_{j != i} (i - j)
        basis.assign(1, BigRat(1));
        BigInt denom = 1;
        for (int j = 0; j <= n; j++) {
            if (j == i) continue;
            denom *= BigInt(i - j);
            basis.push_back(BigRat(0));
            for (int k = static_cast<int>(basis.size()) - 1; k >= 1; k--)
                basis[k] = basis[k - 1] - BigRat(j) * basis[k];
            basis[0] = -BigRat(j) * basis[0];
        }
        BigRat scale = make_rat(val[i], denom);
        for (int k = 0; k <= n; k++) coeff[k] += scale * basis[k];
    }

    std::vector<BigInt> out(n + 1);
    for (int k = 0; k <= n; k++) {
        BigRat c = coeff[k];
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("char_poly: interpolation not integral");
        out[k] = c.get_num();
    }
    return IntPolynomial(std::move(out));
}

BigInt eval_poly(const IntPolynomial& p, const BigInt& x) { return p.eval(x); }

BigRat eval_poly(const IntPolynomial& p, const BigRat& x) { return p.eval(x); }

BigInt sum_principal_minors(const IntMatrix& m, int k, int enum_cap) {
    if (!m.square()) throw std::invalid_argument("sum_principal_minors: matrix must be square");
    int n = m.rows();
    if (k < 0 || k > n) throw std::invalid_argument("sum_principal_minors: k out of range");
    if (n > enum_cap)
        throw std::invalid_argument("sum_principal_minors: n exceeds enumeration cap");
    if (k == 0) return 1;
    if (k == n) return det(m);

    BigInt total = 0;
    std::vector<int> idx(k);
    for (int i = 0; i < k; i++) idx[i] = i;
    while (true) {
        total += det(m.principal_submatrix(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) i--;
        if (i < 0) break;
        idx[i]++;
        for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
    }
    return total;
}

BigInt frobenius_norm_sq(const IntMatrix& m) {
    BigInt s = 0;
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) s += m.at(i, j) * m.at(i, j);
    return s;
}

}  // namespace arbor
