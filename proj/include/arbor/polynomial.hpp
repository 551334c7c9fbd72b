#pragma once

#include <vector>

#include "arbor/numeric.hpp"

namespace arbor {

// Integer polynomial, coefficients in ascending degree order, kept canonical
// (no trailing zeros; the zero polynomial has an empty coefficient vector).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial zero() { return IntPolynomial(); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    BigInt coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
        return c_[k];
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
        return acc;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

}  // namespace arbor
