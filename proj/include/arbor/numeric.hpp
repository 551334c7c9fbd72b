#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace arbor {

// All arithmetic in this project is exact. Integers are GMP big integers,
// fractions are GMP rationals kept in canonical (reduced, positive
// denominator) form.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow2(unsigned long exp) { return int_pow(BigInt(2), exp); }

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

// Integer square root when x is a perfect square; nullopt otherwise
// (negative inputs are never perfect squares).
inline std::optional<BigInt> perfect_square_root(const BigInt& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& x) {
    return perfect_square_root(x).has_value();
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace arbor
