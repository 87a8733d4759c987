#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kalu/errors.hpp"

namespace kalu {

using Integer = boost::multiprecision::cpp_int;

// Sparse univariate polynomial in t with arbitrary-precision integer
// coefficients. Exponents may be negative in intermediate values (the
// symmetrization operator composes through negative degrees); zero
// coefficients are never stored, so operator== is mathematical equality.
class IntPoly {
public:
    IntPoly() = default;

    static IntPoly constant(const Integer& c);
    static IntPoly term(int exponent, const Integer& c);

    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;  // throws internal_error on the zero polynomial
    int degree() const;        // throws internal_error on the zero polynomial
    Integer coeff(int exponent) const;
    const std::map<int, Integer>& terms() const { return terms_; }

    void add_term(int exponent, const Integer& c);

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { lhs += rhs; return lhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { lhs -= rhs; return lhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    Integer eval_at_one() const;
    bool has_negative_exponent() const;
    bool all_exponents_even() const;
    bool all_coeffs_non_negative() const;
    // coeff(center + d) == coeff(center - d) for every d
    bool palindromic_about(int center) const;

    // Ascending exponents: "1 + t^2 + 2*t^4". The zero polynomial is "0".
    std::string to_text() const;

private:
    std::map<int, Integer> terms_;
};

// Exact division in Z[t]; throws internal_error if the quotient does not
// exist. Both arguments must have non-negative exponents.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

// 1 + t^2 + ... + t^{2*beta}; the zero polynomial when beta < 0.
IntPoly h_poly(int beta);

// P_alpha = h_0 * h_1 * ... * h_{alpha-1}; 1 when alpha == 0, 0 when alpha < 0.
IntPoly big_p(int alpha);

// Poincare polynomial of the Grassmannian G_k(C^l): P_l / (P_k * P_{l-k}).
IntPoly gauss_poincare(int k, int l);

// Keep only the terms with exponent >= beta.
IntPoly truncate_below(const IntPoly& p, int beta);

// c_0 + sum_{e>0} c_e (t^e + t^{-e}); p must have non-negative exponents.
IntPoly symmetrize_about_zero(const IntPoly& p);

// Multiply by t^beta (beta may be negative).
IntPoly shift_exponents(const IntPoly& p, int beta);

// Truncate below m, then symmetrize about exponent m. The result is
// palindromic about m; a negative exponent in the result is a broken
// invariant (the input reached past degree 2m) and throws internal_error.
IntPoly u_tilde(const IntPoly& r, int m);

}  // namespace kalu
