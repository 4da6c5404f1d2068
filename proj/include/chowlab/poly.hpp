#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chowlab/errors.hpp"

namespace chowlab {

/// Univariate polynomial over Z, dense coefficients, constant term first.
///
/// Canonical form: no trailing zero coefficient is stored. The zero polynomial
/// has an empty coefficient vector; degree() returns -1 for it, standing in
/// for "minus infinity".
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(long c) : IntPolynomial(mpz_class(c)) {}
    explicit IntPolynomial(mpz_class c);
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    /// coeff * x^power
    static IntPolynomial monomial(int power, mpz_class coeff = 1);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool nonneg_coeffs() const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    /// x^rank * p(1/x).  Requires degree() <= rank (DomainError otherwise).
    IntPolynomial reversed(int rank) const;

    /// True iff the coefficient sequence reads the same in both directions
    /// within degree `rank`.
    bool palindromic(int rank) const { return *this == reversed(rank); }

    /// Exact quotient by (x - 1); DomainError if the remainder is nonzero.
    IntPolynomial div_x_minus_one() const;

    /// Canonical printing, ascending powers: "1 + 4x + x^2"; "0" for zero.
    std::string str() const;

  private:
    std::vector<mpz_class> c_;
    void trim();
};

} // namespace chowlab
