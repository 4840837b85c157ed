#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcox/rational.hpp"

namespace qcox {

/// Dense univariate polynomial in q with rational coefficients.
///
/// Coefficients are stored in ascending degree and the highest stored
/// coefficient is never zero; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(Rational constant);                                          // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    /// c * q^k
    static Polynomial monomial(Rational c, std::size_t k);
    static Polynomial q() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of q^k, zero beyond the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const { return coeffs_.back(); }

    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool has_integer_coeffs() const;
    bool is_unit_sign() const;  // +1 or -1

    Rational evaluate(const Rational& at) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& scale(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Ascending-order human text, e.g. "1 - 2q + q^2".
    std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division. Throws on zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// num / den when the division leaves no remainder; throws
/// Error(InexactDivision) otherwise.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qcox
