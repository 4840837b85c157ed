#include "qcox/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "qcox/error.hpp"

namespace qcox {

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = std::move(c);
    Polynomial p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

bool Polynomial::has_integer_coeffs() const {
    for (const auto& c : coeffs_) {
        if (!c.is_integer()) return false;
    }
    return true;
}

bool Polynomial::is_unit_sign() const {
    return coeffs_.size() == 1 && (coeffs_[0] == Rational(1) || coeffs_[0] == Rational(-1));
}

Rational Polynomial::evaluate(const Rational& at) const {
    // Horner
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::scale(const Rational& rhs) {
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial{}, num};
    std::vector<Rational> rem = num.coeffs();
    std::vector<Rational> quot(rem.size() - den.coeffs().size() + 1);
    const Rational& lead = den.leading();
    const auto dsz = den.coeffs().size();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational factor = rem[k + dsz - 1] / lead;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < dsz; ++j) rem[k + j] -= factor * den.coeffs()[j];
        quot[k] = std::move(factor);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    auto [quot, rem] = divmod(num, den);
    if (!rem.is_zero()) {
        throw Error(ErrorKind::InexactDivision, "(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
    }
    return quot;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) {
            if (mag.is_integer()) {
                os << mag;
            } else {
                os << '(' << mag << ')';
            }
        }
        os << 'q';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace qcox
