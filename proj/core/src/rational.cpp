#include "qcox/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "qcox/error.hpp"

namespace qcox {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
    : value_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num_text = body.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_text), 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace qcox
