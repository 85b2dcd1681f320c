#include "imagebin/scalar.hpp"

#include <cctype>
#include <ostream>

#include "imagebin/errors.hpp"

namespace imagebin {

const char* field_name(Field f) {
    return f == Field::GF2 ? "gf2" : "rational";
}

Field parse_field(std::string_view name) {
    if (name == "rational") return Field::Rational;
    if (name == "gf2") return Field::GF2;
    throw InputError("unknown field '" + std::string(name) + "' (expected rational or gf2)");
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw InputError("malformed scalar '" + std::string(text) + "' (expected integer or p/q)");
    std::string n(num[0] == '+' ? num.substr(1) : num);
    mpz_class p(n, 10), q(std::string(den), 10);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar::Scalar(Field field, Rational value) : field_(field), value_(std::move(value)) {
    value_.canonicalize();
    if (field_ == Field::GF2) {
        if (value_.get_den() != 1) throw InputError("GF(2) scalar must be an integer");
        mpz_class r = value_.get_num() % 2;
        value_ = (r != 0) ? 1 : 0;
    }
}

Scalar Scalar::rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(Field::Rational, r);
}

Scalar Scalar::parse(std::string_view text, Field f) {
    Rational r = parse_rational(text);
    if (f == Field::GF2 && r != 0 && r != 1)
        throw InputError("GF(2) scalar must be 0 or 1, got '" + std::string(text) + "'");
    return Scalar(f, r);
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_) throw InputError("field mismatch in scalar arithmetic");
}

Scalar Scalar::operator-() const {
    if (field_ == Field::GF2) return *this;
    Scalar r = *this;
    r.value_ = -value_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_ == Field::GF2)
        value_ = (value_ != o.value_) ? 1 : 0;
    else
        value_ += o.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_ == Field::GF2)
        value_ = (value_ != o.value_) ? 1 : 0;
    else
        value_ -= o.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    value_ *= o.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    if (o.is_zero()) throw InputError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Scalar::to_string() const {
    if (field_ == Field::GF2) return is_zero() ? "0" : "1";
    return rational_to_string(value_);
}

std::string Scalar::to_compact_string() const {
    if (field_ == Field::GF2 || value_.get_den() == 1) return value_.get_num().get_str();
    return rational_to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

}  // namespace imagebin
