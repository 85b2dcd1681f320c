#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace imagebin {

using Rational = mpq_class;
using Integer = mpz_class;

/// The two exact fields supported by the toolkit.
enum class Field : std::uint8_t { Rational, GF2 };

const char* field_name(Field f);
Field parse_field(std::string_view name);

/// Exact element of Q or GF(2).
///
/// Rationals are kept canonical (lowest terms, positive denominator). GF(2)
/// values are stored as 0 or 1; addition is XOR and multiplication is AND.
/// Mixing fields in one operation throws InputError.
class Scalar {
public:
    Scalar() = default;
    Scalar(Field field, Rational value);

    static Scalar zero(Field f) { return Scalar(f, Rational(0)); }
    static Scalar one(Field f) { return Scalar(f, Rational(1)); }
    static Scalar rational(const Rational& v) { return Scalar(Field::Rational, v); }
    static Scalar rational(long num, long den = 1);
    static Scalar bit(bool b) { return Scalar(Field::GF2, Rational(b ? 1 : 0)); }

    /// Parses an integer or "p/q". Under GF2 only 0 and 1 are accepted.
    static Scalar parse(std::string_view text, Field f);

    Field field() const { return field_; }
    const Rational& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    /// "p/q" for every rational (including "1/1"); "0" or "1" for GF(2).
    std::string to_string() const;
    /// Integer form when the denominator is 1, "p/q" otherwise. Used in files.
    std::string to_compact_string() const;

private:
    void check_same(const Scalar& o) const;

    Field field_ = Field::Rational;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Same textual rules as Scalar::parse, rational only.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

}  // namespace imagebin
