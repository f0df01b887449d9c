#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rspin {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number with canonical representation: gcd(num, den) = 1,
/// den > 0, zero is 0/1.  Arbitrary-precision throughout.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        // cpp_rational's (num, den) constructor is unusable on some Boost
        // versions; division canonicalizes sign and gcd for us.
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p/q" or "p" (optional leading '-').  Throws on malformed input
    /// or q = 0.
    static Rational parse(std::string_view s);

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return is_negative() ? -*this : *this; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    double to_double() const { return v_.convert_to<double>(); }

private:
    boost::multiprecision::cpp_rational v_;
};

/// n! for n >= 0; throws std::invalid_argument for negative n.
Integer factorial(int n);

/// base^e for e >= 0.
Integer int_pow(const Integer& base, unsigned e);

}  // namespace rspin
