#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lsra {

// Thrown on contract violations of the public operations (bad mediant
// endpoints, selecting from an empty candidate list, ...).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

#define LSRA_REQUIRE(cond, msg) \
    do {                        \
        if (!(cond)) throw ::lsra::ContractViolation(msg); \
    } while (0)

/// Exact arbitrary-precision rational, always in canonical lowest terms
/// (gcd(|num|, den) = 1, den >= 1, zero is 0/1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "123", "-4/6" (reduced), or a decimal "3.14" scaled exactly.
    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    /// Largest integer <= *this.
    Rational floor() const;
    /// Smallest integer >= *this.
    Rational ceil() const;

    /// "3", "-3", "1/2", "-7/4".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// Tie-breaking key of §-style Selection Rules: the canonical denominator.
inline const mpz_class& denominator_of(const Rational& v) { return v.den(); }

/// (num(lo)+num(hi)) / (den(lo)+den(hi)), reduced; lies strictly in (lo, hi).
Rational mediant(const Rational& lo, const Rational& hi);

} // namespace lsra
