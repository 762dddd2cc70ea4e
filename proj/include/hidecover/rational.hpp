#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hidecover {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT: implicit on purpose, integers are rationals
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "a" or "a/b" with optional leading sign. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

Rational abs(const Rational& r);

}  // namespace hidecover
