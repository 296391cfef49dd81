#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coverdepth {

// Unbounded signed integer. All combinatorial quantities (binomials,
// Gaussian binomials, weight counts) live here; nothing in the exact
// pipelines ever touches floating point.
using BigInt = mpz_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt bigint_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// Exact rational, always in lowest terms with positive denominator.
// Thin value wrapper over GMP's mpq so the normalization invariant is
// enforced at every construction site.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(const BigInt& n) : v_(n) {}       // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    // "num/den", or just "num" when the denominator is 1.
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
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

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace coverdepth
