#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "brauer/errors.hpp"

namespace brauer::cyclo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with canonical form: den > 0, gcd(num, den) = 1.
/// All character-value arithmetic runs on these; no floating point anywhere.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ += o.num_;
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ *= o.num_;
            return *this;
        }
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Parses "n" or "n/d".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(BigInt(s));
            return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw malformed_input_error("bad rational literal: " + s);
        }
    }

  private:
    void normalize() {
        if (den_ == 0) throw error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_, den_;
};

/// p-adic valuation of a nonzero rational.
inline long p_valuation(const Rat& x, std::uint64_t p) {
    if (x.is_zero()) throw error("p-adic valuation of zero");
    if (p < 2) throw malformed_input_error("p_valuation needs p >= 2");
    long v = 0;
    BigInt n = x.num() < 0 ? BigInt(-x.num()) : x.num();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    BigInt d = x.den();
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

/// p-part p^{v_p(n)} of a positive integer.
inline BigInt p_part(BigInt n, std::uint64_t p) {
    if (n <= 0) throw error("p_part of non-positive integer");
    BigInt out = 1;
    while (n % p == 0) {
        n /= p;
        out *= p;
    }
    return out;
}

inline long p_valuation(std::uint64_t n, std::uint64_t p) {
    return p_valuation(Rat(BigInt(n)), p);
}

} // namespace brauer::cyclo
