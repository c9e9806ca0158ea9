#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/rational.hpp"

namespace brauer::cyclo {

/// Exact element of the cyclotomic field Q(zeta_e), stored in the power
/// basis 1, zeta, ..., zeta^(phi(e)-1) fully reduced modulo the e-th
/// cyclotomic polynomial.  Canonical form makes zero-testing and equality
/// immediate, which the block partitions depend on.
///
/// Values carry their own conductor; binary operations between different
/// conductors lift both sides to the lcm first.  Values are immutable in
/// spirit: every operation returns a fresh value.
class Cyclotomic {
  public:
    /// Zero (conductor 1).
    Cyclotomic();
    /// A rational constant (conductor 1).
    explicit Cyclotomic(Rat r);
    Cyclotomic(long long n) : Cyclotomic(Rat(n)) {}

    /// zeta_e^k.  Multiplicative order is e/gcd(e,k).
    static Cyclotomic zeta(std::uint32_t e, std::uint64_t k);

    /// Value from raw power-basis coefficients (must have length phi(e)).
    static Cyclotomic from_coeffs(std::uint32_t e, std::vector<Rat> coeffs);

    std::uint32_t conductor() const { return e_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a rational; throws if not rational.
    Rat rational_value() const;
    /// The value as an exact integer; throws if not a rational integer.
    BigInt integer_value() const;

    /// Same value viewed in Q(zeta_L); e must divide L.
    Cyclotomic lifted_to(std::uint32_t L) const;

    /// Galois twist zeta_e -> zeta_e^t, for gcd(t, e) = 1.
    Cyclotomic galois(std::uint64_t t) const;
    /// Complex conjugation zeta -> zeta^(-1).
    Cyclotomic conj() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    Cyclotomic scaled(const Rat& r) const;
    /// Division by a nonzero rational.
    Cyclotomic divided_by(const Rat& r) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Deterministic total order: compares at the common conductor,
    /// lexicographically on coefficients.  Used for stable row sorting.
    int compare(const Cyclotomic& o) const;

    /// Human-readable form, e.g. "1 - z8^2" with z8 = zeta_8.
    std::string str() const;

  private:
    std::uint32_t e_;
    std::vector<Rat> c_;
};

std::uint32_t euler_phi(std::uint32_t n);

/// Global conductor cap (default 2520); computations requesting a larger
/// conductor raise resource_error naming the cap.
std::uint32_t conductor_cap();
void set_conductor_cap(std::uint32_t cap);

} // namespace brauer::cyclo
