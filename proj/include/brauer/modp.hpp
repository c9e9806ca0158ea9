#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/cyclotomic.hpp"

namespace brauer::cyclo {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t mod);

/// Arithmetic in F_{p^k} = F_p[x]/(f) for a fixed monic irreducible f,
/// chosen deterministically (least coefficient tuple).  Elements are
/// little-endian coefficient vectors of length k.
class FqField {
  public:
    using Elem = std::vector<std::uint32_t>;

    static FqField make(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return irred_; }

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const;
    Elem from_int(std::uint64_t n) const;
    /// x, the image of the polynomial variable (a generator candidate).
    Elem gen() const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, std::uint64_t n) const;
    Elem inv(const Elem& a) const;

    bool is_zero(const Elem& a) const;
    std::uint64_t element_order(const Elem& a) const;

    /// Canonical integer key sum c_i p^i; used for deterministic element
    /// enumeration and for residue-vector partition keys.
    std::uint64_t encode(const Elem& a) const;
    Elem decode(std::uint64_t code) const;
    std::string str(const Elem& a) const;

    /// Least primitive root under the encode order.
    Elem least_primitive_root() const;

  private:
    std::uint32_t p_ = 0, k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> irred_; // monic, length k+1
};

/// The reduction map from the ring of algebraic integers of Q(zeta_e),
/// localized away from p, onto F_{p^k}: with e = p^a * m, gcd(m, p) = 1,
/// the p-power part of zeta_e collapses to 1 and the m-part maps to a
/// fixed element theta of exact multiplicative order m.  k is the
/// multiplicative order of p mod m.
///
/// `variant` selects theta among the primitive m-th roots (theta_0^{u}
/// with u the variant-th unit mod m); distinct variants realize distinct
/// maximal ideals above p when m > 2, which the blocks module uses to
/// confirm that block partitions do not depend on this choice.
class ModpReduction {
  public:
    static ModpReduction make(std::uint32_t e, std::uint32_t p, std::uint32_t variant = 0);

    std::uint32_t conductor() const { return e_; }
    std::uint32_t prime() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t variant() const { return variant_; }
    const FqField& field() const { return field_; }
    const FqField::Elem& theta() const { return theta_; }

    /// Reduce a rational with denominator prime to p; throws
    /// nonintegral_error otherwise.
    FqField::Elem reduce_rational(const Rat& r) const;

    /// Reduce a cyclotomic value of conductor dividing e.
    FqField::Elem reduce(const Cyclotomic& x) const;

    /// Verifies theta^m = 1 and theta^d != 1 for every proper divisor d.
    bool embedding_check() const;

  private:
    std::uint32_t e_ = 1, p_ = 2, a_ = 0, m_ = 1, variant_ = 0;
    std::uint64_t pa_inv_mod_m_ = 1;
    FqField field_;
    FqField::Elem theta_;
    std::vector<FqField::Elem> theta_pows_;
};

} // namespace brauer::cyclo
