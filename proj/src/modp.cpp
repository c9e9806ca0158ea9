#include "brauer/modp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brauer::cyclo {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (n) {
        if (n & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        n >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t mod) {
    if (mod == 1) return 1;
    if (std::gcd(a % mod, mod) != 1)
        throw precondition_error("multiplicative order of non-unit");
    std::uint64_t acc = a % mod, o = 1;
    while (acc != 1) {
        acc = mulmod(acc, a, mod);
        ++o;
        if (o > mod) throw internal_error("order computation overran modulus");
    }
    return o;
}

// --------------------------------------------------------------------------
// FqField
// --------------------------------------------------------------------------

namespace {

using Poly = std::vector<std::uint32_t>; // little-endian, coefficients mod p

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    // f monic of degree k
    int k = static_cast<int>(f.size()) - 1;
    while (static_cast<int>(a.size()) > k) {
        std::uint32_t c = a.back();
        a.pop_back();
        if (c == 0) continue;
        int shift = static_cast<int>(a.size()) - k;
        for (int j = 0; j < k; ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(f[j]) * c % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
        }
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> conv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            conv[i + j] = (conv[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    Poly c(conv.begin(), conv.end());
    return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly a, std::uint64_t n, const Poly& f, std::uint32_t p) {
    Poly r{1};
    while (n) {
        if (n & 1) r = poly_mulmod(r, a, f, p);
        a = poly_mulmod(a, a, f, p);
        n >>= 1;
    }
    return r;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        std::uint32_t lead = b.back();
        if (lead != 1) {
            std::uint64_t inv = powmod(lead, p - 2, p);
            for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
        }
        Poly f = b;
        Poly r = poly_mod(std::move(a), f, p);
        poly_trim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
    // monic f of degree k: irreducible iff x^(p^k) = x mod f and
    // gcd(x^(p^(k/r)) - x, f) = 1 for all prime r | k.
    std::uint32_t k = static_cast<std::uint32_t>(f.size()) - 1;
    if (k == 1) return true;
    Poly x{0, 1};
    Poly acc = x;
    std::vector<Poly> frobenius(k + 1); // x^(p^i) mod f
    frobenius[0] = x;
    for (std::uint32_t i = 1; i <= k; ++i) {
        acc = poly_powmod(acc, p, f, p);
        frobenius[i] = acc;
    }
    Poly top = frobenius[k];
    // top must equal x
    Poly diff = top;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : prime_factors(k)) {
        Poly d = frobenius[k / r];
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        poly_trim(d);
        Poly g = poly_gcd(f, d, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

} // namespace

FqField FqField::make(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw malformed_input_error("field characteristic must be prime");
    if (k == 0) throw malformed_input_error("extension degree must be positive");
    FqField f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (f.q_ > (1ull << 40))
            throw resource_error("finite field p^k exceeds the 2^40 size cap");
        f.q_ *= p;
    }
    // least irreducible monic polynomial in lexicographic (c_0,...,c_{k-1}) order
    std::vector<std::uint32_t> c(k, 0);
    for (;;) {
        Poly cand(c.begin(), c.end());
        cand.push_back(1);
        if (poly_irreducible(cand, p)) {
            f.irred_.assign(cand.begin(), cand.end());
            return f;
        }
        std::uint32_t i = 0;
        while (i < k && ++c[i] == p) c[i++] = 0;
        if (i == k) throw internal_error("no irreducible polynomial found");
    }
}

FqField::Elem FqField::one() const {
    Elem e(k_, 0);
    e[0] = 1;
    return e;
}

FqField::Elem FqField::from_int(std::uint64_t n) const {
    Elem e(k_, 0);
    e[0] = static_cast<std::uint32_t>(n % p_);
    return e;
}

FqField::Elem FqField::gen() const {
    Elem e(k_, 0);
    if (k_ == 1) {
        e[0] = 1 % p_;
    } else {
        e[1] = 1;
    }
    return e;
}

FqField::Elem FqField::add(const Elem& a, const Elem& b) const {
    Elem c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
}

FqField::Elem FqField::sub(const Elem& a, const Elem& b) const {
    Elem c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = (a[i] + p_ - b[i]) % p_;
    return c;
}

FqField::Elem FqField::mul(const Elem& a, const Elem& b) const {
    Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
    Poly f(irred_.begin(), irred_.end());
    Poly c = poly_mulmod(pa, pb, f, p_);
    Elem out(k_, 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
    return out;
}

FqField::Elem FqField::pow(Elem a, std::uint64_t n) const {
    Elem r = one();
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

FqField::Elem FqField::inv(const Elem& a) const {
    if (is_zero(a)) throw error("finite field inverse of zero");
    return pow(a, q_ - 2);
}

bool FqField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t FqField::element_order(const Elem& a) const {
    if (is_zero(a)) throw error("order of zero element");
    std::uint64_t o = q_ - 1;
    for (std::uint64_t r : prime_factors(q_ - 1)) {
        while (o % r == 0 && pow(a, o / r) == one()) o /= r;
    }
    return o;
}

std::uint64_t FqField::encode(const Elem& a) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = k_; i-- > 0;) code = code * p_ + a[i];
    return code;
}

FqField::Elem FqField::decode(std::uint64_t code) const {
    Elem e(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        e[i] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return e;
}

std::string FqField::str(const Elem& a) const {
    std::ostringstream os;
    os << "[";
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << "]@F" << p_;
    if (k_ > 1) os << "^" << k_;
    return os.str();
}

FqField::Elem FqField::least_primitive_root() const {
    for (std::uint64_t code = 1; code < q_; ++code) {
        Elem e = decode(code);
        if (element_order(e) == q_ - 1) return e;
    }
    throw internal_error("no primitive root found");
}

// --------------------------------------------------------------------------
// ModpReduction
// --------------------------------------------------------------------------

ModpReduction ModpReduction::make(std::uint32_t e, std::uint32_t p, std::uint32_t variant) {
    if (!is_prime(p)) throw malformed_input_error("reduction prime must be prime");
    if (e == 0) throw malformed_input_error("conductor must be positive");
    ModpReduction r;
    r.e_ = e;
    r.p_ = p;
    r.variant_ = variant;
    std::uint32_t m = e, a = 0;
    std::uint64_t pa = 1;
    while (m % p == 0) {
        m /= p;
        ++a;
        pa *= p;
    }
    r.a_ = a;
    r.m_ = m;
    std::uint32_t k = (m == 1) ? 1 : static_cast<std::uint32_t>(multiplicative_order(p % m, m));
    r.field_ = FqField::make(p, k);

    if (m == 1) {
        r.theta_ = r.field_.one();
    } else {
        FqField::Elem g = r.field_.least_primitive_root();
        FqField::Elem theta0 = r.field_.pow(g, (r.field_.q() - 1) / m);
        // variant-th unit mod m twists theta among the primitive m-th roots
        std::uint32_t u = 1, found = 0;
        for (std::uint32_t cand = 1; cand < std::max<std::uint32_t>(m, 2); ++cand) {
            if (std::gcd(cand, m) != 1) continue;
            if (found == variant) {
                u = cand;
                break;
            }
            ++found;
        }
        r.theta_ = r.field_.pow(theta0, u);
    }
    if (r.field_.element_order(r.theta_) != std::max<std::uint32_t>(r.m_, 1) && r.m_ > 1)
        throw internal_error("theta has wrong multiplicative order");

    r.theta_pows_.resize(r.m_);
    FqField::Elem acc = r.field_.one();
    for (std::uint32_t i = 0; i < r.m_; ++i) {
        r.theta_pows_[i] = acc;
        acc = r.field_.mul(acc, r.theta_);
    }
    // (p^a)^{-1} mod m
    if (r.m_ > 1) {
        std::uint64_t pam = pa % r.m_;
        std::uint64_t inv = 1;
        std::uint64_t ord = multiplicative_order(pam, r.m_);
        inv = powmod(pam, ord - 1, r.m_);
        r.pa_inv_mod_m_ = inv;
    }
    return r;
}

FqField::Elem ModpReduction::reduce_rational(const Rat& r) const {
    if (r.den() % p_ == 0)
        throw nonintegral_error("denominator divisible by " + std::to_string(p_) +
                                ": " + r.str());
    std::uint64_t num = static_cast<std::uint64_t>(BigInt((r.num() % p_ + p_) % p_));
    std::uint64_t den = static_cast<std::uint64_t>(BigInt(r.den() % p_));
    std::uint64_t val = mulmod(num, powmod(den, p_ - 2, p_), p_);
    return field_.from_int(val);
}

FqField::Elem ModpReduction::reduce(const Cyclotomic& x) const {
    Cyclotomic lifted = x.conductor() == e_ ? x : x.lifted_to(e_);
    FqField::Elem acc = field_.zero();
    const auto& coeffs = lifted.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        FqField::Elem c = reduce_rational(coeffs[i]);
        // zeta_e^i maps to theta^(i * (p^a)^{-1} mod m)
        FqField::Elem root = theta_pows_[m_ == 1 ? 0 : (i * pa_inv_mod_m_) % m_];
        acc = field_.add(acc, field_.mul(c, root));
    }
    return acc;
}

bool ModpReduction::embedding_check() const {
    if (field_.pow(theta_, m_) != field_.one()) return false;
    for (std::uint32_t d = 1; d < m_; ++d) {
        if (m_ % d != 0) continue;
        if (field_.pow(theta_, d) == field_.one()) return false;
    }
    return true;
}

} // namespace brauer::cyclo
