#include "brauer/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace brauer::cyclo {

namespace {

std::atomic<std::uint32_t> g_conductor_cap{2520};

/// Immutable per-conductor data: phi, Phi_e, and the reduction rows
/// x^m mod Phi_e for every m < max(e, 2*phi-1).  Built once, then shared.
class CycloCtx {
  public:
    explicit CycloCtx(std::uint32_t e) : e_(e), phi_(euler_phi(e)) {
        build_cyclotomic_poly();
        build_power_rows();
    }

    std::uint32_t conductor() const { return e_; }
    std::uint32_t phi() const { return phi_; }

    const std::vector<BigInt>& power_row(std::uint32_t m) const {
        return rows_[m];
    }

    static const CycloCtx& get(std::uint32_t e) {
        if (e == 0) throw malformed_input_error("conductor must be positive");
        if (e > conductor_cap())
            throw resource_error("conductor " + std::to_string(e) +
                                 " exceeds conductor cap " +
                                 std::to_string(conductor_cap()));
        static std::mutex mtx;
        static std::map<std::uint32_t, std::unique_ptr<CycloCtx>> registry;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = registry.find(e);
        if (it == registry.end())
            it = registry.emplace(e, std::make_unique<CycloCtx>(e)).first;
        return *it->second;
    }

  private:
    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d.  Divisor polynomials
    // are computed locally (no registry access from inside the lock).
    void build_cyclotomic_poly() {
        std::map<std::uint32_t, std::vector<BigInt>> phis;
        for (std::uint32_t d = 1; d <= e_; ++d) {
            if (e_ % d != 0) continue;
            std::vector<BigInt> num(d + 1);
            num[0] = -1;
            num[d] = 1;
            for (const auto& [dd, poly] : phis)
                if (d % dd == 0) num = exact_divide(num, poly);
            phis[d] = std::move(num);
        }
        phi_poly_ = phis[e_];
        if (phi_poly_.size() != phi_ + 1 || phi_poly_.back() != 1)
            throw internal_error("cyclotomic polynomial construction failed");
    }

    // Long division by a monic divisor; remainder must vanish.
    static std::vector<BigInt> exact_divide(const std::vector<BigInt>& a,
                                            const std::vector<BigInt>& b) {
        int da = static_cast<int>(a.size()) - 1;
        int db = static_cast<int>(b.size()) - 1;
        std::vector<BigInt> rem = a;
        std::vector<BigInt> quot(da - db + 1);
        for (int i = da; i >= db; --i) {
            BigInt c = rem[i];
            if (c == 0) continue;
            quot[i - db] = c;
            for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
        }
        for (const auto& r : rem)
            if (r != 0) throw internal_error("non-exact cyclotomic division");
        return quot;
    }

    void build_power_rows() {
        std::uint32_t count = std::max<std::uint32_t>(e_, phi_ ? 2 * phi_ - 1 : 1);
        rows_.resize(count);
        for (std::uint32_t m = 0; m < count; ++m) {
            rows_[m].assign(phi_, BigInt(0));
            if (m < phi_) {
                rows_[m][m] = 1;
                continue;
            }
            // x^m = x * x^(m-1), then eliminate the degree-phi term.
            const auto& prev = rows_[m - 1];
            std::vector<BigInt> shifted(phi_ + 1);
            for (std::uint32_t i = 0; i < phi_; ++i) shifted[i + 1] = prev[i];
            BigInt top = shifted[phi_];
            for (std::uint32_t i = 0; i < phi_; ++i)
                rows_[m][i] = shifted[i] - top * phi_poly_[i];
        }
    }

    std::uint32_t e_, phi_;
    std::vector<BigInt> phi_poly_;
    std::vector<std::vector<BigInt>> rows_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) / gcd_u64(a, b) * b);
}

} // namespace

std::uint32_t euler_phi(std::uint32_t n) {
    std::uint32_t result = n;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::uint32_t conductor_cap() { return g_conductor_cap.load(); }
void set_conductor_cap(std::uint32_t cap) { g_conductor_cap.store(cap); }

Cyclotomic::Cyclotomic() : e_(1), c_(1) {}

Cyclotomic::Cyclotomic(Rat r) : e_(1), c_(1) { c_[0] = std::move(r); }

Cyclotomic Cyclotomic::zeta(std::uint32_t e, std::uint64_t k) {
    const auto& ctx = CycloCtx::get(e);
    Cyclotomic out;
    out.e_ = e;
    out.c_.assign(ctx.phi(), Rat());
    const auto& row = ctx.power_row(static_cast<std::uint32_t>(k % e));
    for (std::uint32_t i = 0; i < ctx.phi(); ++i) out.c_[i] = Rat(row[i]);
    return out;
}

Cyclotomic Cyclotomic::from_coeffs(std::uint32_t e, std::vector<Rat> coeffs) {
    const auto& ctx = CycloCtx::get(e);
    if (coeffs.size() != ctx.phi())
        throw malformed_input_error("coefficient vector has wrong length for conductor " +
                                    std::to_string(e));
    Cyclotomic out;
    out.e_ = e;
    out.c_ = std::move(coeffs);
    return out;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw error("value is not rational: " + str());
    return c_[0];
}

BigInt Cyclotomic::integer_value() const {
    Rat r = rational_value();
    if (!r.is_integer()) throw error("value is not a rational integer: " + str());
    return r.num();
}

Cyclotomic Cyclotomic::lifted_to(std::uint32_t L) const {
    if (L == e_) return *this;
    if (L % e_ != 0) throw error("conductor lift must be to a multiple");
    const auto& ctx = CycloCtx::get(L);
    std::uint32_t step = L / e_;
    Cyclotomic out;
    out.e_ = L;
    out.c_.assign(ctx.phi(), Rat());
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const auto& row = ctx.power_row(i * step);
        for (std::uint32_t j = 0; j < ctx.phi(); ++j) {
            if (row[j] != 0) out.c_[j] += c_[i] * Rat(row[j]);
        }
    }
    return out;
}

Cyclotomic Cyclotomic::galois(std::uint64_t t) const {
    std::uint64_t tm = t % e_;
    if (gcd_u64(tm, e_) != 1)
        throw precondition_error("galois twist exponent not coprime to conductor");
    if (tm == 1) return *this;
    const auto& ctx = CycloCtx::get(e_);
    Cyclotomic out;
    out.e_ = e_;
    out.c_.assign(c_.size(), Rat());
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const auto& row = ctx.power_row(static_cast<std::uint32_t>(i * tm % e_));
        for (std::uint32_t j = 0; j < c_.size(); ++j)
            if (row[j] != 0) out.c_[j] += c_[i] * Rat(row[j]);
    }
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    if (e_ <= 2) return *this;
    return galois(e_ - 1);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& r : out.c_) r = -r;
    return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    std::uint32_t L = lcm_u32(a.e_, b.e_);
    Cyclotomic x = a.lifted_to(L), y = b.lifted_to(L);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    std::uint32_t L = lcm_u32(a.e_, b.e_);
    Cyclotomic x = a.lifted_to(L), y = b.lifted_to(L);
    const auto& ctx = CycloCtx::get(L);
    std::uint32_t phi = ctx.phi();
    std::vector<Rat> conv(2 * phi - 1);
    for (std::uint32_t i = 0; i < phi; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (std::uint32_t j = 0; j < phi; ++j) {
            if (y.c_[j].is_zero()) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    Cyclotomic out;
    out.e_ = L;
    out.c_.assign(phi, Rat());
    for (std::uint32_t m = 0; m < conv.size(); ++m) {
        if (conv[m].is_zero()) continue;
        if (m < phi) {
            out.c_[m] += conv[m];
            continue;
        }
        const auto& row = ctx.power_row(m);
        for (std::uint32_t j = 0; j < phi; ++j)
            if (row[j] != 0) out.c_[j] += conv[m] * Rat(row[j]);
    }
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.e_ == e_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    *this = *this + o;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
}

Cyclotomic Cyclotomic::scaled(const Rat& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.c_) c *= r;
    return out;
}

Cyclotomic Cyclotomic::divided_by(const Rat& r) const {
    if (r.is_zero()) throw error("cyclotomic division by zero rational");
    Cyclotomic out = *this;
    for (auto& c : out.c_) c /= r;
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ == b.e_) return a.c_ == b.c_;
    return (a - b).is_zero();
}

int Cyclotomic::compare(const Cyclotomic& o) const {
    std::uint32_t L = lcm_u32(e_, o.e_);
    Cyclotomic x = lifted_to(L), y = o.lifted_to(L);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == y.c_[i]) continue;
        return x.c_[i] < y.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i > 0) os << "*z" << e_ << "^" << i;
    }
    return os.str();
}

} // namespace brauer::cyclo
