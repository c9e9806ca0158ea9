// Dixon-Schneider character table computation: common eigenvectors of the
// class-multiplication matrices over F_ell give the central characters mod
// ell; degrees come from the orthogonality normalization and values are
// lifted exactly through eigenvalue multiplicities (inverse DFT over Z/e).

#include <algorithm>
#include <numeric>

#include "brauer/chartable.hpp"
#include "brauer/modp.hpp"

namespace brauer::chartable {

namespace {

using u64 = std::uint64_t;

struct Fl {
    u64 ell;
    u64 add(u64 a, u64 b) const { return (a + b) % ell; }
    u64 sub(u64 a, u64 b) const { return (a + ell - b) % ell; }
    u64 mul(u64 a, u64 b) const { return (__uint128_t)a * b % ell; }
    u64 pow(u64 a, u64 n) const {
        u64 r = 1 % ell;
        a %= ell;
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, ell - 2); }

    // Tonelli-Shanks; input must be a quadratic residue.
    u64 sqrt(u64 a) const {
        a %= ell;
        if (a == 0) return 0;
        if (ell % 4 == 3) return pow(a, (ell + 1) / 4);
        u64 q = ell - 1, s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (pow(z, (ell - 1) / 2) == 1) ++z;
        u64 m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
        while (t != 1) {
            u64 i = 0, tt = t;
            while (tt != 1) {
                tt = mul(tt, tt);
                ++i;
                if (i == m) throw internal_error("sqrt of non-residue mod ell");
            }
            u64 b = c;
            for (u64 j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
        return r;
    }
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Row-reduce in place; returns pivot columns.
std::vector<std::uint32_t> rref(Mat& m, const Fl& F) {
    std::vector<std::uint32_t> pivots;
    std::size_t rows = m.size();
    if (rows == 0) return pivots;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        u64 inv = F.inv(m[r][c]);
        for (auto& x : m[r]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            u64 f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        pivots.push_back(static_cast<std::uint32_t>(c));
        ++r;
    }
    return pivots;
}

std::vector<Vec> null_space(Mat m, const Fl& F) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    auto pivots = rref(m, F);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.sub(0, m[i][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Least prime ell = 1 (mod e) with ell > 2*sqrt(order); `skip` admissible
/// primes are passed over for the prime-independence re-run.
u64 dixon_prime_for(u64 order, u64 e, std::uint32_t skip) {
    u64 bound = 1;
    while (bound * bound <= 4 * order) ++bound;
    u64 ell = e + 1;
    while (ell <= bound) ell += e;
    for (;;) {
        if (cyclo::is_prime(ell)) {
            if (skip == 0) return ell;
            --skip;
        }
        ell += e;
    }
}

} // namespace

CharacterTable dixon_impl(const perm::PermGroup& G, std::uint32_t prime_variant,
                          std::string name) {
    const auto& ct = G.conjugacy_classes();
    const auto& elems = G.elements();
    const std::uint32_t r = ct.count();
    const u64 order = G.order();
    const u64 e = G.exponent();
    Fl F{dixon_prime_for(order, e, prime_variant)};

    std::vector<std::vector<std::uint32_t>> members(r);
    for (std::uint32_t i = 0; i < elems.size(); ++i)
        members[ct.class_of[i]].push_back(i);

    std::vector<std::uint32_t> inv_class(r), ord(r);
    for (std::uint32_t k = 0; k < r; ++k) {
        inv_class[k] = G.inverse_class(k);
        ord[k] = static_cast<std::uint32_t>(ct.reps[k].order());
    }

    auto class_matrix = [&](std::uint32_t i) {
        Mat A(r, Vec(r, 0));
        for (std::uint32_t idx : members[i]) {
            perm::Permutation xinv = elems[idx].inverse();
            for (std::uint32_t k = 0; k < r; ++k) {
                std::uint32_t j = ct.class_of[G.element_index(compose(xinv, ct.reps[k]))];
                A[j][k] = F.add(A[j][k], 1);
            }
        }
        return A;
    };

    // split the common eigenspaces
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> full;
        for (std::uint32_t i = 0; i < r; ++i) {
            Vec v(r, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (std::uint32_t i = 1; i < r; ++i) {
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& w) { return w.size() == 1; });
        if (all_one) break;
        Mat A = class_matrix(i);
        std::vector<std::vector<Vec>> next;
        for (auto& W : spaces) {
            std::size_t d = W.size();
            if (d == 1) {
                next.push_back(std::move(W));
                continue;
            }
            // C = action of A on W: solve [B^T rows] ... build augmented
            // system with basis columns and image columns
            Mat aug(r, Vec(2 * d, 0));
            for (std::size_t c = 0; c < d; ++c)
                for (std::uint32_t row = 0; row < r; ++row) aug[row][c] = W[c][row];
            for (std::size_t c = 0; c < d; ++c)
                for (std::uint32_t row = 0; row < r; ++row) {
                    u64 acc = 0;
                    for (std::uint32_t t = 0; t < r; ++t)
                        acc = F.add(acc, F.mul(A[row][t], W[c][t]));
                    aug[row][d + c] = acc;
                }
            auto pivots = rref(aug, F);
            if (pivots.size() != d || pivots[d - 1] != d - 1)
                throw internal_error("subspace basis degenerated during split");
            Mat C(d, Vec(d, 0));
            for (std::size_t row = 0; row < d; ++row)
                for (std::size_t c = 0; c < d; ++c) C[row][c] = aug[row][d + c];

            // eigenvalues live in F_ell; scan directly
            std::size_t found = 0;
            for (u64 mu = 0; mu < F.ell && found < d; ++mu) {
                Mat CmI = C;
                for (std::size_t t = 0; t < d; ++t) CmI[t][t] = F.sub(CmI[t][t], mu);
                auto kernel = null_space(std::move(CmI), F);
                if (kernel.empty()) continue;
                std::vector<Vec> sub;
                for (const auto& kv : kernel) {
                    Vec w(r, 0);
                    for (std::size_t c = 0; c < d; ++c)
                        for (std::uint32_t row = 0; row < r; ++row)
                            w[row] = F.add(w[row], F.mul(kv[c], W[c][row]));
                    sub.push_back(std::move(w));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != d)
                throw internal_error("class matrix failed to diagonalize mod ell");
        }
        spaces = std::move(next);
    }
    for (const auto& W : spaces)
        if (W.size() != 1)
            throw internal_error("common eigenspaces did not split to dimension one");

    // normalize: identity-class coordinate becomes 1
    std::vector<Vec> omegas;
    for (auto& W : spaces) {
        Vec v = W[0];
        if (v[0] == 0) throw internal_error("eigenvector vanishes at the identity class");
        u64 s = F.inv(v[0]);
        for (auto& x : v) x = F.mul(x, s);
        omegas.push_back(std::move(v));
    }
    if (omegas.size() != r) throw internal_error("wrong number of central characters");

    // degrees from sum_k v_k v_{k*} / n_k = |G| / chi(1)^2
    std::vector<u64> degs(r), sizes_mod(r), size_inv(r);
    for (std::uint32_t k = 0; k < r; ++k) {
        sizes_mod[k] = ct.sizes[k] % F.ell;
        size_inv[k] = F.inv(sizes_mod[k]);
    }
    u64 order_mod = order % F.ell;
    u64 degree_square_sum = 0;
    for (std::uint32_t c = 0; c < r; ++c) {
        u64 s = 0;
        for (std::uint32_t k = 0; k < r; ++k)
            s = F.add(s, F.mul(F.mul(omegas[c][k], omegas[c][inv_class[k]]), size_inv[k]));
        if (s == 0) throw internal_error("degenerate norm in degree recovery");
        u64 dsq = F.mul(order_mod, F.inv(s));
        u64 d = F.sqrt(dsq);
        d = std::min(d, F.ell - d);
        if (d == 0 || d >= (F.ell + 1) / 2)
            throw internal_error("degree lift out of range");
        degs[c] = d;
        degree_square_sum += d * d;
    }
    if (degree_square_sum != order)
        throw internal_error("degree squares do not sum to the group order");

    // least element of multiplicative order e in F_ell
    u64 zeta_e = 0;
    {
        auto factors = cyclo::prime_factors(e);
        for (u64 w = 1; w < F.ell; ++w) {
            if (F.pow(w, e) != 1) continue;
            bool exact = true;
            for (u64 q : factors)
                if (F.pow(w, e / q) == 1) {
                    exact = false;
                    break;
                }
            if (exact) {
                zeta_e = w;
                break;
            }
        }
        if (zeta_e == 0 && e > 1) throw internal_error("no element of order e mod ell");
        if (e == 1) zeta_e = 1;
    }

    // power classes, then exact value lifting via inverse DFT
    std::vector<std::vector<std::uint32_t>> pow_class(r);
    for (std::uint32_t k = 0; k < r; ++k) {
        pow_class[k].resize(ord[k]);
        perm::Permutation acc = perm::Permutation::identity(G.degree());
        for (std::uint32_t t = 0; t < ord[k]; ++t) {
            pow_class[k][t] = ct.class_of[G.element_index(acc)];
            acc = compose(acc, ct.reps[k]);
        }
    }

    std::vector<std::vector<cyclo::Cyclotomic>> rows(r);
    for (std::uint32_t c = 0; c < r; ++c) {
        rows[c].resize(r);
        // chi(x_k) mod ell for every class
        Vec chi_mod(r);
        for (std::uint32_t k = 0; k < r; ++k)
            chi_mod[k] = F.mul(F.mul(degs[c], omegas[c][k]), size_inv[k]);
        for (std::uint32_t k = 0; k < r; ++k) {
            std::uint32_t o = ord[k];
            u64 zo_inv = F.inv(F.pow(zeta_e, e / o));
            u64 o_inv = F.inv(o % F.ell);
            cyclo::Cyclotomic val;
            cyclo::BigInt mult_sum = 0;
            for (std::uint32_t j = 0; j < o; ++j) {
                u64 acc = 0;
                for (std::uint32_t t = 0; t < o; ++t)
                    acc = F.add(acc, F.mul(chi_mod[pow_class[k][t]],
                                           F.pow(zo_inv, (u64)j * t % o)));
                u64 m = F.mul(acc, o_inv);
                if (m >= (F.ell + 1) / 2)
                    throw internal_error("eigenvalue multiplicity lift out of range");
                if (m > degs[c])
                    throw internal_error("eigenvalue multiplicity exceeds the degree");
                mult_sum += m;
                if (m) val += cyclo::Cyclotomic::zeta(o, j).scaled(cyclo::Rat((long long)m));
            }
            if (mult_sum != degs[c])
                throw internal_error("eigenvalue multiplicities do not sum to the degree");
            rows[c][k] = std::move(val);
        }
    }

    // deterministic row order: by degree, then value tuple
    std::vector<std::uint32_t> perm_rows(r);
    std::iota(perm_rows.begin(), perm_rows.end(), 0);
    std::sort(perm_rows.begin(), perm_rows.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (degs[a] != degs[b]) return degs[a] < degs[b];
        for (std::uint32_t k = 0; k < r; ++k) {
            int cmp = rows[a][k].compare(rows[b][k]);
            if (cmp) return cmp < 0;
        }
        return false;
    });

    CharacterTable T;
    T.name_ = name.empty() ? "group" : std::move(name);
    T.order_ = order;
    T.exponent_ = static_cast<std::uint32_t>(e);
    T.dixon_prime_ = F.ell;
    T.group_ = G;
    T.classes_.resize(r);
    for (std::uint32_t k = 0; k < r; ++k) {
        T.classes_[k].size = ct.sizes[k];
        T.classes_[k].element_order = ord[k];
        T.classes_[k].centralizer_order = order / ct.sizes[k];
    }
    T.inv_class_ = inv_class;
    for (std::uint32_t c = 0; c < r; ++c) T.values_.push_back(std::move(rows[perm_rows[c]]));
    T.finalize_computed();
    return T;
}

} // namespace brauer::chartable
