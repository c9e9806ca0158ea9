#include "brauer/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brauer::perm {

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point x : img_) {
        if (x >= img_.size() || seen[x])
            throw malformed_input_error("image array is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::uint32_t degree) {
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), Point{0});
    return p;
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
    if (degree == 0 || degree > 65535)
        throw malformed_input_error("degree out of range [1, 65535]");
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
        if (cyc.empty()) throw malformed_input_error("empty cycle");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::uint32_t a = cyc[i];
            std::uint32_t b = cyc[(i + 1) % cyc.size()];
            if (a >= degree || b >= degree)
                throw malformed_input_error("cycle point exceeds degree");
            if (used[a]) throw malformed_input_error("cycles are not disjoint");
            used[a] = true;
            p.img_[a] = static_cast<Point>(b);
        }
    }
    return p;
}

bool Permutation::is_identity() const {
    for (std::uint32_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (std::uint32_t x = 0; x < img_.size(); ++x) p.img_[img_[x]] = static_cast<Point>(x);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw precondition_error("degree mismatch in compose");
    Permutation c;
    c.img_.resize(a.img_.size());
    for (std::uint32_t x = 0; x < a.img_.size(); ++x) c.img_[x] = a.img_[b.img_[x]];
    return c;
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
    return compose(compose(g, a), g.inverse());
}

std::uint64_t Permutation::order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (std::uint32_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        std::uint32_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = img_[y];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Permutation Permutation::power(long long n) const {
    std::uint64_t o = order();
    std::uint64_t k = static_cast<std::uint64_t>(((n % static_cast<long long>(o)) + o) % o);
    Permutation acc = identity(degree());
    Permutation base = *this;
    while (k) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t x = 0; x < img_.size(); ++x) {
        if (seen[x] || img_[x] == x) {
            seen[x] = true;
            continue;
        }
        std::vector<std::uint32_t> cyc;
        std::uint32_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            cyc.push_back(y);
            y = img_[y];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::str() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << " ";
            os << c[i];
        }
        os << ")";
    }
    return os.str();
}

} // namespace brauer::perm
