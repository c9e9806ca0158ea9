#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer::perm {

/// Points are 0-based; degrees stay comfortably below 2^16 at desk scale.
using Point = std::uint16_t;

/// A permutation of {0, ..., degree-1} as an image array.
/// Composition convention: compose(a, b) applies b first, so
/// compose(a, b)(x) = a(b(x)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::uint32_t degree);
    /// From disjoint cycles (validated); points not mentioned are fixed.
    static Permutation from_cycles(std::uint32_t degree,
                                   const std::vector<std::vector<std::uint32_t>>& cycles);

    std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
    Point operator()(Point x) const { return img_[x]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    friend Permutation compose(const Permutation& a, const Permutation& b);
    /// a^g = g a g^{-1}
    friend Permutation conjugate(const Permutation& a, const Permutation& g);

    std::uint64_t order() const;

    Permutation power(long long n) const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    /// Lexicographic order on image arrays: the fixed total order that all
    /// "first/minimal" choices in the engine inherit.
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

    std::vector<std::vector<std::uint32_t>> cycles() const;
    std::string str() const;

  private:
    std::vector<Point> img_;
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        // FNV-1a over the image bytes
        std::uint64_t h = 1469598103934665603ull;
        for (Point x : p.images()) {
            h ^= static_cast<std::uint64_t>(x & 0xff);
            h *= 1099511628211ull;
            h ^= static_cast<std::uint64_t>(x >> 8);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace brauer::perm
