#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "brauer/perm.hpp"

namespace brauer::perm {

/// Resource limits for enumeration-backed operations.
struct Caps {
    std::uint64_t enumeration = 1'000'000; // full element lists and class maps
};

/// Conjugacy class data.  Classes are discovered by sweeping the sorted
/// element list, so class 0 is the identity class and every representative
/// is the lexicographically minimal member of its class.
struct ClassTable {
    std::vector<Permutation> reps;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> class_of; // indexed by sorted element position
    std::uint32_t count() const { return static_cast<std::uint32_t>(reps.size()); }
};

class Subgroup;
struct Projection;

/// A finite permutation group with a stabilizer chain built at construction
/// and write-once caches for the expensive structures (element list,
/// classes, center, derived subgroup).  Value-semantic handle over an
/// immutable implementation; cheap to copy and safe to share across
/// threads once constructed.
class PermGroup {
  public:
    PermGroup() = default;

    static PermGroup from_generators(std::uint32_t degree, std::vector<Permutation> gens,
                                     Caps caps = {});

    bool valid() const { return impl_ != nullptr; }
    std::uint32_t degree() const;
    const std::vector<Permutation>& generators() const;
    const Caps& caps() const;

    std::uint64_t order() const;
    bool contains(const Permutation& g) const;
    bool is_abelian() const;
    bool is_p_group(std::uint64_t p) const;

    /// All elements, sorted in the fixed total order (lexicographic on
    /// image arrays).  Throws resource_error when order() exceeds the cap.
    const std::vector<Permutation>& elements() const;
    std::uint32_t element_index(const Permutation& g) const;

    const ClassTable& conjugacy_classes() const;
    std::uint32_t class_of(const Permutation& g) const;
    /// Class of the inverse / of the t-th power of the class representative.
    std::uint32_t inverse_class(std::uint32_t k) const;
    std::uint32_t power_class(std::uint32_t k, std::uint64_t t) const;

    /// lcm of element orders.
    std::uint64_t exponent() const;

    Subgroup centralizer(const Permutation& g) const;
    Subgroup center() const;
    Subgroup derived_subgroup() const;
    Subgroup sylow(std::uint64_t p) const;

    /// Quotient by a central subgroup: the action of G on the cosets of K,
    /// faithful for G/K.  Returns the quotient and the projection map.
    std::pair<PermGroup, Projection> quotient_by_central(const Subgroup& K) const;

    /// Wraps generators (validated to lie in this group) as a Subgroup.
    Subgroup subgroup(std::vector<Permutation> gens) const;
    Subgroup trivial_subgroup() const;
    Subgroup whole_subgroup() const;

    friend bool same_impl(const PermGroup& a, const PermGroup& b) {
        return a.impl_ == b.impl_;
    }

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// A subgroup handle: its own PermGroup plus the parent it lives in.
class Subgroup {
  public:
    Subgroup() = default;
    Subgroup(PermGroup parent, PermGroup group)
        : parent_(std::move(parent)), group_(std::move(group)) {}

    bool valid() const { return group_.valid(); }
    const PermGroup& group() const { return group_; }
    const PermGroup& parent() const { return parent_; }
    std::uint64_t order() const { return group_.order(); }
    const std::vector<Permutation>& generators() const { return group_.generators(); }
    bool contains(const Permutation& g) const { return group_.contains(g); }
    bool is_abelian() const { return group_.is_abelian(); }
    bool is_central_in_parent() const;
    bool is_normal_in_parent() const;

  private:
    PermGroup parent_;
    PermGroup group_;
};

/// Projection G -> G/K attached to quotient_by_central.
struct Projection {
    PermGroup parent;
    PermGroup quotient;
    std::vector<std::uint32_t> coset_of;   // parent element index -> coset index
    std::vector<std::uint32_t> coset_reps; // coset index -> parent element index

    /// The quotient permutation induced by g (left translation on cosets).
    Permutation apply(const Permutation& g) const;
};

/// Complete, duplicate-free subgroup list of a small abelian p-group.
std::vector<Subgroup> subgroups_of_abelian_p_group(const Subgroup& A, std::uint64_t p);

inline std::uint64_t element_order(const Permutation& g) { return g.order(); }

/// True iff p does not divide the order of g.
bool is_p_regular(const Permutation& g, std::uint64_t p);

} // namespace brauer::perm
