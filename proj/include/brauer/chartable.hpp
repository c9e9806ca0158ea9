#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/cyclotomic.hpp"
#include "brauer/group.hpp"

namespace brauer::chartable {

struct ClassInfo {
    std::uint64_t size = 1;
    std::uint64_t element_order = 1;
    std::uint64_t centralizer_order = 1;
};

/// An ordinary character table: rows are the irreducible characters (sorted
/// by degree, then value tuple), columns follow the group's class order.
/// Either computed from a group by the Dixon-Schneider method or ingested
/// from the interchange format (then group-backed operations are
/// unavailable and callers degrade per their own contracts).
///
/// Construction verifies both orthogonality relations exactly; a violation
/// is an internal_error (computed) or malformed_input_error (ingested),
/// never silent.
class CharacterTable {
  public:
    /// Dixon-Schneider table.  `prime_variant` skips that many admissible
    /// Dixon primes (used to confirm prime independence).
    static CharacterTable dixon(const perm::PermGroup& G, std::uint32_t prime_variant = 0,
                                std::string name = {});

    /// Table from the JSON interchange format; re-verifies all invariants.
    static CharacterTable ingest(const nlohmann::json& doc);

    const std::string& name() const { return name_; }
    std::uint64_t group_order() const { return order_; }
    std::uint32_t num_classes() const { return static_cast<std::uint32_t>(classes_.size()); }
    std::uint32_t num_rows() const { return static_cast<std::uint32_t>(values_.size()); }
    std::uint32_t exponent() const { return exponent_; }
    std::uint64_t dixon_prime() const { return dixon_prime_; }

    const ClassInfo& class_info(std::uint32_t k) const { return classes_[k]; }
    const cyclo::Cyclotomic& value(std::uint32_t row, std::uint32_t k) const {
        return values_[row][k];
    }
    cyclo::BigInt degree(std::uint32_t row) const;
    bool is_p_regular_class(std::uint32_t k, std::uint64_t p) const {
        return classes_[k].element_order % p != 0;
    }

    bool has_group() const { return group_.has_value(); }
    const perm::PermGroup& group() const;
    /// Class index of a group element (group-backed only).
    std::uint32_t class_of(const perm::Permutation& g) const;

    std::uint32_t inverse_class(std::uint32_t k) const { return inv_class_[k]; }
    /// Class of the t-th power of the class representative.  Group-backed
    /// tables compute it; ingested tables need power-map metadata.
    std::uint32_t power_class(std::uint32_t k, std::uint64_t t) const;

    std::uint32_t trivial_row() const;
    std::vector<std::uint32_t> linear_rows() const;

    /// Exact inner product (1/|G|) sum_K |K| chi(K) conj(psi(K)).
    cyclo::Cyclotomic inner_product(std::uint32_t r1, std::uint32_t r2) const;

    /// Both orthogonality relations, exactly; throws on violation.
    void verify_orthogonality(bool ingested = false) const;

    /// Named central subgroups supplied by ingest metadata.
    struct CentralMeta {
        std::string name;
        std::vector<std::uint32_t> class_indices;
        std::optional<std::uint64_t> defect_group_order;
        std::optional<bool> defect_group_abelian;
    };
    const std::vector<CentralMeta>& central_metadata() const { return central_meta_; }

    nlohmann::json to_json() const;

  private:
    std::string name_;
    std::uint64_t order_ = 1;
    std::uint32_t exponent_ = 1;
    std::uint64_t dixon_prime_ = 0;
    std::vector<ClassInfo> classes_;
    std::vector<std::vector<cyclo::Cyclotomic>> values_;
    std::optional<perm::PermGroup> group_;
    std::vector<std::uint32_t> inv_class_;
    mutable std::map<std::uint64_t, std::vector<std::uint32_t>> power_maps_;
    std::vector<CentralMeta> central_meta_;

    void finalize_computed();
    friend CharacterTable dixon_impl(const perm::PermGroup&, std::uint32_t, std::string);
};

/// Linear character of a subgroup, tabulated on its sorted elements.
struct LinearChar {
    perm::Subgroup domain;
    std::vector<cyclo::Cyclotomic> values; // aligned with domain.group().elements()
    std::string identifier;                // "L<row>" within Irr(domain)

    const cyclo::Cyclotomic& value_of(const perm::Permutation& z) const;
    bool is_trivial() const;
    std::vector<perm::Permutation> kernel_elements() const;
};

/// All linear characters of a (small) subgroup, in its table's row order.
std::vector<LinearChar> linear_characters(const perm::Subgroup& Z);

/// a_{ijk} = #{(x,y) in K_i x K_j : xy = z_k} for the fixed representative
/// z_k; independent of that choice.
std::uint64_t class_mult_coefficient(const perm::PermGroup& G, std::uint32_t i,
                                     std::uint32_t j, std::uint32_t k);

/// chi restricted to a central subgroup Z is chi(1) times a unique linear
/// character of Z; returns that character (the map z -> chi(z)/chi(1)).
LinearChar restrict_to_central(const CharacterTable& T, std::uint32_t row,
                               const perm::Subgroup& Z);

/// Irr(G | lambda): rows whose restriction to Z is a multiple of lambda,
/// tested on a generating set of Z.
std::vector<std::uint32_t> irr_over(const CharacterTable& T, const perm::Subgroup& Z,
                                    const LinearChar& lambda);

/// Multiplicity <chi_H, eta> of eta in the restriction of chi to H, via
/// class fusion by membership; a non-negative integer by construction.
cyclo::BigInt restriction_multiplicity(const CharacterTable& TG, std::uint32_t row,
                                       const perm::Subgroup& H, const CharacterTable& TH,
                                       std::uint32_t hrow);

/// Does chi restricted to H equal eta pointwise?
bool restriction_equals(const CharacterTable& TG, std::uint32_t row,
                        const perm::Subgroup& H, const CharacterTable& TH,
                        std::uint32_t hrow);

/// Tables equal up to row order and a class bijection preserving size and
/// element order (backtracking over the few admissible bijections).
bool tables_equivalent(const CharacterTable& A, const CharacterTable& B);

} // namespace brauer::chartable
