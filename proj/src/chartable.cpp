#include "brauer/chartable.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "brauer/modp.hpp"

namespace brauer::chartable {

using cyclo::BigInt;
using cyclo::Cyclotomic;
using cyclo::Rat;

CharacterTable dixon_impl(const perm::PermGroup&, std::uint32_t, std::string);

CharacterTable CharacterTable::dixon(const perm::PermGroup& G, std::uint32_t prime_variant,
                                     std::string name) {
    return dixon_impl(G, prime_variant, std::move(name));
}

BigInt CharacterTable::degree(std::uint32_t row) const {
    return values_[row][0].integer_value();
}

const perm::PermGroup& CharacterTable::group() const {
    if (!group_) throw precondition_error("table has no underlying group (ingested)");
    return *group_;
}

std::uint32_t CharacterTable::class_of(const perm::Permutation& g) const {
    return group().class_of(g);
}

std::uint32_t CharacterTable::power_class(std::uint32_t k, std::uint64_t t) const {
    if (group_) return group_->power_class(k, t);
    // ingested: walk the prime power maps
    std::uint64_t o = classes_[k].element_order;
    t %= o;
    if (t == 0) {
        for (std::uint32_t c = 0; c < num_classes(); ++c)
            if (classes_[c].element_order == 1) return c;
        throw internal_error("no identity class");
    }
    std::uint32_t cur = k;
    while (t > 1) {
        bool stepped = false;
        for (const auto& [p, pm] : power_maps_) {
            if (t % p) continue;
            // x^t = (x^p)^(t/p)
            cur = pm[cur];
            t /= p;
            stepped = true;
            break;
        }
        if (!stepped)
            throw precondition_error("power map for a needed prime is missing");
    }
    return cur;
}

std::uint32_t CharacterTable::trivial_row() const {
    for (std::uint32_t r = 0; r < num_rows(); ++r) {
        bool allone = true;
        for (std::uint32_t k = 0; k < num_classes(); ++k)
            if (values_[r][k] != Cyclotomic(1)) {
                allone = false;
                break;
            }
        if (allone) return r;
    }
    throw internal_error("trivial character not found");
}

std::vector<std::uint32_t> CharacterTable::linear_rows() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t r = 0; r < num_rows(); ++r)
        if (degree(r) == 1) out.push_back(r);
    return out;
}

Cyclotomic CharacterTable::inner_product(std::uint32_t r1, std::uint32_t r2) const {
    Cyclotomic acc;
    for (std::uint32_t k = 0; k < num_classes(); ++k) {
        Cyclotomic term = values_[r1][k] * values_[r2][k].conj();
        acc += term.scaled(Rat(BigInt(classes_[k].size)));
    }
    return acc.divided_by(Rat(BigInt(order_)));
}

void CharacterTable::verify_orthogonality(bool ingested) const {
    auto fail = [&](const std::string& msg) -> void {
        if (ingested) throw malformed_input_error(msg);
        throw internal_error(msg);
    };
    const std::uint32_t r = num_rows();
    if (r != num_classes()) fail("row count differs from class count");
    // row orthogonality
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = i; j < r; ++j) {
            Cyclotomic ip = inner_product(i, j);
            Cyclotomic expect = (i == j) ? Cyclotomic(1) : Cyclotomic(0);
            if (ip != expect) {
                std::ostringstream os;
                os << "row-orthogonality failure at rows (" << i << "," << j
                   << "): <chi_i, chi_j> = " << ip.str();
                fail(os.str());
            }
        }
    // column orthogonality
    for (std::uint32_t g = 0; g < r; ++g)
        for (std::uint32_t h = g; h < r; ++h) {
            Cyclotomic acc;
            for (std::uint32_t c = 0; c < r; ++c)
                acc += values_[c][g] * values_[c][h].conj();
            Cyclotomic expect =
                (g == h) ? Cyclotomic(Rat(BigInt(classes_[g].centralizer_order)))
                         : Cyclotomic(0);
            if (acc != expect) {
                std::ostringstream os;
                os << "column-orthogonality failure at classes (" << g << "," << h << ")";
                fail(os.str());
            }
        }
    // degree sum
    BigInt dsum = 0;
    for (std::uint32_t i = 0; i < r; ++i) dsum += degree(i) * degree(i);
    if (dsum != order_) fail("degree squares do not sum to the group order");
}

void CharacterTable::finalize_computed() {
    verify_orthogonality(false);
}

// --------------------------------------------------------------------------
// serialization
// --------------------------------------------------------------------------

namespace {

nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& v) {
    nlohmann::ordered_json j;
    j["conductor"] = v.conductor();
    std::vector<std::string> coeffs;
    for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    return j;
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw malformed_input_error("bad cyclotomic serialization");
    std::uint32_t e = j["conductor"].get<std::uint32_t>();
    std::vector<Rat> coeffs;
    for (const auto& s : j["coeffs"]) coeffs.push_back(Rat::parse(s.get<std::string>()));
    return Cyclotomic::from_coeffs(e, std::move(coeffs));
}

} // namespace

nlohmann::json CharacterTable::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name_;
    j["order"] = order_;
    j["exponent"] = exponent_;
    std::vector<std::uint64_t> sizes, orders;
    for (const auto& c : classes_) {
        sizes.push_back(c.size);
        orders.push_back(c.element_order);
    }
    j["class_sizes"] = sizes;
    j["element_orders"] = orders;
    nlohmann::ordered_json chars = nlohmann::ordered_json::array();
    for (const auto& row : values_) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
        chars.push_back(std::move(r));
    }
    j["characters"] = std::move(chars);
    // power maps over the primes dividing the order
    nlohmann::ordered_json pm = nlohmann::ordered_json::object();
    if (group_) {
        for (std::uint64_t p : cyclo::prime_factors(order_)) {
            std::vector<std::uint32_t> map;
            for (std::uint32_t k = 0; k < num_classes(); ++k)
                map.push_back(group_->power_class(k, p));
            pm[std::to_string(p)] = map;
        }
        j["power_maps"] = std::move(pm);
    } else if (!power_maps_.empty()) {
        for (const auto& [p, map] : power_maps_) pm[std::to_string(p)] = map;
        j["power_maps"] = std::move(pm);
    }
    return j;
}

CharacterTable CharacterTable::ingest(const nlohmann::json& doc) {
    auto need = [&](const char* key) {
        if (!doc.contains(key))
            throw malformed_input_error(std::string("table document missing key: ") + key);
    };
    need("name");
    need("order");
    need("exponent");
    need("class_sizes");
    need("element_orders");
    need("characters");

    CharacterTable T;
    T.name_ = doc["name"].get<std::string>();
    T.order_ = doc["order"].get<std::uint64_t>();
    T.exponent_ = doc["exponent"].get<std::uint32_t>();

    auto sizes = doc["class_sizes"].get<std::vector<std::uint64_t>>();
    auto orders = doc["element_orders"].get<std::vector<std::uint64_t>>();
    if (sizes.size() != orders.size() || sizes.empty())
        throw malformed_input_error("class_sizes and element_orders disagree");
    std::uint64_t total = 0;
    for (auto s : sizes) total += s;
    if (total != T.order_)
        throw malformed_input_error("class sizes do not sum to the group order");
    if (sizes[0] != 1 || orders[0] != 1)
        throw malformed_input_error("class 0 must be the identity class");
    std::uint64_t exp_lcm = 1;
    for (auto o : orders) exp_lcm = std::lcm(exp_lcm, o);
    if (exp_lcm != T.exponent_)
        throw malformed_input_error("exponent differs from the lcm of element orders");

    T.classes_.resize(sizes.size());
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] == 0 || T.order_ % sizes[k] != 0)
            throw malformed_input_error("class size must divide the group order");
        T.classes_[k].size = sizes[k];
        T.classes_[k].element_order = orders[k];
        T.classes_[k].centralizer_order = T.order_ / sizes[k];
    }

    const auto& chars = doc["characters"];
    if (!chars.is_array() || chars.size() != sizes.size())
        throw malformed_input_error("character count differs from class count");
    for (const auto& row : chars) {
        if (!row.is_array() || row.size() != sizes.size())
            throw malformed_input_error("character row has wrong length");
        std::vector<Cyclotomic> vals;
        for (const auto& v : row) {
            Cyclotomic c = cyclotomic_from_json(v);
            if (T.exponent_ % c.conductor() != 0)
                throw malformed_input_error("value conductor does not divide the exponent");
            vals.push_back(std::move(c));
        }
        T.values_.push_back(std::move(vals));
    }
    for (std::uint32_t r = 0; r < T.num_rows(); ++r) {
        BigInt d = T.degree(r);
        if (d <= 0) throw malformed_input_error("character degree must be positive");
    }

    if (doc.contains("power_maps")) {
        for (const auto& [key, arr] : doc["power_maps"].items()) {
            std::uint64_t p = std::stoull(key);
            auto map = arr.get<std::vector<std::uint32_t>>();
            if (map.size() != sizes.size())
                throw malformed_input_error("power map has wrong length");
            for (std::size_t k = 0; k < map.size(); ++k) {
                if (map[k] >= sizes.size())
                    throw malformed_input_error("power map index out of range");
                std::uint64_t o = orders[k];
                if (orders[map[k]] != o / std::gcd(o, p))
                    throw malformed_input_error("power map inconsistent with element orders");
            }
            T.power_maps_[p] = std::move(map);
        }
    }
    if (doc.contains("central_subgroups")) {
        for (const auto& cs : doc["central_subgroups"]) {
            CentralMeta meta;
            meta.name = cs.at("name").get<std::string>();
            meta.class_indices = cs.at("class_indices").get<std::vector<std::uint32_t>>();
            for (auto ci : meta.class_indices) {
                if (ci >= sizes.size() || sizes[ci] != 1)
                    throw malformed_input_error(
                        "central subgroup class must be a singleton class");
            }
            if (cs.contains("defect_metadata")) {
                const auto& dm = cs["defect_metadata"];
                if (dm.contains("order"))
                    meta.defect_group_order = dm["order"].get<std::uint64_t>();
                if (dm.contains("abelian"))
                    meta.defect_group_abelian = dm["abelian"].get<bool>();
            }
            T.central_meta_.push_back(std::move(meta));
        }
    }

    // inverse classes from conjugate columns
    const std::uint32_t r = T.num_rows();
    T.inv_class_.assign(r, UINT32_MAX);
    for (std::uint32_t k = 0; k < r; ++k) {
        for (std::uint32_t k2 = 0; k2 < r; ++k2) {
            if (T.classes_[k2].size != T.classes_[k].size ||
                T.classes_[k2].element_order != T.classes_[k].element_order)
                continue;
            bool match = true;
            for (std::uint32_t c = 0; c < r && match; ++c)
                match = T.values_[c][k2] == T.values_[c][k].conj();
            if (match) {
                T.inv_class_[k] = k2;
                break;
            }
        }
        if (T.inv_class_[k] == UINT32_MAX)
            throw malformed_input_error("no inverse class found for class " +
                                        std::to_string(k));
    }

    T.verify_orthogonality(true);
    return T;
}

// --------------------------------------------------------------------------
// linear characters and restriction utilities
// --------------------------------------------------------------------------

const Cyclotomic& LinearChar::value_of(const perm::Permutation& z) const {
    return values[domain.group().element_index(z)];
}

bool LinearChar::is_trivial() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

std::vector<perm::Permutation> LinearChar::kernel_elements() const {
    std::vector<perm::Permutation> out;
    const auto& elems = domain.group().elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (values[i] == Cyclotomic(1)) out.push_back(elems[i]);
    return out;
}

std::vector<LinearChar> linear_characters(const perm::Subgroup& Z) {
    CharacterTable T = CharacterTable::dixon(Z.group());
    const auto& elems = Z.group().elements();
    std::vector<LinearChar> out;
    for (std::uint32_t row : T.linear_rows()) {
        LinearChar lc;
        lc.domain = Z;
        lc.identifier = "L" + std::to_string(row);
        for (const auto& z : elems) lc.values.push_back(T.value(row, T.class_of(z)));
        out.push_back(std::move(lc));
    }
    return out;
}

std::uint64_t class_mult_coefficient(const perm::PermGroup& G, std::uint32_t i,
                                     std::uint32_t j, std::uint32_t k) {
    const auto& ct = G.conjugacy_classes();
    if (i >= ct.count() || j >= ct.count() || k >= ct.count())
        throw precondition_error("class index out of range");
    const auto& elems = G.elements();
    std::uint64_t count = 0;
    for (std::uint32_t idx = 0; idx < elems.size(); ++idx) {
        if (ct.class_of[idx] != i) continue;
        perm::Permutation y = compose(elems[idx].inverse(), ct.reps[k]);
        if (ct.class_of[G.element_index(y)] == j) ++count;
    }
    return count;
}

LinearChar restrict_to_central(const CharacterTable& T, std::uint32_t row,
                               const perm::Subgroup& Z) {
    if (!Z.is_central_in_parent())
        throw precondition_error("restriction target is not central");
    if (!same_impl(Z.parent(), T.group()))
        throw precondition_error("subgroup does not live in the table's group");
    Rat deg(T.degree(row));
    LinearChar lc;
    lc.domain = Z;
    lc.identifier = "restriction";
    const auto& elems = Z.group().elements();
    for (const auto& z : elems)
        lc.values.push_back(T.value(row, T.class_of(z)).divided_by(deg));
    // the restriction of chi to a central subgroup is chi(1) times a linear
    // character; verify multiplicativity on the generators
    for (const auto& a : Z.generators())
        for (const auto& b : Z.generators())
            if (lc.value_of(compose(a, b)) != lc.value_of(a) * lc.value_of(b))
                throw internal_error("central restriction is not multiplicative");
    return lc;
}

std::vector<std::uint32_t> irr_over(const CharacterTable& T, const perm::Subgroup& Z,
                                    const LinearChar& lambda) {
    if (lambda.values.size() != Z.group().elements().size())
        throw malformed_input_error("linear character does not match the subgroup");
    // reject non-homomorphisms outright
    for (const auto& a : Z.generators())
        for (const auto& b : Z.generators())
            if (lambda.value_of(compose(a, b)) != lambda.value_of(a) * lambda.value_of(b))
                throw malformed_input_error("lambda is not a homomorphism");
    std::vector<std::uint32_t> out;
    for (std::uint32_t row = 0; row < T.num_rows(); ++row) {
        Cyclotomic deg(Rat(T.degree(row)));
        bool over = true;
        for (const auto& z : Z.generators()) {
            if (T.value(row, T.class_of(z)) != deg * lambda.value_of(z)) {
                over = false;
                break;
            }
        }
        if (over) out.push_back(row);
    }
    return out;
}

BigInt restriction_multiplicity(const CharacterTable& TG, std::uint32_t row,
                                const perm::Subgroup& H, const CharacterTable& TH,
                                std::uint32_t hrow) {
    for (const auto& g : H.generators())
        if (!TG.group().contains(g))
            throw precondition_error("restriction subgroup not inside the table's group");
    const auto& hct = TH.group().conjugacy_classes();
    Cyclotomic acc;
    for (std::uint32_t c = 0; c < hct.count(); ++c) {
        std::uint32_t fused = TG.class_of(hct.reps[c]); // membership-based fusion
        Cyclotomic term = TG.value(row, fused) * TH.value(hrow, c).conj();
        acc += term.scaled(Rat(BigInt(hct.sizes[c])));
    }
    Cyclotomic m = acc.divided_by(Rat(BigInt(TH.group_order())));
    BigInt out = m.integer_value();
    if (out < 0) throw internal_error("negative restriction multiplicity");
    return out;
}

bool restriction_equals(const CharacterTable& TG, std::uint32_t row,
                        const perm::Subgroup& H, const CharacterTable& TH,
                        std::uint32_t hrow) {
    for (const auto& g : H.generators())
        if (!TG.group().contains(g))
            throw precondition_error("restriction subgroup not inside the table's group");
    if (TG.degree(row) != TH.degree(hrow)) return false;
    const auto& hct = TH.group().conjugacy_classes();
    for (std::uint32_t c = 0; c < hct.count(); ++c)
        if (TG.value(row, TG.class_of(hct.reps[c])) != TH.value(hrow, c)) return false;
    return true;
}

// --------------------------------------------------------------------------
// table equivalence up to row/class permutation
// --------------------------------------------------------------------------

namespace {

bool extend_class_bijection(const CharacterTable& A, const CharacterTable& B,
                            std::vector<std::uint32_t>& map, std::vector<bool>& used,
                            std::uint32_t k) {
    const std::uint32_t r = A.num_classes();
    if (k == r) {
        // rows of A re-indexed by map must be a permutation of rows of B
        std::vector<bool> taken(r, false);
        for (std::uint32_t ra = 0; ra < r; ++ra) {
            bool matched = false;
            for (std::uint32_t rb = 0; rb < r && !matched; ++rb) {
                if (taken[rb]) continue;
                bool eq = true;
                for (std::uint32_t c = 0; c < r && eq; ++c)
                    eq = A.value(ra, c) == B.value(rb, map[c]);
                if (eq) {
                    taken[rb] = true;
                    matched = true;
                }
            }
            if (!matched) return false;
        }
        return true;
    }
    for (std::uint32_t t = 0; t < r; ++t) {
        if (used[t]) continue;
        if (B.class_info(t).size != A.class_info(k).size ||
            B.class_info(t).element_order != A.class_info(k).element_order)
            continue;
        map[k] = t;
        used[t] = true;
        if (extend_class_bijection(A, B, map, used, k + 1)) return true;
        used[t] = false;
    }
    return false;
}

} // namespace

bool tables_equivalent(const CharacterTable& A, const CharacterTable& B) {
    if (A.group_order() != B.group_order()) return false;
    if (A.num_classes() != B.num_classes()) return false;
    std::vector<std::uint32_t> map(A.num_classes());
    std::vector<bool> used(A.num_classes(), false);
    return extend_class_bijection(A, B, map, used, 0);
}

} // namespace brauer::chartable
