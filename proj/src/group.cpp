#include "brauer/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "brauer/modp.hpp" // is_prime

namespace brauer::perm {

namespace {

// --------------------------------------------------------------------------
// Deterministic Schreier-Sims stabilizer chain.  A single global strong
// generating set; level i uses the strong generators fixing the first i
// base points.  The verification loop sifts every Schreier generator and
// restarts at the level where a residue lands, the textbook way.  Base
// points are the first moved points of the residues and orbits expand
// breadth-first with generators in list order, so identical input yields
// an identical chain.
// --------------------------------------------------------------------------
struct StabChain {
    struct Orbit {
        std::vector<std::int32_t> pos;        // point -> orbit slot, or -1
        std::vector<Point> points;            // slot -> point
        std::vector<Permutation> transversal; // slot s: maps base to points[s]
    };

    std::uint32_t degree = 0;
    std::vector<Point> bases;
    std::vector<Permutation> strong;
    std::vector<Orbit> orbits; // aligned with bases

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const auto& ob : orbits) o *= ob.points.size();
        return o;
    }

    bool fixes_first_bases(const Permutation& g, std::size_t count) const {
        for (std::size_t i = 0; i < count; ++i)
            if (g(bases[i]) != bases[i]) return false;
        return true;
    }

    std::vector<const Permutation*> level_gens(std::size_t i) const {
        std::vector<const Permutation*> out;
        for (const auto& s : strong)
            if (fixes_first_bases(s, i)) out.push_back(&s);
        return out;
    }

    void rebuild_orbit(std::size_t i) {
        Orbit& ob = orbits[i];
        ob.pos.assign(degree, -1);
        ob.points.clear();
        ob.transversal.clear();
        ob.pos[bases[i]] = 0;
        ob.points.push_back(bases[i]);
        ob.transversal.push_back(Permutation::identity(degree));
        auto gens = level_gens(i);
        for (std::size_t head = 0; head < ob.points.size(); ++head) {
            Point p = ob.points[head];
            for (const Permutation* s : gens) {
                Point q = (*s)(p);
                if (ob.pos[q] >= 0) continue;
                ob.pos[q] = static_cast<std::int32_t>(ob.points.size());
                ob.points.push_back(q);
                ob.transversal.push_back(compose(*s, ob.transversal[head]));
            }
        }
    }

    void rebuild_all_orbits() {
        for (std::size_t i = 0; i < bases.size(); ++i) rebuild_orbit(i);
    }

    std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const {
        for (std::size_t i = from; i < bases.size(); ++i) {
            Point img = g(bases[i]);
            std::int32_t slot = orbits[i].pos[img];
            if (slot < 0) return {std::move(g), i};
            g = compose(orbits[i].transversal[slot].inverse(), g);
        }
        return {std::move(g), bases.size()};
    }

    bool contains(const Permutation& g) const {
        auto [res, lvl] = strip(g);
        return lvl == bases.size() && res.is_identity();
    }

    // Adds a strong generator (appending a base point if it fixes all of
    // them) and refreshes every orbit.
    void add_strong(Permutation g) {
        if (g.is_identity()) return;
        if (fixes_first_bases(g, bases.size())) {
            Point b = 0;
            while (g(b) == b) ++b;
            bases.push_back(b);
            orbits.emplace_back();
        }
        strong.push_back(std::move(g));
        rebuild_all_orbits();
    }

    void verify() {
        if (bases.empty()) return;
        std::size_t i = bases.size() - 1;
        for (;;) {
            bool restart = false;
            auto gens = level_gens(i);
            for (std::size_t slot = 0; slot < orbits[i].points.size() && !restart; ++slot) {
                for (const Permutation* s : gens) {
                    Point q = (*s)(orbits[i].points[slot]);
                    Permutation schreier =
                        compose(orbits[i].transversal[orbits[i].pos[q]].inverse(),
                                compose(*s, orbits[i].transversal[slot]));
                    auto [res, lvl] = strip(std::move(schreier), i + 1);
                    if (res.is_identity()) continue;
                    add_strong(std::move(res));
                    i = std::min(lvl, bases.size() - 1);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            if (i == 0) break;
            --i;
        }
    }

    void insert_generator(const Permutation& g) {
        if (contains(g)) return;
        add_strong(g);
        verify();
    }

    static StabChain build(std::uint32_t degree, const std::vector<Permutation>& gens) {
        StabChain c;
        c.degree = degree;
        for (const auto& g : gens)
            if (!g.is_identity()) c.add_strong(g);
        c.verify();
        return c;
    }
};

std::vector<Permutation> normalize_generators(std::uint32_t degree,
                                              std::vector<Permutation> gens) {
    std::vector<Permutation> out;
    for (auto& g : gens) {
        if (g.degree() != degree)
            throw malformed_input_error("generator degree mismatch");
        if (!g.is_identity()) out.push_back(std::move(g));
    }
    return out;
}

} // namespace

// --------------------------------------------------------------------------
// PermGroup implementation
// --------------------------------------------------------------------------

struct PermGroup::Impl {
    std::uint32_t degree = 0;
    std::vector<Permutation> gens;
    Caps caps;
    StabChain chain;
    std::uint64_t order = 1;

    mutable std::once_flag elements_once;
    mutable std::vector<Permutation> elements;
    mutable std::unordered_map<Permutation, std::uint32_t, PermHash> index;

    mutable std::once_flag classes_once;
    mutable ClassTable classes;

    mutable std::mutex cache_mtx;
    mutable std::map<std::uint64_t, std::vector<std::uint32_t>> p_element_cache;

    void ensure_elements() const {
        std::call_once(elements_once, [this] {
            if (order > caps.enumeration)
                throw resource_error("group order " + std::to_string(order) +
                                     " exceeds enumeration cap " +
                                     std::to_string(caps.enumeration));
            std::unordered_map<Permutation, std::uint32_t, PermHash> seen;
            std::vector<Permutation> list;
            list.push_back(Permutation::identity(degree));
            seen.emplace(list[0], 0);
            for (std::size_t head = 0; head < list.size(); ++head) {
                for (const auto& s : gens) {
                    Permutation nxt = compose(s, list[head]);
                    if (seen.emplace(nxt, 0).second) list.push_back(std::move(nxt));
                }
            }
            if (list.size() != order)
                throw internal_error("element closure disagrees with chain order");
            std::sort(list.begin(), list.end());
            index.clear();
            index.reserve(list.size() * 2);
            for (std::uint32_t i = 0; i < list.size(); ++i) index.emplace(list[i], i);
            elements = std::move(list);
        });
    }

    void ensure_classes() const {
        std::call_once(classes_once, [this] {
            ensure_elements();
            const std::uint32_t n = static_cast<std::uint32_t>(elements.size());
            ClassTable ct;
            ct.class_of.assign(n, UINT32_MAX);
            for (std::uint32_t i = 0; i < n; ++i) {
                if (ct.class_of[i] != UINT32_MAX) continue;
                const std::uint32_t cls = ct.count();
                ct.reps.push_back(elements[i]);
                std::vector<std::uint32_t> queue{i};
                ct.class_of[i] = cls;
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    const Permutation& x = elements[queue[head]];
                    for (const auto& s : gens) {
                        Permutation y = conjugate(x, s);
                        std::uint32_t j = index.at(y);
                        if (ct.class_of[j] == UINT32_MAX) {
                            ct.class_of[j] = cls;
                            queue.push_back(j);
                        }
                    }
                }
                ct.sizes.push_back(queue.size());
            }
            classes = std::move(ct);
        });
    }

    const std::vector<std::uint32_t>& p_elements(std::uint64_t p) const {
        ensure_elements();
        std::lock_guard<std::mutex> lock(cache_mtx);
        auto it = p_element_cache.find(p);
        if (it != p_element_cache.end()) return it->second;
        std::vector<std::uint32_t> idx;
        for (std::uint32_t i = 0; i < elements.size(); ++i) {
            std::uint64_t o = elements[i].order();
            bool ppow = true;
            while (o > 1) {
                if (o % p) {
                    ppow = false;
                    break;
                }
                o /= p;
            }
            if (ppow) idx.push_back(i);
        }
        return p_element_cache.emplace(p, std::move(idx)).first->second;
    }
};

PermGroup PermGroup::from_generators(std::uint32_t degree, std::vector<Permutation> gens,
                                     Caps caps) {
    if (degree == 0 || degree > 65535)
        throw malformed_input_error("degree out of range [1, 65535]");
    auto impl = std::make_shared<Impl>();
    impl->degree = degree;
    impl->gens = normalize_generators(degree, std::move(gens));
    impl->caps = caps;
    impl->chain = StabChain::build(degree, impl->gens);
    impl->order = impl->chain.order();
    PermGroup g;
    g.impl_ = std::move(impl);
    return g;
}

std::uint32_t PermGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->gens; }
const Caps& PermGroup::caps() const { return impl_->caps; }
std::uint64_t PermGroup::order() const { return impl_->order; }

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != impl_->degree) return false;
    return impl_->chain.contains(g);
}

bool PermGroup::is_abelian() const {
    const auto& gens = impl_->gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    return true;
}

bool PermGroup::is_p_group(std::uint64_t p) const {
    std::uint64_t o = order();
    while (o > 1) {
        if (o % p) return false;
        o /= p;
    }
    return true;
}

const std::vector<Permutation>& PermGroup::elements() const {
    impl_->ensure_elements();
    return impl_->elements;
}

std::uint32_t PermGroup::element_index(const Permutation& g) const {
    impl_->ensure_elements();
    auto it = impl_->index.find(g);
    if (it == impl_->index.end())
        throw precondition_error("element does not belong to the group");
    return it->second;
}

const ClassTable& PermGroup::conjugacy_classes() const {
    impl_->ensure_classes();
    return impl_->classes;
}

std::uint32_t PermGroup::class_of(const Permutation& g) const {
    impl_->ensure_classes();
    return impl_->classes.class_of[element_index(g)];
}

std::uint32_t PermGroup::inverse_class(std::uint32_t k) const {
    const auto& ct = conjugacy_classes();
    return class_of(ct.reps[k].inverse());
}

std::uint32_t PermGroup::power_class(std::uint32_t k, std::uint64_t t) const {
    const auto& ct = conjugacy_classes();
    return class_of(ct.reps[k].power(static_cast<long long>(t)));
}

std::uint64_t PermGroup::exponent() const {
    const auto& ct = conjugacy_classes();
    std::uint64_t e = 1;
    for (const auto& r : ct.reps) e = std::lcm(e, r.order());
    return e;
}

namespace {

/// Deterministic generating-set reduction: sweep candidates in the given
/// order, keep those not yet generated, stop at the target order.
std::vector<Permutation> reduce_generators(std::uint32_t degree,
                                           const std::vector<Permutation>& candidates,
                                           std::uint64_t target_order) {
    StabChain chain;
    chain.degree = degree;
    std::vector<Permutation> gens;
    if (target_order == 1) return gens;
    for (const auto& c : candidates) {
        if (c.is_identity() || chain.contains(c)) continue;
        gens.push_back(c);
        chain.insert(c);
        if (chain.order() == target_order) return gens;
    }
    throw internal_error("generator reduction missed the target order");
}

} // namespace

Subgroup PermGroup::centralizer(const Permutation& g) const {
    if (!contains(g)) throw precondition_error("centralizer element not in group");
    if (g.is_identity()) return whole_subgroup();
    std::vector<Permutation> members;
    for (const auto& x : elements())
        if (compose(x, g) == compose(g, x)) members.push_back(x);
    auto gens = reduce_generators(degree(), members, members.size());
    return Subgroup(*this, from_generators(degree(), std::move(gens), caps()));
}

Subgroup PermGroup::center() const {
    std::vector<Permutation> members;
    for (const auto& x : elements()) {
        bool central = true;
        for (const auto& s : impl_->gens) {
            if (compose(x, s) != compose(s, x)) {
                central = false;
                break;
            }
        }
        if (central) members.push_back(x);
    }
    auto gens = reduce_generators(degree(), members, members.size());
    return Subgroup(*this, from_generators(degree(), std::move(gens), caps()));
}

Subgroup PermGroup::derived_subgroup() const {
    // normal closure of the generator commutators; membership via a growing
    // chain, no element enumeration needed
    StabChain chain;
    chain.degree = degree();
    std::vector<Permutation> sub_gens;
    std::vector<Permutation> work;
    const auto& gens = impl_->gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            work.push_back(compose(compose(gens[i].inverse(), gens[j].inverse()),
                                   compose(gens[i], gens[j])));
        }
    while (!work.empty()) {
        Permutation t = std::move(work.back());
        work.pop_back();
        if (t.is_identity() || chain.contains(t)) continue;
        sub_gens.push_back(t);
        chain.insert(t);
        for (const auto& g : gens) work.push_back(conjugate(t, g));
    }
    return Subgroup(*this, from_generators(degree(), std::move(sub_gens), caps()));
}

Subgroup PermGroup::sylow(std::uint64_t p) const {
    if (!cyclo::is_prime(p)) throw malformed_input_error("sylow: p must be prime");
    std::uint64_t ppart = 1, o = order();
    while (o % p == 0) {
        o /= p;
        ppart *= p;
    }
    if (ppart == 1) return trivial_subgroup();

    const auto& pidx = impl_->p_elements(p);
    const auto& elems = elements();
    // seed: the least p-element of maximal order
    std::uint64_t best_order = 1;
    std::uint32_t best = UINT32_MAX;
    for (std::uint32_t i : pidx) {
        std::uint64_t eo = elems[i].order();
        if (eo > best_order) {
            best_order = eo;
            best = i;
        }
    }
    if (best == UINT32_MAX) throw internal_error("no p-element found");

    std::vector<Permutation> pgens{elems[best]};
    PermGroup current = from_generators(degree(), pgens, caps());
    while (current.order() < ppart) {
        bool extended = false;
        for (std::uint32_t i : pidx) {
            const Permutation& g = elems[i];
            if (current.contains(g)) continue;
            bool normalizes = true;
            for (const auto& s : pgens) {
                if (!current.contains(conjugate(s, g))) {
                    normalizes = false;
                    break;
                }
            }
            if (!normalizes) continue;
            pgens.push_back(g);
            current = from_generators(degree(), pgens, caps());
            extended = true;
            break;
        }
        if (!extended) throw internal_error("sylow normalizer climb stalled");
    }
    if (current.order() != ppart) throw internal_error("sylow overshot the p-part");
    return Subgroup(*this, std::move(current));
}

std::pair<PermGroup, Projection> PermGroup::quotient_by_central(const Subgroup& K) const {
    for (const auto& k : K.generators()) {
        if (!contains(k)) throw precondition_error("quotient kernel not inside group");
        for (const auto& s : impl_->gens)
            if (compose(k, s) != compose(s, k))
                throw precondition_error("quotient kernel is not central");
    }
    const auto& elems = elements();
    const auto& kelems = K.group().elements();
    const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
    std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
    std::vector<std::uint32_t> coset_reps;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (coset_of[i] != UINT32_MAX) continue;
        std::uint32_t c = static_cast<std::uint32_t>(coset_reps.size());
        coset_reps.push_back(i);
        for (const auto& k : kelems) {
            std::uint32_t j = element_index(compose(elems[i], k));
            coset_of[j] = c;
        }
    }
    std::uint32_t q = static_cast<std::uint32_t>(coset_reps.size());
    if (q != order() / K.order()) throw internal_error("coset count mismatch");
    if (q > 65535) throw resource_error("quotient degree exceeds 65535");

    std::vector<Permutation> qgens;
    for (const auto& s : impl_->gens) {
        std::vector<Point> img(q);
        for (std::uint32_t c = 0; c < q; ++c)
            img[c] = static_cast<Point>(coset_of[element_index(compose(s, elems[coset_reps[c]]))]);
        qgens.emplace_back(std::move(img));
    }
    PermGroup quotient = from_generators(std::max<std::uint32_t>(q, 1), qgens, caps());
    if (quotient.order() != order() / K.order())
        throw internal_error("quotient order mismatch");

    Projection proj;
    proj.parent = *this;
    proj.quotient = quotient;
    proj.coset_of = std::move(coset_of);
    proj.coset_reps = std::move(coset_reps);
    return {std::move(quotient), std::move(proj)};
}

Subgroup PermGroup::subgroup(std::vector<Permutation> gens) const {
    for (const auto& g : gens)
        if (!contains(g)) throw precondition_error("subgroup generator not in parent");
    return Subgroup(*this, from_generators(degree(), std::move(gens), caps()));
}

Subgroup PermGroup::trivial_subgroup() const {
    return Subgroup(*this, from_generators(degree(), {}, caps()));
}

Subgroup PermGroup::whole_subgroup() const { return Subgroup(*this, *this); }

Permutation Projection::apply(const Permutation& g) const {
    std::uint32_t q = static_cast<std::uint32_t>(coset_reps.size());
    std::vector<Point> img(q);
    const auto& elems = parent.elements();
    for (std::uint32_t c = 0; c < q; ++c)
        img[c] = static_cast<Point>(coset_of[parent.element_index(compose(g, elems[coset_reps[c]]))]);
    return Permutation(std::move(img));
}

bool Subgroup::is_central_in_parent() const {
    for (const auto& g : generators())
        for (const auto& s : parent_.generators())
            if (compose(g, s) != compose(s, g)) return false;
    return true;
}

bool Subgroup::is_normal_in_parent() const {
    for (const auto& g : generators())
        for (const auto& s : parent_.generators())
            if (!contains(conjugate(g, s))) return false;
    return true;
}

std::vector<Subgroup> subgroups_of_abelian_p_group(const Subgroup& A, std::uint64_t p) {
    if (!cyclo::is_prime(p)) throw malformed_input_error("p must be prime");
    if (!A.is_abelian() || !A.group().is_p_group(p))
        throw precondition_error("subgroup enumeration needs an abelian p-group");
    const auto& elems = A.group().elements();
    const PermGroup& parent = A.parent();

    auto key_of = [&](const PermGroup& h) {
        std::vector<std::uint32_t> key;
        for (const auto& x : h.elements()) key.push_back(A.group().element_index(x));
        std::sort(key.begin(), key.end());
        return key;
    };

    std::vector<Subgroup> out;
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::pair<PermGroup, std::vector<Permutation>>> queue;
    PermGroup triv = PermGroup::from_generators(A.group().degree(), {}, A.group().caps());
    queue.emplace_back(triv, std::vector<Permutation>{});
    seen.insert(key_of(triv));
    out.push_back(Subgroup(parent, triv));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [h, hgens] = queue[head];
        for (const auto& a : elems) {
            if (a.is_identity() || h.contains(a)) continue;
            auto ngens = hgens;
            ngens.push_back(a);
            PermGroup nh = PermGroup::from_generators(A.group().degree(), ngens,
                                                      A.group().caps());
            auto key = key_of(nh);
            if (!seen.insert(key).second) continue;
            out.push_back(Subgroup(parent, nh));
            queue.emplace_back(std::move(nh), std::move(ngens));
        }
    }
    return out;
}

bool is_p_regular(const Permutation& g, std::uint64_t p) {
    return g.order() % p != 0;
}

} // namespace brauer::perm
