#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qd/errors.hpp"

namespace qd {

/// Canonical element index, 0..order-1. Index 0 is always the identity.
using Elt = std::uint32_t;

struct GroupLimits {
    std::uint64_t max_order = 2'000'000;
};

/// Product of cyclic groups in the raw coordinates of a `cyclic:` spec.
/// This is the coordinate system of wreath-product tails; the exact-solver
/// type FinAbGroup (invariant-factor form) is separate.
struct AbelianSpec {
    std::vector<long long> moduli;

    std::uint64_t order() const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::vector<long long> decode(std::uint32_t idx) const;
    std::uint32_t encode(const std::vector<long long>& v) const;
    std::string to_string() const;
};

namespace detail {

struct GroupRep {
    virtual ~GroupRep() = default;
    virtual std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const = 0;
    virtual std::uint64_t inv_code(std::uint64_t a) const = 0;

    std::size_t order = 0;
    bool dense = false; // code(i) == i; codes/index empty
    std::vector<std::uint64_t> codes;
    std::unordered_map<std::uint64_t, Elt> index;
    std::vector<Elt> gens;
    std::vector<Elt> inv_table;
    std::string desc;
    bool abelian = false;

    std::uint64_t code_of(Elt e) const { return dense ? e : codes[e]; }
    Elt elt_of(std::uint64_t code) const;
    void finalize(); // builds index, inv_table, abelian flag; checks identity
};

} // namespace detail

class FiniteGroup {
public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::shared_ptr<const detail::GroupRep> rep) : rep_(std::move(rep)) {}

    std::size_t order() const { return rep_->order; }
    Elt identity() const { return 0; }
    Elt mul(Elt a, Elt b) const {
        return rep_->elt_of(rep_->mul_code(rep_->code_of(a), rep_->code_of(b)));
    }
    Elt inv(Elt a) const { return rep_->inv_table[a]; }
    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
    Elt power(Elt a, long long n) const;
    long long element_order(Elt a) const;
    bool is_abelian() const { return rep_->abelian; }
    const std::vector<Elt>& generators() const { return rep_->gens; }
    const std::string& description() const { return rep_->desc; }
    const detail::GroupRep& rep() const { return *rep_; }
    bool same_rep(const FiniteGroup& o) const { return rep_ == o.rep_; }

private:
    std::shared_ptr<const detail::GroupRep> rep_;
};

struct ConjugacyClass {
    Elt representative; // minimal member index
    std::vector<Elt> members;
    std::size_t size() const { return members.size(); }
};

struct ClassData {
    std::vector<ConjugacyClass> classes;
    std::vector<std::uint32_t> class_of; // element -> class index
};

/// Orbit BFS under generator conjugation; classes ordered by minimal
/// member index, identity class first.
ClassData conjugacy_classes(const FiniteGroup& g);

struct Centralizer {
    FiniteGroup ambient;
    Elt y = 0;
    FiniteGroup sub; // codes of sub are ambient indices

    Elt to_ambient(Elt s) const { return static_cast<Elt>(sub.rep().code_of(s)); }
    Elt from_ambient(Elt a) const { return sub.rep().elt_of(a); }
};

Centralizer centralizer(const FiniteGroup& g, Elt y);

/// Members of Z_y. Brute scan up to `brute_threshold` elements,
/// conjugation-orbit BFS with Schreier generators above that.
std::vector<Elt> centralizer_members(const FiniteGroup& g, Elt y,
                                     std::size_t brute_threshold = 50000);

/// Subgroup on an explicit (deduplicated) member list; finds a reduced
/// generating set greedily. Members must be closed under multiplication.
FiniteGroup subgroup_from_members(const FiniteGroup& g, std::vector<Elt> members);

/// Size of the closure of the declared generators (= order iff they generate).
std::size_t generated_order(const FiniteGroup& g);

/// [g] -> [g^n] on class indices.
std::vector<std::uint32_t> power_class_map(const FiniteGroup& g, const ClassData& cd, long long n);

long long exponent_of(const FiniteGroup& g, const ClassData& cd);

// --- concrete families ---------------------------------------------------

FiniteGroup abelian_group(const AbelianSpec& a, const GroupLimits& lim = {});
FiniteGroup symmetric_group(int n, const GroupLimits& lim = {});
FiniteGroup wreath_product(int n, const AbelianSpec& a, const GroupLimits& lim = {});
FiniteGroup perm_subgroup(int degree, const std::vector<std::vector<int>>& gen_images,
                          const GroupLimits& lim = {});

/// Grammar: cyclic:<m>[x<m>...] | sym:<N> | wreath:<N>,<abelian-spec> |
/// permgen:<N>;<perm>;... | truncseries:<p>
FiniteGroup make_group(const std::string& spec, const GroupLimits& lim = {});

// --- wreath access (sym:<N> is the trivial-A case) -------------------------

struct WreathElement {
    std::vector<int> perm;           // image array, perm[i] = sigma(i)
    std::vector<std::uint32_t> tail; // per-position A-element index
};

struct WreathView {
    int n = 1;
    AbelianSpec a;
};

/// nullptr when the group is not wreath-backed
const WreathView* wreath_view(const FiniteGroup& g);
WreathElement wreath_decode(const FiniteGroup& g, Elt e);
Elt wreath_encode(const FiniteGroup& g, const WreathElement& w);

AbelianSpec parse_abelian_spec(const std::string& spec);

/// Cycle notation "(1,2,3)(4,5)" on 1-based points -> 0-based image array.
std::vector<int> parse_perm_cycles(int degree, const std::string& text);

// permutation utilities shared by families
std::uint64_t perm_rank(const std::vector<int>& perm);
std::vector<int> perm_unrank(int n, std::uint64_t rank);

} // namespace qd
