#include "qd/group.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "qd/bounds.hpp"

namespace qd {

// --- AbelianSpec -----------------------------------------------------------

std::uint64_t AbelianSpec::order() const {
    std::uint64_t n = 1;
    for (long long m : moduli)
        n *= static_cast<std::uint64_t>(m);
    return n;
}

std::uint32_t AbelianSpec::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, stride = 1;
    for (long long m : moduli) {
        auto mm = static_cast<std::uint32_t>(m);
        out += stride * ((a % mm + b % mm) % mm);
        a /= mm;
        b /= mm;
        stride *= mm;
    }
    return out;
}

std::uint32_t AbelianSpec::neg(std::uint32_t a) const {
    std::uint32_t out = 0, stride = 1;
    for (long long m : moduli) {
        auto mm = static_cast<std::uint32_t>(m);
        std::uint32_t c = a % mm;
        out += stride * (c == 0 ? 0 : mm - c);
        a /= mm;
        stride *= mm;
    }
    return out;
}

std::vector<long long> AbelianSpec::decode(std::uint32_t idx) const {
    std::vector<long long> v(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        v[i] = idx % moduli[i];
        idx /= static_cast<std::uint32_t>(moduli[i]);
    }
    return v;
}

std::uint32_t AbelianSpec::encode(const std::vector<long long>& v) const {
    std::uint32_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        long long c = v[i] % moduli[i];
        if (c < 0)
            c += moduli[i];
        idx += stride * static_cast<std::uint32_t>(c);
        stride *= static_cast<std::uint32_t>(moduli[i]);
    }
    return idx;
}

std::string AbelianSpec::to_string() const {
    std::ostringstream os;
    os << "cyclic:";
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i)
            os << "x";
        os << moduli[i];
    }
    return os.str();
}

// --- GroupRep --------------------------------------------------------------

namespace detail {

Elt GroupRep::elt_of(std::uint64_t code) const {
    if (dense)
        return static_cast<Elt>(code);
    auto it = index.find(code);
    if (it == index.end())
        throw VerificationError("element code outside the group");
    return it->second;
}

void GroupRep::finalize() {
    if (!dense) {
        index.reserve(codes.size() * 2);
        for (Elt i = 0; i < codes.size(); ++i)
            index.emplace(codes[i], i);
        if (index.size() != codes.size())
            throw VerificationError("duplicate element codes");
    }
    std::uint64_t id = code_of(0);
    if (mul_code(id, id) != id)
        throw VerificationError("element 0 is not the identity");

    inv_table.resize(order);
    for (Elt i = 0; i < order; ++i)
        inv_table[i] = elt_of(inv_code(code_of(i)));

    // spot-check x * inv(x) = identity (full below 10^5 elements)
    std::size_t step = order <= 100000 ? 1 : order / 1000 + 1;
    for (std::size_t i = 0; i < order; i += step)
        if (mul_code(code_of(static_cast<Elt>(i)), code_of(inv_table[i])) != id)
            throw VerificationError("inverse table inconsistent");

    abelian = true;
    for (Elt a : gens)
        for (Elt b : gens)
            if (mul_code(code_of(a), code_of(b)) != mul_code(code_of(b), code_of(a)))
                abelian = false;
}

} // namespace detail

// --- FiniteGroup queries ----------------------------------------------------

Elt FiniteGroup::power(Elt a, long long n) const {
    if (n < 0)
        return power(inv(a), -n);
    Elt acc = identity();
    Elt base = a;
    while (n > 0) {
        if (n & 1)
            acc = mul(acc, base);
        n >>= 1;
        if (n)
            base = mul(base, base);
    }
    return acc;
}

long long FiniteGroup::element_order(Elt a) const {
    long long ord = 1;
    Elt x = a;
    while (x != identity()) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

ClassData conjugacy_classes(const FiniteGroup& g) {
    std::size_t n = g.order();
    ClassData cd;
    cd.class_of.assign(n, 0);
    std::vector<bool> visited(n, false);
    const auto& gens = g.generators();
    std::vector<Elt> gen_inv;
    gen_inv.reserve(gens.size());
    for (Elt t : gens)
        gen_inv.push_back(g.inv(t));

    for (std::size_t seed = 0; seed < n; ++seed) {
        if (visited[seed])
            continue;
        ConjugacyClass cls;
        std::deque<Elt> queue{static_cast<Elt>(seed)};
        visited[seed] = true;
        while (!queue.empty()) {
            Elt x = queue.front();
            queue.pop_front();
            cls.members.push_back(x);
            for (std::size_t t = 0; t < gens.size(); ++t) {
                Elt y = g.mul(g.mul(gens[t], x), gen_inv[t]);
                if (!visited[y]) {
                    visited[y] = true;
                    queue.push_back(y);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.representative = cls.members.front();
        std::uint32_t idx = static_cast<std::uint32_t>(cd.classes.size());
        for (Elt m : cls.members)
            cd.class_of[m] = idx;
        cd.classes.push_back(std::move(cls));
    }
    return cd;
}

namespace {

struct SubgroupRep final : detail::GroupRep {
    FiniteGroup ambient;

    std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const override {
        return ambient.mul(static_cast<Elt>(a), static_cast<Elt>(b));
    }
    std::uint64_t inv_code(std::uint64_t a) const override {
        return ambient.inv(static_cast<Elt>(a));
    }
};

std::vector<Elt> closure_of(const FiniteGroup& g, const std::vector<Elt>& gens,
                            std::size_t cap) {
    std::unordered_set<Elt> seen{g.identity()};
    std::deque<Elt> queue{g.identity()};
    std::vector<Elt> out{g.identity()};
    while (!queue.empty()) {
        Elt x = queue.front();
        queue.pop_front();
        for (Elt t : gens) {
            Elt y = g.mul(x, t);
            if (seen.insert(y).second) {
                if (out.size() >= cap)
                    throw ResourceError("subgroup closure exceeds cap");
                out.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return out;
}

} // namespace

FiniteGroup subgroup_from_members(const FiniteGroup& g, std::vector<Elt> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() != g.identity())
        throw VerificationError("subgroup must contain the identity");

    // greedy reduced generating set
    std::vector<Elt> gens;
    std::unordered_set<Elt> closed{g.identity()};
    for (Elt x : members) {
        if (closed.count(x))
            continue;
        gens.push_back(x);
        auto cl = closure_of(g, gens, members.size() + 1);
        closed = std::unordered_set<Elt>(cl.begin(), cl.end());
    }
    if (closed.size() != members.size())
        throw VerificationError("member list is not closed under multiplication");

    auto rep = std::make_shared<SubgroupRep>();
    rep->ambient = g;
    rep->order = members.size();
    rep->dense = true;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] != i) {
            rep->dense = false;
            break;
        }
    for (Elt t : gens) {
        auto it = std::lower_bound(members.begin(), members.end(), t);
        rep->gens.push_back(static_cast<Elt>(it - members.begin()));
    }
    if (!rep->dense) {
        rep->codes.reserve(members.size());
        for (Elt m : members)
            rep->codes.push_back(m);
    }
    rep->desc = "subgroup of " + g.description();
    rep->finalize();
    return FiniteGroup(rep);
}

std::vector<Elt> centralizer_members(const FiniteGroup& g, Elt y, std::size_t brute_threshold) {
    std::size_t n = g.order();
    if (n <= brute_threshold) {
        std::vector<Elt> members;
        for (Elt x = 0; x < n; ++x)
            if (g.mul(x, y) == g.mul(y, x))
                members.push_back(x);
        return members;
    }

    // orbit of y under conjugation, with a transversal t: x = t x y (t x)^-1
    const auto& gens = g.generators();
    std::vector<Elt> gen_inv;
    for (Elt t : gens)
        gen_inv.push_back(g.inv(t));
    std::unordered_map<Elt, Elt> transversal{{y, g.identity()}};
    std::vector<Elt> orbit{y};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        Elt x = orbit[head];
        Elt tx = transversal.at(x);
        for (std::size_t t = 0; t < gens.size(); ++t) {
            Elt x2 = g.mul(g.mul(gens[t], x), gen_inv[t]);
            if (transversal.emplace(x2, g.mul(gens[t], tx)).second)
                orbit.push_back(x2);
        }
    }
    std::size_t target = n / orbit.size();
    if (target == n) { // central element
        std::vector<Elt> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }

    // Schreier generators close up to the full stabilizer; stop as soon as
    // the closure reaches |G| / |orbit|
    std::vector<Elt> sgens;
    std::vector<Elt> closure{g.identity()};
    std::unordered_set<Elt> closed{g.identity()};
    for (Elt x : orbit) {
        Elt tx = transversal.at(x);
        for (std::size_t t = 0; t < gens.size() && closure.size() < target; ++t) {
            Elt x2 = g.mul(g.mul(gens[t], x), gen_inv[t]);
            Elt u = g.mul(g.mul(g.inv(transversal.at(x2)), gens[t]), tx);
            if (!closed.count(u)) {
                sgens.push_back(u);
                closure = closure_of(g, sgens, target + 1);
                closed = std::unordered_set<Elt>(closure.begin(), closure.end());
            }
        }
        if (closure.size() >= target)
            break;
    }
    if (closure.size() != target)
        throw VerificationError("Schreier closure missed the centralizer order");
    std::sort(closure.begin(), closure.end());
    return closure;
}

Centralizer centralizer(const FiniteGroup& g, Elt y) {
    Centralizer c;
    c.ambient = g;
    c.y = y;
    c.sub = subgroup_from_members(g, centralizer_members(g, y));
    return c;
}

std::size_t generated_order(const FiniteGroup& g) {
    return closure_of(g, g.generators(), g.order() + 1).size();
}

std::vector<std::uint32_t> power_class_map(const FiniteGroup& g, const ClassData& cd,
                                           long long n) {
    std::vector<std::uint32_t> map(cd.classes.size());
    for (std::size_t i = 0; i < cd.classes.size(); ++i)
        map[i] = cd.class_of[g.power(cd.classes[i].representative, n)];
    return map;
}

long long exponent_of(const FiniteGroup& g, const ClassData& cd) {
    long long e = 1;
    for (const auto& cls : cd.classes)
        e = std::lcm(e, g.element_order(cls.representative));
    return e;
}

// --- permutation helpers -----------------------------------------------------

std::uint64_t perm_rank(const std::vector<int>& perm) {
    std::size_t n = perm.size();
    std::uint64_t rank = 0;
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i)
        fact *= i; // n!
    for (std::size_t i = 0; i < n; ++i) {
        fact /= (n - i);
        int smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (perm[j] < perm[i])
                ++smaller;
        rank += fact * static_cast<std::uint64_t>(smaller);
    }
    return rank;
}

std::vector<int> perm_unrank(int n, std::uint64_t rank) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> perm(n);
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= static_cast<std::uint64_t>(i);
    for (int i = 0; i < n; ++i) {
        fact /= static_cast<std::uint64_t>(n - i);
        auto k = static_cast<std::size_t>(rank / fact);
        rank %= fact;
        perm[i] = avail[k];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return perm;
}

// --- families ---------------------------------------------------------------

namespace {

struct AbelianRep final : detail::GroupRep {
    AbelianSpec a;
    std::uint64_t mul_code(std::uint64_t x, std::uint64_t y) const override {
        return a.add(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
    }
    std::uint64_t inv_code(std::uint64_t x) const override {
        return a.neg(static_cast<std::uint32_t>(x));
    }
};

// S_N acting on A^N; sym:<N> is the A = 1 case.
// Convention: (sigma,a)*(tau,b) = (sigma.tau, a.tau + b) with (a.tau)_i = a_{tau(i)}
// and (sigma.tau)(i) = sigma(tau(i)).
struct WreathRep final : detail::GroupRep {
    WreathView view;
    int n = 1;
    AbelianSpec a;
    std::uint64_t a_order = 1;
    std::uint64_t tail_space = 1; // |A|^n

    void decode(std::uint64_t code, int* perm, std::uint32_t* tail) const {
        std::uint64_t tail_code = code % tail_space;
        auto p = perm_unrank(n, code / tail_space);
        std::copy(p.begin(), p.end(), perm);
        for (int i = 0; i < n; ++i) {
            tail[i] = static_cast<std::uint32_t>(tail_code % a_order);
            tail_code /= a_order;
        }
    }
    std::uint64_t encode(const int* perm, const std::uint32_t* tail) const {
        std::uint64_t tail_code = 0, stride = 1;
        for (int i = 0; i < n; ++i) {
            tail_code += stride * tail[i];
            stride *= a_order;
        }
        std::vector<int> p(perm, perm + n);
        return perm_rank(p) * tail_space + tail_code;
    }
    std::uint64_t mul_code(std::uint64_t x, std::uint64_t y) const override {
        int ps[16], pt[16], po[16];
        std::uint32_t ts[16], tt[16], to[16];
        decode(x, ps, ts);
        decode(y, pt, tt);
        for (int i = 0; i < n; ++i) {
            po[i] = ps[pt[i]];
            to[i] = a.add(ts[pt[i]], tt[i]);
        }
        return encode(po, to);
    }
    std::uint64_t inv_code(std::uint64_t x) const override {
        int ps[16], po[16];
        std::uint32_t ts[16], to[16];
        decode(x, ps, ts);
        for (int i = 0; i < n; ++i)
            po[ps[i]] = i;
        for (int i = 0; i < n; ++i)
            to[i] = a.neg(ts[po[i]]);
        return encode(po, to);
    }
};

struct PermGenRep final : detail::GroupRep {
    int degree = 0;

    static std::uint64_t pack(const std::vector<int>& perm) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            code |= static_cast<std::uint64_t>(perm[i]) << (4 * i);
        return code;
    }
    std::vector<int> unpack(std::uint64_t code) const {
        std::vector<int> perm(degree);
        for (int i = 0; i < degree; ++i)
            perm[i] = static_cast<int>((code >> (4 * i)) & 0xF);
        return perm;
    }
    std::uint64_t mul_code(std::uint64_t x, std::uint64_t y) const override {
        std::uint64_t out = 0;
        for (int i = 0; i < degree; ++i) {
            int ti = static_cast<int>((y >> (4 * i)) & 0xF);
            int si = static_cast<int>((x >> (4 * ti)) & 0xF);
            out |= static_cast<std::uint64_t>(si) << (4 * i);
        }
        return out;
    }
    std::uint64_t inv_code(std::uint64_t x) const override {
        std::uint64_t out = 0;
        for (int i = 0; i < degree; ++i) {
            int si = static_cast<int>((x >> (4 * i)) & 0xF);
            out |= static_cast<std::uint64_t>(i) << (4 * si);
        }
        return out;
    }
};

void check_order_cap(std::uint64_t order, const GroupLimits& lim) {
    if (order > lim.max_order)
        throw ResourceError("group order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(lim.max_order));
}

long long parse_ll(std::string_view s) {
    long long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw SpecParseError("expected integer in group spec, got '" + std::string(s) + "'");
    return v;
}

} // namespace

FiniteGroup abelian_group(const AbelianSpec& a, const GroupLimits& lim) {
    for (long long m : a.moduli)
        if (m < 1)
            throw SpecParseError("cyclic modulus must be positive");
    std::uint64_t order = a.order();
    check_order_cap(order, lim);
    auto rep = std::make_shared<AbelianRep>();
    rep->a = a;
    rep->order = order;
    rep->dense = true;
    rep->desc = a.to_string();
    // unit vector per nontrivial coordinate
    std::uint64_t stride = 1;
    for (long long m : a.moduli) {
        if (m > 1)
            rep->gens.push_back(static_cast<Elt>(stride));
        stride *= static_cast<std::uint64_t>(m);
    }
    std::sort(rep->gens.begin(), rep->gens.end());
    rep->finalize();
    return FiniteGroup(rep);
}

namespace {

FiniteGroup wreath_like(int n, const AbelianSpec& a, std::string desc, const GroupLimits& lim) {
    if (n < 1)
        throw SpecParseError("wreath/sym degree must be >= 1");
    if (n > 16)
        throw ResourceError("wreath/sym degree above 16 unsupported");
    std::uint64_t a_order = a.order();
    long double approx = 1;
    for (int i = 2; i <= n; ++i)
        approx *= i;
    for (int i = 0; i < n; ++i)
        approx *= static_cast<long double>(a_order);
    if (approx > static_cast<long double>(lim.max_order))
        throw ResourceError("group order exceeds cap " + std::to_string(lim.max_order));

    auto rep = std::make_shared<WreathRep>();
    rep->n = n;
    rep->a = a;
    rep->view = WreathView{n, a};
    rep->a_order = a_order;
    rep->tail_space = 1;
    for (int i = 0; i < n; ++i)
        rep->tail_space *= a_order;
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= static_cast<std::uint64_t>(i);
    rep->order = fact * rep->tail_space;
    check_order_cap(rep->order, lim);
    rep->dense = true;
    rep->desc = std::move(desc);

    std::vector<std::uint64_t> gen_codes;
    if (n >= 2) {
        std::vector<int> tr(n), cyc(n);
        std::iota(tr.begin(), tr.end(), 0);
        std::swap(tr[0], tr[1]);
        gen_codes.push_back(perm_rank(tr) * rep->tail_space);
        for (int i = 0; i < n; ++i)
            cyc[i] = (i + 1) % n;
        gen_codes.push_back(perm_rank(cyc) * rep->tail_space);
    }
    // A-units in tail position 0
    std::uint64_t stride = 1;
    for (long long m : a.moduli) {
        if (m > 1)
            gen_codes.push_back(stride);
        stride *= static_cast<std::uint64_t>(m);
    }
    std::sort(gen_codes.begin(), gen_codes.end());
    gen_codes.erase(std::unique(gen_codes.begin(), gen_codes.end()), gen_codes.end());
    for (std::uint64_t c : gen_codes)
        rep->gens.push_back(static_cast<Elt>(c));
    rep->finalize();
    return FiniteGroup(rep);
}

} // namespace

FiniteGroup symmetric_group(int n, const GroupLimits& lim) {
    return wreath_like(n, AbelianSpec{}, "sym:" + std::to_string(n), lim);
}

FiniteGroup wreath_product(int n, const AbelianSpec& a, const GroupLimits& lim) {
    return wreath_like(n, a, "wreath:" + std::to_string(n) + "," + a.to_string(), lim);
}

FiniteGroup perm_subgroup(int degree, const std::vector<std::vector<int>>& gen_images,
                          const GroupLimits& lim) {
    if (degree < 1 || degree > 16)
        throw SpecParseError("permgen degree must be in 1..16");
    auto rep = std::make_shared<PermGenRep>();
    rep->degree = degree;
    rep->dense = false;

    std::vector<std::uint64_t> gen_codes;
    for (const auto& img : gen_images) {
        if (static_cast<int>(img.size()) != degree)
            throw SpecParseError("permutation degree mismatch");
        std::vector<bool> seen(degree, false);
        for (int v : img) {
            if (v < 0 || v >= degree || seen[v])
                throw SpecParseError("not a permutation");
            seen[v] = true;
        }
        gen_codes.push_back(PermGenRep::pack(img));
    }
    std::sort(gen_codes.begin(), gen_codes.end());
    gen_codes.erase(std::unique(gen_codes.begin(), gen_codes.end()), gen_codes.end());

    // deterministic BFS closure from the identity over sorted generators
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::uint64_t id_code = PermGenRep::pack(id);
    rep->codes.push_back(id_code);
    std::unordered_map<std::uint64_t, Elt> seen{{id_code, 0}};
    std::deque<std::uint64_t> queue{id_code};
    while (!queue.empty()) {
        std::uint64_t x = queue.front();
        queue.pop_front();
        for (std::uint64_t t : gen_codes) {
            std::uint64_t y = rep->mul_code(x, t);
            if (seen.emplace(y, static_cast<Elt>(rep->codes.size())).second) {
                if (rep->codes.size() >= lim.max_order)
                    throw ResourceError("permgen closure exceeds order cap");
                rep->codes.push_back(y);
                queue.push_back(y);
            }
        }
    }
    rep->order = rep->codes.size();
    rep->desc = "permgen:" + std::to_string(degree);
    FiniteGroup g(rep);
    for (std::uint64_t c : gen_codes)
        rep->gens.push_back(seen.at(c));
    std::sort(rep->gens.begin(), rep->gens.end());
    rep->finalize();
    return g;
}

AbelianSpec parse_abelian_spec(const std::string& spec) {
    const std::string prefix = "cyclic:";
    if (spec.rfind(prefix, 0) != 0)
        throw SpecParseError("abelian spec must start with 'cyclic:', got '" + spec + "'");
    AbelianSpec a;
    std::string body = spec.substr(prefix.size());
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t next = body.find('x', pos);
        std::string tok = body.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty())
            throw SpecParseError("empty modulus in '" + spec + "'");
        long long m = parse_ll(tok);
        if (m < 1)
            throw SpecParseError("modulus must be >= 1");
        a.moduli.push_back(m);
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    if (a.moduli.empty())
        throw SpecParseError("no moduli in '" + spec + "'");
    return a;
}

std::vector<int> parse_perm_cycles(int degree, const std::string& text) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw SpecParseError("expected '(' in cycle notation: '" + text + "'");
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw SpecParseError("unbalanced cycle notation: '" + text + "'");
        std::string body = text.substr(pos + 1, close - pos - 1);
        std::vector<int> cycle;
        std::size_t p = 0;
        while (p < body.size()) {
            std::size_t comma = body.find(',', p);
            std::string tok = body.substr(p, comma == std::string::npos ? comma : comma - p);
            if (!tok.empty()) {
                long long v = parse_ll(tok);
                if (v < 1 || v > degree)
                    throw SpecParseError("cycle point out of range in '" + text + "'");
                cycle.push_back(static_cast<int>(v - 1));
            }
            if (comma == std::string::npos)
                break;
            p = comma + 1;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            img[from] = to;
        }
        pos = close + 1;
    }
    return img;
}

FiniteGroup make_group(const std::string& spec, const GroupLimits& lim) {
    if (spec.rfind("cyclic:", 0) == 0)
        return abelian_group(parse_abelian_spec(spec), lim);
    if (spec.rfind("sym:", 0) == 0)
        return symmetric_group(static_cast<int>(parse_ll(spec.substr(4))), lim);
    if (spec.rfind("wreath:", 0) == 0) {
        std::string body = spec.substr(7);
        std::size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw SpecParseError("wreath spec needs 'wreath:<N>,<abelian-spec>'");
        int n = static_cast<int>(parse_ll(body.substr(0, comma)));
        return wreath_product(n, parse_abelian_spec(body.substr(comma + 1)), lim);
    }
    if (spec.rfind("permgen:", 0) == 0) {
        std::string body = spec.substr(8);
        std::size_t semi = body.find(';');
        if (semi == std::string::npos)
            throw SpecParseError("permgen spec needs 'permgen:<N>;<perm>;...'");
        int degree = static_cast<int>(parse_ll(body.substr(0, semi)));
        std::vector<std::vector<int>> gens;
        std::size_t pos = semi + 1;
        while (pos <= body.size()) {
            std::size_t next = body.find(';', pos);
            std::string tok = body.substr(pos, next == std::string::npos ? next : next - pos);
            if (!tok.empty())
                gens.push_back(parse_perm_cycles(degree, tok));
            if (next == std::string::npos)
                break;
            pos = next + 1;
        }
        if (gens.empty())
            throw SpecParseError("permgen spec lists no generators");
        return perm_subgroup(degree, gens, lim);
    }
    if (spec.rfind("truncseries:", 0) == 0)
        return trunc_series_group(static_cast<int>(parse_ll(spec.substr(12))), lim);
    throw SpecParseError("unknown group family in '" + spec + "'");
}

const WreathView* wreath_view(const FiniteGroup& g) {
    auto rep = dynamic_cast<const WreathRep*>(&g.rep());
    return rep ? &rep->view : nullptr;
}

WreathElement wreath_decode(const FiniteGroup& g, Elt e) {
    auto rep = dynamic_cast<const WreathRep*>(&g.rep());
    if (!rep)
        throw VerificationError("not a wreath-backed group");
    WreathElement w;
    w.perm.resize(rep->n);
    w.tail.resize(rep->n);
    std::uint32_t tails[16];
    rep->decode(e, w.perm.data(), tails);
    std::copy(tails, tails + rep->n, w.tail.begin());
    return w;
}

Elt wreath_encode(const FiniteGroup& g, const WreathElement& w) {
    auto rep = dynamic_cast<const WreathRep*>(&g.rep());
    if (!rep)
        throw VerificationError("not a wreath-backed group");
    if (static_cast<int>(w.perm.size()) != rep->n || w.tail.size() != w.perm.size())
        throw VerificationError("wreath element has wrong arity");
    std::uint32_t tails[16];
    std::copy(w.tail.begin(), w.tail.end(), tails);
    return static_cast<Elt>(rep->encode(w.perm.data(), tails));
}

} // namespace qd
