#include "qd/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace qd {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

long long pow_mod(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// dense polynomials over F_p truncated mod x^{p+2}; index = degree
using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    std::size_t cap = static_cast<std::size_t>(p) + 2;
    Poly out(cap, 0);
    for (std::size_t i = 0; i < cap; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < cap; ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

// f(g(x)) for f with zero constant term
Poly poly_compose(const Poly& f, const Poly& g, int p) {
    std::size_t cap = static_cast<std::size_t>(p) + 2;
    Poly out(cap, 0);
    Poly gk = g;
    for (std::size_t k = 1; k < cap; ++k) {
        if (f[k] != 0)
            for (std::size_t d = 0; d < cap; ++d)
                out[d] = (out[d] + f[k] * gk[d]) % p;
        if (k + 1 < cap)
            gk = poly_mul(gk, g, p);
    }
    return out;
}

Poly poly_x(int p) {
    Poly x(static_cast<std::size_t>(p) + 2, 0);
    x[1] = 1;
    return x;
}

struct TruncRep final : detail::GroupRep {
    int p = 0;
    TruncShape shape;

    Poly decode(std::uint64_t code) const {
        Poly f = poly_x(p);
        for (int i = 0; i < p; ++i) {
            f[i + 2] = static_cast<long long>(code % static_cast<std::uint64_t>(p));
            code /= static_cast<std::uint64_t>(p);
        }
        return f;
    }
    std::uint64_t encode(const Poly& f) const {
        assert(f[0] == 0 && f[1] == 1);
        std::uint64_t code = 0, stride = 1;
        for (int i = 0; i < p; ++i) {
            code += stride * static_cast<std::uint64_t>(f[i + 2]);
            stride *= static_cast<std::uint64_t>(p);
        }
        return code;
    }
    std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const override {
        return encode(poly_compose(decode(a), decode(b), p));
    }
    std::uint64_t inv_code(std::uint64_t a) const override {
        // fixed-point iteration g <- g - (f(g) - x); the error valuation
        // rises each round, so p+1 rounds always suffice
        Poly f = decode(a);
        Poly g = poly_x(p);
        for (int round = 0; round <= p + 1; ++round) {
            Poly fg = poly_compose(f, g, p);
            bool done = true;
            for (std::size_t d = 0; d < fg.size(); ++d) {
                long long err = (fg[d] - (d == 1 ? 1 : 0)) % p;
                if (err < 0)
                    err += p;
                if (err != 0) {
                    done = false;
                    g[d] = ((g[d] - err) % p + p) % p;
                }
            }
            if (done)
                return encode(g);
        }
        throw VerificationError("series inversion did not converge");
    }
};

const TruncRep* trunc_rep(const FiniteGroup& g) {
    return dynamic_cast<const TruncRep*>(&g.rep());
}

} // namespace

FiniteGroup trunc_series_group(int p, const GroupLimits& lim) {
    if (!is_prime(p))
        throw SpecParseError("truncseries parameter must be prime");
    long double approx = std::pow(static_cast<long double>(p), p);
    if (approx > static_cast<long double>(lim.max_order))
        throw ResourceError("truncseries order p^p exceeds cap");

    auto rep = std::make_shared<TruncRep>();
    rep->p = p;
    rep->shape.p = p;
    std::uint64_t order = 1;
    for (int i = 0; i < p; ++i)
        order *= static_cast<std::uint64_t>(p);
    rep->order = order;
    rep->dense = true;
    rep->desc = "truncseries:" + std::to_string(p);
    // x + x^2 and x + x^3 map onto a basis of G modulo the Frattini
    // subgroup, hence generate
    rep->gens.push_back(1);
    if (p > 1)
        rep->gens.push_back(static_cast<Elt>(p));
    rep->finalize();
    FiniteGroup g(rep);
    if (generated_order(g) != g.order())
        throw VerificationError("declared generators do not generate");
    return g;
}

std::vector<long long> TruncShape::coeffs(Elt e) const {
    std::vector<long long> out(p);
    std::uint64_t code = e;
    for (int i = 0; i < p; ++i) {
        out[i] = static_cast<long long>(code % static_cast<std::uint64_t>(p));
        code /= static_cast<std::uint64_t>(p);
    }
    return out;
}

Elt TruncShape::encode(const std::vector<long long>& coeffs) const {
    std::uint64_t code = 0, stride = 1;
    for (int i = 0; i < p; ++i) {
        long long c = coeffs[i] % p;
        if (c < 0)
            c += p;
        code += stride * static_cast<std::uint64_t>(c);
        stride *= static_cast<std::uint64_t>(p);
    }
    return static_cast<Elt>(code);
}

const TruncShape* trunc_shape(const FiniteGroup& g) {
    auto rep = trunc_rep(g);
    return rep ? &rep->shape : nullptr;
}

VectorFieldElt VectorFieldElt::zero(int p) { return {p, std::vector<long long>(p, 0)}; }

VectorFieldElt VectorFieldElt::basis(int p, int i) {
    auto v = zero(p);
    v.c.at(static_cast<std::size_t>(i) - 1) = 1;
    return v;
}

VectorFieldElt vf_add(const VectorFieldElt& v, const VectorFieldElt& w) {
    assert(v.p == w.p);
    VectorFieldElt out = VectorFieldElt::zero(v.p);
    for (int i = 0; i < v.p; ++i)
        out.c[i] = (v.c[i] + w.c[i]) % v.p;
    return out;
}

VectorFieldElt vf_scale(long long k, const VectorFieldElt& v) {
    VectorFieldElt out = VectorFieldElt::zero(v.p);
    k %= v.p;
    if (k < 0)
        k += v.p;
    for (int i = 0; i < v.p; ++i)
        out.c[i] = k * v.c[i] % v.p;
    return out;
}

VectorFieldElt lie_bracket(const VectorFieldElt& v, const VectorFieldElt& w) {
    assert(v.p == w.p);
    int p = v.p;
    VectorFieldElt out = VectorFieldElt::zero(p);
    for (int i = 1; i <= p; ++i) {
        if (v.c[i - 1] == 0)
            continue;
        for (int j = 1; j <= p; ++j) {
            if (w.c[j - 1] == 0 || i + j > p)
                continue;
            long long coef = ((j - i) % p + p) % p;
            out.c[i + j - 1] = (out.c[i + j - 1] + coef * v.c[i - 1] % p * w.c[j - 1]) % p;
        }
    }
    return out;
}

namespace {

Poly vf_poly(const VectorFieldElt& v) {
    Poly out(static_cast<std::size_t>(v.p) + 2, 0);
    for (int i = 1; i <= v.p; ++i)
        out[i + 1] = v.c[i - 1] % v.p;
    return out;
}

// derivation: (V f')(x) truncated
Poly vf_apply(const Poly& vp, const Poly& f, int p) {
    std::size_t cap = static_cast<std::size_t>(p) + 2;
    Poly df(cap, 0);
    for (std::size_t d = 1; d < cap; ++d)
        df[d - 1] = static_cast<long long>(d) % p * f[d] % p;
    return poly_mul(vp, df, p);
}

} // namespace

Elt exp_vf(const FiniteGroup& g, const VectorFieldElt& v) {
    auto rep = trunc_rep(g);
    if (!rep || rep->p != v.p)
        throw VerificationError("exp_vf needs a truncated-series group of matching p");
    int p = v.p;
    bool nonzero = false;
    for (long long c : v.c)
        nonzero |= c % p != 0;
    if (nonzero && v.c[0] % p != 0)
        throw UnsupportedExponentError("flow of a field with L_1 component needs 1/p!");

    Poly vp = vf_poly(v);
    Poly result = poly_x(p);
    Poly term = poly_x(p);
    long long fact_inv = 1;
    for (int k = 1; k < p; ++k) {
        term = vf_apply(vp, term, p);
        bool zero = std::all_of(term.begin(), term.end(), [&](long long c) { return c % p == 0; });
        if (zero)
            break;
        fact_inv = fact_inv * pow_mod(k, p - 2, p) % p;
        for (std::size_t d = 0; d < term.size(); ++d)
            result[d] = (result[d] + fact_inv * term[d]) % p;
        if (k == p - 1)
            throw UnsupportedExponentError("flow needs 1/p! term");
    }
    return static_cast<Elt>(rep->encode(result));
}

VectorFieldElt vf_pushforward(const FiniteGroup& g, Elt phi, const VectorFieldElt& v) {
    auto rep = trunc_rep(g);
    if (!rep || rep->p != v.p)
        throw VerificationError("vf_pushforward needs a truncated-series group of matching p");
    int p = v.p;
    Poly f = rep->decode(phi);
    Poly finv = rep->decode(static_cast<std::uint64_t>(g.inv(phi)));
    // (phi_* v) = (phi' * v) o phi^{-1}
    std::size_t cap = static_cast<std::size_t>(p) + 2;
    Poly df(cap, 0);
    for (std::size_t d = 1; d < cap; ++d)
        df[d - 1] = static_cast<long long>(d) % p * f[d] % p;
    Poly u = poly_mul(df, vf_poly(v), p);
    assert(u[0] == 0 && u[1] == 0);
    Poly w = poly_compose(u, finv, p);
    assert(w[0] == 0 && w[1] == 0);
    VectorFieldElt out = VectorFieldElt::zero(p);
    for (int i = 1; i <= p; ++i)
        out.c[i - 1] = w[i + 1];
    return out;
}

AdjointOrbits adjoint_orbits(const FiniteGroup& g) {
    auto rep = trunc_rep(g);
    if (!rep)
        throw VerificationError("adjoint_orbits needs a truncated-series group");
    int p = rep->p;
    std::uint64_t space = rep->order; // p^p vectors

    auto code_of = [&](const VectorFieldElt& v) {
        std::uint64_t code = 0, stride = 1;
        for (int i = 0; i < p; ++i) {
            code += stride * static_cast<std::uint64_t>(((v.c[i] % p) + p) % p);
            stride *= static_cast<std::uint64_t>(p);
        }
        return code;
    };
    auto vec_of = [&](std::uint64_t code) {
        VectorFieldElt v = VectorFieldElt::zero(p);
        for (int i = 0; i < p; ++i) {
            v.c[i] = static_cast<long long>(code % static_cast<std::uint64_t>(p));
            code /= static_cast<std::uint64_t>(p);
        }
        return v;
    };

    AdjointOrbits out;
    std::vector<bool> visited(space, false);
    for (std::uint64_t seed = 0; seed < space; ++seed) {
        if (visited[seed])
            continue;
        visited[seed] = true;
        std::deque<std::uint64_t> queue{seed};
        while (!queue.empty()) {
            std::uint64_t x = queue.front();
            queue.pop_front();
            for (Elt t : g.generators()) {
                std::uint64_t y = code_of(vf_pushforward(g, t, vec_of(x)));
                if (!visited[y]) {
                    visited[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.representatives.push_back(vec_of(seed));
        ++out.count;
    }
    return out;
}

namespace {

long long k_double_with(const FiniteGroup& g, const ClassData& cd) {
    long long total = 0;
    for (const auto& cls : cd.classes) {
        auto members = centralizer_members(g, cls.representative);
        if (members.size() == g.order()) {
            total += static_cast<long long>(cd.classes.size());
            continue;
        }
        auto sub = subgroup_from_members(g, std::move(members));
        total += static_cast<long long>(conjugacy_classes(sub).classes.size());
    }
    return total;
}

} // namespace

long long k_double(const FiniteGroup& g) {
    return k_double_with(g, conjugacy_classes(g));
}

long long k_double_via_pairs(const FiniteGroup& g) {
    std::size_t n = g.order();
    if (n > 5000)
        throw ResourceError("commuting-pair orbit count capped at order 5000");
    const auto& gens = g.generators();
    std::vector<Elt> gen_inv;
    for (Elt t : gens)
        gen_inv.push_back(g.inv(t));

    std::unordered_set<std::uint64_t> pairs;
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            if (g.mul(a, b) == g.mul(b, a))
                pairs.insert(static_cast<std::uint64_t>(a) * n + b);

    long long orbits = 0;
    std::unordered_set<std::uint64_t> visited;
    for (std::uint64_t seed : pairs) {
        if (visited.count(seed))
            continue;
        ++orbits;
        std::deque<std::uint64_t> queue{seed};
        visited.insert(seed);
        while (!queue.empty()) {
            std::uint64_t x = queue.front();
            queue.pop_front();
            Elt a = static_cast<Elt>(x / n), b = static_cast<Elt>(x % n);
            for (std::size_t t = 0; t < gens.size(); ++t) {
                Elt a2 = g.mul(g.mul(gens[t], a), gen_inv[t]);
                Elt b2 = g.mul(g.mul(gens[t], b), gen_inv[t]);
                std::uint64_t y = static_cast<std::uint64_t>(a2) * n + b2;
                if (visited.insert(y).second)
                    queue.push_back(y);
            }
        }
    }
    return orbits;
}

BoundsReport centralizer_report(int p, const BoundsLimits& lim) {
    if (!is_prime(p) || p == 2)
        throw SpecParseError("witness construction needs an odd prime p");
    if (p > lim.max_p)
        throw ResourceError("p exceeds the configured cap " + std::to_string(lim.max_p));

    GroupLimits glim = lim.group;
    long double need = std::pow(static_cast<long double>(p), p);
    if (glim.max_order < need)
        glim.max_order = static_cast<std::uint64_t>(need) + 1;
    FiniteGroup g = trunc_series_group(p, glim);
    auto cd = conjugacy_classes(g);

    BoundsReport rep;
    rep.p = p;
    rep.group_order = g.order();
    rep.class_count = static_cast<long long>(cd.classes.size());
    rep.p_cubed = static_cast<long long>(p) * p * p;
    rep.witness_element = exp_vf(g, VectorFieldElt::basis(p, (p + 1) / 2));

    auto z = centralizer_members(g, rep.witness_element);
    rep.centralizer_order = static_cast<long long>(z.size());
    rep.centralizer_order_expected = 1;
    for (int i = 0; i < (p + 1) / 2; ++i)
        rep.centralizer_order_expected *= p;

    rep.centralizer_abelian = true;
    for (Elt a : z)
        for (Elt b : z)
            if (g.mul(a, b) != g.mul(b, a)) {
                rep.centralizer_abelian = false;
                break;
            }
    rep.centralizer_exponent_p = true;
    for (Elt a : z)
        if (g.power(a, p) != g.identity()) {
            rep.centralizer_exponent_p = false;
            break;
        }

    rep.k_double_value = k_double_with(g, cd);
    rep.witness_log = 0.5 * (p + 1) * std::log(static_cast<double>(p));

    if (rep.class_count > rep.p_cubed)
        throw VerificationError("class count exceeds p^3");
    if (rep.centralizer_order != rep.centralizer_order_expected)
        throw VerificationError("centralizer order differs from p^((p+1)/2)");
    return rep;
}

} // namespace qd
