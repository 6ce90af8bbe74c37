#include "qd/finab.hpp"

#include <numeric>
#include <sstream>

#include "qd/snf.hpp"

namespace qd {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

FinAbGroup FinAbGroup::from_moduli(const std::vector<long long>& moduli) {
    for (long long m : moduli)
        if (m < 1)
            throw SpecParseError("abelian modulus must be positive");
    IntMat rel(moduli.size(), std::vector<BigInt>(moduli.size(), 0));
    for (std::size_t i = 0; i < moduli.size(); ++i)
        rel[i][i] = moduli[i];
    auto snf = smith_normal_form(rel);
    std::vector<long long> factors;
    for (const auto& d : snf.diagonal())
        if (d > 1)
            factors.push_back(static_cast<long long>(d));
    return from_invariant_factors(std::move(factors));
}

FinAbGroup FinAbGroup::from_invariant_factors(std::vector<long long> factors) {
    std::vector<long long> kept;
    for (long long f : factors) {
        if (f < 1)
            throw SpecParseError("invariant factor must be positive");
        if (f == 1)
            continue;
        if (!kept.empty() && f % kept.back() != 0)
            throw SpecParseError("invariant factors must form a divisor chain");
        kept.push_back(f);
    }
    FinAbGroup g;
    g.factors_ = std::move(kept);
    return g;
}

unsigned long long FinAbGroup::order() const {
    unsigned long long n = 1;
    for (long long f : factors_)
        n *= static_cast<unsigned long long>(f);
    return n;
}

FinAbVec FinAbGroup::reduce(FinAbVec v) const {
    v.resize(factors_.size(), 0);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        v[i] %= factors_[i];
        if (v[i] < 0)
            v[i] += factors_[i];
    }
    return v;
}

FinAbVec FinAbGroup::add(const FinAbVec& a, const FinAbVec& b) const {
    FinAbVec out(factors_.size(), 0);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out[i] = (a[i] + b[i]) % factors_[i];
    return out;
}

FinAbVec FinAbGroup::neg(const FinAbVec& a) const {
    FinAbVec out(factors_.size(), 0);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out[i] = a[i] == 0 ? 0 : factors_[i] - a[i];
    return out;
}

FinAbVec FinAbGroup::sub(const FinAbVec& a, const FinAbVec& b) const {
    return add(a, neg(b));
}

FinAbVec FinAbGroup::scalar_mul(long long k, const FinAbVec& a) const {
    FinAbVec out(factors_.size(), 0);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long kk = k % factors_[i];
        if (kk < 0)
            kk += factors_[i];
        out[i] = (kk * (a[i] % factors_[i])) % factors_[i];
    }
    return out;
}

bool FinAbGroup::is_zero(const FinAbVec& a) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (a[i] % factors_[i] != 0)
            return false;
    return true;
}

long long FinAbGroup::element_order(const FinAbVec& a) const {
    long long ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        ord = lcm_ll(ord, factors_[i] / gcd_ll(a[i], factors_[i]));
    return ord;
}

FinAbVec FinAbGroup::element_at(unsigned long long idx) const {
    FinAbVec v(factors_.size(), 0);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        v[i] = static_cast<long long>(idx % static_cast<unsigned long long>(factors_[i]));
        idx /= static_cast<unsigned long long>(factors_[i]);
    }
    return v;
}

unsigned long long FinAbGroup::index_of(const FinAbVec& v) const {
    unsigned long long idx = 0, stride = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long c = v[i] % factors_[i];
        if (c < 0)
            c += factors_[i];
        idx += stride * static_cast<unsigned long long>(c);
        stride *= static_cast<unsigned long long>(factors_[i]);
    }
    return idx;
}

std::string FinAbGroup::to_string() const {
    if (factors_.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i)
            os << " x ";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

FinAbVec TorsionSubgroup::include(const FinAbGroup& ambient, const FinAbVec& v) const {
    FinAbVec out = ambient.zero();
    for (std::size_t c = 0; c < embed.size(); ++c) {
        long long acc = 0;
        for (std::size_t j = 0; j < embed[c].size(); ++j)
            acc += embed[c][j] * v[j];
        out[c] = acc;
    }
    return ambient.reduce(out);
}

TorsionSubgroup torsion_subgroup(const FinAbGroup& b, long long k) {
    if (k < 1)
        throw SpecParseError("torsion order must be positive");
    // coordinate i contributes Z/gcd(k, m_i), included as multiplication
    // by m_i / gcd(k, m_i); the gcds inherit the divisor chain
    std::vector<long long> factors;
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < b.rank(); ++i) {
        long long g = gcd_ll(k, b.factors()[i]);
        if (g > 1) {
            factors.push_back(g);
            coords.push_back(i);
        }
    }
    TorsionSubgroup t;
    t.sub = FinAbGroup::from_invariant_factors(factors);
    t.embed.assign(b.rank(), std::vector<long long>(factors.size(), 0));
    for (std::size_t j = 0; j < coords.size(); ++j)
        t.embed[coords[j]][j] = b.factors()[coords[j]] / factors[j];
    return t;
}

} // namespace qd
