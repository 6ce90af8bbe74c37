#include "qd/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qd {

namespace {

using Poly = std::vector<long long>; // low-degree-first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// exact division of polynomials with divisor monic
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size()) {
        long long lead = num.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= lead * den[i];
        trim(num);
        if (num.empty())
            break;
    }
    if (!num.empty())
        throw VerificationError("non-exact polynomial division");
    return quot;
}

} // namespace

long long euler_phi(long long e) {
    long long result = e;
    long long n = e;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0)
                n /= p;
        }
    if (n > 1)
        result -= result / n;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(long long e) {
    static std::map<long long, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(e);
    if (it != cache.end())
        return it->second;

    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, computed bottom-up
    std::function<const Poly&(long long)> get = [&](long long k) -> const Poly& {
        auto found = cache.find(k);
        if (found != cache.end())
            return found->second;
        Poly num(static_cast<std::size_t>(k) + 1, 0);
        num[0] = -1;
        num[static_cast<std::size_t>(k)] = 1;
        for (long long d = 1; d < k; ++d)
            if (k % d == 0)
                num = poly_div_exact(std::move(num), get(d));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(e);
}

namespace {

// reduce an arbitrary power vector modulo Phi_e to degree < phi(e)
std::vector<long long> reduce_mod_phi(long long e, std::vector<long long> v) {
    const auto& phi = cyclotomic_polynomial(e);
    std::size_t deg = phi.size() - 1; // = euler_phi(e)
    if (v.size() < deg)
        v.resize(deg, 0);
    for (std::size_t i = v.size(); i-- > deg;) {
        long long lead = v[i];
        if (lead == 0)
            continue;
        std::size_t shift = i - deg;
        for (std::size_t j = 0; j < phi.size(); ++j)
            v[shift + j] -= lead * phi[j];
    }
    v.resize(deg);
    return v;
}

} // namespace

Cyclotomic Cyclotomic::zero(long long e) {
    return Cyclotomic(e, std::vector<long long>(euler_phi(e), 0));
}

Cyclotomic Cyclotomic::integer(long long e, long long n) {
    std::vector<long long> v(euler_phi(e), 0); // phi(e) >= 1 always
    v[0] = n;
    return Cyclotomic(e, std::move(v));
}

Cyclotomic Cyclotomic::zeta_power(long long e, long long k) {
    k %= e;
    if (k < 0)
        k += e;
    std::vector<long long> v(static_cast<std::size_t>(k) + 1, 0);
    v[static_cast<std::size_t>(k)] = 1;
    return Cyclotomic(e, reduce_mod_phi(e, std::move(v)));
}

Cyclotomic Cyclotomic::from_powers(long long e, const std::vector<long long>& powers) {
    return Cyclotomic(e, reduce_mod_phi(e, powers));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw VerificationError("cyclotomic order mismatch");
    std::vector<long long> v = coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += o.coeffs_[i];
    return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    std::vector<long long> v = coeffs_;
    for (auto& c : v)
        c = -c;
    return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw VerificationError("cyclotomic order mismatch");
    if (coeffs_.empty())
        return *this;
    std::vector<long long> prod(2 * coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Cyclotomic(order_, reduce_mod_phi(order_, std::move(prod)));
}

Cyclotomic Cyclotomic::scaled(long long k) const {
    std::vector<long long> v = coeffs_;
    for (auto& c : v)
        c *= k;
    return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::divided_exact(long long k) const {
    std::vector<long long> v = coeffs_;
    for (auto& c : v) {
        if (c % k != 0)
            throw VerificationError("cyclotomic coefficient not divisible");
        c /= k;
    }
    return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::galois(long long s) const {
    s %= order_;
    if (s < 0)
        s += order_;
    if (std::gcd(s, order_) != 1)
        throw VerificationError("galois twist needs s coprime to the order");
    std::vector<long long> v(static_cast<std::size_t>(order_), 0);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
        v[static_cast<std::size_t>((static_cast<long long>(t) * s) % order_)] += coeffs_[t];
    return Cyclotomic(order_, reduce_mod_phi(order_, std::move(v)));
}

Cyclotomic Cyclotomic::conj() const { return order_ == 1 ? *this : galois(order_ - 1); }

Cyclotomic Cyclotomic::promote(long long bigger) const {
    if (bigger % order_ != 0)
        throw VerificationError("promotion target must be a multiple of the order");
    long long step = bigger / order_;
    std::vector<long long> v(static_cast<std::size_t>(bigger), 0);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
        v[t * static_cast<std::size_t>(step)] += coeffs_[t];
    return Cyclotomic(bigger, reduce_mod_phi(bigger, std::move(v)));
}

bool Cyclotomic::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Cyclotomic::is_rational_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

long long Cyclotomic::rational_value() const {
    if (!is_rational_integer())
        throw VerificationError("value is not a rational integer");
    return coeffs_.empty() ? 0 : coeffs_[0];
}

std::strong_ordering Cyclotomic::operator<=>(const Cyclotomic& o) const {
    if (auto c = order_ <=> o.order_; c != 0)
        return c;
    return coeffs_ <=> o.coeffs_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        long long c = coeffs_[t];
        if (c == 0)
            continue;
        if (any)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        long long mag = c > 0 ? c : -c;
        if (t == 0)
            os << mag;
        else {
            if (mag != 1)
                os << mag << "*";
            os << "z" << order_;
            if (t > 1)
                os << "^" << t;
        }
        any = true;
    }
    if (!any)
        os << 0;
    return os.str();
}

} // namespace qd
