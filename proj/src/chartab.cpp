#include "qd/chartab.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace qd {

namespace {

long long mulm(long long a, long long b, long long p) { return a % p * (b % p) % p; }

long long powm(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = mulm(r, b, p);
        b = mulm(b, b, p);
        e >>= 1;
    }
    return r;
}

long long invm(long long a, long long p) { return powm(a, p - 2, p); }

bool is_prime_ll(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

using FMat = std::vector<std::vector<long long>>;

// row-reduced echelon form over F_p; returns pivot columns
std::vector<std::size_t> rref(FMat& m, long long p) {
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        long long inv = invm(m[r][c], p);
        for (auto& x : m[r])
            x = mulm(x, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % p == 0)
                continue;
            long long f = m[i][c] % p;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

// kernel basis of a square matrix over F_p (rows of the result)
FMat kernel_basis(FMat m, long long p) {
    std::size_t n = m.size();
    auto pivots = rref(m, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    FMat basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<long long> v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - m[r][c] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// characteristic polynomial over F_p by Hessenberg reduction,
// low-degree-first coefficients
std::vector<long long> charpoly_fp(FMat a, long long p) {
    std::size_t n = a.size();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && a[piv][k] % p == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != k + 1) { // similarity swap
            std::swap(a[piv], a[k + 1]);
            for (auto& row : a)
                std::swap(row[piv], row[k + 1]);
        }
        long long inv = invm(a[k + 1][k], p);
        for (std::size_t i = k + 2; i < n; ++i) {
            long long f = mulm(a[i][k], inv, p);
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = ((a[i][j] - f * a[k + 1][j]) % p + p) % p;
            for (std::size_t r = 0; r < n; ++r)
                a[r][k + 1] = (a[r][k + 1] + f * a[r][i]) % p;
        }
    }
    // p_m(x) = (x - h_mm) p_{m-1}(x) - sum_k h_km (prod subdiag) p_{k-1}(x)
    std::vector<std::vector<long long>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        const auto& prev = polys[m - 1];
        std::vector<long long> cur(m + 1, 0);
        for (std::size_t t = 0; t < prev.size(); ++t) {
            cur[t + 1] = (cur[t + 1] + prev[t]) % p;
            cur[t] = (cur[t] + (p - a[m - 1][m - 1] % p) % p * prev[t]) % p;
        }
        long long subprod = 1;
        for (std::size_t k = m - 1; k >= 1; --k) {
            subprod = mulm(subprod, a[k][k - 1], p);
            if (subprod == 0)
                break;
            long long coef = mulm(a[k - 1][m - 1], subprod, p);
            if (coef != 0) {
                const auto& pk = polys[k - 1];
                for (std::size_t t = 0; t < pk.size(); ++t)
                    cur[t] = ((cur[t] - coef * pk[t]) % p + p) % p;
            }
        }
        polys[m] = std::move(cur);
    }
    return polys[n];
}

std::vector<long long> poly_roots_fp(const std::vector<long long>& poly, long long p) {
    std::vector<long long> roots;
    for (long long x = 0; x < p; ++x) {
        long long acc = 0;
        for (std::size_t t = poly.size(); t-- > 0;)
            acc = (mulm(acc, x, p) + poly[t]) % p;
        if (acc == 0)
            roots.push_back(x);
    }
    return roots;
}

long long primitive_root(long long p) {
    auto factors = prime_factors(p - 1);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : factors)
            if (powm(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
    throw VerificationError("no primitive root found");
}

} // namespace

std::vector<std::vector<std::vector<long long>>>
class_mult_coeffs(const FiniteGroup& g, const ClassData& cd, const ChartabLimits& lim) {
    std::size_t k = cd.classes.size();
    if (k > lim.max_classes)
        throw ResourceError("class count " + std::to_string(k) + " exceeds cap");
    std::vector<std::vector<std::vector<long long>>> a(
        k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    for (std::size_t i = 0; i < k; ++i)
        for (Elt x : cd.classes[i].members) {
            Elt xi = g.inv(x);
            for (std::size_t t = 0; t < k; ++t) {
                Elt y = g.mul(xi, cd.classes[t].representative);
                a[i][cd.class_of[y]][t] += 1;
            }
        }
    return a;
}

CharacterTable character_table(const FiniteGroup& g, const ChartabLimits& lim) {
    auto cd = std::make_shared<ClassData>(conjugacy_classes(g));
    return character_table(g, cd, lim);
}

CharacterTable character_table(const FiniteGroup& g, std::shared_ptr<const ClassData> cd,
                               const ChartabLimits& lim) {
    const std::size_t k = cd->classes.size();
    if (k > lim.max_classes)
        throw ResourceError("class count " + std::to_string(k) + " exceeds cap");
    const long long n = static_cast<long long>(g.order());
    const long long e = exponent_of(g, *cd);

    CharacterTable table;
    table.group = g;
    table.classes = cd;
    table.exponent = e;
    table.inverse_class.resize(k);
    for (std::size_t c = 0; c < k; ++c)
        table.inverse_class[c] = cd->class_of[g.inv(cd->classes[c].representative)];

    auto coeff = class_mult_coeffs(g, *cd, lim);

    // power classes for the Fourier lift
    std::vector<std::vector<std::uint32_t>> pow_class(static_cast<std::size_t>(e));
    for (long long r = 0; r < e; ++r)
        pow_class[static_cast<std::size_t>(r)] = power_class_map(g, *cd, r);

    long long l = 0;
    {
        double bound = 2.0 * std::sqrt(static_cast<double>(n));
        l = e + 1;
        while (l <= static_cast<long long>(bound) || !is_prime_ll(l) || (l - 1) % e != 0)
            ++l;
    }

    for (int attempt = 0;; ++attempt) {
        if (attempt >= lim.max_prime_retries)
            throw VerificationError("eigenspace splitting failed for all primes tried");

        // split the common eigenspaces by each class matrix in fixed order
        std::vector<FMat> spaces;
        {
            FMat full(k, std::vector<long long>(k, 0));
            for (std::size_t i = 0; i < k; ++i)
                full[i][i] = 1;
            spaces.push_back(std::move(full));
        }
        bool failed = false;
        for (std::size_t i = 1; i < k && !failed; ++i) {
            std::vector<FMat> next;
            for (auto& space : spaces) {
                std::size_t d = space.size();
                if (d == 1) {
                    next.push_back(std::move(space));
                    continue;
                }
                // action of M_i on the space, in basis coordinates
                std::vector<std::vector<long long>> images(d, std::vector<long long>(k, 0));
                for (std::size_t s = 0; s < d; ++s)
                    for (std::size_t t = 0; t < k; ++t) {
                        long long acc = 0;
                        for (std::size_t j = 0; j < k; ++j)
                            if (space[s][j])
                                acc = (acc + coeff[i][j][t] % l * space[s][j]) % l;
                        images[s][t] = acc;
                    }
                // spaces are kept in RREF: coordinates of an invariant image
                // are its entries at the pivot columns
                std::vector<std::size_t> pivots(d);
                for (std::size_t s = 0; s < d; ++s) {
                    std::size_t c = 0;
                    while (space[s][c] % l == 0)
                        ++c;
                    pivots[s] = c;
                }
                FMat amat(d, std::vector<long long>(d, 0)); // column s = image of b_s
                for (std::size_t s = 0; s < d; ++s) {
                    for (std::size_t r = 0; r < d; ++r)
                        amat[r][s] = images[s][pivots[r]];
                    std::vector<long long> rebuilt(k, 0);
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t j = 0; j < k; ++j)
                            rebuilt[j] = (rebuilt[j] + amat[r][s] * space[r][j]) % l;
                    for (std::size_t j = 0; j < k; ++j)
                        if (rebuilt[j] != images[s][j] % l) {
                            failed = true;
                            break;
                        }
                    if (failed)
                        break;
                }
                if (failed)
                    break;
                auto roots = poly_roots_fp(charpoly_fp(amat, l), l);
                std::size_t total = 0;
                for (long long lambda : roots) {
                    FMat shifted = amat;
                    for (std::size_t r = 0; r < d; ++r)
                        shifted[r][r] = ((shifted[r][r] - lambda) % l + l) % l;
                    FMat ker = kernel_basis(std::move(shifted), l);
                    if (ker.empty())
                        continue;
                    total += ker.size();
                    FMat sub;
                    for (const auto& coords : ker) {
                        std::vector<long long> vec(k, 0);
                        for (std::size_t r = 0; r < d; ++r)
                            for (std::size_t j = 0; j < k; ++j)
                                vec[j] = (vec[j] + coords[r] * space[r][j]) % l;
                        sub.push_back(std::move(vec));
                    }
                    rref(sub, l);
                    next.push_back(std::move(sub));
                }
                if (total != d) {
                    failed = true;
                    break;
                }
            }
            if (!failed)
                spaces = std::move(next);
        }
        if (!failed)
            for (const auto& s : spaces)
                if (s.size() != 1)
                    failed = true;
        if (failed) {
            do
                ++l;
            while (!is_prime_ll(l) || (l - 1) % e != 0);
            continue;
        }
        if (spaces.size() != k)
            throw VerificationError("wrong number of common eigenvectors");

        // eigenvalue vectors omega_i = |C_i| chi(g_i) / chi(1) mod l
        std::vector<std::vector<long long>> omega(k, std::vector<long long>(k, 0));
        for (std::size_t w = 0; w < k; ++w) {
            const auto& v = spaces[w][0];
            std::size_t jstar = 0;
            while (v[jstar] % l == 0)
                ++jstar;
            long long vinv = invm(v[jstar], l);
            for (std::size_t i = 0; i < k; ++i) {
                long long acc = 0;
                for (std::size_t j = 0; j < k; ++j)
                    if (v[j])
                        acc = (acc + coeff[i][j][jstar] % l * v[j]) % l;
                omega[w][i] = mulm(acc, vinv, l);
            }
        }

        // degrees: d^2 = |G| / sum_i omega_i omega_{i*} / |C_i|, and d | |G|
        std::vector<long long> degrees(k, 0);
        bool degree_fail = false;
        for (std::size_t w = 0; w < k; ++w) {
            long long s = 0;
            for (std::size_t i = 0; i < k; ++i) {
                long long term = mulm(omega[w][i], omega[w][table.inverse_class[i]], l);
                s = (s + mulm(term, invm(static_cast<long long>(cd->classes[i].size()) % l, l), l)) % l;
            }
            if (s == 0) {
                degree_fail = true;
                break;
            }
            long long dsq = mulm(n % l, invm(s, l), l);
            long long found = 0;
            for (long long d = 1; d * d <= n; ++d) {
                if (n % d != 0)
                    continue;
                for (long long cand : {d, n / d})
                    if (2 * cand < l && mulm(cand, cand, l) == dsq)
                        found = found == 0 ? cand : std::min(found, cand);
            }
            if (!found) {
                degree_fail = true;
                break;
            }
            degrees[w] = found;
        }
        if (degree_fail) {
            do
                ++l;
            while (!is_prime_ll(l) || (l - 1) % e != 0);
            continue;
        }

        // Fourier lift: chi(g_j) = sum_t m_t zeta^t with
        // m_t = (1/e) sum_r chi(g_j^r) z^{-rt} mod l, 0 <= m_t <= deg
        long long z = powm(primitive_root(l), (l - 1) / e, l);
        long long zinv = invm(z, l);
        long long einv = invm(e % l, l);
        std::vector<std::vector<Cyclotomic>> values(k);
        bool lift_fail = false;
        for (std::size_t w = 0; w < k && !lift_fail; ++w) {
            // lambda per class: chi(class) = deg * omega / |C| mod l
            std::vector<long long> lambda(k);
            for (std::size_t c = 0; c < k; ++c)
                lambda[c] = mulm(mulm(degrees[w], omega[w][c], l),
                                 invm(static_cast<long long>(cd->classes[c].size()) % l, l), l);
            values[w].reserve(k);
            for (std::size_t c = 0; c < k; ++c) {
                std::vector<long long> mult(static_cast<std::size_t>(e), 0);
                long long total = 0;
                for (long long t = 0; t < e; ++t) {
                    long long acc = 0;
                    long long zr = 1; // zinv^{r t}
                    long long ztstep = powm(zinv, t, l);
                    for (long long r = 0; r < e; ++r) {
                        acc = (acc + mulm(lambda[pow_class[static_cast<std::size_t>(r)][c]], zr, l)) % l;
                        zr = mulm(zr, ztstep, l);
                    }
                    long long m = mulm(acc, einv, l);
                    if (m > degrees[w]) {
                        lift_fail = true;
                        break;
                    }
                    mult[static_cast<std::size_t>(t)] = m;
                    total += m;
                }
                if (lift_fail || total != degrees[w]) {
                    lift_fail = true;
                    break;
                }
                values[w].push_back(Cyclotomic::from_powers(e, mult));
            }
        }
        if (lift_fail) {
            do
                ++l;
            while (!is_prime_ll(l) || (l - 1) % e != 0);
            continue;
        }

        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (degrees[a] != degrees[b])
                return degrees[a] < degrees[b];
            return values[a] < values[b];
        });
        for (std::size_t w : idx) {
            table.degrees.push_back(degrees[w]);
            table.values.push_back(std::move(values[w]));
        }
        break;
    }

    long long degsq = 0;
    for (std::size_t w = 0; w < k; ++w) {
        degsq += table.degrees[w] * table.degrees[w];
        if (table.values[w][0] != Cyclotomic::integer(e, table.degrees[w]))
            throw VerificationError("degree column mismatch");
        if (n % table.degrees[w] != 0)
            throw VerificationError("degree does not divide the group order");
    }
    if (degsq != n)
        throw VerificationError("sum of squared degrees differs from the group order");
    verify_orthogonality(table);
    return table;
}

Cyclotomic char_at_power(const CharacterTable& t, std::size_t w, Elt g, long long n) {
    Elt gn = t.group.power(g, n);
    return t.values[w][t.classes->class_of[gn]];
}

void verify_orthogonality(const CharacterTable& t) {
    std::size_t k = t.irrep_count();
    long long n = static_cast<long long>(t.group.order());
    long long e = t.exponent;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            Cyclotomic acc = Cyclotomic::zero(e);
            for (std::size_t c = 0; c < k; ++c)
                acc += (t.values[a][c] * t.values[b][c].conj())
                           .scaled(static_cast<long long>(t.classes->classes[c].size()));
            if (acc != Cyclotomic::integer(e, a == b ? n : 0))
                throw VerificationError("row orthogonality failed");
        }
    for (std::size_t c1 = 0; c1 < k; ++c1)
        for (std::size_t c2 = c1; c2 < k; ++c2) {
            Cyclotomic acc = Cyclotomic::zero(e);
            for (std::size_t w = 0; w < k; ++w)
                acc += t.values[w][c1] * t.values[w][c2].conj();
            long long expect =
                c1 == c2 ? n / static_cast<long long>(t.classes->classes[c1].size()) : 0;
            if (acc != Cyclotomic::integer(e, expect))
                throw VerificationError("column orthogonality failed");
        }
    // conjugation matches evaluation at inverses
    for (std::size_t w = 0; w < k; ++w)
        for (std::size_t c = 0; c < k; ++c)
            if (t.values[w][c].conj() != t.values[w][t.inverse_class[c]])
                throw VerificationError("conjugate column mismatch");
}

} // namespace qd
