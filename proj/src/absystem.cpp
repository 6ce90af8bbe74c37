#include "qd/absystem.hpp"

#include <cassert>

namespace qd {

AbVar AbVar::plain(const FinAbGroup& b) {
    AbVar v;
    v.domain = b;
    v.embed.assign(b.rank(), std::vector<long long>(b.rank(), 0));
    for (std::size_t i = 0; i < b.rank(); ++i)
        v.embed[i][i] = 1;
    return v;
}

AbVar AbVar::torsion(const FinAbGroup& b, long long k) {
    auto t = torsion_subgroup(b, k);
    AbVar v;
    v.domain = t.sub;
    v.embed = t.embed;
    return v;
}

AbSystemSolver::AbSystemSolver(FinAbGroup target, std::vector<AbVar> vars,
                               std::vector<std::vector<long long>> coeffs)
    : target_(std::move(target)), vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
    n_eqs_ = coeffs_.size();
    std::size_t t = target_.rank();
    scalar_rows_ = n_eqs_ * t;

    for (const auto& v : vars_) {
        var_span_.emplace_back(scalar_vars_, v.domain.rank());
        scalar_vars_ += v.domain.rank();
        for (long long f : v.domain.factors())
            var_moduli_.push_back(f);
        if (v.embed.size() != t)
            throw VerificationError("variable embedding has wrong target rank");
    }

    // scalarized matrix [A | diag(m)] where row (e, c) carries the
    // coordinate-c component of equation e, with modulus m_c; the matrix
    // keeps its variable columns even when there are no rows
    IntMat m(scalar_rows_, std::vector<BigInt>(scalar_vars_ + scalar_rows_, 0));
    for (std::size_t e = 0; e < n_eqs_; ++e) {
        if (coeffs_[e].size() != vars_.size())
            throw VerificationError("coefficient row length mismatch");
        for (std::size_t c = 0; c < t; ++c) {
            std::size_t row = e * t + c;
            long long mod = target_.factors()[c];
            for (std::size_t v = 0; v < vars_.size(); ++v) {
                auto [off, len] = var_span_[v];
                for (std::size_t j = 0; j < len; ++j) {
                    long long entry = coeffs_[e][v] * vars_[v].embed[c][j];
                    m[row][off + j] = entry;
                    // the scalarized map must be a genuine homomorphism
                    long long mu = vars_[v].domain.factors()[j];
                    if ((static_cast<BigInt>(entry) * mu) % mod != 0)
                        throw VerificationError("system map is not well defined on variable domains");
                }
            }
            m[row][scalar_vars_ + row] = mod;
        }
    }
    snf_ = smith_normal_form(m, scalar_vars_ + scalar_rows_);

    // |ker| = prod(var moduli) * prod(SNF diagonal) / prod(row moduli)
    BigInt num = 1;
    for (long long mu : var_moduli_)
        num *= mu;
    for (const auto& d : snf_.diagonal())
        if (d != 0)
            num *= d;
    BigInt den = 1;
    for (std::size_t e = 0; e < n_eqs_; ++e)
        for (long long f : target_.factors())
            den *= f;
    assert(den != 0 && num % den == 0);
    kernel_size_ = num / den;
}

AbSolution AbSystemSolver::solve(const std::vector<FinAbVec>& rhs) const {
    if (rhs.size() != n_eqs_)
        throw VerificationError("rhs length mismatch");
    std::size_t t = target_.rank();

    std::vector<BigInt> b(scalar_rows_, 0);
    for (std::size_t e = 0; e < n_eqs_; ++e) {
        FinAbVec r = target_.reduce(rhs[e]);
        for (std::size_t c = 0; c < t; ++c)
            b[e * t + c] = r[c];
    }

    // transform: ub = U * b, then D z = ub must have an integer solution
    std::vector<BigInt> ub(scalar_rows_, 0);
    for (std::size_t i = 0; i < scalar_rows_; ++i)
        for (std::size_t j = 0; j < scalar_rows_; ++j)
            if (snf_.u[i][j] != 0)
                ub[i] += snf_.u[i][j] * b[j];

    std::size_t width = scalar_vars_ + scalar_rows_;
    std::vector<BigInt> z(width, 0);
    AbSolution sol;
    for (std::size_t i = 0; i < scalar_rows_; ++i) {
        BigInt d = i < width ? snf_.d[i][i] : BigInt(0);
        if (d == 0) {
            if (ub[i] != 0)
                return sol;
        } else {
            if (ub[i] % d != 0)
                return sol;
            z[i] = ub[i] / d;
        }
    }
    sol.solvable = true;
    sol.count = kernel_size_;

    // witness = first scalar_vars_ coordinates of V*z, reduced per variable
    std::vector<BigInt> full(scalar_vars_, 0);
    for (std::size_t i = 0; i < scalar_vars_; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (snf_.v[i][j] != 0 && z[j] != 0)
                full[i] += snf_.v[i][j] * z[j];
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        auto [off, len] = var_span_[v];
        FinAbVec w(len, 0);
        for (std::size_t j = 0; j < len; ++j) {
            BigInt mod = vars_[v].domain.factors()[j];
            BigInt red = full[off + j] % mod;
            if (red < 0)
                red += mod;
            w[j] = static_cast<long long>(red);
        }
        sol.witness.push_back(std::move(w));
    }
    return sol;
}

AbSolution solve_ab_system(const AbLinearSystem& s) {
    AbSystemSolver solver(s.target, s.vars, s.coeffs);
    return solver.solve(s.rhs);
}

AbSolution brute_force_count(const AbLinearSystem& s, unsigned long long cap) {
    unsigned long long space = 1;
    for (const auto& v : s.vars) {
        unsigned long long o = v.domain.order();
        if (o != 0 && space > cap / o + 1)
            throw ResourceError("brute-force search space exceeds cap");
        space *= o;
    }
    if (space > cap)
        throw ResourceError("brute-force search space exceeds cap");

    std::size_t t = s.target.rank();
    std::vector<FinAbVec> reduced_rhs;
    for (const auto& r : s.rhs)
        reduced_rhs.push_back(s.target.reduce(r));

    AbSolution sol;
    std::vector<FinAbVec> assign(s.vars.size());
    for (unsigned long long code = 0; code < space; ++code) {
        unsigned long long rest = code;
        for (std::size_t v = 0; v < s.vars.size(); ++v) {
            unsigned long long o = s.vars[v].domain.order();
            assign[v] = s.vars[v].domain.element_at(o ? rest % o : 0);
            rest /= o ? o : 1;
        }
        bool good = true;
        for (std::size_t e = 0; e < s.coeffs.size() && good; ++e) {
            FinAbVec acc = s.target.zero();
            for (std::size_t v = 0; v < s.vars.size(); ++v) {
                if (s.coeffs[e][v] == 0)
                    continue;
                FinAbVec img(t, 0);
                for (std::size_t c = 0; c < t; ++c) {
                    long long x = 0;
                    for (std::size_t j = 0; j < s.vars[v].embed[c].size(); ++j)
                        x += s.vars[v].embed[c][j] * assign[v][j];
                    img[c] = x * s.coeffs[e][v];
                }
                acc = s.target.add(acc, s.target.reduce(std::move(img)));
            }
            good = acc == reduced_rhs[e];
        }
        if (good) {
            if (!sol.solvable) {
                sol.solvable = true;
                sol.witness = assign;
            }
            sol.count += 1;
        }
    }
    return sol;
}

} // namespace qd
