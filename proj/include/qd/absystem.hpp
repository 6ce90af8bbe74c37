#pragma once

#include <optional>
#include <vector>

#include "qd/finab.hpp"
#include "qd/snf.hpp"

namespace qd {

/// One unknown of an inhomogeneous system over a finite abelian group:
/// it ranges over `domain` and enters equations through the homomorphism
/// `embed` (target.rank() x domain.rank() integer matrix) scaled by the
/// per-equation integer coefficient.
struct AbVar {
    FinAbGroup domain;
    std::vector<std::vector<long long>> embed;

    static AbVar plain(const FinAbGroup& b);
    static AbVar torsion(const FinAbGroup& b, long long k);
};

/// coeffs is equations x variables; every RHS entry lies in `target`.
struct AbLinearSystem {
    FinAbGroup target;
    std::vector<AbVar> vars;
    std::vector<std::vector<long long>> coeffs;
    std::vector<FinAbVec> rhs;
};

struct AbSolution {
    bool solvable = false;
    BigInt count = 0;                // 0 iff unsolvable, else kernel size
    std::vector<FinAbVec> witness;   // one assignment per variable when solvable
};

/// RHS-independent factorization of a system shape: scalarizes each Z/m
/// equation coordinate with a multiple-of-m slack column and runs one SNF.
/// Repeated right-hand sides then cost only a matrix-vector pass.
class AbSystemSolver {
public:
    AbSystemSolver(FinAbGroup target, std::vector<AbVar> vars,
                   std::vector<std::vector<long long>> coeffs);

    AbSolution solve(const std::vector<FinAbVec>& rhs) const;
    const FinAbGroup& target() const { return target_; }
    const std::vector<AbVar>& vars() const { return vars_; }

private:
    FinAbGroup target_;
    std::vector<AbVar> vars_;
    std::vector<std::vector<long long>> coeffs_;
    std::size_t n_eqs_ = 0;
    std::size_t scalar_rows_ = 0;   // n_eqs * target rank
    std::size_t scalar_vars_ = 0;   // total variable coordinates
    std::vector<long long> var_moduli_;
    std::vector<std::pair<std::size_t, std::size_t>> var_span_; // (offset, len) per variable
    SnfResult snf_;                  // of [A | diag(target moduli per row)]
    BigInt kernel_size_ = 0;
};

AbSolution solve_ab_system(const AbLinearSystem& s);

/// Exhaustive enumeration over the full variable space; the independent
/// oracle for solve_ab_system. Throws ResourceError above `cap` assignments.
AbSolution brute_force_count(const AbLinearSystem& s, unsigned long long cap = 10'000'000);

} // namespace qd
