#pragma once

#include <optional>
#include <random>
#include <vector>

#include "qd/absystem.hpp"
#include "qd/finab.hpp"

namespace qd {

/// Set partition of {0, ..., r-1} into disjoint nonempty blocks.
struct SetPartition {
    int ground = 0;
    std::vector<std::vector<int>> blocks;

    static SetPartition from_blocks(int ground, std::vector<std::vector<int>> blocks);
    /// partition into the cycles of a permutation (image array)
    static SetPartition from_cycles(const std::vector<int>& perm);
};

/// Minimal nonempty subsets that are simultaneously unions of P-blocks and of
/// Q-blocks: the connected components of the bipartite block-intersection
/// graph. Every compatible subset is a union of these.
std::vector<std::vector<int>> compatible_subsets(const SetPartition& p, const SetPartition& q);

/// sum_{k in P_i} b_k = p_i, sum_{k in Q_j} b_k = q_j over B.
struct PartitionSystem {
    FinAbGroup b;
    SetPartition p, q;
    std::vector<FinAbVec> p_targets, q_targets;
};

/// Solvable iff every minimal compatible subset balances:
/// sum of its p_i equals the sum of its q_j.
bool lemma_solvable(const PartitionSystem& s);

/// The same system as an AbLinearSystem (for counts and witnesses).
AbLinearSystem partition_system_to_ab(const PartitionSystem& s);

/// Data of the power equations for one cycle type: g = tau (a), h = theta (b),
/// y = sigma (k o theta^{-1}) in S_r x| B^r, with g^n = h^n = z^s.
struct WreathPowerTemplate {
    int r = 0;
    std::vector<int> tau, theta; // image arrays, tau^n = theta^n = 1 required
    FinAbGroup b;
    std::vector<FinAbVec> k; // r tail offsets
    long long n = 1;
    FinAbVec c; // distinguished element (z's block power target)
};

struct WreathCycles {
    std::vector<std::vector<int>> tau_cycles, theta_cycles;
    long long ell = 1; // lcm of n/d(K) over all cycles
};

WreathCycles wreath_cycles(const WreathPowerTemplate& t); // throws if d(K) does not divide n

/// All cbar with ell * cbar = c; empty means equations (2),(3) are unsolvable
/// for every s.
std::vector<FinAbVec> enumerate_cbar(const FinAbGroup& b, long long ell, const FinAbVec& c);

/// Equations (6),(7): unknowns b_j in B and v(K) in B[n/d(K)], one equation
/// per cycle; rhs carries k-sums and s*(ell d/n)*cbar.
AbLinearSystem build_wreath_system(const WreathPowerTemplate& t, long long s,
                                   const FinAbVec& cbar);

struct SIndepReport {
    bool ok = true;                   // verdict & count constant over the s-range
    bool cbar_exists = false;
    std::vector<long long> s_values;
    // per cbar choice: (solvable, count) at each s
    std::vector<std::vector<std::pair<bool, BigInt>>> outcomes;
};

/// s ranges over units mod lcm(|B|, n).
SIndepReport s_independence_check(const WreathPowerTemplate& t);

std::vector<long long> units_mod(long long m);

// seeded generators for the fuzz harness and randomized suites
using Rng = std::mt19937_64;
SetPartition random_partition(Rng& rng, int ground);
PartitionSystem random_partition_system(Rng& rng, int ground, const FinAbGroup& b);
/// random tau, theta with order dividing n, random k and c
WreathPowerTemplate random_wreath_template(Rng& rng, int ground, const FinAbGroup& b,
                                           long long n);

} // namespace qd
