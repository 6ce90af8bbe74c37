#include "qd/partition_lemma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qd {

SetPartition SetPartition::from_blocks(int ground, std::vector<std::vector<int>> blocks) {
    std::vector<bool> seen(ground, false);
    for (auto& blk : blocks) {
        if (blk.empty())
            throw SpecParseError("partition block may not be empty");
        std::sort(blk.begin(), blk.end());
        for (int x : blk) {
            if (x < 0 || x >= ground || seen[x])
                throw SpecParseError("blocks must partition the ground set");
            seen[x] = true;
        }
    }
    for (bool s : seen)
        if (!s)
            throw SpecParseError("blocks must cover the ground set");
    SetPartition p;
    p.ground = ground;
    p.blocks = std::move(blocks);
    return p;
}

SetPartition SetPartition::from_cycles(const std::vector<int>& perm) {
    int r = static_cast<int>(perm.size());
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
        if (seen[i])
            continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            j = perm[j];
        } while (j != i);
        blocks.push_back(std::move(cyc));
    }
    return from_blocks(r, std::move(blocks));
}

std::vector<std::vector<int>> compatible_subsets(const SetPartition& p, const SetPartition& q) {
    if (p.ground != q.ground)
        throw SpecParseError("partitions live on different ground sets");
    int r = p.ground;
    // union-find over ground elements; each block glues its members
    std::vector<int> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& blocks : {p.blocks, q.blocks})
        for (const auto& blk : blocks)
            for (std::size_t i = 1; i < blk.size(); ++i)
                unite(blk[0], blk[i]);

    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(r, -1);
    for (int x = 0; x < r; ++x) {
        int root = find(x);
        if (comp_of[root] < 0) {
            comp_of[root] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_of[root]].push_back(x);
    }
    return comps; // each sorted; ordered by minimal element
}

bool lemma_solvable(const PartitionSystem& s) {
    if (s.p_targets.size() != s.p.blocks.size() || s.q_targets.size() != s.q.blocks.size())
        throw SpecParseError("target count must match block count");
    auto comps = compatible_subsets(s.p, s.q);
    for (const auto& comp : comps) {
        std::vector<bool> inside(s.p.ground, false);
        for (int x : comp)
            inside[x] = true;
        FinAbVec lhs = s.b.zero(), rhs = s.b.zero();
        for (std::size_t i = 0; i < s.p.blocks.size(); ++i)
            if (inside[s.p.blocks[i][0]])
                lhs = s.b.add(lhs, s.b.reduce(s.p_targets[i]));
        for (std::size_t j = 0; j < s.q.blocks.size(); ++j)
            if (inside[s.q.blocks[j][0]])
                rhs = s.b.add(rhs, s.b.reduce(s.q_targets[j]));
        if (lhs != rhs)
            return false;
    }
    return true;
}

AbLinearSystem partition_system_to_ab(const PartitionSystem& s) {
    AbLinearSystem sys;
    sys.target = s.b;
    for (int i = 0; i < s.p.ground; ++i)
        sys.vars.push_back(AbVar::plain(s.b));
    auto add_rows = [&](const std::vector<std::vector<int>>& blocks,
                        const std::vector<FinAbVec>& targets) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            std::vector<long long> row(s.p.ground, 0);
            for (int x : blocks[i])
                row[x] = 1;
            sys.coeffs.push_back(std::move(row));
            sys.rhs.push_back(s.b.reduce(targets[i]));
        }
    };
    add_rows(s.p.blocks, s.p_targets);
    add_rows(s.q.blocks, s.q_targets);
    return sys;
}

WreathCycles wreath_cycles(const WreathPowerTemplate& t) {
    WreathCycles wc;
    wc.tau_cycles = SetPartition::from_cycles(t.tau).blocks;
    wc.theta_cycles = SetPartition::from_cycles(t.theta).blocks;
    long long ell = 1;
    for (const auto* cycles : {&wc.tau_cycles, &wc.theta_cycles})
        for (const auto& cyc : *cycles) {
            long long d = static_cast<long long>(cyc.size());
            if (t.n % d != 0)
                throw SpecParseError("cycle length does not divide n (tau^n = theta^n = 1 fails)");
            ell = lcm_ll(ell, t.n / d);
        }
    wc.ell = ell;
    return wc;
}

std::vector<FinAbVec> enumerate_cbar(const FinAbGroup& b, long long ell, const FinAbVec& c) {
    std::vector<FinAbVec> out;
    FinAbVec target = b.reduce(c);
    for (unsigned long long i = 0; i < b.order(); ++i) {
        FinAbVec cand = b.element_at(i);
        if (b.scalar_mul(ell, cand) == target)
            out.push_back(std::move(cand));
    }
    return out;
}

AbLinearSystem build_wreath_system(const WreathPowerTemplate& t, long long s,
                                   const FinAbVec& cbar) {
    auto wc = wreath_cycles(t);
    AbLinearSystem sys;
    sys.target = t.b;
    for (int i = 0; i < t.r; ++i)
        sys.vars.push_back(AbVar::plain(t.b));
    // one torsion unknown v(K) in B[n/d(K)] per cycle, tau cycles first
    std::vector<long long> vdims;
    for (const auto* cycles : {&wc.tau_cycles, &wc.theta_cycles})
        for (const auto& cyc : *cycles) {
            long long d = static_cast<long long>(cyc.size());
            sys.vars.push_back(AbVar::torsion(t.b, t.n / d));
            vdims.push_back(t.n / d);
        }

    std::size_t vcount = vdims.size();
    std::size_t vindex = 0;
    auto add_equation = [&](const std::vector<int>& cyc, bool with_k) {
        long long d = static_cast<long long>(cyc.size());
        std::vector<long long> row(static_cast<std::size_t>(t.r) + vcount, 0);
        for (int x : cyc)
            row[x] += 1;
        row[static_cast<std::size_t>(t.r) + vindex] = -1; // move v(K) to the left
        ++vindex;

        // rhs = [k-sum +] s * (ell d / n) * cbar
        FinAbVec rhs = t.b.scalar_mul(s * (wc.ell * d / t.n), cbar);
        if (with_k)
            for (int x : cyc)
                rhs = t.b.add(rhs, t.b.reduce(t.k[x]));
        sys.coeffs.push_back(std::move(row));
        sys.rhs.push_back(std::move(rhs));
    };
    for (const auto& cyc : wc.tau_cycles)
        add_equation(cyc, true);
    for (const auto& cyc : wc.theta_cycles)
        add_equation(cyc, false);
    return sys;
}

std::vector<long long> units_mod(long long m) {
    std::vector<long long> out;
    for (long long s = 1; s <= m; ++s)
        if (std::gcd(s, m) == 1)
            out.push_back(s);
    return out;
}

SetPartition random_partition(Rng& rng, int ground) {
    std::uniform_int_distribution<int> label(0, ground - 1);
    std::vector<std::vector<int>> buckets(ground);
    for (int x = 0; x < ground; ++x)
        buckets[label(rng)].push_back(x);
    std::vector<std::vector<int>> blocks;
    for (auto& b : buckets)
        if (!b.empty())
            blocks.push_back(std::move(b));
    return SetPartition::from_blocks(ground, std::move(blocks));
}

namespace {

FinAbVec random_element(Rng& rng, const FinAbGroup& b) {
    std::uniform_int_distribution<unsigned long long> pick(0, b.order() - 1);
    return b.element_at(pick(rng));
}

std::vector<int> random_perm_of_order_dividing(Rng& rng, int ground, long long n) {
    std::vector<int> perm(ground);
    std::iota(perm.begin(), perm.end(), 0);
    for (;;) {
        std::shuffle(perm.begin(), perm.end(), rng);
        bool ok = true;
        for (const auto& cyc : SetPartition::from_cycles(perm).blocks)
            if (n % static_cast<long long>(cyc.size()) != 0)
                ok = false;
        if (ok)
            return perm;
    }
}

} // namespace

PartitionSystem random_partition_system(Rng& rng, int ground, const FinAbGroup& b) {
    PartitionSystem s;
    s.b = b;
    s.p = random_partition(rng, ground);
    s.q = random_partition(rng, ground);
    for (std::size_t i = 0; i < s.p.blocks.size(); ++i)
        s.p_targets.push_back(random_element(rng, b));
    for (std::size_t j = 0; j < s.q.blocks.size(); ++j)
        s.q_targets.push_back(random_element(rng, b));
    return s;
}

WreathPowerTemplate random_wreath_template(Rng& rng, int ground, const FinAbGroup& b,
                                           long long n) {
    WreathPowerTemplate t;
    t.r = ground;
    t.b = b;
    t.n = n;
    t.tau = random_perm_of_order_dividing(rng, ground, n);
    t.theta = random_perm_of_order_dividing(rng, ground, n);
    for (int i = 0; i < ground; ++i)
        t.k.push_back(random_element(rng, b));
    t.c = random_element(rng, b);
    return t;
}

SIndepReport s_independence_check(const WreathPowerTemplate& t) {
    SIndepReport rep;
    auto wc = wreath_cycles(t);
    rep.s_values = units_mod(lcm_ll(static_cast<long long>(t.b.order()), t.n));
    auto cbars = enumerate_cbar(t.b, wc.ell, t.c);
    rep.cbar_exists = !cbars.empty();
    if (cbars.empty())
        return rep; // unsolvable for every s: constant, ok stays true

    for (const auto& cbar : cbars) {
        // the coefficient matrix does not depend on s; factor once
        auto shape = build_wreath_system(t, 1, cbar);
        AbSystemSolver solver(shape.target, shape.vars, shape.coeffs);
        std::vector<std::pair<bool, BigInt>> row;
        for (long long s : rep.s_values) {
            auto sys = build_wreath_system(t, s, cbar);
            auto sol = solver.solve(sys.rhs);
            row.emplace_back(sol.solvable, sol.count);
        }
        for (const auto& o : row)
            if (o != row.front())
                rep.ok = false;
        rep.outcomes.push_back(std::move(row));
    }
    return rep;
}

} // namespace qd
