#include <doctest.h>

#include <random>

#include "qd/absystem.hpp"
#include "qd/finab.hpp"
#include "qd/snf.hpp"

using namespace qd;

namespace {

IntMat from_ll(const std::vector<std::vector<long long>>& m) {
    IntMat out;
    for (const auto& row : m) {
        out.emplace_back();
        for (long long x : row)
            out.back().emplace_back(x);
    }
    return out;
}

void check_snf(const IntMat& m) {
    auto res = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(res.u, m), res.v) == res.d);
    BigInt du = mat_det(res.u), dv = mat_det(res.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(mat_mul(res.vinv, res.v) == identity_mat(res.v.size()));
    auto diag = res.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
        else
            CHECK(diag[i + 1] == 0);
    }
    // off-diagonal zero
    for (std::size_t i = 0; i < res.d.size(); ++i)
        for (std::size_t j = 0; j < res.d[i].size(); ++j)
            if (i != j)
                CHECK(res.d[i][j] == 0);
}

} // namespace

TEST_CASE("smith normal form on pinned examples") {
    auto one = smith_normal_form(from_ll({{1}}));
    CHECK(one.diagonal() == std::vector<BigInt>{1});

    auto diag23 = smith_normal_form(from_ll({{2, 0}, {0, 3}}));
    CHECK(diag23.diagonal() == std::vector<BigInt>{1, 6});

    auto zero = smith_normal_form(from_ll({{0, 0}, {0, 0}}));
    CHECK(zero.diagonal() == std::vector<BigInt>{0, 0});

    check_snf(from_ll({{1}}));
    check_snf(from_ll({{2, 0}, {0, 3}}));
    check_snf(from_ll({{0, 0}, {0, 0}}));
}

TEST_CASE("smith normal form randomized transform properties") {
    std::mt19937_64 rng(20240711);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t rows = dim(rng), cols = dim(rng);
        IntMat m(rows, std::vector<BigInt>(cols));
        for (auto& row : m)
            for (auto& x : row)
                x = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("FinAbGroup normalization and arithmetic") {
    auto b = FinAbGroup::from_moduli({2, 3});
    CHECK(b.factors() == std::vector<long long>{6});
    CHECK(b.order() == 6);

    auto chain = FinAbGroup::from_moduli({4, 2, 6});
    CHECK(chain.order() == 48);
    for (std::size_t i = 0; i + 1 < chain.rank(); ++i)
        CHECK(chain.factors()[i + 1] % chain.factors()[i] == 0);

    auto z4 = FinAbGroup::from_invariant_factors({4});
    CHECK(z4.element_order({1}) == 4);
    CHECK(z4.element_order({2}) == 2);
    CHECK(z4.add({3}, {3}) == FinAbVec{2});
    CHECK(z4.neg({1}) == FinAbVec{3});
    CHECK(z4.is_zero(z4.scalar_mul(4, {1})));

    // enumeration round-trip
    for (unsigned long long i = 0; i < chain.order(); ++i)
        CHECK(chain.index_of(chain.element_at(i)) == i);
}

TEST_CASE("torsion subgroups") {
    auto z4 = FinAbGroup::from_invariant_factors({4});
    auto t = torsion_subgroup(z4, 2);
    CHECK(t.sub.order() == 2);
    CHECK(t.include(z4, {1}) == FinAbVec{2}); // generator maps to 2 in Z/4

    CHECK(torsion_subgroup(z4, 1).sub.order() == 1);

    auto z6 = FinAbGroup::from_moduli({2, 3});
    CHECK(torsion_subgroup(z6, 2).sub.order() == 2);

    // inclusion lands in the k-torsion
    auto b = FinAbGroup::from_moduli({4, 6});
    for (long long k : {1, 2, 3, 4, 6, 12}) {
        auto tk = torsion_subgroup(b, k);
        for (unsigned long long i = 0; i < tk.sub.order(); ++i) {
            auto v = tk.include(b, tk.sub.element_at(i));
            CHECK(b.is_zero(b.scalar_mul(k, v)));
        }
    }
}

TEST_CASE("solve_ab_system pinned examples") {
    auto z2 = FinAbGroup::from_invariant_factors({2});
    AbLinearSystem s;
    s.target = z2;
    s.vars = {AbVar::plain(z2)};
    s.coeffs = {{1}};
    s.rhs = {{1}};
    auto sol = solve_ab_system(s);
    CHECK(sol.solvable);
    CHECK(sol.count == 1);
    CHECK(sol.witness[0] == FinAbVec{1});

    auto z4 = FinAbGroup::from_invariant_factors({4});
    AbLinearSystem s2;
    s2.target = z4;
    s2.vars = {AbVar::plain(z4)};
    s2.coeffs = {{2}};
    s2.rhs = {{1}};
    auto sol2 = solve_ab_system(s2);
    CHECK_FALSE(sol2.solvable);
    CHECK(sol2.count == 0);

    s2.rhs = {{2}};
    auto sol3 = solve_ab_system(s2);
    CHECK(sol3.solvable);
    CHECK(sol3.count == 2); // b in {1, 3}
    CHECK((sol3.witness[0] == FinAbVec{1} || sol3.witness[0] == FinAbVec{3}));
}

namespace {

AbLinearSystem random_system(std::mt19937_64& rng) {
    std::vector<FinAbGroup> pool = {
        FinAbGroup::from_invariant_factors({2}), FinAbGroup::from_invariant_factors({3}),
        FinAbGroup::from_invariant_factors({4}), FinAbGroup::from_moduli({2, 2}),
        FinAbGroup::from_moduli({6})};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> nvars(1, 3), neqs(1, 3), coef(-3, 3), tors(1, 6);
    AbLinearSystem s;
    s.target = pool[pick(rng)];
    int nv = nvars(rng), ne = neqs(rng);
    for (int v = 0; v < nv; ++v) {
        if (rng() % 4 == 0)
            s.vars.push_back(AbVar::torsion(s.target, tors(rng)));
        else
            s.vars.push_back(AbVar::plain(s.target));
    }
    for (int e = 0; e < ne; ++e) {
        std::vector<long long> row;
        for (int v = 0; v < nv; ++v)
            row.push_back(coef(rng));
        s.coeffs.push_back(std::move(row));
        std::uniform_int_distribution<unsigned long long> el(0, s.target.order() - 1);
        s.rhs.push_back(s.target.element_at(el(rng)));
    }
    return s;
}

} // namespace

TEST_CASE("solve_ab_system matches exhaustive enumeration") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = random_system(rng);
        auto exact = solve_ab_system(s);
        auto brute = brute_force_count(s);
        CHECK(exact.solvable == brute.solvable);
        CHECK(exact.count == brute.count);
        if (exact.solvable) {
            // witness actually solves the system
            AbLinearSystem probe = s;
            bool ok = true;
            for (std::size_t e = 0; e < s.coeffs.size(); ++e) {
                FinAbVec acc = s.target.zero();
                for (std::size_t v = 0; v < s.vars.size(); ++v) {
                    FinAbVec img(s.target.rank(), 0);
                    for (std::size_t c = 0; c < s.target.rank(); ++c) {
                        long long x = 0;
                        for (std::size_t j = 0; j < s.vars[v].embed[c].size(); ++j)
                            x += s.vars[v].embed[c][j] * exact.witness[v][j];
                        img[c] = x * s.coeffs[e][v];
                    }
                    acc = s.target.add(acc, s.target.reduce(img));
                }
                ok = ok && acc == s.target.reduce(s.rhs[e]);
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("solution count is the kernel size, independent of the rhs") {
    std::mt19937_64 rng(13579);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = random_system(rng);
        AbSystemSolver solver(s.target, s.vars, s.coeffs);
        auto first = solver.solve(s.rhs);
        // try a second rhs with the same shape
        std::vector<FinAbVec> rhs2;
        std::uniform_int_distribution<unsigned long long> el(0, s.target.order() - 1);
        for (std::size_t e = 0; e < s.rhs.size(); ++e)
            rhs2.push_back(s.target.element_at(el(rng)));
        auto second = solver.solve(rhs2);
        if (first.solvable && second.solvable)
            CHECK(first.count == second.count);
    }
}
