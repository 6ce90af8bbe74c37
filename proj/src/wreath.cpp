#include "qd/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qd/snf.hpp"

namespace qd {

std::vector<CycleTypeBlock> cycle_type_blocks(const FiniteGroup& g, Elt z) {
    auto view = wreath_view(g);
    if (!view)
        throw VerificationError("cycle_type_blocks needs a wreath-backed group");
    WreathElement w = wreath_decode(g, z);
    int n = view->n;

    std::map<std::pair<int, std::uint32_t>, std::vector<std::vector<int>>> grouped;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        std::vector<int> cyc;
        int j = i;
        std::uint32_t mono = 0;
        do {
            seen[j] = true;
            cyc.push_back(j);
            mono = view->a.add(mono, w.tail[j]);
            j = w.perm[j];
        } while (j != i);
        grouped[{static_cast<int>(cyc.size()), mono}].push_back(std::move(cyc));
    }

    std::vector<CycleTypeBlock> blocks;
    for (auto& [key, cycles] : grouped) {
        CycleTypeBlock b;
        b.length = key.first;
        b.monodromy = key.second;
        b.multiplicity = static_cast<int>(cycles.size());
        for (const auto& cyc : cycles)
            b.support.insert(b.support.end(), cyc.begin(), cyc.end());
        std::sort(b.support.begin(), b.support.end());

        WreathElement restr;
        restr.perm.resize(n);
        std::iota(restr.perm.begin(), restr.perm.end(), 0);
        restr.tail.assign(n, 0);
        for (int i : b.support) {
            restr.perm[i] = w.perm[i];
            restr.tail[i] = w.tail[i];
        }
        b.restriction = wreath_encode(g, restr);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

CentralExtension central_extension_b(long long m, const AbelianSpec& a, std::uint32_t u) {
    if (m < 1)
        throw SpecParseError("cycle length m must be >= 1");
    auto uvec = a.decode(u);
    std::size_t s = a.moduli.size();

    // generators (c, diagonal units of A); relations m*c = sum u_i * a_i
    // and the orders of A
    IntMat rel(1 + s, std::vector<BigInt>(1 + s, 0));
    rel[0][0] = m;
    for (std::size_t i = 0; i < s; ++i) {
        rel[0][1 + i] = -uvec[i];
        rel[1 + i][1 + i] = a.moduli[i];
    }
    auto snf = smith_normal_form(rel);
    auto diag = snf.diagonal();

    std::vector<std::size_t> keep;
    std::vector<long long> factors;
    for (std::size_t j = 0; j < diag.size(); ++j)
        if (diag[j] > 1) {
            keep.push_back(j);
            factors.push_back(static_cast<long long>(diag[j]));
        }

    CentralExtension ce;
    ce.b = FinAbGroup::from_invariant_factors(factors);
    // element written as integer combo x of the generators has invariant
    // coordinates V^T x, i.e. generator j maps to row j of V
    auto coords_of = [&](std::size_t row) {
        FinAbVec v;
        for (std::size_t j : keep)
            v.push_back(static_cast<long long>(snf.v[row][j] % diag[j]));
        return ce.b.reduce(std::move(v));
    };
    ce.c = coords_of(0);
    for (std::size_t i = 0; i < s; ++i)
        ce.a_unit_images.push_back(coords_of(1 + i));

    if (ce.b.order() != static_cast<unsigned long long>(m) * a.order())
        throw VerificationError("central extension has wrong order");
    return ce;
}

} // namespace qd
