#pragma once

#include <vector>

#include "qd/finab.hpp"
#include "qd/group.hpp"

namespace qd {

/// All cycles of one fixed (length, monodromy) type inside a wreath element.
/// The monodromy of a cycle is the A-sum of the tail entries on its support;
/// it is invariant under conjugation.
struct CycleTypeBlock {
    int length = 1;
    std::uint32_t monodromy = 0; // A-element index
    std::vector<int> support;    // sorted union of the cycles' supports
    int multiplicity = 1;        // number of cycles in the block
    Elt restriction = 0;         // z on the support, identity elsewhere
};

/// Blocks ordered by (length, monodromy).
std::vector<CycleTypeBlock> cycle_type_blocks(const FiniteGroup& g, Elt z);

/// The abelian subgroup of S_m x| A^m generated by c = (12...m)(u,0,...,0)
/// and the diagonal copy of A, in invariant-factor form. c^m equals the
/// diagonal embedding of u, which is the only relation beyond those of A.
struct CentralExtension {
    FinAbGroup b;
    FinAbVec c;
    std::vector<FinAbVec> a_unit_images; // image of each coordinate unit of A
};

CentralExtension central_extension_b(long long m, const AbelianSpec& a, std::uint32_t u);

} // namespace qd
