#pragma once

#include <vector>

#include "qd/group.hpp"

namespace qd {

/// Group of substitutions x -> x + a_2 x^2 + ... + a_{p+1} x^{p+1} over F_p,
/// composed modulo x^{p+2}. Nilpotent of order p^p.
FiniteGroup trunc_series_group(int p, const GroupLimits& lim = {});

struct TruncShape {
    int p = 0;
    /// coefficient vector (a_2, ..., a_{p+1}) of the element
    std::vector<long long> coeffs(Elt e) const;
    Elt encode(const std::vector<long long>& coeffs) const;
};

/// nullptr when the group is not a truncated-series group
const TruncShape* trunc_shape(const FiniteGroup& g);

/// Element sum c_1 L_1 + ... + c_p L_p of Lie(G), where L_i = x^{i+1} d/dx
/// and brackets are truncated: [L_i, L_j] = (j-i) L_{i+j}, L_k = 0 for k > p.
struct VectorFieldElt {
    int p = 0;
    std::vector<long long> c; // c[i] is the L_{i+1} coefficient, size p

    static VectorFieldElt zero(int p);
    static VectorFieldElt basis(int p, int i); // L_i, 1-based
    bool operator==(const VectorFieldElt&) const = default;
};

VectorFieldElt vf_add(const VectorFieldElt& v, const VectorFieldElt& w);
VectorFieldElt vf_scale(long long k, const VectorFieldElt& v);
VectorFieldElt lie_bracket(const VectorFieldElt& v, const VectorFieldElt& w);

/// Time-1 flow of v truncated mod x^{p+2}. Requires zero L_1 component
/// (otherwise the series needs 1/p!).
Elt exp_vf(const FiniteGroup& g, const VectorFieldElt& v);

/// Pushforward of v under the substitution phi; the adjoint-type action
/// whose orbits are compared with conjugacy class data.
VectorFieldElt vf_pushforward(const FiniteGroup& g, Elt phi, const VectorFieldElt& v);

struct AdjointOrbits {
    std::size_t count = 0;
    std::vector<VectorFieldElt> representatives; // minimal-code member per orbit
};
AdjointOrbits adjoint_orbits(const FiniteGroup& g);

/// Number of irreducibles of D(G): sum over classes [y] of #classes(Z_y).
long long k_double(const FiniteGroup& g);

/// Independent path: orbits of commuting pairs under simultaneous conjugation.
long long k_double_via_pairs(const FiniteGroup& g);

struct BoundsReport {
    int p = 0;
    std::uint64_t group_order = 0;
    long long class_count = 0;      // k(G)
    long long p_cubed = 0;
    Elt witness_element = 0;        // exp(L_{(p+1)/2})
    long long centralizer_order = 0;
    long long centralizer_order_expected = 0; // p^{(p+1)/2}
    bool centralizer_abelian = false;
    bool centralizer_exponent_p = false;
    long long k_double_value = 0;
    double witness_log = 0;         // ((p+1)/2) * ln p
};

struct BoundsLimits {
    int max_p = 7;
    GroupLimits group;
};

BoundsReport centralizer_report(int p, const BoundsLimits& lim = {});

} // namespace qd
