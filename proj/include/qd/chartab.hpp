#pragma once

#include <memory>
#include <vector>

#include "qd/cyclotomic.hpp"
#include "qd/group.hpp"

namespace qd {

struct ChartabLimits {
    std::size_t max_classes = 128;
    int max_prime_retries = 5;
};

/// Exact complex character table. Irreps are ordered by ascending degree,
/// then lexicographically on the value row; classes follow ClassData order.
struct CharacterTable {
    FiniteGroup group;
    std::shared_ptr<const ClassData> classes;
    long long exponent = 1; // e; all values live in Z[zeta_e]
    std::vector<long long> degrees;
    std::vector<std::vector<Cyclotomic>> values; // [irrep][class]
    std::vector<std::uint32_t> inverse_class;

    std::size_t irrep_count() const { return degrees.size(); }
    const Cyclotomic& value(std::size_t w, std::size_t cls) const { return values[w][cls]; }
};

/// Structure constants of the class algebra:
/// a[i][j][k] = #{(x, y) in C_i x C_j : x*y = rep_k}.
std::vector<std::vector<std::vector<long long>>>
class_mult_coeffs(const FiniteGroup& g, const ClassData& cd, const ChartabLimits& lim = {});

/// Dixon's method: split the class algebra over F_l (l = 1 mod e,
/// l > 2 sqrt(|G|)) into common eigenvectors and lift the eigenvalue data to
/// Z[zeta_e] with the discrete Fourier lift.
CharacterTable character_table(const FiniteGroup& g, const ChartabLimits& lim = {});
CharacterTable character_table(const FiniteGroup& g, std::shared_ptr<const ClassData> cd,
                               const ChartabLimits& lim = {});

/// chi_W at the class of g^n.
Cyclotomic char_at_power(const CharacterTable& t, std::size_t w, Elt g, long long n);

/// Both orthogonality relations, exactly; throws VerificationError on failure.
void verify_orthogonality(const CharacterTable& t);

} // namespace qd
