#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qd/chartab.hpp"
#include "qd/group.hpp"

namespace qd {

/// Irreducible D(G)-module: a conjugacy class C together with an irreducible
/// character of the centralizer of the class base point. dim = |C| * deg(W).
struct DoubleIrrep {
    std::uint32_t class_index = 0;
    Elt base_point = 0;
    std::uint32_t irrep_index = 0;
    long long dim = 0;
};

/// Everything attached to one base point y: Z_y, its classes and table.
struct CentData {
    Centralizer z;
    std::shared_ptr<const ClassData> z_classes;
    CharacterTable table;
    long long exponent = 1; // of Z_y; the value ring is Z[zeta_exponent]

    std::size_t ambient_class_size() const { return z.ambient.order() / z.sub.order(); }
};

struct DoubleContext {
    FiniteGroup g;
    std::shared_ptr<const ClassData> classes;
    long long group_exponent = 1;
    std::vector<CentData> cents; // one per class, base point = class rep
    std::vector<DoubleIrrep> irreps;
    int jobs = 1;
};

CentData make_cent_data(const FiniteGroup& g, Elt y, const ChartabLimits& lim = {});
DoubleContext make_double_context(const FiniteGroup& g, int jobs = 1,
                                  const ChartabLimits& lim = {});

/// One entry per (class, centralizer irrep), in deterministic order.
std::vector<DoubleIrrep> double_irreps(const FiniteGroup& g);

// ---- base-point level operations (work for any y, not just class reps) ----

/// nu_n(V) = (|C|/|G|) * sum over {g in G : g^n = (y^{-1} g)^n} of Tr_W(g^n),
/// evaluated literally; the scaled sum is asserted divisible by |G| in
/// Z[zeta_e].
Cyclotomic indicator_raw(const CentData& cent, std::uint32_t w, long long n, int jobs = 1);

/// f_y(z) = #{(g,h) : g^n = h^n = z, g h^{-1} = y}, accumulated on Z_y.
struct CountFunction {
    Elt y = 0;
    long long n = 0;
    std::vector<long long> per_element; // indexed by Z_y element
    std::vector<long long> per_class;   // value at class representatives
    bool class_constant = true;         // pointwise check across each class
};
CountFunction count_f_raw(const CentData& cent, long long n);

/// f_y(z) == f_y(z^s) for every z in Z_y and every unit s mod exp(Z_y)
/// (those are exactly the reductions of integers coprime to |G|).
bool galois_check_raw(const CentData& cent, long long n);

/// sum_W nu_n(V(W)) conj(chi_W(z)) == f_y(z) on every class of Z_y.
bool identity_check_raw(const CentData& cent, long long n, int jobs = 1);

/// nu_n recovered as <f_y, chi_W> over Z_y; an independent second path.
std::vector<Cyclotomic> indicators_via_f_raw(const CentData& cent, long long n);

// ---- context level --------------------------------------------------------

Cyclotomic indicator(const DoubleContext& ctx, const DoubleIrrep& v, long long n);
CountFunction count_f(const DoubleContext& ctx, std::uint32_t class_index, long long n);
bool galois_check(const DoubleContext& ctx, std::uint32_t class_index, long long n);
bool identity_check(const DoubleContext& ctx, std::uint32_t class_index, long long n);
std::vector<Cyclotomic> indicators_via_f(const DoubleContext& ctx, std::uint32_t class_index,
                                         long long n);

struct IndicatorTable {
    std::string group_desc;
    long long n_max = 0;
    std::vector<DoubleIrrep> irreps;
    std::vector<long long> ring_orders;          // value ring per irrep
    std::vector<std::vector<Cyclotomic>> values; // [irrep][n-1]
    std::vector<std::vector<bool>> integral;
    bool all_integral = true;
};

IndicatorTable integrality_report(const DoubleContext& ctx, long long n_max);

} // namespace qd
