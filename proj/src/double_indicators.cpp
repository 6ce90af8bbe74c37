#include "qd/double_indicators.hpp"

#include <numeric>
#include <thread>

namespace qd {

CentData make_cent_data(const FiniteGroup& g, Elt y, const ChartabLimits& lim) {
    CentData cent;
    cent.z = centralizer(g, y);
    cent.z_classes = std::make_shared<ClassData>(conjugacy_classes(cent.z.sub));
    cent.table = character_table(cent.z.sub, cent.z_classes, lim);
    cent.exponent = cent.table.exponent;
    return cent;
}

DoubleContext make_double_context(const FiniteGroup& g, int jobs, const ChartabLimits& lim) {
    DoubleContext ctx;
    ctx.g = g;
    ctx.classes = std::make_shared<ClassData>(conjugacy_classes(g));
    ctx.group_exponent = exponent_of(g, *ctx.classes);
    ctx.jobs = jobs < 1 ? 1 : jobs;
    for (std::uint32_t ci = 0; ci < ctx.classes->classes.size(); ++ci) {
        const auto& cls = ctx.classes->classes[ci];
        ctx.cents.push_back(make_cent_data(g, cls.representative, lim));
        const auto& cent = ctx.cents.back();
        for (std::uint32_t w = 0; w < cent.table.irrep_count(); ++w)
            ctx.irreps.push_back(DoubleIrrep{
                ci, cls.representative, w,
                static_cast<long long>(cls.size()) * cent.table.degrees[w]});
    }
    return ctx;
}

std::vector<DoubleIrrep> double_irreps(const FiniteGroup& g) {
    return make_double_context(g).irreps;
}

namespace {

// chunked reduction over the ambient group; combines are exact integer sums
template <typename Acc, typename Body>
Acc reduce_over_group(std::size_t n, int jobs, Acc init, Body body) {
    if (jobs <= 1 || n < 4096) {
        Acc acc = init;
        for (std::size_t i = 0; i < n; ++i)
            body(acc, static_cast<Elt>(i));
        return acc;
    }
    std::size_t parts = static_cast<std::size_t>(jobs);
    std::vector<Acc> partial(parts, init);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < parts; ++t)
        threads.emplace_back([&, t]() {
            std::size_t lo = n * t / parts, hi = n * (t + 1) / parts;
            for (std::size_t i = lo; i < hi; ++i)
                body(partial[t], static_cast<Elt>(i));
        });
    for (auto& th : threads)
        th.join();
    Acc acc = init;
    for (auto& p : partial)
        for (std::size_t j = 0; j < p.size(); ++j)
            acc[j] += p[j];
    return acc;
}

// per-Z_y-class tallies of g^n over the indicator domain
std::vector<long long> condition_class_counts(const CentData& cent, long long n, int jobs) {
    const FiniteGroup& g = cent.z.ambient;
    Elt yinv = g.inv(cent.z.y);
    std::size_t kz = cent.z_classes->classes.size();
    return reduce_over_group(
        g.order(), jobs, std::vector<long long>(kz, 0),
        [&](std::vector<long long>& acc, Elt x) {
            Elt xn = g.power(x, n);
            if (xn != g.power(g.mul(yinv, x), n))
                return;
            acc[cent.z_classes->class_of[cent.z.from_ambient(xn)]] += 1;
        });
}

} // namespace

Cyclotomic indicator_raw(const CentData& cent, std::uint32_t w, long long n, int jobs) {
    const FiniteGroup& g = cent.z.ambient;
    Elt yinv = g.inv(cent.z.y);
    long long e = cent.exponent;

    Cyclotomic acc = Cyclotomic::zero(e);
    if (jobs <= 1 || g.order() < 4096) {
        for (Elt x = 0; x < g.order(); ++x) {
            Elt xn = g.power(x, n);
            if (xn != g.power(g.mul(yinv, x), n))
                continue;
            acc += cent.table.values[w][cent.z_classes->class_of[cent.z.from_ambient(xn)]];
        }
    } else {
        // the trace is constant on Z_y-classes, so tally classes in parallel
        auto counts = condition_class_counts(cent, n, jobs);
        for (std::size_t c = 0; c < counts.size(); ++c)
            if (counts[c])
                acc += cent.table.values[w][c].scaled(counts[c]);
    }
    acc = acc.scaled(static_cast<long long>(cent.ambient_class_size()));
    return acc.divided_exact(static_cast<long long>(g.order()));
}

CountFunction count_f_raw(const CentData& cent, long long n) {
    const FiniteGroup& g = cent.z.ambient;
    Elt yinv = g.inv(cent.z.y);
    CountFunction f;
    f.y = cent.z.y;
    f.n = n;
    f.per_element.assign(cent.z.sub.order(), 0);
    for (Elt x = 0; x < g.order(); ++x) {
        Elt xn = g.power(x, n);
        if (xn != g.power(g.mul(yinv, x), n))
            continue;
        f.per_element[cent.z.from_ambient(xn)] += 1;
    }
    for (const auto& cls : cent.z_classes->classes) {
        long long v = f.per_element[cls.representative];
        f.per_class.push_back(v);
        for (Elt m : cls.members)
            if (f.per_element[m] != v)
                f.class_constant = false;
    }
    return f;
}

bool galois_check_raw(const CentData& cent, long long n) {
    auto f = count_f_raw(cent, n);
    const FiniteGroup& z = cent.z.sub;
    long long ez = cent.exponent;
    for (long long s = 1; s < ez; ++s) {
        if (std::gcd(s, ez) != 1)
            continue;
        for (Elt x = 0; x < z.order(); ++x)
            if (f.per_element[x] != f.per_element[z.power(x, s)])
                return false;
    }
    return true;
}

std::vector<Cyclotomic> indicators_via_f_raw(const CentData& cent, long long n) {
    auto f = count_f_raw(cent, n);
    long long e = cent.exponent;
    long long zorder = static_cast<long long>(cent.z.sub.order());
    // member-wise class sums of f keep this path honest even if f failed to
    // be a class function
    std::vector<long long> class_sums;
    for (const auto& cls : cent.z_classes->classes) {
        long long s = 0;
        for (Elt m : cls.members)
            s += f.per_element[m];
        class_sums.push_back(s);
    }
    std::vector<Cyclotomic> out;
    for (std::uint32_t w = 0; w < cent.table.irrep_count(); ++w) {
        Cyclotomic acc = Cyclotomic::zero(e);
        for (std::size_t c = 0; c < class_sums.size(); ++c)
            if (class_sums[c])
                acc += cent.table.values[w][c].scaled(class_sums[c]);
        out.push_back(acc.divided_exact(zorder));
    }
    return out;
}

bool identity_check_raw(const CentData& cent, long long n, int jobs) {
    auto f = count_f_raw(cent, n);
    if (!f.class_constant)
        return false;
    long long e = cent.exponent;
    std::vector<Cyclotomic> nus;
    for (std::uint32_t w = 0; w < cent.table.irrep_count(); ++w)
        nus.push_back(indicator_raw(cent, w, n, jobs));
    for (std::size_t c = 0; c < cent.z_classes->classes.size(); ++c) {
        Cyclotomic lhs = Cyclotomic::zero(e);
        for (std::uint32_t w = 0; w < cent.table.irrep_count(); ++w)
            lhs += nus[w] * cent.table.values[w][c].conj();
        if (lhs != Cyclotomic::integer(e, f.per_class[c]))
            return false;
    }
    return true;
}

Cyclotomic indicator(const DoubleContext& ctx, const DoubleIrrep& v, long long n) {
    return indicator_raw(ctx.cents[v.class_index], v.irrep_index, n, ctx.jobs);
}

CountFunction count_f(const DoubleContext& ctx, std::uint32_t class_index, long long n) {
    return count_f_raw(ctx.cents[class_index], n);
}

bool galois_check(const DoubleContext& ctx, std::uint32_t class_index, long long n) {
    return galois_check_raw(ctx.cents[class_index], n);
}

bool identity_check(const DoubleContext& ctx, std::uint32_t class_index, long long n) {
    return identity_check_raw(ctx.cents[class_index], n, ctx.jobs);
}

std::vector<Cyclotomic> indicators_via_f(const DoubleContext& ctx, std::uint32_t class_index,
                                         long long n) {
    return indicators_via_f_raw(ctx.cents[class_index], n);
}

IndicatorTable integrality_report(const DoubleContext& ctx, long long n_max) {
    IndicatorTable t;
    t.group_desc = ctx.g.description();
    t.n_max = n_max;
    t.irreps = ctx.irreps;
    for (const auto& v : ctx.irreps) {
        t.ring_orders.push_back(ctx.cents[v.class_index].exponent);
        std::vector<Cyclotomic> row;
        std::vector<bool> flags;
        for (long long n = 1; n <= n_max; ++n) {
            row.push_back(indicator(ctx, v, n));
            flags.push_back(row.back().is_rational_integer());
            t.all_integral = t.all_integral && flags.back();
        }
        t.values.push_back(std::move(row));
        t.integral.push_back(std::move(flags));
    }
    return t;
}

} // namespace qd
