#include "qd/snf.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace qd {

IntMat identity_mat(std::size_t n) {
    IntMat m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t rows = a.size();
    std::size_t inner = rows ? a[0].size() : 0;
    std::size_t cols = inner && !b.empty() ? b[0].size() : 0;
    IntMat out(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t t = 0; t < inner; ++t) {
            if (a[i][t] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

BigInt mat_det(IntMat m) {
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k;
            while (piv < n && m[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<BigInt> SnfResult::diagonal() const {
    std::vector<BigInt> out;
    std::size_t n = std::min(d.size(), d.empty() ? std::size_t{0} : d[0].size());
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(d[i][i]);
    return out;
}

namespace {

struct Work {
    IntMat a, u, v, vinv;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < a[dst].size(); ++c)
            a[dst][c] += q * a[src][c];
        for (std::size_t c = 0; c < u[dst].size(); ++c)
            u[dst][c] += q * u[src][c];
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i])
            x = -x;
        for (auto& x : u[i])
            x = -x;
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (auto& row : a)
            std::swap(row[i], row[j]);
        for (auto& row : v)
            std::swap(row[i], row[j]);
        std::swap(vinv[i], vinv[j]);
    }
    // col dst += q * col src; inverse recorded as row src -= q * row dst on vinv
    void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0)
            return;
        for (auto& row : a)
            row[dst] += q * row[src];
        for (auto& row : v)
            row[dst] += q * row[src];
        for (std::size_t c = 0; c < vinv[src].size(); ++c)
            vinv[src][c] -= q * vinv[dst][c];
    }
};

// floor division based "balanced" quotient so remainders shrink
BigInt div_round(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    if (r != 0) {
        BigInt r2 = abs(r) * 2;
        if (r2 > abs(b)) {
            if ((r < 0) == (b < 0))
                q += 1;
            else
                q -= 1;
        }
    }
    return q;
}

} // namespace

SnfResult smith_normal_form(const IntMat& m) {
    return smith_normal_form(m, m.empty() ? 0 : m[0].size());
}

SnfResult smith_normal_form(const IntMat& m, std::size_t cols_hint) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : cols_hint;
    Work w;
    w.a = m;
    w.u = identity_mat(rows);
    w.v = identity_mat(cols);
    w.vinv = identity_mat(cols);

    std::size_t t = 0;
    std::size_t limit = std::min(rows, cols);
    while (t < limit) {
        // locate a pivot of minimal absolute value in the trailing block
        std::size_t pi = rows, pj = cols;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (w.a[i][j] == 0)
                    continue;
                BigInt mag = abs(w.a[i][j]);
                if (pi == rows || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows)
            break; // trailing block is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.a[i][t] == 0)
                    continue;
                BigInt q = div_round(w.a[i][t], w.a[t][t]);
                w.add_row(i, t, -q);
                if (w.a[i][t] != 0) { // remainder becomes the smaller pivot
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.a[t][j] == 0)
                    continue;
                BigInt q = div_round(w.a[t][j], w.a[t][t]);
                w.add_col(j, t, -q);
                if (w.a[t][j] != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // enforce divisibility of the rest of the block by the pivot
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
            for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                if (w.a[i][j] % w.a[t][t] != 0) {
                    w.add_row(t, i, 1);
                    fixed = true;
                }
        if (fixed)
            continue; // re-run elimination at the same t
        if (w.a[t][t] < 0)
            w.negate_row(t);
        ++t;
    }

    SnfResult res;
    res.u = std::move(w.u);
    res.d = std::move(w.a);
    res.v = std::move(w.v);
    res.vinv = std::move(w.vinv);
    return res;
}

} // namespace qd
