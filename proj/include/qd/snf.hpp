#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace qd {

using BigInt = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<BigInt>>;

IntMat identity_mat(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
BigInt mat_det(IntMat m); // Bareiss fraction-free elimination

/// Smith normal form U*M*V = D with U, V unimodular and the diagonal of D
/// a divisor chain d_1 | d_2 | ... of non-negative integers.
/// vinv satisfies vinv*V = I; it is carried along because callers that
/// present a group by relations need coordinates in the new basis.
struct SnfResult {
    IntMat u, d, v, vinv;
    std::vector<BigInt> diagonal() const;
};

SnfResult smith_normal_form(const IntMat& m);
/// keeps `cols_hint` V-columns alive when the matrix has no rows
SnfResult smith_normal_form(const IntMat& m, std::size_t cols_hint);

} // namespace qd
