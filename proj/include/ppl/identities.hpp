#pragma once

#include <vector>

#include "ppl/rational.hpp"
#include "ppl/report.hpp"

namespace ppl::identities {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Closed-form coefficients a_0 = -n, a_k = (-1)^k/(k-1)! + (-1)^{k+1} n/k!,
// returned as [a_0, ..., a_{n-1}].
std::vector<Rational> a_coeffs(int n);

// Rows l = 1..n-1 of  sum_{k=0}^{l} (a_k + (k+1) a_{k+1}) / (l-k)! = 0  in the
// unknowns a_0..a_{n-1} (a_n = 0).
RationalMatrix conds_matrix(int n);

// Row-echelon rank of a rational matrix, by fraction-free (Bareiss)
// elimination on the denominator-cleared integer matrix.
int rank(const RationalMatrix& m);

// Unique solution of a square system m x = rhs; throws std::domain_error when
// the system is singular.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

// The conds rows plus the normalization a_0 + a_1 = -1, solved exactly.
std::vector<Rational> solve_conds(int n);

// Dimension of the solution space of the homogeneous conds rows.
int homogeneous_nullity(int n);

// Left-hand sides of the conds rows at a candidate coefficient vector.
std::vector<Rational> conds_residuals(int n, const std::vector<Rational>& a);

// solve_conds(n) = a_coeffs(n), nullity 1, and a_k -> a_k + 1 breaks some row
// for every k; one record per n in [n_lo, n_hi].
Report uniqueness_check(int n_lo, int n_hi);

// sum_k a_k t^k = -(n + t) e^{-t} mod t^n, one record per degree.
Report gen_function_check(int n);

// sum_{k=0}^n (-1)^k k!/(k+1)! C(n,k), expected 1/(n+1).
Rational c_sum(int n);
// sum_{k=0}^n (-1)^k k!/(k+1)! C(n,k) (n-k), expected 1 for n >= 1.
Rational d_sum(int n);
Report constants_check(int n_lo, int n_hi);

// [e_0, ..., e_n] with e_n = -n, e_{n-1} = -1, all others zero.
std::vector<Rational> e_coeffs(int n);

}  // namespace ppl::identities
