#pragma once

#include <vector>

#include "ppl/coleman.hpp"
#include "ppl/harness.hpp"
#include "ppl/power_series.hpp"

namespace ppl::section3 {

// f_k(z, z + u) as a series in u at a fixed base z, together with the series
// of its z-derivative at fixed S = z + u.
struct FSeriesPair {
    WittApprox z;
    int k;
    TruncSeries series;
    TruncSeries dz_series;
};

// Every coefficient of f_k and of its z-derivative satisfies
// v >= -v_p(j!) >= floor(-j/(p-1)).
TailBound f_tail(u64 p);

// max(A + n + 5, smallest order whose tail certifies `target` at |u| <= 1/p).
int f_series_order(u64 p, int A, int n, int target);

// f_0..f_kmax: f_0 = -1 + (1/(1-z)) sum (u/(1-z))^j,
// f_{k+1} = int_0^u f_k (z + t)^{-1} dt, with the z-derivatives dz_0 = 0,
// dz_1 = -1/(1-z), dz_{k+1} = int_0^u dz_k (z + t)^{-1} dt.
std::vector<FSeriesPair> f_series(const WittApprox& z, int kmax, int M);

// -sum_{k<=n} (-1)^k k! C(n,k) f_{k+1}(z,S) log^{n-k}(S) against
// (-1)^n n! (L_{n+1}(z) - L_{n+1}(S)) at Teichmüller z and S = z(1+pw).
Report delprop_check(const CheckParams& cp);
// p^{-n} f_n(z, z(1+pw)) = (z/(1-z)) w^n/n! mod p.
Report f_congruence_check(const CheckParams& cp);
// v_p(Df_k(z, S)) >= k with k = cp.n, where
// Df_k = (1-S) f_{k-1}(z,S) + z(1-z) d/dz f_k(z,S).
Report df_lemma_check(const CheckParams& cp);
// sum_m e_m L_m log^{n-m} = F_n.
Report e_recover_check(const CheckParams& cp);

}  // namespace ppl::section3
