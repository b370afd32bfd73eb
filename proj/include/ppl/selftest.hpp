#pragma once

#include "ppl/report.hpp"
#include "ppl/witt.hpp"

namespace ppl::selftest {

// Exact-integer oracle: integer polynomial product reduced by the monic
// modulus h, then reduced mod n.
Poly oracle_mul(const Poly& a, const Poly& b, const Poly& h, u64 n);
Poly oracle_add(const Poly& a, const Poly& b, u64 n);

// Random ring arithmetic (+, -, *, inverse, quotient) against the oracle;
// one record per (p, k, A) configuration.
Report padic_oracle_suite(int cases, u64 seed);
// Random series products, sums, integrals and Horner evaluation against the
// oracle; one record per configuration.
Report series_oracle_suite(int cases, u64 seed);

}  // namespace ppl::selftest
