#pragma once

#include "pebbling/int_series.hpp"
#include "pebbling/report.hpp"

namespace pebbling {

// The auxiliary q-series
//   S_k(z) = sum_{i>=1} (-1)^{i+1} z^{i(i+2k-1)/2} prod_{j=1..i} (1-z^j)^{-2}
// (the exponent is always integral: i and i+2k-1 have opposite parity).
// Terms enter while their minimal exponent stays within the order.
IntSeries sk_series(long k, long order);

// S(z) = (2z^2-3z+2) S_1(z) - (4z^2-4z+1) S_2(z) + 2z^2 - z - 1.
// Its unique root z* in (0,1/2) is the reciprocal growth rate of the
// configuration counts.
IntSeries s_series(long order);

// prod_{L=1..order} (1-z^L)^{-1}; coefficients are the partition numbers.
IntSeries partition_product_series(long order);

// Ordinary generating series of the counts at fixed m:
//   ghat_m(z) = sum_k G(k,m) z^k
//             = z^{1+m(m+3)/2} S(z)^{-1}
//               sum_{n>=1} (-1)^n z^{n(n+1)/2+nm}
//                 prod_{L=0..m} (1-z^{L+n})^{-1} prod_{L=1..n-1} (1-z^L)^{-2}.
// Exact for m >= 1.  For m = 0 the same sum solves the unmodified
// three-term recurrence instead of the true boundary and equals
// (true series) + z*ghat_1, departing from the totals at k = 6; totals go
// through g_total_from_series.  Valuation is m(m+5)/2 + 2.
IntSeries gm_series(long m, long order);

// U_m from its defining sum (exponent n(n-1)/2 + n(m+1) + m(m+1)/2):
//   U_m(z) = sum_{n>=1} (-1)^{n+m} z^{...}
//              prod_{L=0..m} (1-z^{L+n})^{-1} prod_{L=1..n-1} (1-z^L)^{-2}.
IntSeries um_series(long m, long order);

// Coefficient extraction realizing the contour integral for G(k,m):
// the z^k coefficient of ghat_m.  Exact counts for m >= 1.  Requires
// order >= k; a negative coefficient is an internal failure and throws.
BigInt g_from_series(long k, long m, long order);
BigInt g_from_series(long k, const IntSeries& ghat_m);

// Total count via the eliminated boundary:
//   G(k) = 2^{k-2} + sum_{l=1}^{k} 2^{k-l} [z^l] ghat_1,   k >= 2.
BigInt g_total_from_series(long k, long order);
BigInt g_total_from_series(long k, const IntSeries& ghat_1);

// w0_series = S(z)^{-1} * prod_{L>=1} (1-z^L)^{-1}; the m-independent
// minimal-configuration counts are W0(l) = -[z^{l-2}] w0_series, l >= 2.
IntSeries w0_series(long order);
BigInt w0_value(const IntSeries& w0, long l);
BigInt w0_value(long l, long order);  // convenience: builds the series

// --- identity checks (building blocks of verify_series_identities) ---
// Each takes the participating series explicitly so faults can be injected.

// z^{m+1} (V_{m+1} + V_{m-1}) == (2 z^{m+1} - 1) V_m with
// V_m = (-1)^m z^{-m} ghat_m.
CheckResult check_v_recurrence(const IntSeries& ghat_prev, const IntSeries& ghat_mid,
                               const IntSeries& ghat_next, long m);

// ((1-2z)(z^4+2z^2-1) + z^3) V_1 - z^2 (1-2z) V_2 == z^4
// (the |z| < 1/2 boundary equation, cleared of its 1/(1-2z) pole).
CheckResult check_boundary_equation(const IntSeries& ghat_1, const IntSeries& ghat_2);

// S_{k-1} + (z^{k-1} - 2) S_k + S_{k+1} == z^{k-1}
// (three-term recurrence of the S_k, cleared of z^{1-k}).
CheckResult check_sk_recurrence(const IntSeries& sk_prev, const IntSeries& sk_mid,
                                const IntSeries& sk_next, long k);

// z U_1 == -z S_1 + (z+1) S_2 - S_3
CheckResult check_u1_expansion(const IntSeries& u1, const IntSeries& s1,
                               const IntSeries& s2, const IntSeries& s3);

// z^3 U_2 == -z^3 S_1 + (z^3+z^2+z) S_2 - (z^2+z+1) S_3 + S_4
CheckResult check_u2_expansion(const IntSeries& u2, const IntSeries& s1,
                               const IntSeries& s2, const IntSeries& s3,
                               const IntSeries& s4);

// Runs the whole suite coefficient-exactly at the given order:
// V-recurrence for m = 1..6, the boundary equation, the S_k recurrence for
// k = 2..8 and both U expansions.  Order >= 30 recommended.
VerificationReport verify_series_identities(long order);

}  // namespace pebbling
