#pragma once

#include <string>
#include <vector>

#include "pebbling/count_table.hpp"
#include "pebbling/int_series.hpp"
#include "pebbling/precision.hpp"

namespace pebbling {

// S and S' as exact-integer polynomials (the truncated growth series),
// evaluated by Horner at the ambient working precision.  Valid on
// 0 < z <= 0.45, where the documented tail bound applies.
class SPolynomial {
public:
    explicit SPolynomial(long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    Real value_at(const Real& z) const;
    Real derivative_at(const Real& z) const;
    // Upper bound on the dropped tail of value_at/derivative_at for
    // |z| <= 0.45 (see required_series_order).
    Real tail_bound() const;

private:
    std::vector<BigInt> coeffs_;
};

// High-precision location of the unique root z* of S on (0, 1/2).
struct RootCertificate {
    Real z_star;
    Real residual;      // bound on |S(z_star)|, truncation tail included
    Real bracket_lo;    // sign change of S verified on [lo, hi]
    Real bracket_hi;
    Real s_prime;       // S'(z_star)
    int grid_sign_changes = 0;
    int digits = 0;     // precision the certificate was computed at
};

Real eval_S(const Real& z, const PrecisionPolicy& policy);
Real eval_S_prime(const Real& z, const PrecisionPolicy& policy);

// Scan (0.01, 0.49) on a 0.01 grid (exactly one sign change required),
// bisect the bracket to width 10^{-P-2}, polish with Newton steps.
// Throws std::runtime_error("root structure unexpected") if the grid does
// not show exactly one sign change, and if the certificate cannot meet
// residual <= 10^-P.
RootCertificate find_zstar(const PrecisionPolicy& policy);

// Prefactor of the total-count growth law G(k) ~ c_star * a^k:
//   z*^2/((1-2 z*) S'(z*)) * sum_{n>=1} (-1)^{n+1} z*^{n(n+3)/2}
//     / ((1-z*^n)(1-z*^{n+1})) * prod_{L=1..n-1} (1-z*^L)^{-2}.
Real c_star(const RootCertificate& cert, const PrecisionPolicy& policy);

// c1 = -log(z*)/(2 pi) * exp(-pi^2/(2 log z*)) / S'(z*)
//      * prod_{j>=1} (1-z*^j)^2.
Real c1(const RootCertificate& cert, const PrecisionPolicy& policy);

// Constant of the large-m law w0(l) ~ w_prefactor * z*^{-l}:
//   z* * prod_{L>=1} (1-z*^L)^{-1} / S'(z*).
Real w_prefactor(const RootCertificate& cert, const PrecisionPolicy& policy);

// Fixed-m growth law: G(k,m) ~ z*^{m(m+3)/2-k}/S'(z*) *
//   sum_{n>=1} (-1)^{n+1} z*^{n(n+1)/2+nm}
//     prod_{L=0..m} (1-z*^{L+n})^{-1} prod_{L=1..n-1} (1-z*^L)^{-2}.
Real asymptotic_g(long k, long m, const RootCertificate& cert,
                  const PrecisionPolicy& policy);

// All published constants in one sweep.
struct AsymptoticConstants {
    Real z_star;
    Real a;  // 1/z_star
    Real s_prime;
    Real c_star;
    Real c1;
    Real w_prefactor;
    int digits = 0;
};
AsymptoticConstants compute_constants(const PrecisionPolicy& policy);

// Exact-versus-asymptotic ratio table.  Rows with m = 0 compare
// g_total(k) against c_star * a^k; rows with m >= 1 compare g(k,m)
// against asymptotic_g(k,m).  Entries below the zero threshold are
// marked inapplicable.
struct RatioRow {
    long k = 0;
    long m = 0;
    bool applicable = true;
    std::string exact;       // decimal integer
    std::string asymptotic;  // decimal
    std::string ratio;       // exact / asymptotic
    double abs_gap = 0.0;    // |ratio - 1|
};
struct RatioReport {
    std::vector<RatioRow> rows;
};
RatioReport ratio_report(const CountTable& table, const PrecisionPolicy& policy,
                         const std::vector<long>& ks, const std::vector<long>& ms);

}  // namespace pebbling
