#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace pebbling {

namespace mp = boost::multiprecision;

// Runtime-precision real; precision of fresh values follows
// Real::default_precision (decimal digits).
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

// Evaluation budget for the numeric layer: P target digits, `guard` extra
// working digits, and the series order used for polynomial evaluation
// (0 = derive from digits + guard via the documented tail bound).
struct PrecisionPolicy {
    int digits = 30;
    int guard = 10;
    long series_order = 0;

    int working_digits() const { return digits + guard; }
    long effective_order() const;
};

// Smallest polynomial order N for which the dropped tail of the growth
// series S (and of its derivative) at |z| <= 0.45 stays below 10^-d.
// Coefficient bound: |s_n| <= M (1/0.8)^n with M = 3e6, a Cauchy estimate
// on |z| = 0.8 (q-product there <= 1e5, polynomial prefactors <= 16,
// alternating i-sums <= 1.8).  Then
//   sum_{n>N} |s_n| 0.45^n          <= 6.9e6 * 0.5625^{N+1}
//   sum_{n>N} n |s_n| 0.45^{n-1}    <= 3.5e7 * (N+1) * 0.5625^{N+1}
// and N is chosen so the larger bound is <= 10^-d.
long required_series_order(int decimal_digits);

// Set Real::default_precision for a scope, restoring on exit.
class ScopedPrecision {
public:
    explicit ScopedPrecision(int digits)
        : prev_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(digits));
    }
    ~ScopedPrecision() { Real::default_precision(prev_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned prev_;
};

// Exact integer -> Real at the ambient default precision.
inline Real to_real(const mpz_class& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

// Decimal rendering with exactly `decimals` digits after the point
// (fixed notation, round-to-nearest).
std::string decimal_string(const Real& x, int decimals);

}  // namespace pebbling
