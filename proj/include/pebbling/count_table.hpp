#pragma once

#include <gmpxx.h>

#include <vector>

#include "pebbling/report.hpp"

namespace pebbling {

using BigInt = mpz_class;

// G(k,m) = 0 whenever k <= m(m+5)/2 + 1; the first nonzero entry for each m
// sits two levels above the threshold (l = k - m(m+5)/2 = 2).
inline long zero_threshold_k(long m) { return m * (m + 5) / 2 + 1; }

// Largest m whose entries can be nonzero at level k (-1 when none).
long max_m_for(long k);

// Exact table of the configuration counts G(k,m), filled bottom-up from the
// coupled recurrences
//   G(k,0) = 2 G(k-1,0) + G(k,1) + [k == 2]
//   G(k,1) = G(k-3,0) + 2 G(k-2,1) + G(k-1,2) + G(k-4,1)
//   G(k,m) = G(k-m-2,m-1) + 2 G(k-m-1,m) + G(k-m,m+1)        (m >= 2)
// with every index at or below the zero threshold resolving to 0.
//
// Storage is dense in k and sparse in m (only m <= max_m_for(k) is kept,
// O(k^{3/2}) entries).  Values grow like 2.3216^k, hence arbitrary-size
// integers.  A built table is immutable in normal use and safe to read from
// any number of threads.
class CountTable {
public:
    static CountTable build(long k_max);

    long k_max() const { return k_max_; }

    // Threshold-aware lookup: any (k,m) with k <= m(m+5)/2 + 1 answers 0
    // without table support (k may be negative); otherwise k must be within
    // the built range or std::out_of_range("table too small") is thrown.
    const BigInt& g(long k, long m) const;

    // Total number of reachable configurations with k pebbles (= G(k,0));
    // defined for k >= 2 only, std::domain_error otherwise.
    const BigInt& g_total(long k) const;

    bool operator==(const CountTable&) const = default;

    // Direct mutable access to a stored entry (fault-injection tests).
    BigInt& entry(long k, long m);

private:
    CountTable() = default;
    long k_max_ = -1;
    std::vector<std::vector<BigInt>> rows_;  // rows_[k][m]

    static const BigInt kZero;
};

// Re-derives the two eliminated boundary forms from the stored values:
//   (a) G(k,0) = 2^{k-2} + sum_{l=1}^{k} 2^{k-l} G(l,1)            (k >= 2)
//   (b) G(k,1) = 2 G(k-2,1) + G(k-1,2) + G(k-4,1) + 2^{k-5}
//                + sum_{l=1}^{k-3} 2^{k-l-3} G(l,1)                (k >= 5)
// Exact integer equality over every feasible k; requires k_max >= 5.
VerificationReport verify_boundary_identities(const CountTable& table);

}  // namespace pebbling
