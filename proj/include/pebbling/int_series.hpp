#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pebbling {

using BigInt = mpz_class;

// Truncated Laurent series with exact integer coefficients.
//
// A series knows its coefficients for exponents valuation()..order(); below
// the valuation the coefficient is exactly zero, above the order it is
// unknown (not zero).  Arithmetic tracks how far results stay trustworthy:
//   sum/difference : order = min(orders)
//   product        : order = min(N1 + v2, N2 + v1)
// The valuation is a lower bound on the true valuation; leading stored
// zeros are legal and normalized() trims them.
class IntSeries {
public:
    IntSeries() = default;
    IntSeries(long valuation, std::vector<BigInt> coeffs, long order);

    // The zero series, trusted through `order`.
    static IntSeries zero(long order);
    static IntSeries one(long order);
    // c * z^exponent, trusted through `order` (exponent may exceed order).
    static IntSeries monomial(BigInt c, long exponent, long order);
    // Polynomial c0 + c1 z + ..., trusted through `order` >= degree.
    static IntSeries poly(std::initializer_list<long> coeffs, long order);
    // 1 / (1 - z^j) truncated at `order`; j >= 1.
    static IntSeries geometric_inverse(long j, long order);

    long valuation() const { return val_; }
    long order() const { return order_; }

    // Coefficient of z^n; exact 0 below the valuation, logic error above
    // the tracked order.
    const BigInt& coeff(long n) const;

    // Exponent of the first nonzero retained coefficient (the true
    // valuation of the retained part).  Throws if all retained
    // coefficients vanish.
    long first_nonzero() const;
    bool is_zero() const;  // all retained coefficients zero

    IntSeries truncated(long new_order) const;
    // Trim leading stored zeros so valuation() is the true valuation.
    IntSeries normalized() const;

    IntSeries operator-() const;
    friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);

    // One line "valuation v / order N" then one "n c_n" line per retained
    // coefficient (debug surface).
    void dump(std::ostream& os) const;
    std::string to_debug_string() const;

private:
    long val_ = 0;
    long order_ = -1;
    std::vector<BigInt> coeffs_;  // exponents val_ .. order_

    static const BigInt kZero;
};

// Multiply by z^e (adjusts valuation and order).
IntSeries shift(const IntSeries& s, long e);

// Multiplicative inverse over the integers.  Requires the true leading
// coefficient to be +1 or -1; otherwise throws std::domain_error
// ("not invertible over integers").
IntSeries invert(const IntSeries& s);

// First exponent (up to min of the tracked orders) where the two series
// disagree, or nullopt when they agree on the whole shared range.
std::optional<long> first_mismatch(const IntSeries& a, const IntSeries& b);
inline bool series_equal(const IntSeries& a, const IntSeries& b) {
    return !first_mismatch(a, b).has_value();
}

}  // namespace pebbling
