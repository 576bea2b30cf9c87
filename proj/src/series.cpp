#include "pebbling/series.hpp"

#include <sstream>
#include <stdexcept>

namespace pebbling {

namespace {

std::string mismatch_detail(long exponent, const IntSeries& lhs, const IntSeries& rhs) {
    std::ostringstream os;
    os << "first failing exponent " << exponent << ": lhs=" << lhs.coeff(exponent).get_str()
       << " rhs=" << rhs.coeff(exponent).get_str();
    return os.str();
}

CheckResult compare(std::string name, const IntSeries& lhs, const IntSeries& rhs) {
    CheckResult res{std::move(name), true, 0, {}};
    long upto = std::min(lhs.order(), rhs.order());
    res.checked = upto + 1;
    if (auto bad = first_mismatch(lhs, rhs)) {
        res.passed = false;
        res.detail = mismatch_detail(*bad, lhs, rhs);
    } else {
        res.detail = "coefficients equal through order " + std::to_string(upto);
    }
    return res;
}

}  // namespace

IntSeries sk_series(long k, long order) {
    if (k < 1) throw std::invalid_argument("sk_series: k >= 1 required");
    if (order < 0) throw std::invalid_argument("sk_series: order >= 0 required");
    IntSeries acc = IntSeries::zero(order);
    IntSeries denom = IntSeries::one(order);  // prod_{j<=i} (1-z^j)^{-2}
    for (long i = 1;; ++i) {
        long e = i * (i + 2 * k - 1) / 2;
        if (e > order) break;
        IntSeries gi = IntSeries::geometric_inverse(i, order);
        denom = denom * gi * gi;
        IntSeries term = shift(denom, e).truncated(order);
        acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

IntSeries s_series(long order) {
    if (order < 0) throw std::invalid_argument("s_series: order >= 0 required");
    IntSeries s1 = sk_series(1, order);
    IntSeries s2 = sk_series(2, order);
    return IntSeries::poly({2, -3, 2}, order) * s1 -
           IntSeries::poly({1, -4, 4}, order) * s2 + IntSeries::poly({-1, -1, 2}, order);
}

IntSeries partition_product_series(long order) {
    if (order < 0) throw std::invalid_argument("partition_product_series: order >= 0");
    IntSeries acc = IntSeries::one(order);
    for (long j = 1; j <= order; ++j) acc = acc * IntSeries::geometric_inverse(j, order);
    return acc;
}

namespace {

// sum_{n>=1} (-1)^{n+sign_offset} z^{exponent(n)}
//   prod_{L=0..m} (1-z^{L+n})^{-1} prod_{L=1..n-1} (1-z^L)^{-2}
// truncated at `order`.  The running products are updated incrementally:
// the window prod_{L=n..n+m} gains (1-z^{n+m})^{-1} and sheds
// (1-z^{n-1})^{-1} as n advances.
template <typename ExponentFn>
IntSeries alternating_product_sum(long m, long order, int sign_offset,
                                  ExponentFn exponent) {
    IntSeries acc = IntSeries::zero(order);
    IntSeries window = IntSeries::one(order);  // prod_{L=0..m} (1-z^{L+n})^{-1}
    for (long L = 0; L <= m; ++L)
        window = window * IntSeries::geometric_inverse(L + 1, order);
    IntSeries squares = IntSeries::one(order);  // prod_{L=1..n-1} (1-z^L)^{-2}
    for (long n = 1;; ++n) {
        long e = exponent(n);
        if (e > order) break;
        if (n > 1) {
            IntSeries gi = IntSeries::geometric_inverse(n - 1, order);
            squares = squares * gi * gi;
            // shed (1-z^{n-1})^{-1}: multiply by the polynomial 1 - z^{n-1}
            window = window * (IntSeries::one(order) -
                               IntSeries::monomial(1, n - 1, order));
            window = window * IntSeries::geometric_inverse(n + m, order);
        }
        IntSeries term = shift(window * squares, e).truncated(order);
        acc = ((n + sign_offset) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

IntSeries gm_series(long m, long order) {
    if (m < 0) throw std::invalid_argument("gm_series: m >= 0 required");
    if (order < 0) throw std::invalid_argument("gm_series: order >= 0 required");
    long prefix = 1 + m * (m + 3) / 2;
    if (prefix > order) return IntSeries::zero(order);
    // bracket carries (-1)^n: sign_offset 0 makes n even positive
    IntSeries bracket = alternating_product_sum(
        m, order - prefix, 0, [m](long n) { return n * (n + 1) / 2 + n * m; });
    IntSeries result = shift(invert(s_series(order - prefix)) * bracket, prefix);
    return result.truncated(order).normalized();
}

IntSeries um_series(long m, long order) {
    if (m < 0) throw std::invalid_argument("um_series: m >= 0 required");
    return alternating_product_sum(m, order, m, [m](long n) {
               return n * (n - 1) / 2 + n * (m + 1) + m * (m + 1) / 2;
           })
        .normalized();
}

BigInt g_from_series(long k, const IntSeries& ghat_m) {
    if (k > ghat_m.order())
        throw std::invalid_argument("g_from_series: order < k");
    BigInt c = ghat_m.coeff(k);
    if (c < 0) throw std::logic_error("g_from_series: negative coefficient");
    return c;
}

BigInt g_from_series(long k, long m, long order) {
    if (order < k) throw std::invalid_argument("g_from_series: order < k");
    return g_from_series(k, gm_series(m, order));
}

BigInt g_total_from_series(long k, const IntSeries& ghat_1) {
    if (k < 2) throw std::domain_error("g_total_from_series: k >= 2 required");
    if (ghat_1.order() < k)
        throw std::invalid_argument("g_total_from_series: order < k");
    BigInt total;
    mpz_ui_pow_ui(total.get_mpz_t(), 2, static_cast<unsigned long>(k - 2));
    BigInt pow2 = 1;  // 2^{k-l}, built from l = k downward
    for (long l = k; l >= 1; --l) {
        total += pow2 * ghat_1.coeff(l);
        pow2 *= 2;
    }
    return total;
}

BigInt g_total_from_series(long k, long order) {
    if (k < 2) throw std::domain_error("g_total_from_series: k >= 2 required");
    if (order < k) throw std::invalid_argument("g_total_from_series: order < k");
    return g_total_from_series(k, gm_series(1, order));
}

IntSeries w0_series(long order) {
    return invert(s_series(order)) * partition_product_series(order);
}

BigInt w0_value(const IntSeries& w0, long l) {
    if (l < 2) throw std::domain_error("below minimal configuration count");
    BigInt v = -w0.coeff(l - 2);
    if (v <= 0) throw std::logic_error("w0_value: count must be positive");
    return v;
}

BigInt w0_value(long l, long order) {
    if (l < 2) throw std::domain_error("below minimal configuration count");
    if (order < l - 2) throw std::invalid_argument("w0_value: order < l-2");
    return w0_value(w0_series(order), l);
}

namespace {

// V_m = (-1)^m z^{-m} ghat_m as a Laurent series.
IntSeries v_from_ghat(const IntSeries& ghat, long m) {
    IntSeries v = shift(ghat, -m);
    return (m % 2 == 0) ? v : -v;
}

}  // namespace

CheckResult check_v_recurrence(const IntSeries& ghat_prev, const IntSeries& ghat_mid,
                               const IntSeries& ghat_next, long m) {
    IntSeries v_prev = v_from_ghat(ghat_prev, m - 1);
    IntSeries v_mid = v_from_ghat(ghat_mid, m);
    IntSeries v_next = v_from_ghat(ghat_next, m + 1);
    long order = std::min({v_prev.order(), v_mid.order(), v_next.order()}) + m + 1;
    IntSeries lhs = shift(v_prev + v_next, m + 1);
    IntSeries rhs = (IntSeries::monomial(2, m + 1, order) - IntSeries::one(order)) * v_mid;
    return compare("v_recurrence_m" + std::to_string(m), lhs, rhs);
}

CheckResult check_boundary_equation(const IntSeries& ghat_1, const IntSeries& ghat_2) {
    IntSeries v1 = v_from_ghat(ghat_1, 1);
    IntSeries v2 = v_from_ghat(ghat_2, 2);
    long order = std::max(v1.order(), v2.order()) + 8;
    // (1-2z)(z^4+2z^2-1) + z^3 = -2z^5 + z^4 - 3z^3 + 2z^2 + 2z - 1
    IntSeries p1 = IntSeries::poly({-1, 2, 2, -3, 1, -2}, order);
    IntSeries p2 = IntSeries::poly({0, 0, 1, -2}, order);  // z^2 (1-2z)
    IntSeries lhs = p1 * v1 - p2 * v2;
    IntSeries rhs = IntSeries::monomial(1, 4, lhs.order());
    return compare("boundary_equation", lhs, rhs);
}

CheckResult check_sk_recurrence(const IntSeries& sk_prev, const IntSeries& sk_mid,
                                const IntSeries& sk_next, long k) {
    long order = std::min({sk_prev.order(), sk_mid.order(), sk_next.order()});
    IntSeries factor =
        IntSeries::monomial(1, k - 1, order) - IntSeries::poly({2}, order);
    IntSeries lhs = sk_prev + factor * sk_mid + sk_next;
    IntSeries rhs = IntSeries::monomial(1, k - 1, lhs.order());
    return compare("sk_recurrence_k" + std::to_string(k), lhs, rhs);
}

CheckResult check_u1_expansion(const IntSeries& u1, const IntSeries& s1,
                               const IntSeries& s2, const IntSeries& s3) {
    long order = std::min({u1.order(), s1.order(), s2.order(), s3.order()});
    IntSeries lhs = shift(u1, 1).truncated(order + 1);
    IntSeries rhs = -(IntSeries::monomial(1, 1, order) * s1) +
                    IntSeries::poly({1, 1}, order) * s2 - s3;
    return compare("u1_expansion", lhs, rhs);
}

CheckResult check_u2_expansion(const IntSeries& u2, const IntSeries& s1,
                               const IntSeries& s2, const IntSeries& s3,
                               const IntSeries& s4) {
    long order =
        std::min({u2.order(), s1.order(), s2.order(), s3.order(), s4.order()});
    IntSeries lhs = shift(u2, 3).truncated(order + 3);
    IntSeries rhs = -(IntSeries::monomial(1, 3, order) * s1) +
                    IntSeries::poly({0, 1, 1, 1}, order) * s2 -
                    IntSeries::poly({1, 1, 1}, order) * s3 + s4;
    return compare("u2_expansion", lhs, rhs);
}

VerificationReport verify_series_identities(long order) {
    if (order < 10)
        throw std::invalid_argument("verify_series_identities: order too small");
    VerificationReport report;

    std::vector<IntSeries> ghat;
    ghat.reserve(8);
    for (long m = 0; m <= 7; ++m) ghat.push_back(gm_series(m, order));
    for (long m = 1; m <= 6; ++m)
        report.add(check_v_recurrence(ghat[static_cast<size_t>(m - 1)],
                                      ghat[static_cast<size_t>(m)],
                                      ghat[static_cast<size_t>(m + 1)], m));

    report.add(check_boundary_equation(ghat[1], ghat[2]));

    std::vector<IntSeries> sk;
    sk.reserve(10);
    sk.push_back(IntSeries::zero(order));  // placeholder for index 0
    for (long k = 1; k <= 9; ++k) sk.push_back(sk_series(k, order));
    for (long k = 2; k <= 8; ++k)
        report.add(check_sk_recurrence(sk[static_cast<size_t>(k - 1)],
                                       sk[static_cast<size_t>(k)],
                                       sk[static_cast<size_t>(k + 1)], k));

    report.add(check_u1_expansion(um_series(1, order), sk[1], sk[2], sk[3]));
    report.add(check_u2_expansion(um_series(2, order), sk[1], sk[2], sk[3], sk[4]));

    return report;
}

}  // namespace pebbling
