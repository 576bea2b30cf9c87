#include "pebbling/asymptotics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "pebbling/series.hpp"

namespace pebbling {

long required_series_order(int d) {
    // 0.24988 = -log10(0.5625); constants from the header's tail bound.
    long n = 8;
    while (0.24988 * (n + 1) < d + 7.55 + std::log10(static_cast<double>(n + 1))) ++n;
    return n;
}

long PrecisionPolicy::effective_order() const {
    return series_order > 0 ? series_order : required_series_order(working_digits());
}

std::string decimal_string(const Real& x, int decimals) {
    // Digits are truncated, not rounded, so output lines up with published
    // truncated digit strings.
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*RZf", decimals, x.backend().data());
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

SPolynomial::SPolynomial(long order) {
    IntSeries s = s_series(order);
    coeffs_.reserve(static_cast<size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) coeffs_.push_back(s.coeff(n));
}

Real SPolynomial::value_at(const Real& z) const {
    Real acc = 0;
    for (size_t n = coeffs_.size(); n-- > 0;) acc = acc * z + to_real(coeffs_[n]);
    return acc;
}

Real SPolynomial::derivative_at(const Real& z) const {
    Real acc = 0;
    for (size_t n = coeffs_.size(); n-- > 1;)
        acc = acc * z + static_cast<long>(n) * to_real(coeffs_[n]);
    return acc;
}

Real SPolynomial::tail_bound() const {
    long n1 = order() + 1;
    return Real(3.5e7) * Real(n1) * pow(Real(9) / 16, static_cast<int>(n1));
}

namespace {

Real pow10_neg(int d) { return pow(Real(10), -d); }

Real const_pi() {
    Real pi;  // ambient default precision
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

}  // namespace

Real eval_S(const Real& z, const PrecisionPolicy& policy) {
    if (!(z > 0 && z < Real("0.5")))
        throw std::invalid_argument("eval_S: z in (0, 0.5) required");
    ScopedPrecision prec(policy.working_digits());
    SPolynomial s(policy.effective_order());
    return s.value_at(z);
}

Real eval_S_prime(const Real& z, const PrecisionPolicy& policy) {
    if (!(z >= 0 && z < Real("0.5")))
        throw std::invalid_argument("eval_S_prime: z in [0, 0.5) required");
    ScopedPrecision prec(policy.working_digits());
    SPolynomial s(policy.effective_order());
    return s.derivative_at(z);
}

RootCertificate find_zstar(const PrecisionPolicy& policy) {
    ScopedPrecision prec(policy.working_digits());
    SPolynomial s(policy.effective_order());

    // Grid scan: exactly one sign change expected on (0.01, 0.49).
    RootCertificate cert;
    Real lo, hi;
    Real prev_z = Real(1) / 100;
    Real prev_v = s.value_at(prev_z);
    for (int i = 2; i <= 49; ++i) {
        Real z = Real(i) / 100;
        Real v = s.value_at(z);
        if ((prev_v < 0) != (v < 0)) {
            ++cert.grid_sign_changes;
            lo = prev_z;
            hi = z;
        }
        prev_z = z;
        prev_v = v;
    }
    if (cert.grid_sign_changes != 1)
        throw std::runtime_error("root structure unexpected");

    // Bisect to width 10^{-P-2}; S runs negative below the root.
    Real width = pow10_neg(policy.digits + 2);
    bool lo_negative = s.value_at(lo) < 0;
    while (hi - lo > width) {
        Real mid = (lo + hi) / 2;
        if ((s.value_at(mid) < 0) == lo_negative)
            lo = mid;
        else
            hi = mid;
    }
    cert.bracket_lo = lo;
    cert.bracket_hi = hi;

    // Newton polish from the bracket midpoint, kept inside the bracket.
    Real z = (lo + hi) / 2;
    for (int it = 0; it < 4; ++it) {
        Real step = s.value_at(z) / s.derivative_at(z);
        Real next = z - step;
        if (next <= lo || next >= hi) break;
        z = next;
    }

    cert.z_star = z;
    cert.s_prime = s.derivative_at(z);
    cert.residual = abs(s.value_at(z)) + s.tail_bound();
    cert.digits = policy.digits;
    if (cert.residual > pow10_neg(policy.digits))
        throw std::runtime_error("root residual bound not met");
    return cert;
}

namespace {

// prod_{L=1..n} (1 - z^L)^{sign}, truncated when the remaining factors are
// within eps of 1 (|log tail| <= 2 z^{J+1}/(1-z)).
Real q_product(const Real& z, int sign, const Real& eps) {
    Real acc = 1;
    Real zpow = 1;
    for (long j = 1;; ++j) {
        zpow *= z;
        Real f = 1 - zpow;
        acc *= (sign > 0) ? f : 1 / f;
        if (2 * zpow / (1 - z) < eps) break;
    }
    return acc;
}

}  // namespace

Real c_star(const RootCertificate& cert, const PrecisionPolicy& policy) {
    ScopedPrecision prec(policy.working_digits());
    const Real& z = cert.z_star;
    Real eps = pow10_neg(policy.working_digits());

    Real sum = 0;
    Real squares = 1;  // prod_{L=1..n-1} (1-z^L)^{-2}
    for (long n = 1;; ++n) {
        if (n > 1) {
            Real f = 1 - pow(z, static_cast<int>(n - 1));
            squares /= f * f;
        }
        Real znum = pow(z, static_cast<int>(n * (n + 3) / 2));
        Real term = znum / ((1 - pow(z, static_cast<int>(n))) *
                            (1 - pow(z, static_cast<int>(n + 1)))) *
                    squares;
        sum += (n % 2 == 1) ? term : -term;
        // |next terms| <= 12.1 * 3.31 * z^{(n+1)(n+4)/2}, decaying fast
        if (Real(41) * pow(z, static_cast<int>((n + 1) * (n + 4) / 2)) < eps) break;
    }
    return z * z / ((1 - 2 * z) * cert.s_prime) * sum;
}

Real c1(const RootCertificate& cert, const PrecisionPolicy& policy) {
    ScopedPrecision prec(policy.working_digits());
    const Real& z = cert.z_star;
    Real eps = pow10_neg(policy.working_digits());
    Real lg = log(z);
    Real pi = const_pi();
    Real prod = q_product(z, +1, eps);
    return -lg / (2 * pi) * exp(-pi * pi / (2 * lg)) / cert.s_prime * prod * prod;
}

Real w_prefactor(const RootCertificate& cert, const PrecisionPolicy& policy) {
    ScopedPrecision prec(policy.working_digits());
    const Real& z = cert.z_star;
    Real eps = pow10_neg(policy.working_digits());
    return z * q_product(z, -1, eps) / cert.s_prime;
}

Real asymptotic_g(long k, long m, const RootCertificate& cert,
                  const PrecisionPolicy& policy) {
    if (m < 0) throw std::invalid_argument("asymptotic_g: m >= 0 required");
    ScopedPrecision prec(policy.working_digits());
    const Real& z = cert.z_star;
    Real eps = pow10_neg(policy.working_digits());

    Real sum = 0;
    Real squares = 1;                       // prod_{L=1..n-1} (1-z^L)^{-2}
    Real window = 1;                        // prod_{L=0..m} (1-z^{L+n})^{-1}
    for (long L = 0; L <= m; ++L) window /= 1 - pow(z, static_cast<int>(L + 1));
    // loose uniform bound on the window across n
    Real window_bound = pow(1 / (1 - z), static_cast<int>(m + 1));
    for (long n = 1;; ++n) {
        if (n > 1) {
            Real f = 1 - pow(z, static_cast<int>(n - 1));
            squares /= f * f;
            window *= f;  // shed L = n-1
            window /= 1 - pow(z, static_cast<int>(n + m));
        }
        Real term = pow(z, static_cast<int>(n * (n + 1) / 2 + n * m)) * window * squares;
        sum += (n % 2 == 1) ? term : -term;
        long e_next = (n + 1) * (n + 2) / 2 + (n + 1) * m;
        if (Real(13) * window_bound * pow(z, static_cast<int>(e_next)) < eps) break;
    }
    return pow(z, static_cast<int>(m * (m + 3) / 2 - k)) / cert.s_prime * sum;
}

AsymptoticConstants compute_constants(const PrecisionPolicy& policy) {
    RootCertificate cert = find_zstar(policy);
    AsymptoticConstants c;
    c.z_star = cert.z_star;
    {
        ScopedPrecision prec(policy.working_digits());
        c.a = 1 / cert.z_star;
    }
    c.s_prime = cert.s_prime;
    c.c_star = c_star(cert, policy);
    c.c1 = c1(cert, policy);
    c.w_prefactor = w_prefactor(cert, policy);
    c.digits = policy.digits;
    return c;
}

RatioReport ratio_report(const CountTable& table, const PrecisionPolicy& policy,
                         const std::vector<long>& ks, const std::vector<long>& ms) {
    ScopedPrecision prec(policy.working_digits());
    RatioReport report;
    if (ks.empty() || ms.empty()) return report;

    RootCertificate cert = find_zstar(policy);
    Real cs;
    bool need_total = false;
    for (long m : ms) need_total = need_total || (m == 0);
    if (need_total) cs = c_star(cert, policy);

    for (long m : ms) {
        for (long k : ks) {
            RatioRow row;
            row.k = k;
            row.m = m;
            if (k <= zero_threshold_k(m) || k > table.k_max()) {
                row.applicable = false;
                report.rows.push_back(std::move(row));
                continue;
            }
            Real exact = to_real(m == 0 ? table.g_total(k) : table.g(k, m));
            Real approx = (m == 0)
                              ? cs * pow(1 / cert.z_star, static_cast<int>(k))
                              : asymptotic_g(k, m, cert, policy);
            Real ratio = exact / approx;
            row.exact = (m == 0 ? table.g_total(k) : table.g(k, m)).get_str();
            {
                std::ostringstream os;
                os << std::scientific << std::setprecision(policy.digits) << approx;
                row.asymptotic = os.str();
            }
            row.ratio = decimal_string(ratio, policy.digits);
            row.abs_gap = static_cast<double>(abs(ratio - 1));
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace pebbling
