// Acceptance suite: every release gate in one binary, one line per gate.
// Exits nonzero if any gate fails.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "pebbling/asymptotics.hpp"
#include "pebbling/board.hpp"
#include "pebbling/count_table.hpp"
#include "pebbling/series.hpp"

using namespace pebbling;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] A%d %s%s%s\n", ok ? "PASS" : "FAIL", id, name,
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Peak resident set in MiB.
long peak_rss_mib() {
    struct rusage usage {};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_maxrss / 1024;  // ru_maxrss is in KiB on Linux
}

// A1: brute-force enumeration equals the recurrence exactly:
// G(k) for k = 2..11, G(k,1) for k = 5..13, G(k,2) for k = 9..15.
void criterion_oracle_equality() {
    auto t0 = std::chrono::steady_clock::now();
    CountTable table = CountTable::build(15);
    std::ostringstream detail;
    bool ok = true;

    const long first_totals[] = {1, 2, 4, 9, 20, 46};
    struct Range {
        long m, k_lo, k_hi;
    } ranges[] = {{0, 2, 11}, {1, 5, 13}, {2, 9, 15}};
    for (const auto& r : ranges) {
        long steps = r.k_hi - (2 * r.m + 2);
        EnumerationResult res = enumerate_counts(r.m, steps);
        if (res.exhausted || res.last_complete_level < r.k_hi) {
            ok = false;
            detail << "enumeration incomplete at m=" << r.m;
            break;
        }
        for (long k = r.k_lo; k <= r.k_hi; ++k) {
            auto it = res.clean_counts.find(k);
            std::uint64_t bfs = it == res.clean_counts.end() ? 0 : it->second;
            if (table.g(k, r.m) != bfs ||
                (r.m == 0 && k <= 7 && bfs != static_cast<std::uint64_t>(
                                                  first_totals[k - 2]))) {
                ok = false;
                detail << "mismatch at k=" << k << " m=" << r.m;
                break;
            }
        }
        if (!ok) break;
    }

    double dt = seconds_since(t0);
    long rss = peak_rss_mib();
    if (dt >= 120.0) ok = false;
    if (rss > 2048) ok = false;
    if (ok) {
        detail << "G(2..11), G(5..13,1), G(9..15,2) exact; " << std::fixed;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.2fs, peak %ld MiB", dt, rss);
        detail << buf;
    }
    report(1, "oracle/recurrence equality", ok, detail.str());
}

// A2: coefficient extraction equals the recurrence for k <= 80, m = 1..10,
// and the summed total route equals g_total for k <= 80.
void criterion_series_equality() {
    auto t0 = std::chrono::steady_clock::now();
    CountTable table = CountTable::build(80);
    std::ostringstream detail;
    bool ok = true;
    for (long m = 1; m <= 10 && ok; ++m) {
        IntSeries ghat = gm_series(m, 80);
        for (long k = 0; k <= 80; ++k) {
            if (g_from_series(k, ghat) != table.g(k, m)) {
                ok = false;
                detail << "coefficient mismatch at k=" << k << " m=" << m;
                break;
            }
        }
    }
    IntSeries ghat1 = gm_series(1, 80);
    for (long k = 2; k <= 80 && ok; ++k) {
        if (g_total_from_series(k, ghat1) != table.g_total(k)) {
            ok = false;
            detail << "total mismatch at k=" << k;
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) ok = false;
    if (ok) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "k <= 80, m = 1..10 + totals; %.2fs", dt);
        detail << buf;
    }
    report(2, "series/recurrence equality", ok, detail.str());
}

// A3: z* to 15 digits and a = 1/z* to 13 significant digits.
void criterion_root_digits() {
    PrecisionPolicy policy{20, 10, 0};
    RootCertificate cert = find_zstar(policy);
    ScopedPrecision prec(policy.working_digits());
    Real a = 1 / cert.z_star;
    bool z_ok = cert.z_star >= Real("0.430729593137930") &&
                cert.z_star < Real("0.430729593137931");
    bool a_ok = a >= Real("2.321642199494") && a < Real("2.321642199495");
    report(3, "root digits", z_ok && a_ok,
           "z* = " + decimal_string(cert.z_star, 16) +
               ", a = " + decimal_string(a, 13));
}

// A4: c_star within 5e-9 of 0.12268707.
void criterion_growth_constant() {
    PrecisionPolicy policy{15, 10, 0};
    RootCertificate cert = find_zstar(policy);
    Real c = c_star(cert, policy);
    ScopedPrecision prec(policy.working_digits());
    Real gap = abs(c - Real("0.12268707"));
    report(4, "growth constant c*", gap < Real("5e-9"),
           "c* = " + decimal_string(c, 12) + ", |gap| = " + decimal_string(gap, 12));
}

// A5: the corrected constants, c1 within 1e-14 and the minimal-count
// prefactor within 1e-13 of the published digits.
void criterion_corrected_constants() {
    PrecisionPolicy policy{25, 10, 0};
    RootCertificate cert = find_zstar(policy);
    Real v1 = c1(cert, policy);
    Real v2 = w_prefactor(cert, policy);
    ScopedPrecision prec(policy.working_digits());
    bool c1_ok = abs(v1 - Real("2.027402047468498")) < Real("1e-14");
    bool wp_ok = abs(v2 - Real("0.287777704935052")) < Real("1e-13");
    report(5, "corrected constants", c1_ok && wp_ok,
           "c1 = " + decimal_string(v1, 16) +
               ", w_prefactor = " + decimal_string(v2, 16) +
               (wp_ok ? "" : " (prefactor identification falsified)"));
}

// A6: w0(l) = G(m(m+5)/2 + l, m) exactly for m = 3..8, 2 <= l <= m+3.
void criterion_w_collapse() {
    CountTable table = CountTable::build(63);
    IntSeries w0 = w0_series(11);
    bool ok = w0_value(w0, 2) == 1;
    std::string detail;
    for (long m = 3; m <= 8 && ok; ++m) {
        for (long l = 2; l <= m + 3; ++l) {
            if (w0_value(w0, l) != table.g(m * (m + 5) / 2 + l, m)) {
                ok = false;
                detail = "mismatch at m=" + std::to_string(m) + " l=" + std::to_string(l);
                break;
            }
        }
    }
    if (ok) detail = "m = 3..8, l = 2..m+3, w0(2) = 1";
    report(6, "w-collapse", ok, detail);
}

// A7: the series identity suite at order 200 and the boundary identities
// for k <= 80, all coefficient-exact.
void criterion_identity_suite() {
    VerificationReport rep = verify_series_identities(200);
    rep.merge(verify_boundary_identities(CountTable::build(80)));
    bool ok = rep.all_passed();
    std::string detail = std::to_string(rep.checks.size()) + " checks at order 200 / k <= 80";
    if (const CheckResult* f = rep.first_failure())
        detail = f->name + ": " + f->detail;
    report(7, "identity suite", ok, detail);
}

// A8: asymptotic convergence at finite k, and the table build stays fast.
void criterion_asymptotic_convergence() {
    auto t0 = std::chrono::steady_clock::now();
    CountTable table = CountTable::build(300);
    double build_s = seconds_since(t0);

    PrecisionPolicy policy{25, 10, 0};
    RootCertificate cert = find_zstar(policy);
    Real cs = c_star(cert, policy);
    ScopedPrecision prec(40);

    Real gap100 = abs(to_real(table.g_total(100)) /
                          (cs * pow(1 / cert.z_star, 100)) - 1);
    Real gap200 = abs(to_real(table.g_total(200)) /
                          (cs * pow(1 / cert.z_star, 200)) - 1);
    Real gap_m1 = abs(to_real(table.g(100, 1)) /
                          asymptotic_g(100, 1, cert, policy) - 1);

    bool ok = gap100 < Real("1e-3") && gap200 < Real("1e-4") &&
              gap_m1 < Real("1e-3") && build_s < 5.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "|gap| = %.2e (k=100), %.2e (k=200), %.2e (k=100,m=1); build(300) %.2fs",
                  static_cast<double>(gap100), static_cast<double>(gap200),
                  static_cast<double>(gap_m1), build_s);
    report(8, "asymptotic convergence", ok, buf);
}

// A9: reported constants unchanged in their digits when the series order
// and the working precision are both doubled.
void criterion_refinement_stability() {
    PrecisionPolicy base{25, 10, 0};
    PrecisionPolicy doubled{25, 10 + base.working_digits(), 2 * base.effective_order()};

    AsymptoticConstants c0 = compute_constants(base);
    AsymptoticConstants c1c = compute_constants(doubled);

    ScopedPrecision prec(80);
    Real tol("1e-24");
    auto same = [&](const Real& x, const Real& y) {
        return abs(x - y) / abs(x) < tol;
    };
    bool ok = same(c0.z_star, c1c.z_star) && same(c0.a, c1c.a) &&
              same(c0.s_prime, c1c.s_prime) && same(c0.c_star, c1c.c_star) &&
              same(c0.c1, c1c.c1) && same(c0.w_prefactor, c1c.w_prefactor);
    report(9, "refinement stability", ok,
           ok ? "all constants stable to 24 digits under doubling" : "drift detected");
}

}  // namespace

int main() {
    criterion_oracle_equality();
    criterion_series_equality();
    criterion_root_digits();
    criterion_growth_constant();
    criterion_corrected_constants();
    criterion_w_collapse();
    criterion_identity_suite();
    criterion_asymptotic_convergence();
    criterion_refinement_stability();

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
