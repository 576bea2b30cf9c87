#include <doctest.h>

#include <vector>

#include "pebbling/count_table.hpp"
#include "pebbling/series.hpp"

using namespace pebbling;

namespace {

// Independent partition-count oracle: p(n, parts <= k) by the standard
// two-way recursion, nothing shared with the series pipeline.
std::vector<long> partition_numbers(long n_max) {
    std::vector<std::vector<long>> p(static_cast<size_t>(n_max) + 1,
                                     std::vector<long>(static_cast<size_t>(n_max) + 1));
    for (long k = 0; k <= n_max; ++k) p[0][static_cast<size_t>(k)] = 1;
    for (long n = 1; n <= n_max; ++n)
        for (long k = 1; k <= n_max; ++k)
            p[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                p[static_cast<size_t>(n)][static_cast<size_t>(k - 1)] +
                (n >= k ? p[static_cast<size_t>(n - k)][static_cast<size_t>(k)] : 0);
    std::vector<long> out;
    for (long n = 0; n <= n_max; ++n)
        out.push_back(p[static_cast<size_t>(n)][static_cast<size_t>(n_max)]);
    return out;
}

}  // namespace

TEST_CASE("sk_series low orders") {
    IntSeries s1 = sk_series(1, 3);
    CHECK(s1.coeff(0) == 0);
    CHECK(s1.coeff(1) == 1);
    CHECK(s1.coeff(2) == 2);
    CHECK(s1.coeff(3) == 2);

    IntSeries s2 = sk_series(2, 3);
    CHECK(s2.coeff(1) == 0);
    CHECK(s2.coeff(2) == 1);
    CHECK(s2.coeff(3) == 2);

    // minimal exponent of S_k is k; beyond the order the series is empty
    CHECK(sk_series(5, 4).is_zero());
}

TEST_CASE("s_series expansions") {
    CHECK(s_series(0).coeff(0) == -1);

    IntSeries s = s_series(6);
    const long expected[] = {-1, 1, 2, 2, 3, -1, -1};
    for (long n = 0; n <= 6; ++n) CHECK(s.coeff(n) == expected[n]);

    for (long order : {1L, 5L, 40L}) CHECK(s_series(order).coeff(1) == 1);
}

TEST_CASE("inverse of the growth series") {
    IntSeries inv = invert(s_series(3));
    CHECK(inv.coeff(0) == -1);
    CHECK(inv.coeff(1) == -1);
    CHECK(inv.coeff(2) == -3);
    CHECK(inv.coeff(3) == -7);
}

TEST_CASE("partition product") {
    IntSeries p = partition_product_series(5);
    const long expected[] = {1, 1, 2, 3, 5, 7};
    for (long n = 0; n <= 5; ++n) CHECK(p.coeff(n) == expected[n]);
    CHECK(partition_product_series(0).coeff(0) == 1);

    IntSeries p30 = partition_product_series(30);
    std::vector<long> oracle = partition_numbers(30);
    for (long n = 0; n <= 30; ++n) CHECK(p30.coeff(n) == oracle[static_cast<size_t>(n)]);
}

TEST_CASE("generating series of the m = 1 counts") {
    IntSeries g1 = gm_series(1, 8);
    for (long k = 0; k <= 4; ++k) CHECK(g1.coeff(k) == 0);
    CHECK(g1.coeff(5) == 1);
    CHECK(g1.coeff(6) == 2);
    CHECK(g1.coeff(7) == 6);
}

TEST_CASE("valuation of the generating series") {
    for (long m = 0; m <= 6; ++m)
        CHECK(gm_series(m, 60).valuation() == m * (m + 5) / 2 + 2);
}

TEST_CASE("coefficient extraction") {
    CHECK(g_from_series(6, 1, 10) == 2);
    CHECK(g_from_series(9, 2, 12) == 1);
    CHECK(g_from_series(3, 1, 10) == 0);
    CHECK_THROWS_AS(g_from_series(11, 1, 10), std::invalid_argument);
}

TEST_CASE("coefficients match the recurrence table") {
    CountTable t = CountTable::build(40);
    for (long m = 1; m <= 5; ++m) {
        IntSeries ghat = gm_series(m, 40);
        for (long k = 0; k <= 40; ++k) {
            CHECK(ghat.coeff(k) >= 0);
            CHECK(g_from_series(k, ghat) == t.g(k, m));
        }
    }
}

TEST_CASE("m = 0 series is the recurrence continuation, not the totals") {
    // At m = 0 the closed-form sum solves the plain three-term recurrence;
    // it equals the true series plus z * ghat_1, so the first difference
    // shows up at k = 6 (21 vs 20).  Totals go through the summed route.
    CountTable t = CountTable::build(12);
    IntSeries g0 = gm_series(0, 12);
    IntSeries g1 = gm_series(1, 12);
    for (long k = 0; k <= 5; ++k) CHECK(g0.coeff(k) == t.g(k, 0));
    CHECK(g0.coeff(6) == 21);
    CHECK(t.g(6, 0) == 20);
    for (long k = 2; k <= 11; ++k)
        CHECK(g0.coeff(k) == t.g(k, 0) + g1.coeff(k - 1));
}

TEST_CASE("totals via the eliminated boundary") {
    CHECK(g_total_from_series(2, 5) == 1);
    CHECK(g_total_from_series(5, 8) == 9);
    CHECK(g_total_from_series(7, 10) == 46);
    CHECK_THROWS_AS(g_total_from_series(1, 10), std::domain_error);

    CountTable t = CountTable::build(40);
    IntSeries g1 = gm_series(1, 40);
    for (long k = 2; k <= 40; ++k) CHECK(g_total_from_series(k, g1) == t.g_total(k));
}

TEST_CASE("minimal-configuration counts") {
    IntSeries w0 = w0_series(10);
    CHECK(w0_value(w0, 2) == 1);
    CHECK(w0_value(w0, 3) == 2);
    CHECK(w0_value(w0, 4) == 6);
    CHECK(w0_value(w0, 5) == 15);
    CHECK(w0_value(5, 10) == 15);
    CHECK_THROWS_WITH_AS(w0_value(w0, 1), "below minimal configuration count",
                         std::domain_error);

    // cross-check against the table: l = 5 at m = 2 sits at k = 12
    CHECK(w0_value(w0, 5) == CountTable::build(12).g(12, 2));
}

TEST_CASE("w-collapse onto the table") {
    CountTable t = CountTable::build(33);
    IntSeries w0 = w0_series(10);
    for (long m = 0; m <= 5; ++m)
        for (long l = 2; l <= m + 3; ++l)
            CHECK(w0_value(w0, l) == t.g(m * (m + 5) / 2 + l, m));
}

TEST_CASE("finite window matches the full product for small l") {
    // 1/S times the finite product over L = 0..m matches w0_series in the
    // coefficients that the collapse uses (l <= m+3, i.e. exponent m+1).
    long order = 12;
    IntSeries w0 = w0_series(order);
    for (long m = 2; m <= 4; ++m) {
        IntSeries finite = invert(s_series(order));
        for (long L = 0; L <= m; ++L)
            finite = finite * IntSeries::geometric_inverse(L + 1, order);
        for (long l = 2; l <= m + 3; ++l) CHECK(finite.coeff(l - 2) == w0.coeff(l - 2));
        // and first diverges right above the window
        CHECK(finite.coeff(m + 2) != w0.coeff(m + 2));
    }
}

TEST_CASE("u-series expansion") {
    IntSeries u1 = um_series(1, 6);
    CHECK(u1.valuation() == 3);
    CHECK(u1.coeff(3) == 1);
    CHECK(u1.coeff(4) == 1);
    CHECK(u1.coeff(5) == 2);
    CHECK(u1.coeff(6) == 1);
}

TEST_CASE("identity suite passes") {
    VerificationReport rep = verify_series_identities(60);
    CHECK(rep.checks.size() == 16);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("identity checks catch an injected fault") {
    long order = 20;
    IntSeries s1 = sk_series(1, order);
    IntSeries s2 = sk_series(2, order);
    IntSeries s3 = sk_series(3, order);
    CHECK(check_sk_recurrence(s1, s2, s3, 2).passed);

    IntSeries corrupted = s2 + IntSeries::monomial(1, 7, order);
    CheckResult res = check_sk_recurrence(s1, corrupted, s3, 2);
    CHECK_FALSE(res.passed);
    CHECK(res.detail.find("exponent 7") != std::string::npos);
}
