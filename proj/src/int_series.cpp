#include "pebbling/int_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pebbling {

const BigInt IntSeries::kZero = 0;

IntSeries::IntSeries(long valuation, std::vector<BigInt> coeffs, long order)
    : val_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < val_ - 1)
        throw std::invalid_argument("IntSeries: order below valuation");
    coeffs_.resize(static_cast<size_t>(order_ - val_ + 1));
}

IntSeries IntSeries::zero(long order) {
    if (order < 0) throw std::invalid_argument("IntSeries: negative order");
    return IntSeries(0, {}, order);
}

IntSeries IntSeries::one(long order) { return monomial(1, 0, order); }

IntSeries IntSeries::monomial(BigInt c, long exponent, long order) {
    if (exponent > order) return zero(order);
    IntSeries s(exponent, {}, order);
    s.coeffs_[0] = std::move(c);
    return s;
}

IntSeries IntSeries::poly(std::initializer_list<long> coeffs, long order) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    // coefficients above the order are simply not retained
    return IntSeries(0, std::move(c), order);
}

IntSeries IntSeries::geometric_inverse(long j, long order) {
    if (j < 1) throw std::invalid_argument("geometric_inverse: j >= 1 required");
    IntSeries s(0, {}, order);
    for (long e = 0; e <= order; e += j) s.coeffs_[static_cast<size_t>(e)] = 1;
    return s;
}

const BigInt& IntSeries::coeff(long n) const {
    if (n > order_)
        throw std::logic_error("IntSeries::coeff: exponent above tracked order");
    if (n < val_) return kZero;
    return coeffs_[static_cast<size_t>(n - val_)];
}

long IntSeries::first_nonzero() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return val_ + static_cast<long>(i);
    throw std::domain_error("IntSeries: series is zero to its tracked order");
}

bool IntSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c == 0; });
}

IntSeries IntSeries::truncated(long new_order) const {
    if (new_order >= order_) return *this;
    IntSeries s(val_, {}, new_order);
    for (long n = std::max(val_, s.val_); n <= new_order; ++n)
        s.coeffs_[static_cast<size_t>(n - s.val_)] = coeff(n);
    return s;
}

IntSeries IntSeries::normalized() const {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == 0 || lead == coeffs_.size()) return *this;
    IntSeries s(val_ + static_cast<long>(lead),
                std::vector<BigInt>(coeffs_.begin() + static_cast<long>(lead),
                                    coeffs_.end()),
                order_);
    return s;
}

IntSeries IntSeries::operator-() const {
    IntSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
    long order = std::min(a.order_, b.order_);
    long val = std::min(a.val_, b.val_);
    IntSeries s(val, {}, order);
    for (long n = val; n <= order; ++n)
        s.coeffs_[static_cast<size_t>(n - val)] = a.coeff(n) + b.coeff(n);
    return s;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) { return a + (-b); }

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    // the outer-loop zero skip saves a whole inner pass, so run it over
    // the sparser factor
    auto nonzeros = [](const IntSeries& s) {
        size_t n = 0;
        for (const auto& c : s.coeffs_) n += (c != 0);
        return n;
    };
    const IntSeries& lhs = nonzeros(a) <= nonzeros(b) ? a : b;
    const IntSeries& rhs = &lhs == &a ? b : a;

    long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
    long val = a.val_ + b.val_;
    IntSeries s(val, {}, order);
    for (long i = lhs.val_; i <= lhs.order_; ++i) {
        const BigInt& ca = lhs.coeffs_[static_cast<size_t>(i - lhs.val_)];
        if (ca == 0) continue;
        long jmax = std::min(rhs.order_, order - i);
        for (long j = rhs.val_; j <= jmax; ++j) {
            const BigInt& cb = rhs.coeffs_[static_cast<size_t>(j - rhs.val_)];
            if (cb == 0) continue;
            mpz_addmul(s.coeffs_[static_cast<size_t>(i + j - val)].get_mpz_t(),
                       ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    return s;
}

IntSeries shift(const IntSeries& s, long e) {
    std::vector<BigInt> c;
    c.reserve(static_cast<size_t>(s.order() - s.valuation() + 1));
    for (long n = s.valuation(); n <= s.order(); ++n) c.push_back(s.coeff(n));
    return IntSeries(s.valuation() + e, std::move(c), s.order() + e);
}

IntSeries invert(const IntSeries& s) {
    if (s.is_zero())
        throw std::domain_error("not invertible over integers");
    long v0 = s.first_nonzero();
    const BigInt& lead = s.coeff(v0);
    if (lead != 1 && lead != -1)
        throw std::domain_error("not invertible over integers");

    // Relative coefficients u_i = coeff(v0 + i); solve t with t*u = 1,
    // valid through relative index order - v0.
    long rel = s.order() - v0;
    std::vector<BigInt> t(static_cast<size_t>(rel + 1));
    t[0] = lead;  // 1/lead == lead for a unit
    for (long i = 1; i <= rel; ++i) {
        BigInt acc = 0;
        for (long j = 0; j < i; ++j) acc += t[static_cast<size_t>(j)] * s.coeff(v0 + i - j);
        t[static_cast<size_t>(i)] = -lead * acc;
    }
    return IntSeries(-v0, std::move(t), s.order() - 2 * v0);
}

std::optional<long> first_mismatch(const IntSeries& a, const IntSeries& b) {
    long order = std::min(a.order(), b.order());
    long lo = std::min(a.valuation(), b.valuation());
    for (long n = lo; n <= order; ++n)
        if (a.coeff(n) != b.coeff(n)) return n;
    return std::nullopt;
}

void IntSeries::dump(std::ostream& os) const {
    os << "valuation " << val_ << " / order " << order_ << '\n';
    for (long n = val_; n <= order_; ++n)
        os << n << ' ' << coeff(n).get_str() << '\n';
}

std::string IntSeries::to_debug_string() const {
    std::ostringstream os;
    dump(os);
    return os.str();
}

}  // namespace pebbling
