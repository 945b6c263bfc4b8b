#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaq {

using Z = mpz_class;
using Q = mpq_class;

/// Requested coefficient lies beyond the truncation order of a series.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by a series that is zero to its truncation order.
struct non_invertible_error : std::domain_error {
    explicit non_invertible_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Truncated formal Laurent series in q with exact rational coefficients.
///
/// Coefficients are stored densely starting at valuation(); every exponent
/// n <= order() is known exactly (exponents below the valuation are exact
/// zeros), exponents above order() are unknown.  Arithmetic propagates the
/// tightest provable order and never reads past it.  Values are immutable
/// after construction.
class LaurentSeries {
public:
    LaurentSeries(long valuation, std::vector<Q> coeffs, long order)
        : val_(valuation), order_(order), c_(std::move(coeffs)) {
        if (static_cast<long>(c_.size()) != order_ - val_ + 1)
            throw std::invalid_argument("LaurentSeries: window/coefficient size mismatch");
        normalize();
    }

    static LaurentSeries zero(long order) { return LaurentSeries(order); }

    static LaurentSeries one(long order) { return monomial(1, 0, order); }

    static LaurentSeries monomial(Q coeff, long exponent, long order) {
        if (exponent > order)
            throw std::invalid_argument("LaurentSeries::monomial: exponent beyond order");
        std::vector<Q> c(static_cast<std::size_t>(order - exponent + 1));
        c[0] = std::move(coeff);
        return LaurentSeries(exponent, std::move(c), order);
    }

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    /// Exact coefficient of q^n.  Returns 0 below the valuation, throws
    /// past the truncation order.
    const Q& coeff(long n) const {
        if (n > order_)
            throw truncation_error("insufficient truncation: coefficient of q^" +
                                   std::to_string(n) + " requested, series known to order " +
                                   std::to_string(order_));
        if (n < val_) return zero_q();
        return c_[static_cast<std::size_t>(n - val_)];
    }

    /// Restrict the window to new_order <= order().
    LaurentSeries truncated(long new_order) const {
        if (new_order >= order_) return *this;
        LaurentSeries r(new_order);
        if (!c_.empty() && val_ <= new_order) {
            r.val_ = val_;
            r.c_.assign(c_.begin(), c_.begin() + (new_order - val_ + 1));
            r.normalize();
        }
        return r;
    }

    /// Multiply by q^k.
    LaurentSeries shifted(long k) const {
        LaurentSeries r(*this);
        r.val_ += k;
        r.order_ += k;
        return r;
    }

    friend LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
        long order = std::min(a.order_, b.order_);
        long val = std::min(a.val_, b.val_);
        if (val > order) return zero(order);
        std::vector<Q> c(static_cast<std::size_t>(order - val + 1));
        for (long n = std::max(val, a.val_); n <= std::min(order, a.order_); ++n)
            c[static_cast<std::size_t>(n - val)] += a.c_[static_cast<std::size_t>(n - a.val_)];
        for (long n = std::max(val, b.val_); n <= std::min(order, b.order_); ++n)
            c[static_cast<std::size_t>(n - val)] += b.c_[static_cast<std::size_t>(n - b.val_)];
        return LaurentSeries(val, std::move(c), order);
    }

    friend LaurentSeries neg(const LaurentSeries& a) {
        LaurentSeries r(a);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
        return add(a, neg(b));
    }

    /// Product with order min(Na + vb, Nb + va).  The operand with fewer
    /// nonzero coefficients drives the outer loop, so products against
    /// pentagonal-sparse Euler factors stay near O(N sqrt N).
    friend LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
        long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
        if (a.is_zero() || b.is_zero()) return zero(order);
        long val = a.val_ + b.val_;
        if (val > order) return zero(order);
        const LaurentSeries& outer = a.nonzero_count() <= b.nonzero_count() ? a : b;
        const LaurentSeries& inner = (&outer == &a) ? b : a;
        std::size_t size = static_cast<std::size_t>(order - val + 1);
        std::vector<Q> c(size);
        Q t;
        for (std::size_t i = 0; i < outer.c_.size() && i < size; ++i) {
            if (sgn(outer.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < inner.c_.size() && i + j < size; ++j) {
                if (sgn(inner.c_[j]) == 0) continue;
                mpq_mul(t.get_mpq_t(), outer.c_[i].get_mpq_t(), inner.c_[j].get_mpq_t());
                mpq_add(c[i + j].get_mpq_t(), c[i + j].get_mpq_t(), t.get_mpq_t());
            }
        }
        return LaurentSeries(val, std::move(c), order);
    }

    /// Exact quotient a/b via the forward recurrence against b's nonzero
    /// coefficients; requires b nonzero to its order.
    friend LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b) {
        if (b.is_zero())
            throw non_invertible_error("non-invertible series: divisor is zero to its order");
        if (a.is_zero()) return zero(a.order_ - b.val_);
        long terms = std::min(a.order_ - a.val_, b.order_ - b.val_) + 1;
        return quotient_core(&a, b, terms);
    }

    /// Multiplicative inverse; the numerator 1 is exact, so the window is
    /// limited only by b's own window.
    friend LaurentSeries invert(const LaurentSeries& b) {
        if (b.is_zero())
            throw non_invertible_error("non-invertible series: zero to its order");
        return quotient_core(nullptr, b, b.order_ - b.val_ + 1);
    }

    friend LaurentSeries pow(const LaurentSeries& a, long e) {
        if (e < 0) return pow(invert(a), -e);
        if (e == 0) return one(a.order_ - a.val_);
        LaurentSeries base = a;
        std::optional<LaurentSeries> acc;
        while (e > 0) {
            if (e & 1) acc = acc ? mul(*acc, base) : base;
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return *acc;
    }

    /// q -> q^m.  Exponents between m*order and m*(order+1) are known zeros,
    /// so the result order is m*order + m - 1.
    friend LaurentSeries substitute_power(const LaurentSeries& a, long m) {
        if (m < 1) throw std::invalid_argument("substitute_power: m must be positive");
        long order = m * a.order_ + m - 1;
        if (a.is_zero()) return zero(order);
        long val = m * a.val_;
        std::vector<Q> c(static_cast<std::size_t>(order - val + 1));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[m * i] = a.c_[i];
        return LaurentSeries(val, std::move(c), order);
    }

    /// The operator q d/dq: multiplies the coefficient of q^n by n.
    friend LaurentSeries dq(const LaurentSeries& a) {
        LaurentSeries r(a);
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] *= static_cast<long>(r.val_ + static_cast<long>(i));
        r.normalize();
        return r;
    }

    friend LaurentSeries scale(const Q& k, const LaurentSeries& a) {
        if (sgn(k) == 0) return zero(a.order_);
        LaurentSeries r(a);
        for (auto& x : r.c_) x *= k;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
    friend LaurentSeries operator-(const LaurentSeries& a) { return neg(a); }
    friend LaurentSeries operator*(const Q& k, const LaurentSeries& a) { return scale(k, a); }

    /// Coefficient-wise equality through min(order, other.order).
    friend bool agree_on_window(const LaurentSeries& a, const LaurentSeries& b) {
        return !first_mismatch(a, b).has_value();
    }

    /// First exponent <= min(orders) where the coefficients differ.
    friend std::optional<long> first_mismatch(const LaurentSeries& a, const LaurentSeries& b) {
        long order = std::min(a.order_, b.order_);
        for (long n = std::min(a.val_, b.val_); n <= order; ++n)
            if (a.coeff(n) != b.coeff(n)) return n;
        return std::nullopt;
    }

private:
    explicit LaurentSeries(long order) : val_(order + 1), order_(order) {}

    static const Q& zero_q() {
        static const Q z(0);
        return z;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& x : c_)
            if (sgn(x) != 0) ++n;
        return n;
    }

    // Canonical form: leading stored coefficient nonzero, or empty for zero.
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = order_ + 1;
        } else if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
    }

    // num == nullptr means numerator 1 (exact).
    static LaurentSeries quotient_core(const LaurentSeries* num, const LaurentSeries& b, long terms) {
        long num_val = num ? num->val_ : 0;
        long vg = num_val - b.val_;
        if (terms <= 0) return zero(vg + terms - 1);
        std::vector<std::size_t> bnz;
        for (std::size_t k = 1; k < b.c_.size(); ++k)
            if (sgn(b.c_[k]) != 0) bnz.push_back(k);
        const Q& b0 = b.c_[0];
        std::vector<Q> g(static_cast<std::size_t>(terms));
        Q t;
        for (long m = 0; m < terms; ++m) {
            Q acc = num ? num->coeff(num_val + m) : (m == 0 ? Q(1) : Q(0));
            for (std::size_t k : bnz) {
                if (static_cast<long>(k) > m) break;
                mpq_mul(t.get_mpq_t(), b.c_[k].get_mpq_t(),
                        g[static_cast<std::size_t>(m - static_cast<long>(k))].get_mpq_t());
                mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
            }
            g[static_cast<std::size_t>(m)] = acc / b0;
        }
        return LaurentSeries(vg, std::move(g), vg + terms - 1);
    }

    long val_;
    long order_;
    std::vector<Q> c_;
};

} // namespace etaq
