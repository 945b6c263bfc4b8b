#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/series.hpp"

namespace etaq {

/// Exact-rational univariate polynomial; coefficient i belongs to x^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(Q v) { return Poly({std::move(v)}); }
    static Poly x() { return Poly({Q(0), Q(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }

    const Q& operator[](long i) const {
        static const Q z(0);
        if (i < 0 || i >= static_cast<long>(c_.size())) return z;
        return c_[static_cast<std::size_t>(i)];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Q> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<long>(i)] + b[static_cast<long>(i)];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Q> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<long>(i)] - b[static_cast<long>(i)];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Q> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Q& k, const Poly& a) {
        std::vector<Q> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.c_[i];
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Q eval(const Q& x) const {
        Q r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Horner evaluation at a Laurent series.
    LaurentSeries eval(const LaurentSeries& s) const {
        LaurentSeries r = LaurentSeries::zero(s.order());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = add(mul(r, s), LaurentSeries::monomial(*it, 0, s.order()));
        return r;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const Q& a = (*this)[i];
            if (sgn(a) == 0) continue;
            Q mag = abs(a);
            if (first) {
                if (sgn(a) < 0) os << "-";
                first = false;
            } else {
                os << (sgn(a) < 0 ? " - " : " + ");
            }
            bool unit = (mag == 1);
            if (i == 0 || !unit) os << mag.get_str();
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Q> c_;
};

/// Truncated q-series whose coefficients are polynomials in a formal x.
/// Only what the Faber-family generating functions need: addition,
/// multiplication, and inversion when the leading coefficient is a nonzero
/// constant.
class PolySeries {
public:
    static PolySeries zero(long order) { return PolySeries(order); }

    static PolySeries from(const LaurentSeries& s) {
        PolySeries r(s.order());
        if (s.is_zero()) return r;
        r.val_ = s.valuation();
        r.c_.resize(static_cast<std::size_t>(s.order() - s.valuation() + 1));
        for (long n = s.valuation(); n <= s.order(); ++n)
            r.c_[static_cast<std::size_t>(n - s.valuation())] = Poly::constant(s.coeff(n));
        r.normalize();
        return r;
    }

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    Poly coeff(long n) const {
        if (n > order_)
            throw truncation_error("PolySeries: coefficient beyond truncation order");
        if (n < val_) return Poly();
        return c_[static_cast<std::size_t>(n - val_)];
    }

    /// Add p * q^exponent; the window must already cover the exponent.
    void add_at(long exponent, const Poly& p) {
        if (exponent > order_)
            throw std::invalid_argument("PolySeries::add_at: exponent beyond order");
        if (exponent < val_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(val_ - exponent), Poly());
            val_ = exponent;
        }
        c_[static_cast<std::size_t>(exponent - val_)] = c_[static_cast<std::size_t>(exponent - val_)] + p;
        normalize();
    }

    friend PolySeries operator-(const PolySeries& a) {
        PolySeries r(a);
        for (auto& p : r.c_) p = Q(-1) * p;
        return r;
    }

    friend PolySeries operator+(const PolySeries& a, const PolySeries& b) {
        long order = std::min(a.order_, b.order_);
        long val = std::min(a.val_, b.val_);
        if (val > order) return zero(order);
        PolySeries r(order);
        r.val_ = val;
        r.c_.resize(static_cast<std::size_t>(order - val + 1));
        for (long n = val; n <= order; ++n) r.c_[static_cast<std::size_t>(n - val)] = a.coeff(n) + b.coeff(n);
        r.normalize();
        return r;
    }

    friend PolySeries operator-(const PolySeries& a, const PolySeries& b) { return a + (-b); }

    friend PolySeries operator*(const PolySeries& a, const PolySeries& b) {
        long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
        if (a.is_zero() || b.is_zero()) return zero(order);
        long val = a.val_ + b.val_;
        if (val > order) return zero(order);
        PolySeries r(order);
        r.val_ = val;
        r.c_.resize(static_cast<std::size_t>(order - val + 1));
        for (std::size_t i = 0; i < a.c_.size() && i < r.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size() && i + j < r.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    friend PolySeries invert(const PolySeries& b) {
        if (b.is_zero())
            throw non_invertible_error("PolySeries: zero series is not invertible");
        if (b.c_.front().degree() != 0)
            throw non_invertible_error("PolySeries: leading coefficient must be a nonzero constant");
        Q u = b.c_.front()[0];
        long terms = b.order_ - b.val_ + 1;
        PolySeries r(b.order_ - 2 * b.val_);
        r.val_ = -b.val_;
        r.c_.resize(static_cast<std::size_t>(terms));
        for (long m = 0; m < terms; ++m) {
            Poly acc = m == 0 ? Poly::constant(1) : Poly();
            for (long k = 1; k <= m && k < static_cast<long>(b.c_.size()); ++k)
                acc = acc - b.c_[static_cast<std::size_t>(k)] * r.c_[static_cast<std::size_t>(m - k)];
            r.c_[static_cast<std::size_t>(m)] = Q(1) / u * acc;
        }
        return r;
    }

    friend bool operator==(const PolySeries& a, const PolySeries& b) {
        long order = std::min(a.order_, b.order_);
        for (long n = std::min(a.val_, b.val_); n <= order; ++n)
            if (!(a.coeff(n) == b.coeff(n))) return false;
        return true;
    }

private:
    explicit PolySeries(long order) : val_(order + 1), order_(order) {}

    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = order_ + 1;
        } else if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
    }

    long val_;
    long order_;
    std::vector<Poly> c_;
};

} // namespace etaq
