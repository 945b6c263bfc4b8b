#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "etaq/series.hpp"

namespace etaq {

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t res = 1;
        a %= n;
        while (e > 0) {
            if (e & 1) res = mulmod(res, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return res;
    };
    // This base set is deterministic below 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Jacobi symbol (a/n) for odd positive n, extended to negative a in the
/// usual Kronecker sense.
inline int jacobi(const Z& a, const Z& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::domain_error("jacobi: modulus must be odd and positive");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline int jacobi(long a, long n) { return jacobi(Z(a), Z(n)); }

/// Rational extension (u/v / n) = (u/n)(v/n), valid since (v/n)^2 = 1 when
/// gcd(v, n) = 1.  The denominator must stay coprime to n.
inline int jacobi(const Q& a, const Z& n) {
    int den = jacobi(Z(a.get_den()), n);
    if (den == 0)
        throw std::domain_error("jacobi: denominator of argument shares a factor with the modulus");
    return jacobi(Z(a.get_num()), n) * den;
}

inline constexpr long padic_infinity = std::numeric_limits<long>::max();

/// v_p(x) = v_p(num) - v_p(den); padic_infinity for x = 0.
inline long p_adic_valuation(const Q& x, const Z& p) {
    if (sgn(x) == 0) return padic_infinity;
    Z tmp;
    long vnum = static_cast<long>(mpz_remove(tmp.get_mpz_t(), Z(x.get_num()).get_mpz_t(), p.get_mpz_t()));
    long vden = static_cast<long>(mpz_remove(tmp.get_mpz_t(), Z(x.get_den()).get_mpz_t(), p.get_mpz_t()));
    return vnum - vden;
}

inline long two_adic_valuation(const Q& x) { return p_adic_valuation(x, Z(2)); }

/// base^e for integer e (negative allowed, base nonzero).
inline Q qpow(const Q& base, long e) {
    if (e == 0) return Q(1);
    if (e < 0) {
        if (sgn(base) == 0) throw std::domain_error("qpow: negative power of zero");
        return qpow(Q(1) / base, -e);
    }
    Q r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_genus_zero_prime(long p) {
    return p == 2 || p == 3 || p == 5 || p == 7 || p == 13;
}

/// All quantities derived from a triple (r, s, p) and auxiliary prime ell.
///
/// r + s is required odd, so 2 - 2*eps and 1/2 - eps are integers and the
/// ell-powers in the combined-coefficient formula are plain rationals.
struct NewmanParams {
    long r = 0, s = 0, p = 0, ell = 0;
    long k = 0;          // 24/(p-1)
    Q eps;               // (r+s)/2
    Q t, t_star;         // (r+sp)/24, (rp+s)/24
    Z delta, delta_star; // t(ell^2-1), t*(ell^2-1); validated integral
    Q theta, theta_star; // (-1)^{(1-(r+s))/2} 2 p^s resp. 2 p^r
    Q n_ell, s_ell, m_ell; // (ell^2-1)/6, /24, /8

    long exp_two_minus_2eps() const { return 2 - (r + s); }
    long exp_half_minus_eps() const { return (1 - (r + s)) / 2; }

    /// Hypotheses of the general multiplicative congruence (the boundary
    /// r + sp = 0 is admitted; the overpartition triple sits exactly there).
    bool valid_congruence() const {
        return s > 0 && r < 0 && ((r + s) % 2 != 0) && 0 <= r + s * p && r + s * p < 24 &&
               s + r * p < 0;
    }

    /// Stricter hypotheses of the Faber-polynomial identity for G* (again
    /// with the boundary r + sp = 0 admitted).
    bool valid_onoanalog() const {
        return valid_congruence() && s + r * p > -24;
    }
};

inline NewmanParams derive_params(long r, long s, long p, long ell) {
    if (!is_genus_zero_prime(p))
        throw std::domain_error("not a genus-zero prime: p = " + std::to_string(p));
    if (ell == p || ell < 3 || !is_prime(static_cast<std::uint64_t>(ell)))
        throw std::domain_error("ell must be an odd prime distinct from p");
    if ((r + s) % 2 == 0)
        throw std::domain_error("parity violation: r + s must be odd");

    NewmanParams np;
    np.r = r;
    np.s = s;
    np.p = p;
    np.ell = ell;
    np.k = 24 / (p - 1);
    np.eps = Q(r + s, 2);
    np.eps.canonicalize();
    np.t = Q(r + s * p, 24);
    np.t.canonicalize();
    np.t_star = Q(r * p + s, 24);
    np.t_star.canonicalize();

    Q ell2m1(ell * ell - 1);
    Q d = np.t * ell2m1;
    d.canonicalize();
    Q ds = np.t_star * ell2m1;
    ds.canonicalize();
    if (d.get_den() != 1 || ds.get_den() != 1)
        throw std::domain_error("non-integral Delta for ell = " + std::to_string(ell));
    np.delta = d.get_num();
    np.delta_star = ds.get_num();

    long sign = ((1 - (r + s)) / 2) % 2 == 0 ? 1 : -1;
    np.theta = Q(sign) * 2 * qpow(Q(p), s);
    np.theta_star = Q(sign) * 2 * qpow(Q(p), r);

    np.n_ell = ell2m1 / 6;
    np.s_ell = ell2m1 / 24;
    np.m_ell = ell2m1 / 8;
    return np;
}

} // namespace etaq
