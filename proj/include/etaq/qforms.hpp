#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// A formal product prod_m E(q^m)^{e_m} with E(q) = (q;q)_inf, stripped of
/// its fractional q-power.  Scales are distinct positive integers, exponents
/// nonzero.
struct ProductSpec {
    std::map<long, long> factors;

    /// The fractional weight (1/24) sum m e_m carried by the eta-quotient.
    Q weight() const {
        Q w(0);
        for (auto [m, e] : factors) {
            Q term(m * e, 24);
            term.canonicalize();
            w += term;
        }
        return w;
    }
};

/// Euler's product E(q) = prod (1-q^n) to order N, via the pentagonal
/// number expansion: E(q) = sum_k (-1)^k q^{k(3k-1)/2} over k in Z.
inline LaurentSeries euler_E(long N) {
    if (N < 0) throw std::invalid_argument("euler_E: N must be nonnegative");
    std::vector<Q> c(static_cast<std::size_t>(N + 1));
    c[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > N) break;
        long sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(g1)] = sign;
        if (g2 <= N) c[static_cast<std::size_t>(g2)] = sign;
    }
    return LaurentSeries(0, std::move(c), N);
}

/// E(q^m) to order N.
inline LaurentSeries euler_E_scaled(long m, long N) {
    return substitute_power(euler_E(N / m), m).truncated(N);
}

/// Exact expansion of prod_m E(q^m)^{e_m} to order N.  Positive exponents
/// multiply in the sparse Euler factors; negative exponents divide by them
/// through the sparse recurrence, one power at a time.
inline LaurentSeries eta_quotient(const ProductSpec& spec, long N) {
    if (N < 0) throw std::invalid_argument("eta_quotient: N must be nonnegative");
    LaurentSeries acc = LaurentSeries::one(N);
    for (auto [m, e] : spec.factors) {
        if (m <= 0) throw std::invalid_argument("eta_quotient: scales must be positive");
        if (e == 0) throw std::invalid_argument("eta_quotient: exponents must be nonzero");
        LaurentSeries em = euler_E_scaled(m, N);
        for (long i = 0; i < e; ++i) acc = mul(acc, em).truncated(N);
        for (long i = 0; i > e; --i) acc = div(acc, em).truncated(N);
    }
    return acc;
}

/// E(q^2)^3 / E(q)^2, the generating function of alpha(n).
inline LaurentSeries alpha_series(long N) { return eta_quotient({{{1, -2}, {2, 3}}}, N); }

/// E(q)^3 / E(q^2)^2, the crank parity generating function B(q).
inline LaurentSeries beta_series(long N) { return eta_quotient({{{1, 3}, {2, -2}}}, N); }

/// E(q^2) / E(q)^2, the overpartition generating function.
inline LaurentSeries overpartition_series(long N) { return eta_quotient({{{1, -2}, {2, 1}}}, N); }

/// E(q) / E(q^2)^2 = sum (-1)^n pod(n) q^n.
inline LaurentSeries pod_signed_series(long N) { return eta_quotient({{{1, 1}, {2, -2}}}, N); }

enum class Eisenstein { E2, E4, E6 };

/// Normalized Eisenstein series: E2 = 1 - 24 sum sigma(n) q^n,
/// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
inline LaurentSeries eisenstein(Eisenstein kind, long N) {
    if (N < 0) throw std::invalid_argument("eisenstein: N must be nonnegative");
    int power = kind == Eisenstein::E2 ? 1 : kind == Eisenstein::E4 ? 3 : 5;
    Z factor = kind == Eisenstein::E2 ? -24 : kind == Eisenstein::E4 ? 240 : -504;
    std::vector<Q> c(static_cast<std::size_t>(N + 1));
    c[0] = 1;
    std::vector<Z> sigma(static_cast<std::size_t>(N + 1));
    for (long d = 1; d <= N; ++d) {
        Z dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(power));
        for (long n = d; n <= N; n += d) sigma[static_cast<std::size_t>(n)] += dp;
    }
    for (long n = 1; n <= N; ++n) c[static_cast<std::size_t>(n)] = Q(factor * sigma[static_cast<std::size_t>(n)]);
    return LaurentSeries(0, std::move(c), N);
}

/// E_p^*(q) = (p E_2(q^p) - E_2(q)) / (p-1).
inline LaurentSeries e2_star(long p, long N) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("e2_star: p must be prime");
    LaurentSeries e2 = eisenstein(Eisenstein::E2, N);
    LaurentSeries e2p = substitute_power(eisenstein(Eisenstein::E2, N / p), p).truncated(N);
    return scale(Q(1, p - 1), sub(scale(Q(p), e2p), e2).truncated(N));
}

/// Delta(z) = q E(q)^24.
inline LaurentSeries discriminant(long N) {
    if (N < 1) throw std::invalid_argument("discriminant: N must be positive");
    return pow(euler_E(N - 1), 24).truncated(N - 1).shifted(1);
}

/// Klein's j = E_4^3 / Delta, valuation -1 with leading coefficient 1.
inline LaurentSeries j_invariant(long N) {
    if (N < 1) throw std::invalid_argument("j_invariant: N must be positive");
    LaurentSeries e4 = eisenstein(Eisenstein::E4, N + 2);
    return div(pow(e4, 3).truncated(N + 2), discriminant(N + 3)).truncated(N);
}

/// The Hauptmodul Phi_p = q (E(q^p)/E(q))^k for genus-zero p, k = 24/(p-1).
inline LaurentSeries hauptmodul_phi(long p, long N) {
    if (!is_genus_zero_prime(p))
        throw std::domain_error("not a genus-zero prime: p = " + std::to_string(p));
    long k = 24 / (p - 1);
    LaurentSeries ratio = div(euler_E_scaled(p, N), euler_E(N)).truncated(N);
    return pow(ratio, k).truncated(N - 1).shifted(1);
}

/// E(q)^5 / E(q^2)^2 = sum over odd n > 0 of (n/3) n q^{(n^2-1)/24}.
inline LaurentSeries kohler_series(long N) {
    if (N < 0) throw std::invalid_argument("kohler_series: N must be nonnegative");
    std::vector<Q> c(static_cast<std::size_t>(N + 1));
    for (long n = 1;; n += 2) {
        long e = (n * n - 1) / 24;
        if (e > N) break;
        c[static_cast<std::size_t>(e)] += Q(jacobi(n, 3) * n);
    }
    return LaurentSeries(0, std::move(c), N);
}

/// theta_4(0,q) = sum_{n in Z} (-1)^n q^{n^2}.
inline LaurentSeries theta4_series(long N) {
    std::vector<Q> c(static_cast<std::size_t>(N + 1));
    c[0] = 1;
    for (long n = 1; n * n <= N; ++n)
        c[static_cast<std::size_t>(n * n)] = (n % 2 == 0) ? 2 : -2;
    return LaurentSeries(0, std::move(c), N);
}

/// (1/2) q^{-1/4} theta_2(0,q) = sum_{n >= 0} q^{n(n+1)}.
inline LaurentSeries theta2_half_series(long N) {
    std::vector<Q> c(static_cast<std::size_t>(N + 1));
    for (long n = 0; n * (n + 1) <= N; ++n)
        c[static_cast<std::size_t>(n * (n + 1))] = 1;
    return LaurentSeries(0, std::move(c), N);
}

struct ThetaProductCheck {
    bool theta4_ok = false;
    bool theta2_ok = false;
    long theta4_first_fail = -1;
    long theta2_first_fail = -1;
};

/// Watson's two product-side identities:
///   theta_4(0,q) prod(1+q^n)^{-1}            = E(q)^3/E(q^2)^2
///   (1/2) q^{-1/4} theta_2(0,q) prod(1+q^2n) = E(q^4)^3/E(q^2)^2
/// using prod(1+q^n) = E(q^2)/E(q).
inline ThetaProductCheck theta_product_checks(long N) {
    ThetaProductCheck out;
    LaurentSeries plus1 = div(euler_E_scaled(2, N), euler_E(N)).truncated(N); // prod(1+q^n)
    LaurentSeries lhs1 = div(theta4_series(N), plus1).truncated(N);
    auto m1 = first_mismatch(lhs1, beta_series(N));
    out.theta4_ok = !m1.has_value();
    if (m1) out.theta4_first_fail = *m1;

    LaurentSeries plus2 = div(euler_E_scaled(4, N), euler_E_scaled(2, N)).truncated(N);
    LaurentSeries lhs2 = mul(theta2_half_series(N), plus2).truncated(N);
    LaurentSeries rhs2 = eta_quotient({{{2, -2}, {4, 3}}}, N);
    auto m2 = first_mismatch(lhs2, rhs2);
    out.theta2_ok = !m2.has_value();
    if (m2) out.theta2_first_fail = *m2;
    return out;
}

} // namespace etaq
