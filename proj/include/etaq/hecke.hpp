#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/qforms.hpp"
#include "etaq/series.hpp"

namespace etaq {

enum class Side { plain, starred };

/// phi = E(q)^r E(q^p)^s, phi* = E(q)^s E(q^p)^r, to order N.
inline LaurentSeries phi_series(const NewmanParams& np, Side side, long N) {
    long e1 = side == Side::plain ? np.r : np.s;
    long ep = side == Side::plain ? np.s : np.r;
    return eta_quotient({{{1, e1}, {np.p, ep}}}, N);
}

/// The Newman combined coefficient
///   T(n) = ell^{2-2eps} c(n ell^2 + D) + (theta/ell) ell^{1/2-eps} ((n-D)/ell) c(n)
///          + c((n-D)/ell^2),
/// with D, theta, c taken from the requested side and the convention
/// c(x) = 0 for x negative or non-integral.
inline Q combined_coefficient(const NewmanParams& np, Side side, const LaurentSeries& phi, long n) {
    long d = side == Side::plain ? np.delta.get_si() : np.delta_star.get_si();
    const Q& theta = side == Side::plain ? np.theta : np.theta_star;
    Z ell(np.ell);
    long ell2 = np.ell * np.ell;

    auto c = [&](long x) -> Q { return x < phi.valuation() ? Q(0) : phi.coeff(x); };

    Q total = qpow(Q(np.ell), np.exp_two_minus_2eps()) * c(n * ell2 + d);
    Q cn = c(n);
    if (sgn(cn) != 0) {
        int sym = jacobi(theta, ell) * jacobi(Z(n - d), ell);
        if (sym != 0)
            total += Q(sym) * qpow(Q(np.ell), np.exp_half_minus_eps()) * cn;
    }
    if ((n - d) % ell2 == 0) total += c((n - d) / ell2);
    return total;
}

/// The combined series and its exact quotient by phi (the functions G, G*),
/// with the pole bounds of the transformation theory checked on the fly.
struct HeckeExpansion {
    NewmanParams params;
    Side side;
    LaurentSeries combined; // sum T(n) q^n
    LaurentSeries quotient; // combined / phi
    long predicted_pole_infinity = 0; // upper bound on the pole order at i*inf
    long predicted_pole_zero = 0;     // upper bound on the pole order at 0
};

inline HeckeExpansion expand(const NewmanParams& np, Side side, long N) {
    long d = side == Side::plain ? np.delta.get_si() : np.delta_star.get_si();
    long d_other = side == Side::plain ? np.delta_star.get_si() : np.delta.get_si();
    long ell2 = np.ell * np.ell;
    long start = std::min<long>(0, d);

    long phi_order = std::max(N, N * ell2 + d);
    LaurentSeries phi = phi_series(np, side, phi_order);

    std::vector<Q> t(static_cast<std::size_t>(N - start + 1));
    for (long n = start; n <= N; ++n)
        t[static_cast<std::size_t>(n - start)] = combined_coefficient(np, side, phi, n);
    LaurentSeries combined(start, std::move(t), N);

    HeckeExpansion he{np, side, combined, div(combined, phi.truncated(N)), 0, 0};
    he.predicted_pole_infinity = d >= 0 ? d / ell2 : -d;
    he.predicted_pole_zero = d_other >= 0 ? d_other / ell2 : -d_other;

    if (!he.quotient.is_zero()) {
        if (he.quotient.valuation() < -he.predicted_pole_infinity)
            throw std::logic_error("hecke: pole at i*inf exceeds the predicted bound");
        if (d < 0 &&
            (he.quotient.valuation() != d || he.quotient.coeff(d) != 1))
            throw std::logic_error("hecke: expected leading term q^Delta with coefficient 1");
    }
    return he;
}

} // namespace etaq
