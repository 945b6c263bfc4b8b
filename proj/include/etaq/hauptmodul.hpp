#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/hecke.hpp"
#include "etaq/poly.hpp"
#include "etaq/qforms.hpp"
#include "etaq/series.hpp"

namespace etaq {

struct decompose_error : std::runtime_error {
    decompose_error(const std::string& msg, long exponent)
        : std::runtime_error(msg + " (first offending exponent q^" + std::to_string(exponent) + ")"),
          first_offending_exponent(exponent) {}
    long first_offending_exponent;
};

/// f = constant + sum_{j>=1} gamma[j] basis^j, proved by a residual that
/// vanishes identically on the window checked through `checked_order`.
struct Decomposition {
    Q constant;
    Poly gamma; // gamma[j] multiplies basis^j; gamma[0] is unused (zero)
    long checked_order = 0;

    Poly full() const {
        std::vector<Q> c;
        c.push_back(constant);
        for (long j = 1; j <= gamma.degree(); ++j) c.push_back(gamma[j]);
        return Poly(std::move(c));
    }
};

/// Triangular elimination against a basis of valuation +1 or -1 with
/// leading coefficient 1 (Phi_p, Phi_p^{-1}, or j).  The residual must
/// vanish on the provable window, which makes the decomposition a
/// proof-by-computation that f lies in the polynomial ring.
inline Decomposition decompose(const LaurentSeries& f, const LaurentSeries& basis,
                               long degree_bound) {
    long bval = basis.valuation();
    if ((bval != 1 && bval != -1) || basis.coeff(bval) != 1)
        throw std::invalid_argument(
            "decompose: basis must have valuation +1 or -1 with leading coefficient 1");
    if (degree_bound < 0) throw std::invalid_argument("decompose: negative degree bound");

    LaurentSeries residual = f;
    std::vector<Q> gamma(static_cast<std::size_t>(degree_bound + 1));
    if (bval == -1) {
        if (!f.is_zero() && f.valuation() < -degree_bound)
            throw decompose_error("not a polynomial in basis to given degree", f.valuation());
        for (long j = degree_bound; j >= 1; --j) {
            Q g = residual.coeff(-j);
            if (sgn(g) != 0) {
                gamma[static_cast<std::size_t>(j)] = g;
                residual = sub(residual, scale(g, pow(basis, j)));
            }
        }
    } else {
        if (!f.is_zero() && f.valuation() < 0)
            throw decompose_error("not a polynomial in basis to given degree", f.valuation());
        for (long j = 1; j <= degree_bound; ++j) {
            Q g = residual.coeff(j);
            if (sgn(g) != 0) {
                gamma[static_cast<std::size_t>(j)] = g;
                residual = sub(residual, scale(g, pow(basis, j)));
            }
        }
    }
    Decomposition out;
    out.gamma = Poly(std::move(gamma));
    out.constant = residual.is_zero() ? Q(0) : residual.coeff(0);
    residual = sub(residual, LaurentSeries::monomial(out.constant, 0, residual.order()));
    if (!residual.is_zero())
        throw decompose_error("not a polynomial in basis to given degree", residual.valuation());
    out.checked_order = residual.order();
    return out;
}

namespace detail {

inline std::vector<Poly> faber_family(long max_m, long N, bool with_euler_factor) {
    if (N < max_m) throw std::invalid_argument("faber family: N must be at least max_m");
    long M = N + 3;
    LaurentSeries e4 = eisenstein(Eisenstein::E4, M);
    LaurentSeries e6 = eisenstein(Eisenstein::E6, M);
    LaurentSeries num = div(mul(mul(e4, e4).truncated(M), e6).truncated(M), discriminant(M + 1));
    if (with_euler_factor) num = mul(num, euler_E(M)).truncated(num.order());
    PolySeries jmx = PolySeries::from(j_invariant(M));
    jmx.add_at(0, Q(-1) * Poly::x());
    PolySeries gen = PolySeries::from(num) * invert(jmx);
    std::vector<Poly> out;
    for (long m = 0; m <= max_m; ++m) out.push_back(gen.coeff(m));
    return out;
}

} // namespace detail

/// J_0..J_max_m from  sum J_m(x) q^m = (E_4^2 E_6 / Delta) / (j - x).
inline std::vector<Poly> faber_J(long max_m, long N) {
    return detail::faber_family(max_m, N, false);
}

/// A(0,x)..A(max_m,x) from the same generating function with an extra
/// (q)_inf factor.
inline std::vector<Poly> faber_A(long max_m, long N) {
    return detail::faber_family(max_m, N, true);
}

/// The Beneish-Larson polynomials: P_m(Phi_p^{-1}) = q^{-m} + O(q), from
///   sum P_m(x) q^m = dq(Phi_p^{-1}) / (x - Phi_p^{-1}).
inline std::vector<Poly> beneish_larson_P(long p, long max_m, long N) {
    if (N < max_m + 2) N = max_m + 2;
    LaurentSeries phi_inv = invert(hauptmodul_phi(p, N + 2));
    PolySeries xm = PolySeries::from(-phi_inv);
    xm.add_at(0, Poly::x());
    PolySeries gen = PolySeries::from(dq(phi_inv)) * invert(xm);
    std::vector<Poly> out;
    for (long m = 0; m <= max_m; ++m) out.push_back(gen.coeff(m));
    return out;
}

/// The polynomials attached to (r, s, p):
///   sum sB(m,x) q^m = (dq(Phi_p^{-1}) / phi*) / (x - Phi_p^{-1}).
inline std::vector<Poly> sB_poly(long r, long s, long p, long max_m, long N) {
    NewmanParams probe = derive_params(r, s, p, p == 5 ? 7 : 5);
    if (!probe.valid_onoanalog())
        throw std::domain_error("sB_poly: (r,s,p) outside the Faber-identity hypotheses");
    if (N < max_m + 2) N = max_m + 2;
    LaurentSeries phi_inv = invert(hauptmodul_phi(p, N + 2));
    LaurentSeries phistar = phi_series(probe, Side::starred, N + 2);
    PolySeries xm = PolySeries::from(-phi_inv);
    xm.add_at(0, Poly::x());
    PolySeries gen = PolySeries::from(div(dq(phi_inv), phistar)) * invert(xm);
    std::vector<Poly> out;
    for (long m = 0; m <= max_m; ++m) out.push_back(gen.coeff(m));
    return out;
}

/// G*(tau) = sB(-Delta*, Phi_p^{-1}) + (theta*/ell) ell^{1/2-eps} ((-Delta*)/ell),
/// checked coefficient-by-coefficient through order N.
inline bool verify_onoanalog(const NewmanParams& np, long N) {
    if (!np.valid_onoanalog())
        throw std::domain_error("verify_onoanalog: hypotheses violated");
    long m = -np.delta_star.get_si();
    std::vector<Poly> sB = sB_poly(np.r, np.s, np.p, m, std::max(m + 2, N));
    LaurentSeries phi_inv = invert(hauptmodul_phi(np.p, N + m + 4));
    LaurentSeries rhs = sB[static_cast<std::size_t>(m)].eval(phi_inv);
    Q cterm = Q(jacobi(np.theta_star, Z(np.ell))) *
              qpow(Q(np.ell), np.exp_half_minus_eps()) * Q(jacobi(Z(-np.delta_star), Z(np.ell)));
    rhs = add(rhs, LaurentSeries::monomial(cterm, 0, rhs.order())).truncated(N);
    LaurentSeries lhs = expand(np, Side::starred, N).quotient.truncated(N);
    return agree_on_window(lhs, rhs);
}

/// Decompose G in Phi_p and G* in Phi_p^{-1}; the constants must agree and
/// gamma_G(j) = p^{kj/2} gamma_{G*}(j) for every j.
inline bool verify_scaling(const NewmanParams& np, long N) {
    long d = -np.delta_star.get_si();
    if (d <= 0) throw std::domain_error("verify_scaling: needs Delta* < 0");
    long order = std::max(N, d + 8);
    LaurentSeries phi_p = hauptmodul_phi(np.p, order + d + 4);
    HeckeExpansion gstar = expand(np, Side::starred, order);
    HeckeExpansion g = expand(np, Side::plain, order);
    Decomposition dstar = decompose(gstar.quotient, invert(phi_p), d);
    Decomposition dplain = decompose(g.quotient, phi_p.truncated(order), d);
    if (dstar.constant != dplain.constant) return false;
    for (long j = 1; j <= d; ++j)
        if (dplain.gamma[j] != qpow(Q(np.p), np.k * j / 2) * dstar.gamma[j]) return false;
    return true;
}

/// Atkin's Z_ell: coefficient combination of the partition function whose
/// product with (q)_inf is a polynomial in j.
struct AtkinZ {
    LaurentSeries z_times_e; // Z_ell(tau) (q)_inf
    Decomposition in_j;
};

inline AtkinZ atkin_Z(long ell, long N) {
    if (ell <= 3 || !is_prime(static_cast<std::uint64_t>(ell)))
        throw std::domain_error("atkin_Z: ell must be a prime > 3");
    long s_ell = (ell * ell - 1) / 24;
    long ell2 = ell * ell;
    long p_order = std::max(N, N * ell2 - s_ell);
    LaurentSeries part = invert(euler_E(p_order)); // sum p(n) q^n
    auto pc = [&](long x) -> Q { return x < 0 ? Q(0) : part.coeff(x); };

    std::vector<Q> zc(static_cast<std::size_t>(N + s_ell + 1));
    for (long n = -s_ell; n <= N; ++n) {
        Q v = Q(ell) * Q(ell2) * pc(ell2 * n - s_ell);
        int sym = jacobi(12, ell) * jacobi(Z(1 - 24 * n), Z(ell));
        if (sym != 0) v += Q(sym * ell) * pc(n);
        if ((n + s_ell) % ell2 == 0) v += pc((n + s_ell) / ell2);
        zc[static_cast<std::size_t>(n + s_ell)] = v;
    }
    LaurentSeries z(-s_ell, std::move(zc), N);

    AtkinZ out{mul(z, euler_E(N + s_ell)).truncated(N), Decomposition{}};
    out.in_j = decompose(out.z_times_e, j_invariant(N), s_ell);
    return out;
}

} // namespace etaq
