#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "heckelib/complex_torus.hpp"
#include "heckelib/harmonic_forms.hpp"
#include "heckelib/hecke.hpp"

namespace hecke {

/// Flat unitary connection nabla_gamma = d - 2 pi i (w_gamma + conj(w_gamma))
/// on the trivial line bundle. The coefficient one-form is real-valued.
struct UnitaryFlatConnection {
    HarmonicForm form;
};

inline UnitaryFlatConnection connection_from_class(const CohomologyClass& gamma,
                                                   const RiemannMatrix& lattice) {
    return UnitaryFlatConnection{solve_harmonic(gamma, lattice)};
}

/// Straight segment in the universal cover C^g; a closed loop is encoded by
/// end - start lying in the lattice.
struct TorusPath {
    Eigen::VectorXcd start;
    Eigen::VectorXcd end;
};

/// Holonomy of nabla_gamma over the path: e^{2 pi i (u.D + conj(u.D))} with
/// D = end - start. Flatness makes the value depend only on the endpoints'
/// lift, so for a path from 0 to AJ(p) it equals the Hecke eigenvalue.
inline cdouble holonomy(const UnitaryFlatConnection& conn, const TorusPath& path) {
    return unit_phase(aj_line_integral(conn.form, Eigen::VectorXcd(path.end - path.start)));
}

/// Holonomies along the 2g lattice generator loops (the columns of I and of
/// Omega). Each equals e^{2 pi i . integer} = 1 by period integrality.
inline std::vector<cdouble> monodromy_generators(const UnitaryFlatConnection& conn,
                                                 const RiemannMatrix& lattice) {
    const int g = lattice.genus();
    std::vector<cdouble> out;
    out.reserve(2 * g);
    for (int k = 0; k < g; ++k) {
        Eigen::VectorXcd d = Eigen::VectorXcd::Zero(g);
        d[k] = 1.0;
        out.push_back(unit_phase(aj_line_integral(conn.form, d)));
    }
    for (int k = 0; k < g; ++k) {
        Eigen::VectorXcd d = lattice.omega().col(k);
        out.push_back(unit_phase(aj_line_integral(conn.form, d)));
    }
    return out;
}

/// GL1-oper: holomorphic connection nabla = d - lambda dz on the trivial
/// line bundle over E_tau; horizontal sections e^{lambda z}.
struct GL1Oper {
    cdouble lambda;
    cdouble tau;
};

/// Anti-holomorphic counterpart: nabla = d - mu d(conj z); horizontal
/// sections e^{mu conj(z)}.
struct AntiGL1Oper {
    cdouble mu;
    cdouble tau;
};

/// Monodromy multipliers along the lattice generators 1 and tau.
inline std::pair<cdouble, cdouble> oper_monodromy(const GL1Oper& oper) {
    return {std::exp(oper.lambda), std::exp(oper.lambda * oper.tau)};
}

inline std::pair<cdouble, cdouble> oper_monodromy(const AntiGL1Oper& oper) {
    return {std::exp(oper.mu), std::exp(oper.mu * std::conj(oper.tau))};
}

namespace detail {

// w is "real" when |Im w| <= tol * max(1, |w|); the multipliers can be
// exponentially small or large, so the test is relative.
inline bool is_real_nonzero(cdouble w, double tol = kInvariantTol) {
    const double mag = std::abs(w);
    return mag > 0.0 && std::abs(w.imag()) <= tol * std::max(1.0, mag);
}

} // namespace detail

/// True iff both monodromy multipliers lie in the split real form
/// R^x of C^x. For tau = i this holds iff lambda = pi(n + i m), m, n in Z.
inline bool split_real_predicate(const GL1Oper& oper) {
    auto [m1, m2] = oper_monodromy(oper);
    return detail::is_real_nonzero(m1) && detail::is_real_nonzero(m2);
}

inline bool split_real_predicate(const AntiGL1Oper& oper) {
    auto [m1, m2] = oper_monodromy(oper);
    return detail::is_real_nonzero(m1) && detail::is_real_nonzero(m2);
}

/// Analytic eigenvalues of d/dz and d/d(conj z) on the harmonic f^tau_{m,n},
/// obtained by rewriting it as e^{a z + b conj(z)}:
///   a = 2 pi i (m conj(tau) - n) / (conj(tau) - tau),
///   b = 2 pi i (n - m tau) / (conj(tau) - tau).
/// For tau = i these reduce to pi(n + i m) and -pi(n - i m).
inline std::pair<cdouble, cdouble> diffop_eigenvalues(long m, long n, cdouble tau) {
    const cdouble denom = std::conj(tau) - tau; // = -2i Im(tau)
    const cdouble i2pi(0.0, kTwoPi);
    const cdouble md(static_cast<double>(m), 0.0);
    const cdouble nd(static_cast<double>(n), 0.0);
    cdouble a = i2pi * (md * std::conj(tau) - nd) / denom;
    cdouble b = i2pi * (nd - md * tau) / denom;
    return {a, b};
}

/// Central-difference validation of diffop_eigenvalues at 20 random points;
/// returns the max relative residual (second-order in h).
inline double finite_difference_check(long m, long n, cdouble tau, double h,
                                      std::uint64_t seed = 0) {
    auto [a, b] = diffop_eigenvalues(m, n, tau);
    auto f = [&](cdouble z) { return std::exp(a * z + b * std::conj(z)); };
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    double max_res = 0.0;
    for (int k = 0; k < 20; ++k) {
        const cdouble z = cdouble(uniform01(), 0.0) + tau * uniform01();
        const cdouble fx = (f(z + h) - f(z - h)) / (2.0 * h);
        const cdouble fy = (f(z + cdouble(0.0, h)) - f(z - cdouble(0.0, h))) / (2.0 * h);
        const cdouble dz = 0.5 * (fx - cdouble(0.0, 1.0) * fy);
        const cdouble dzbar = 0.5 * (fx + cdouble(0.0, 1.0) * fy);
        const cdouble ez = a * f(z), ezbar = b * f(z);
        max_res = std::max(max_res, std::abs(dz - ez) / std::max(1.0, std::abs(ez)));
        max_res = std::max(max_res,
                           std::abs(dzbar - ezbar) / std::max(1.0, std::abs(ezbar)));
    }
    return max_res;
}

/// Coefficient of the holomorphic connection d - 2 pi i w_gamma encoding the
/// eigenvalues of the holomorphic differential operators: 2 pi i u.
inline Eigen::VectorXcd torus_oper_from_class(const CohomologyClass& gamma,
                                              const RiemannMatrix& lattice) {
    HarmonicForm form = solve_harmonic(gamma, lattice);
    return cdouble(0.0, kTwoPi) * form.u;
}

} // namespace hecke
