#pragma once

#include <Eigen/Dense>

#include "heckelib/complex_torus.hpp"
#include "heckelib/errors.hpp"

namespace hecke {

/// An integral cohomology class gamma in H^1(X, Z) ~ Z^{2g}, stored in the
/// basis dual to a fixed symplectic cycle basis (a_i, b_i).
struct CohomologyClass {
    Eigen::VectorXi a_part;
    Eigen::VectorXi b_part;

    CohomologyClass() = default;
    CohomologyClass(Eigen::VectorXi a, Eigen::VectorXi b)
        : a_part(std::move(a)), b_part(std::move(b)) {}

    // g = 1 convenience: gamma = (m, n).
    CohomologyClass(int m, int n) : a_part(1), b_part(1) {
        a_part[0] = m;
        b_part[0] = n;
    }

    int genus() const { return static_cast<int>(a_part.size()); }
    bool is_zero() const { return a_part.isZero() && b_part.isZero(); }

    CohomologyClass operator+(const CohomologyClass& o) const {
        return {a_part + o.a_part, b_part + o.b_part};
    }
    bool operator==(const CohomologyClass& o) const {
        return a_part == o.a_part && b_part == o.b_part;
    }
};

/// The unique holomorphic one-form omega_gamma with
///   gamma = omega_gamma + conj(omega_gamma)
/// in H^1(X, R), expressed by its coefficient vector u in the normalized
/// basis of holomorphic one-forms (int_{a_i} w_j = delta_ij,
/// int_{b_i} w_j = Omega_ij). The defining equations are
///   u + conj(u) = gamma_a,   Omega u + conj(Omega u) = gamma_b.
struct HarmonicForm {
    CohomologyClass cls;
    Eigen::VectorXcd u;
};

/// Solve the 2g x 2g real linear system for u. With Im Omega > 0 the system
/// is always regular; singular_system signals numerical breakdown only.
inline HarmonicForm solve_harmonic(const CohomologyClass& gamma,
                                   const RiemannMatrix& lattice) {
    const int g = lattice.genus();
    if (gamma.genus() != g || gamma.b_part.size() != g)
        throw shape_mismatch("cohomology class does not match genus");

    // Unknowns (Re u, Im u):
    //   2 Re u                      = gamma_a
    //   2 Re(Omega) Re u - 2 Im(Omega) Im u = gamma_b
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * g, 2 * g);
    M.topLeftCorner(g, g) = 2.0 * Eigen::MatrixXd::Identity(g, g);
    M.bottomLeftCorner(g, g) = 2.0 * lattice.omega().real();
    M.bottomRightCorner(g, g) = -2.0 * lattice.omega().imag();

    Eigen::VectorXd rhs(2 * g);
    rhs.head(g) = gamma.a_part.cast<double>();
    rhs.tail(g) = gamma.b_part.cast<double>();

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    Eigen::VectorXd x = lu.solve(rhs);
    if (!x.allFinite())
        throw singular_system("harmonic solve produced non-finite coefficients");

    Eigen::VectorXcd u(g);
    for (int i = 0; i < g; ++i) u[i] = cdouble(x[i], x[g + i]);
    return HarmonicForm{gamma, std::move(u)};
}

/// Pairing of the harmonic representative omega_gamma + conj(omega_gamma)
/// with the cycle n_a . a + n_b . b. Equals n_a . gamma_a + n_b . gamma_b.
inline double period_pairing(const HarmonicForm& form,
                             const Eigen::VectorXi& cycle_a,
                             const Eigen::VectorXi& cycle_b,
                             const RiemannMatrix& lattice) {
    Eigen::VectorXd a_periods = 2.0 * form.u.real();
    Eigen::VectorXd b_periods = 2.0 * (lattice.omega() * form.u).real();
    return cycle_a.cast<double>().dot(a_periods) +
           cycle_b.cast<double>().dot(b_periods);
}

/// Line integral int_{p0}^{p} (omega_gamma + conj(omega_gamma)) along the
/// straight path in the universal cover whose Abel-Jacobi image is v:
/// u . v + conj(u . v) = 2 Re(u . v).
inline double aj_line_integral(const HarmonicForm& form, const Eigen::VectorXcd& v) {
    cdouble dot = form.u.transpose() * v;
    return 2.0 * dot.real();
}

inline double aj_line_integral(const HarmonicForm& form, const JacobianPoint& target) {
    return aj_line_integral(form, target.coords());
}

} // namespace hecke
