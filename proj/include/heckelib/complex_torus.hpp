#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <utility>

#include "heckelib/errors.hpp"

namespace hecke {

using cdouble = std::complex<double>;

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Default tolerances: symmetry of the period matrix, invariant checks of the
// harmonic solve, and cross-checks against closed forms.
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kInvariantTol = 1e-10;
inline constexpr double kClosedFormTol = 1e-12;

// e^{2 pi i t}
inline cdouble unit_phase(double t) { return std::polar(1.0, kTwoPi * t); }

// Fractional part in [0, 1).
inline double frac01(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;
    return f;
}

/// Period data of the complex torus C^g / (Z^g + Omega Z^g).
///
/// Omega must be symmetric with positive-definite imaginary part. For g = 1,
/// Omega = (tau) and the torus is the elliptic curve E_tau = C/(Z + Z tau).
class RiemannMatrix {
public:
    static RiemannMatrix validate(const Eigen::MatrixXcd& omega,
                                  double symmetry_tol = kSymmetryTol) {
        if (omega.rows() != omega.cols() || omega.rows() < 1)
            throw not_symmetric("period matrix must be square with g >= 1");
        const Eigen::Index g = omega.rows();
        double asym = 0.0;
        for (Eigen::Index i = 0; i < g; ++i)
            for (Eigen::Index j = 0; j < g; ++j)
                asym = std::max(asym, std::abs(omega(i, j) - omega(j, i)));
        if (asym > symmetry_tol)
            throw not_symmetric("period matrix is not symmetric, max|O_ij - O_ji| = " +
                                std::to_string(asym));
        Eigen::MatrixXd im = 0.5 * (omega.imag() + omega.imag().transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(im);
        if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
            throw imaginary_part_not_positive_definite(
                "Im Omega is not positive-definite");
        return RiemannMatrix(omega, im);
    }

    int genus() const { return static_cast<int>(omega_.rows()); }
    const Eigen::MatrixXcd& omega() const { return omega_; }

    // For g = 1: the modulus tau itself.
    cdouble tau() const { return omega_(0, 0); }

    // Lattice coordinates of v: v = s + Omega t with real s, t.
    std::pair<Eigen::VectorXd, Eigen::VectorXd>
    lattice_coords(const Eigen::VectorXcd& v) const {
        Eigen::VectorXd t = im_solver_.solve(v.imag());
        Eigen::VectorXd s = v.real() - omega_.real() * t;
        return {std::move(s), std::move(t)};
    }

    Eigen::VectorXcd from_lattice_coords(const Eigen::VectorXd& s,
                                         const Eigen::VectorXd& t) const {
        Eigen::VectorXcd v = s.cast<cdouble>();
        v += omega_ * t.cast<cdouble>();
        return v;
    }

private:
    RiemannMatrix(Eigen::MatrixXcd omega, const Eigen::MatrixXd& im)
        : omega_(std::move(omega)), im_solver_(im.ldlt()) {}

    Eigen::MatrixXcd omega_;
    Eigen::LDLT<Eigen::MatrixXd> im_solver_;
};

/// A point of Pic^0(X) as its canonical representative v = s + Omega t with
/// (s, t) in [0,1)^{2g}. Construct via reduce_point / aj_elliptic.
class JacobianPoint {
public:
    const Eigen::VectorXcd& coords() const { return v_; }
    const Eigen::VectorXd& s() const { return s_; }
    const Eigen::VectorXd& t() const { return t_; }

private:
    friend JacobianPoint reduce_point(const Eigen::VectorXcd&, const RiemannMatrix&);
    JacobianPoint(Eigen::VectorXcd v, Eigen::VectorXd s, Eigen::VectorXd t)
        : v_(std::move(v)), s_(std::move(s)), t_(std::move(t)) {}

    Eigen::VectorXcd v_;
    Eigen::VectorXd s_, t_;
};

/// Canonical representative of v modulo the lattice Z^g + Omega Z^g.
inline JacobianPoint reduce_point(const Eigen::VectorXcd& v,
                                  const RiemannMatrix& lattice) {
    auto [s, t] = lattice.lattice_coords(v);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        s[i] = frac01(s[i]);
        t[i] = frac01(t[i]);
    }
    Eigen::VectorXcd w = lattice.from_lattice_coords(s, t);
    return JacobianPoint(std::move(w), std::move(s), std::move(t));
}

inline JacobianPoint reduce_point(cdouble v, const RiemannMatrix& lattice) {
    Eigen::VectorXcd w(1);
    w[0] = v;
    return reduce_point(w, lattice);
}

/// Abel-Jacobi coordinate of a point p of E_tau relative to p0 = 0.
/// Under the identification E_tau ~ Pic^0(E_tau), p maps to O(p - p0).
inline JacobianPoint aj_elliptic(cdouble p, const RiemannMatrix& lattice) {
    if (lattice.genus() != 1)
        throw shape_mismatch("aj_elliptic requires genus 1");
    return reduce_point(p, lattice);
}

// Torus addition of canonical representatives.
inline JacobianPoint torus_add(const JacobianPoint& p, const JacobianPoint& q,
                               const RiemannMatrix& lattice) {
    return reduce_point(p.coords() + q.coords(), lattice);
}

inline JacobianPoint torus_negate(const JacobianPoint& p, const RiemannMatrix& lattice) {
    return reduce_point(-p.coords(), lattice);
}

} // namespace hecke
