#pragma once

#include <vector>

#include "heckelib/complex_torus.hpp"
#include "heckelib/errors.hpp"
#include "heckelib/harmonic_forms.hpp"
#include "heckelib/hecke.hpp"

namespace hecke {

namespace detail {

// Fraction-free (Bareiss) integer determinant.
inline long long integer_determinant(Eigen::MatrixXi m) {
    const int n = static_cast<int>(m.rows());
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> a = m.cast<long long>();
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            a.row(k).swap(a.row(piv));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace detail

/// A split torus T given by its rank and the integer pairing
/// <chi_i, mu_j> between chosen bases of the character lattice and the
/// cocharacter lattice. Duality of the lattices makes the pairing unimodular.
struct TorusData {
    int rank;
    Eigen::MatrixXi pairing;
};

inline TorusData make_torus(const Eigen::MatrixXi& pairing) {
    if (pairing.rows() != pairing.cols() || pairing.rows() < 1)
        throw shape_mismatch("pairing matrix must be square of size rank");
    const long long det = detail::integer_determinant(pairing);
    if (det != 1 && det != -1)
        throw pairing_not_unimodular("pairing determinant must be +/-1, got " +
                                     std::to_string(det));
    return TorusData{static_cast<int>(pairing.rows()), pairing};
}

inline TorusData make_torus_gl1() {
    return make_torus(Eigen::MatrixXi::Identity(1, 1));
}

/// gamma in H^1(X, Lambda*(T)): one cohomology class per character basis
/// element.
struct TCohomologyClass {
    std::vector<CohomologyClass> components;
    int rank() const { return static_cast<int>(components.size()); }
};

/// A point of Bun^0_T(X) ~ Pic^0(X) tensor Lambda_*(T), one Jacobian point
/// per cocharacter basis element.
struct BunTPoint {
    std::vector<JacobianPoint> components;
    int rank() const { return static_cast<int>(components.size()); }
};

/// Fourier harmonic e^{2 pi i phi_gamma} on Bun^0_T(X):
/// phi_gamma(v) = sum_{i,j} <chi_i, mu_j> 2 Re(u_{gamma_i} . v_j).
inline cdouble t_harmonic_eval(const TCohomologyClass& gamma, const BunTPoint& point,
                               const TorusData& torus, const RiemannMatrix& lattice) {
    if (gamma.rank() != torus.rank || point.rank() != torus.rank)
        throw shape_mismatch("rank mismatch in t_harmonic_eval");
    double phase = 0.0;
    for (int i = 0; i < torus.rank; ++i) {
        const HarmonicForm form = solve_harmonic(gamma.components[i], lattice);
        for (int j = 0; j < torus.rank; ++j)
            phase += torus.pairing(i, j) *
                     aj_line_integral(form, point.components[j].coords());
    }
    return unit_phase(phase);
}

/// The shifted argument of _{p0}H^mu_p: component j moves by mu_j . AJ(p).
inline BunTPoint t_hecke_shift(const BunTPoint& point, const JacobianPoint& p,
                               const Eigen::VectorXi& mu_check,
                               const RiemannMatrix& lattice) {
    if (point.rank() != mu_check.size())
        throw shape_mismatch("rank mismatch in t_hecke_shift");
    BunTPoint out;
    out.components.reserve(point.components.size());
    for (int j = 0; j < point.rank(); ++j) {
        Eigen::VectorXcd v =
            point.components[j].coords() + static_cast<double>(mu_check[j]) * p.coords();
        out.components.push_back(reduce_point(v, lattice));
    }
    return out;
}

/// (_{p0}H^mu_p f)(P) = f(P shifted by mu . AJ(p)).
template <class F>
auto t_hecke_apply(F&& f, const BunTPoint& point, const JacobianPoint& p,
                   const Eigen::VectorXi& mu_check, const RiemannMatrix& lattice) {
    return f(t_hecke_shift(point, p, mu_check, lattice));
}

/// Eigenvalue of _{p0}H^mu_p on e^{2 pi i phi_gamma}: the value of the
/// character mu of the dual torus on e^{2 pi i int_{p0}^p (w_g + conj w_g)},
/// i.e. e^{2 pi i sum_{i,j} <chi_i, mu_j> mu_j-weighted line integrals}.
inline cdouble t_hecke_eigenvalue(const TCohomologyClass& gamma,
                                  const Eigen::VectorXi& mu_check,
                                  const JacobianPoint& p, const RiemannMatrix& lattice,
                                  const TorusData& torus) {
    if (gamma.rank() != torus.rank || mu_check.size() != torus.rank)
        throw shape_mismatch("rank mismatch in t_hecke_eigenvalue");
    double phase = 0.0;
    for (int i = 0; i < torus.rank; ++i) {
        const HarmonicForm form = solve_harmonic(gamma.components[i], lattice);
        const double integral = aj_line_integral(form, p);
        for (int j = 0; j < torus.rank; ++j)
            phase += torus.pairing(i, j) * mu_check[j] * integral;
    }
    return unit_phase(phase);
}

} // namespace hecke
