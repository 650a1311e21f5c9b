#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "heckelib/complex_torus.hpp"
#include "heckelib/errors.hpp"
#include "heckelib/harmonic_forms.hpp"

namespace hecke {

/// A Fourier harmonic e^{2 pi i phi_gamma} on Pic^0(X) with its solved form.
struct Harmonic {
    CohomologyClass gamma;
    HarmonicForm form;
};

inline Harmonic make_harmonic(const CohomologyClass& gamma,
                              const RiemannMatrix& lattice) {
    return Harmonic{gamma, solve_harmonic(gamma, lattice)};
}

/// e^{2 pi i (u.v + conj(u.v))}. In lattice coordinates v = s + Omega t this
/// is the pure Fourier mode e^{2 pi i (gamma_a . s + gamma_b . t)}, hence
/// invariant under lattice shifts of v.
inline cdouble harmonic_eval(const HarmonicForm& form, const Eigen::VectorXcd& v) {
    return unit_phase(aj_line_integral(form, v));
}

inline cdouble harmonic_eval(const HarmonicForm& form, const JacobianPoint& point) {
    return harmonic_eval(form, point.coords());
}

inline cdouble harmonic_eval(const Harmonic& h, const JacobianPoint& point) {
    return harmonic_eval(h.form, point.coords());
}

/// Hecke eigenvalue lambda^gamma_p = e^{2 pi i int_{p0}^p (w_g + conj(w_g))}.
struct EigenvalueRecord {
    CohomologyClass gamma;
    Eigen::VectorXcd p;
    cdouble value;
};

inline EigenvalueRecord hecke_eigenvalue(const CohomologyClass& gamma,
                                         const JacobianPoint& p,
                                         const RiemannMatrix& lattice) {
    HarmonicForm form = solve_harmonic(gamma, lattice);
    return EigenvalueRecord{gamma, p.coords(),
                            unit_phase(aj_line_integral(form, p))};
}

/// Discretized function on Pic^0(X), tabulated on the uniform N^{2g} grid in
/// the lattice coordinates (s, t) in [0,1)^{2g}. The grid is uniform in
/// (s, t), not in (x, y), so it is carried to itself by lattice shifts.
class GridFunction {
public:
    GridFunction(RiemannMatrix lattice, int resolution)
        : lattice_(std::move(lattice)), n_(resolution),
          dims_(2 * lattice_.genus()) {
        if (n_ < 2) throw resolution_too_low("grid resolution must be >= 2");
        std::size_t size = 1;
        for (int d = 0; d < dims_; ++d) size *= static_cast<std::size_t>(n_);
        values_.assign(size, cdouble(0.0, 0.0));
    }

    const RiemannMatrix& lattice() const { return lattice_; }
    int resolution() const { return n_; }
    int dims() const { return dims_; }
    std::size_t size() const { return values_.size(); }
    cdouble& operator[](std::size_t i) { return values_[i]; }
    const cdouble& operator[](std::size_t i) const { return values_[i]; }

    // (s, t) grid coordinates of the node with linear index i, row-major
    // over (s_1..s_g, t_1..t_g).
    Eigen::VectorXd node_coords(std::size_t i) const {
        Eigen::VectorXd c(dims_);
        for (int d = dims_ - 1; d >= 0; --d) {
            c[d] = static_cast<double>(i % n_) / n_;
            i /= n_;
        }
        return c;
    }

    Eigen::VectorXcd node_point(std::size_t i) const {
        Eigen::VectorXd c = node_coords(i);
        const int g = lattice_.genus();
        return lattice_.from_lattice_coords(c.head(g), c.tail(g));
    }

    template <class F>
    void fill(F&& f) {
        for (std::size_t i = 0; i < values_.size(); ++i)
            values_[i] = f(node_point(i));
    }

    // Multilinear interpolation on the (s, t) torus at coordinates c
    // (componentwise wrapped into [0, 1)).
    cdouble interpolate(const Eigen::VectorXd& c) const {
        const int d = dims_;
        std::vector<int> base(d);
        std::vector<double> w(d);
        for (int k = 0; k < d; ++k) {
            double x = frac01(c[k]) * n_;
            base[k] = static_cast<int>(std::floor(x)) % n_;
            w[k] = x - std::floor(x);
        }
        cdouble acc(0.0, 0.0);
        for (unsigned corner = 0; corner < (1u << d); ++corner) {
            double weight = 1.0;
            std::size_t idx = 0;
            for (int k = 0; k < d; ++k) {
                const bool hi = (corner >> k) & 1u;
                weight *= hi ? w[k] : (1.0 - w[k]);
                const int j = hi ? (base[k] + 1) % n_ : base[k];
                idx = idx * n_ + static_cast<std::size_t>(j);
            }
            if (weight != 0.0) acc += weight * values_[idx];
        }
        return acc;
    }

    GridFunction operator-(const GridFunction& o) const {
        if (n_ != o.n_ || dims_ != o.dims_)
            throw resolution_mismatch("grid resolutions differ");
        GridFunction r(*this);
        for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] -= o.values_[i];
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    RiemannMatrix lattice_;
    int n_;
    int dims_;
    std::vector<cdouble> values_;
};

inline GridFunction sample_harmonic(const Harmonic& h, const RiemannMatrix& lattice,
                                    int resolution) {
    GridFunction f(lattice, resolution);
    f.fill([&](const Eigen::VectorXcd& v) { return harmonic_eval(h.form, v); });
    return f;
}

/// (H_p f)(q) = f(q + p): pull-back of a tabulated function under the shift
/// by p, via multilinear interpolation on the (s, t) torus.
inline GridFunction hecke_apply(const GridFunction& f, const JacobianPoint& p) {
    GridFunction out(f.lattice(), f.resolution());
    Eigen::VectorXd shift(f.dims());
    const int g = f.lattice().genus();
    shift.head(g) = p.s();
    shift.tail(g) = p.t();
    for (std::size_t i = 0; i < out.size(); ++i) {
        Eigen::VectorXd c = out.node_coords(i) + shift;
        out[i] = f.interpolate(c);
    }
    return out;
}

/// Max over the N^{2g} grid of |f_gamma(q + p) - lambda^gamma_p f_gamma(q)|,
/// with f_gamma evaluated analytically (no interpolation error).
inline double verify_eigenfunction(const CohomologyClass& gamma,
                                   const JacobianPoint& p,
                                   const RiemannMatrix& lattice, int resolution) {
    if (resolution < 2) throw resolution_too_low("need N >= 2");
    const Harmonic h = make_harmonic(gamma, lattice);
    const cdouble lambda = unit_phase(aj_line_integral(h.form, p));
    const int g = lattice.genus();
    const int n = resolution;
    double max_res = 0.0;

    if (g == 1) {
        const cdouble u = h.form.u[0];
        const cdouble tau = lattice.tau();
        const double sp = p.s()[0], tp = p.t()[0];
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double s = static_cast<double>(j) / n;
                const double t = static_cast<double>(k) / n;
                const cdouble q = s + tau * t;
                const cdouble qp = frac01(s + sp) + tau * frac01(t + tp);
                const cdouble shifted = unit_phase(2.0 * (u * qp).real());
                const cdouble expected = lambda * unit_phase(2.0 * (u * q).real());
                max_res = std::max(max_res, std::abs(shifted - expected));
            }
        return max_res;
    }

    GridFunction grid(lattice, n); // node enumeration only
    Eigen::VectorXd shift(2 * g);
    shift.head(g) = p.s();
    shift.tail(g) = p.t();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Eigen::VectorXd c = grid.node_coords(i);
        Eigen::VectorXd cs = c + shift;
        for (int d = 0; d < 2 * g; ++d) cs[d] = frac01(cs[d]);
        const Eigen::VectorXcd q =
            lattice.from_lattice_coords(c.head(g), c.tail(g));
        const Eigen::VectorXcd qp =
            lattice.from_lattice_coords(cs.head(g), cs.tail(g));
        const cdouble shifted = harmonic_eval(h.form, qp);
        const cdouble expected = lambda * harmonic_eval(h.form, q);
        max_res = std::max(max_res, std::abs(shifted - expected));
    }
    return max_res;
}

/// Unique extension of an eigenfunction from Pic^0 to Pic^d:
/// f(L) = mu_{p0}^d f_0(L_0), with the reciprocal power for d < 0.
template <class F>
cdouble extend_to_pic(F&& f0, cdouble mu_p0, long d, const JacobianPoint& L0) {
    if (mu_p0 == cdouble(0.0, 0.0))
        throw zero_multiplier("mu_{p0} must be non-zero");
    cdouble base = d >= 0 ? mu_p0 : 1.0 / mu_p0;
    cdouble pw(1.0, 0.0);
    for (long i = 0; i < std::abs(d); ++i) pw *= base;
    return pw * f0(L0);
}

/// Two routes to the value of the descended symmetric-power function at
/// x_1 + ... + x_d: the harmonic at the sum of Abel-Jacobi coordinates, and
/// the product of the per-point eigenvalues (normalization c = 1 anchored at
/// the reference point).
struct SymmetricPowerEval {
    cdouble via_sum;
    cdouble via_product;
    double residual() const { return std::abs(via_sum - via_product); }
};

inline SymmetricPowerEval symmetric_power_eval(const CohomologyClass& gamma,
                                               const std::vector<JacobianPoint>& points,
                                               const RiemannMatrix& lattice) {
    const HarmonicForm form = solve_harmonic(gamma, lattice);
    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(lattice.genus());
    cdouble prod(1.0, 0.0);
    for (const auto& p : points) {
        sum += p.coords();
        prod *= unit_phase(aj_line_integral(form, p));
    }
    const JacobianPoint total = reduce_point(sum, lattice);
    return SymmetricPowerEval{harmonic_eval(form, total), prod};
}

namespace detail {

// (1/N) sum_{j<N} e^{2 pi i d j / N}; exactly delta_{d mod N, 0} below
// rounding since the grid integrates pure modes exactly.
inline cdouble mode_sum_1d(int d, int n) {
    cdouble acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) acc += unit_phase(static_cast<double>(d) * j / n);
    return acc / static_cast<double>(n);
}

} // namespace detail

/// Quadrature inner product <f_g1, f_g2> on the uniform (s, t) grid with
/// total mass 1. Full-grid summation; see orthogonality_check for the
/// factorized evaluation of the same sum.
inline cdouble orthogonality_check_direct(const CohomologyClass& g1,
                                          const CohomologyClass& g2,
                                          const RiemannMatrix& lattice, int n) {
    const int max_entry = std::max(
        std::max(g1.a_part.cwiseAbs().maxCoeff(), g1.b_part.cwiseAbs().maxCoeff()),
        std::max(g2.a_part.cwiseAbs().maxCoeff(), g2.b_part.cwiseAbs().maxCoeff()));
    if (n <= 2 * max_entry)
        throw resolution_too_low("grid resolution below Nyquist margin");
    const HarmonicForm f1 = solve_harmonic(g1, lattice);
    const HarmonicForm f2 = solve_harmonic(g2, lattice);
    GridFunction grid(lattice, n);
    cdouble acc(0.0, 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Eigen::VectorXcd v = grid.node_point(i);
        acc += harmonic_eval(f1, v) * std::conj(harmonic_eval(f2, v));
    }
    return acc / static_cast<double>(grid.size());
}

/// Same quadrature sum, factorized coordinate by coordinate: in (s, t)
/// coordinates the integrand is the pure mode with exponent
/// (g1 - g2)_a . s + (g1 - g2)_b . t, so the N^{2g} sum is a product of 2g
/// one-dimensional sums.
inline cdouble orthogonality_check(const CohomologyClass& g1,
                                   const CohomologyClass& g2,
                                   const RiemannMatrix& lattice, int n) {
    const int max_entry = std::max(
        std::max(g1.a_part.cwiseAbs().maxCoeff(), g1.b_part.cwiseAbs().maxCoeff()),
        std::max(g2.a_part.cwiseAbs().maxCoeff(), g2.b_part.cwiseAbs().maxCoeff()));
    if (n <= 2 * max_entry)
        throw resolution_too_low("grid resolution below Nyquist margin");
    cdouble acc(1.0, 0.0);
    const int g = lattice.genus();
    for (int i = 0; i < g; ++i)
        acc *= detail::mode_sum_1d(g1.a_part[i] - g2.a_part[i], n);
    for (int i = 0; i < g; ++i)
        acc *= detail::mode_sum_1d(g1.b_part[i] - g2.b_part[i], n);
    return acc;
}

} // namespace hecke
