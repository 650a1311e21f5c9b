#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "heckelib/complex_torus.hpp"
#include "heckelib/errors.hpp"

namespace hecke {

/// Isomorphism class of a rank-2 bundle on an elliptic curve, restricted to
/// the cases appearing in the Hecke-fiber catalog (Atiyah classification):
/// direct sums of line bundles, the self-extension F_2 of O, and its twists
/// F_2(x) (x) L.
struct BundleDescriptor {
    enum class Kind {
        decomposable,            // L_1 + L_2 with degrees d1, d2
        indecomposable_f2,       // F_2 (possibly twisted by a square root L_i)
        indecomposable_f2_twisted // F_2(x) (x) L, degree shifted
    };

    Kind kind = Kind::decomposable;
    long d1 = 0;
    long d2 = 0;
    bool distinct_line_bundles = false; // L_1 not isomorphic to L_2
    long degree_shift = 0;              // twist degree for F_2(x) (x) L
    std::string label;

    // Set by example2_cover: canonical (s, t) coordinates of the defining
    // degree-0 line bundle (the representative of the unordered pair
    // {L[a], L[a]^{-1}}), or the 2-torsion index for ramification fibers.
    double pt_s = 0.0;
    double pt_t = 0.0;
    int torsion_index = -1;

    static BundleDescriptor decomposable(long deg1, long deg2, bool distinct,
                                         std::string name) {
        BundleDescriptor d;
        d.kind = Kind::decomposable;
        d.d1 = deg1;
        d.d2 = deg2;
        d.distinct_line_bundles = distinct;
        d.label = std::move(name);
        return d;
    }

    static BundleDescriptor f2(std::string name = "F2") {
        BundleDescriptor d;
        d.kind = Kind::indecomposable_f2;
        d.label = std::move(name);
        return d;
    }

    static BundleDescriptor f2_twisted(long shift, std::string name) {
        BundleDescriptor d;
        d.kind = Kind::indecomposable_f2_twisted;
        d.degree_shift = shift;
        d.label = std::move(name);
        return d;
    }
};

/// Integer polynomial in q, low-degree coefficients first.
struct CountPoly {
    std::vector<long long> coeffs;

    long long eval(long long q) const {
        long long acc = 0, pw = 1;
        for (long long c : coeffs) {
            acc += c * pw;
            pw *= q;
        }
        return acc;
    }

    CountPoly& operator+=(const CountPoly& o) {
        if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
        for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }

    bool operator==(const CountPoly& o) const {
        const std::size_t n = std::max(coeffs.size(), o.coeffs.size());
        for (std::size_t i = 0; i < n; ++i) {
            const long long a = i < coeffs.size() ? coeffs[i] : 0;
            const long long b = i < o.coeffs.size() ? o.coeffs[i] : 0;
            if (a != b) return false;
        }
        return true;
    }
};

/// One stratum of the Hecke fiber P^1 over a rank-2 bundle: the target
/// isomorphism class and its F_q point count as a polynomial in q.
struct FiberStratumRecord {
    BundleDescriptor target;
    CountPoly count;
    std::string note;
};

/// Stratification of the Hecke fiber hl^{-1}(M) ~ P^1 for the catalog
/// cases. Stratum counts always sum to q + 1 as polynomials.
inline std::vector<FiberStratumRecord> fiber_catalog(const BundleDescriptor& m) {
    using Kind = BundleDescriptor::Kind;
    std::vector<FiberStratumRecord> strata;

    if (m.kind == Kind::decomposable && m.d1 > m.d2 + 1) {
        // M = L_1 + L_2, d1 > d2 + 1: an affine line of lower modifications
        // hitting the first summand, one point hitting the second.
        strata.push_back({BundleDescriptor::decomposable(m.d1 - 1, m.d2, true,
                                                         "L1(-x)+L2"),
                          CountPoly{{0, 1}}, "affine line"});
        strata.push_back({BundleDescriptor::decomposable(m.d1, m.d2 - 1, true,
                                                         "L1+L2(-x)"),
                          CountPoly{{1}}, "single point"});
        return strata;
    }

    if (m.kind == Kind::decomposable && m.d1 == 1 && m.d2 == 0 &&
        !m.distinct_line_bundles) {
        // M = O + O(x): two special points, the C^x complement is F_2.
        strata.push_back({BundleDescriptor::decomposable(0, 0, false, "O+O"),
                          CountPoly{{1}}, "single point"});
        strata.push_back({BundleDescriptor::decomposable(-1, 1, true, "O(-x)+O(x)"),
                          CountPoly{{1}}, "single point"});
        strata.push_back({BundleDescriptor::f2(), CountPoly{{-1, 1}},
                          "C^x worth of points, all isomorphic to F2"});
        return strata;
    }

    if (m.kind == Kind::decomposable && m.d1 == 0 && m.d2 == 0 &&
        m.distinct_line_bundles) {
        // M = L_1 + L_2, distinct degree-0 line bundles.
        strata.push_back({BundleDescriptor::decomposable(-1, 0, true, "L1(-x)+L2"),
                          CountPoly{{1}}, "single point"});
        strata.push_back({BundleDescriptor::decomposable(0, -1, true, "L1+L2(-x)"),
                          CountPoly{{1}}, "single point"});
        strata.push_back({BundleDescriptor::f2_twisted(-1, "F2(x)(x)L(-x)"),
                          CountPoly{{-1, 1}},
                          "C^x worth, L^2 = L1 (x) L2"});
        return strata;
    }

    if (m.kind == Kind::indecomposable_f2_twisted) {
        // M = F_2(x) (x) L: the fiber is the base of the two-sheeted cover
        // Pic^0 -> P^1 ramified at the four 2-torsion points. Generic points
        // give pairwise non-isomorphic decomposable bundles L[a]+L[a]^{-1}.
        // The split q+1 = (q-3) + 4 assumes all four ramification points are
        // F_q-rational; recorded as an assumption, not a theorem.
        strata.push_back(
            {BundleDescriptor::decomposable(0, 0, true, "L[a]+L[a]^-1"),
             CountPoly{{-3, 1}},
             "two-sheeted cover, continuum of non-isomorphic bundles"});
        for (int i = 1; i <= 4; ++i) {
            BundleDescriptor t = BundleDescriptor::f2("L" + std::to_string(i) + "(x)F2");
            t.torsion_index = i;
            strata.push_back({std::move(t), CountPoly{{1}},
                              "ramification point (2-torsion square root)"});
        }
        return strata;
    }

    throw unsupported_bundle_case("bundle '" + m.label + "' is not in the catalog");
}

/// Weighted Hecke sum over F_q: sum over strata of count(q) f(target).
template <class F>
auto fq_hecke_apply(F&& f, const BundleDescriptor& m, long long q) {
    auto strata = fiber_catalog(m);
    decltype(f(m) * 1LL) acc{};
    for (const auto& s : strata) acc += f(s.target) * s.count.eval(q);
    return acc;
}

/// Complex-side fiber label of the two-sheeted cover Pic^0(E) -> P^1 over
/// a point a: 2-torsion points are the four ramification points (square
/// roots of O), everything else maps to the unordered pair
/// {L[a], L[a]^{-1}}; the representative is canonicalized over a ~ -a.
inline BundleDescriptor example2_cover(const JacobianPoint& a,
                                       const RiemannMatrix& lattice,
                                       double tol = 1e-9) {
    if (lattice.genus() != 1)
        throw shape_mismatch("example2_cover requires genus 1");

    auto near_half_integer = [&](double x) {
        return std::abs(2.0 * x - std::round(2.0 * x)) <= tol;
    };
    const double s = a.s()[0];
    const double t = a.t()[0];
    if (near_half_integer(s) && near_half_integer(t)) {
        const int si = static_cast<int>(std::llround(2.0 * s)) % 2;
        const int ti = static_cast<int>(std::llround(2.0 * t)) % 2;
        const int idx = 1 + si + 2 * ti; // L_1 = O, then the three others
        BundleDescriptor d = BundleDescriptor::f2("L" + std::to_string(idx) + "(x)F2");
        d.torsion_index = idx;
        d.pt_s = si * 0.5;
        d.pt_t = ti * 0.5;
        return d;
    }

    // Canonical representative of {a, -a}: lexicographically smaller (s, t).
    const JacobianPoint neg = torus_negate(a, lattice);
    double cs = s, ct = t;
    const double ns = neg.s()[0], nt = neg.t()[0];
    const bool take_neg = (ns < cs - tol) || (std::abs(ns - cs) <= tol && nt < ct - tol);
    if (take_neg) {
        cs = ns;
        ct = nt;
    }
    BundleDescriptor d = BundleDescriptor::decomposable(0, 0, true, "L[a]+L[a]^-1");
    d.pt_s = cs;
    d.pt_t = ct;
    return d;
}

/// Equality of cover-fiber labels up to torus distance tol (used for the
/// evenness property of example2_cover).
inline bool same_cover_fiber(const BundleDescriptor& x, const BundleDescriptor& y,
                             double tol = 1e-9) {
    if (x.kind != y.kind) return false;
    if (x.kind == BundleDescriptor::Kind::indecomposable_f2)
        return x.torsion_index == y.torsion_index;
    auto circle_dist = [](double u, double v) {
        const double d = std::abs(u - v);
        return std::min(d, 1.0 - d);
    };
    return circle_dist(x.pt_s, y.pt_s) <= tol && circle_dist(x.pt_t, y.pt_t) <= tol;
}

} // namespace hecke
