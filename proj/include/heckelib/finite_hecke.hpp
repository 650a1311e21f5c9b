#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "heckelib/errors.hpp"

namespace hecke::fq {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Prime field F_q; primality checked by trial division at construction.
struct PrimeField {
    long long q;
};

inline PrimeField make_prime_field(long long q) {
    if (q < 2) throw not_prime(std::to_string(q) + " is not prime");
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) throw not_prime(std::to_string(q) + " is not prime");
    return PrimeField{q};
}

/// Homogeneous coordinates of a point of P^1(F_q).
struct P1Point {
    long long x0, x1;
};

/// Canonical enumeration of the q+1 points: [1:0], then [x:1] for x in F_q.
inline std::vector<P1Point> p1_points(const PrimeField& field) {
    std::vector<P1Point> pts;
    pts.reserve(static_cast<std::size_t>(field.q) + 1);
    pts.push_back({1, 0});
    for (long long x = 0; x < field.q; ++x) pts.push_back({x, 1});
    return pts;
}

/// Element a c_1 + b c_s of the Hecke algebra H_q(SL_2) in the basis of
/// Bruhat-cell characteristic functions.
struct HeckeAlgebraElement {
    long long a; // coefficient of c_1
    long long b; // coefficient of c_s

    bool operator==(const HeckeAlgebraElement&) const = default;
};

/// G(F_q)-invariant integer kernel on P^1(F_q) x P^1(F_q): constant on the
/// diagonal and constant off it (the two SL_2 Bruhat orbits).
class HeckeKernel {
public:
    HeckeKernel(PrimeField field, IntMatrix values)
        : field_(field), values_(std::move(values)) {
        const long long n = field_.q + 1;
        if (values_.rows() != n || values_.cols() != n)
            throw field_mismatch("kernel size does not match q + 1");
        check_invariance();
    }

    static HeckeKernel from_element(const HeckeAlgebraElement& e, PrimeField field) {
        const long long n = field.q + 1;
        IntMatrix m = IntMatrix::Constant(n, n, e.b);
        m.diagonal().setConstant(e.a);
        return HeckeKernel(field, std::move(m));
    }

    static HeckeKernel c1(PrimeField field) { return from_element({1, 0}, field); }
    static HeckeKernel cs(PrimeField field) { return from_element({0, 1}, field); }

    const PrimeField& field() const { return field_; }
    const IntMatrix& values() const { return values_; }

    HeckeAlgebraElement decompose() const {
        return HeckeAlgebraElement{values_(0, 0), values_(0, 1)};
    }

    bool operator==(const HeckeKernel& o) const {
        return field_.q == o.field_.q && values_ == o.values_;
    }

private:
    void check_invariance() const {
        const long long diag = values_(0, 0);
        const long long off = values_.rows() > 1 ? values_(0, 1) : 0;
        for (Eigen::Index i = 0; i < values_.rows(); ++i)
            for (Eigen::Index j = 0; j < values_.cols(); ++j) {
                const long long want = (i == j) ? diag : off;
                if (values_(i, j) != want)
                    throw field_mismatch("kernel is not orbit-constant");
            }
    }

    PrimeField field_;
    IntMatrix values_;
};

/// Convolution (f1 * f2)(x, y) = sum_{z in P^1(F_q)} f1(x, z) f2(z, y) with
/// counting-measure weight 1 per point; exact integer arithmetic.
inline HeckeKernel convolve(const HeckeKernel& f1, const HeckeKernel& f2) {
    if (f1.field().q != f2.field().q)
        throw field_mismatch("kernels live over different fields");
    IntMatrix prod = f1.values() * f2.values();
    return HeckeKernel(f1.field(), std::move(prod));
}

/// Exact verification of the H_q(SL_2) relations plus unit and
/// associativity laws on the {c_1, c_s} span.
struct HeckeRelationReport {
    long long q;
    bool c1_idempotent;     // c_1 * c_1 = c_1
    bool c1_unit;           // c_1 * x = x * c_1 = x for x in {c_1, c_s}
    bool cs_square;         // c_s * c_s = q c_1 + (q - 1) c_s
    bool associative;       // all triples from {c_1, c_s}
    bool all_pass() const {
        return c1_idempotent && c1_unit && cs_square && associative;
    }
};

inline HeckeRelationReport verify_hecke_relations(long long q) {
    const PrimeField field = make_prime_field(q);
    const HeckeKernel c1 = HeckeKernel::c1(field);
    const HeckeKernel cs = HeckeKernel::cs(field);

    HeckeRelationReport r{};
    r.q = q;
    r.c1_idempotent = convolve(c1, c1) == c1;
    r.c1_unit = convolve(c1, cs) == cs && convolve(cs, c1) == cs;
    r.cs_square =
        convolve(cs, cs) == HeckeKernel::from_element({q, q - 1}, field);

    r.associative = true;
    const HeckeKernel basis[2] = {c1, cs};
    for (const auto& x : basis)
        for (const auto& y : basis)
            for (const auto& z : basis)
                if (!(convolve(convolve(x, y), z) == convolve(x, convolve(y, z))))
                    r.associative = false;
    return r;
}

} // namespace hecke::fq
