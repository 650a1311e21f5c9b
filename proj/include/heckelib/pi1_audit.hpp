#pragma once

#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "heckelib/errors.hpp"

namespace hecke::pi1 {

/// Element of SL_2(Z); determinant checked at construction.
struct Sl2zMatrix {
    long long a11, a12, a21, a22;

    long long det() const { return a11 * a22 - a12 * a21; }
};

/// Reduced rational in Q/Z: num/den with 0 <= num < den, gcd(num, den) = 1.
struct RationalMod1 {
    long long num = 0;
    long long den = 1;

    bool operator==(const RationalMod1&) const = default;
    auto operator<=>(const RationalMod1&) const = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline RationalMod1 make_rational_mod1(long long num, long long den) {
    if (den == 0) throw zero_input("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const long long g = std::gcd(num, den);
    return RationalMod1{num / g, den / g};
}

/// The character A -> e^{2 pi i valueA}, B -> e^{2 pi i valueB} of
/// pi_1(E_tau, p0) = Z x Z, with finite image forced by rational values.
struct CharacterOnPi1 {
    RationalMod1 value_a;
    RationalMod1 value_b;

    bool operator==(const CharacterOnPi1&) const = default;
    auto operator<=>(const CharacterOnPi1&) const = default;

    bool is_trivial() const { return value_a.num == 0 && value_b.num == 0; }
};

/// Normal form (k, l) = k'(alpha, beta), k' > 0, gcd(alpha, beta) = +/-1,
/// with the sign convention: gcd(k, l) is l if k = 0, k if l = 0, and
/// gcd(|k|, |l|) times the product of the signs otherwise; k' = |gcd(k, l)|.
struct GcdNormalForm {
    long long k_prime;
    long long alpha;
    long long beta;
};

inline long long signed_gcd(long long k, long long l) {
    if (k == 0 && l == 0) throw zero_input("(0,0) has no normal form");
    if (k == 0) return l;
    if (l == 0) return k;
    const long long g = std::gcd(std::llabs(k), std::llabs(l));
    const long long sign = ((k > 0) == (l > 0)) ? 1 : -1;
    return sign * g;
}

inline GcdNormalForm gcd_normal_form(long long k, long long l) {
    const long long kp = std::llabs(signed_gcd(k, l));
    return GcdNormalForm{kp, k / kp, l / kp};
}

namespace detail {

// Bezout coefficients: a u + b v = gcd(|a|, |b|) >= 0.
inline void ext_gcd(long long a, long long b, long long& g, long long& u, long long& v) {
    if (b == 0) {
        g = std::llabs(a);
        u = a >= 0 ? 1 : -1;
        v = 0;
        return;
    }
    long long g1, u1, v1;
    ext_gcd(b, a % b, g1, u1, v1);
    g = g1;
    u = v1;
    v = u1 - (a / b) * v1;
}

} // namespace detail

/// Complete a coprime row (alpha, beta) to a matrix in SL_2(Z). The bottom
/// row is only defined up to (a21 + x alpha, a22 + x beta), x in Z; this
/// picks the representative with minimal non-negative a22.
inline Sl2zMatrix complete_to_sl2(long long alpha, long long beta) {
    long long g, u, v;
    detail::ext_gcd(alpha, beta, g, u, v);
    if (g != 1) throw not_coprime("(alpha, beta) not coprime");
    // alpha u + beta v = 1  =>  det(alpha, beta; -v, u) = 1.
    long long a21 = -v;
    long long a22 = u;
    if (beta != 0) {
        const long long m = std::llabs(beta);
        long long r = a22 % m;
        if (r < 0) r += m;
        const long long x = (r - a22) / beta; // a22 + x beta = r
        a22 = r;
        a21 += x * alpha;
    } else {
        // alpha = +/-1; a22 is forced, normalize a21 to 0.
        a21 = 0;
        a22 = alpha;
    }
    Sl2zMatrix m{alpha, beta, a21, a22};
    if (m.det() != 1) throw not_coprime("completion failed");
    return m;
}

/// The attempted Langlands character for (k, l) with completion parameter x:
/// A -> e^{2 pi i (delta + x beta)/k'}, B -> e^{-2 pi i (gamma + x alpha)/k'}.
inline CharacterOnPi1 langlands_character(long long k, long long l, long long x) {
    const GcdNormalForm nf = gcd_normal_form(k, l);
    const Sl2zMatrix m = complete_to_sl2(nf.alpha, nf.beta);
    return CharacterOnPi1{
        make_rational_mod1(m.a22 + x * nf.beta, nf.k_prime),
        make_rational_mod1(-(m.a21 + x * nf.alpha), nf.k_prime)};
}

/// Distinct characters across the completion family. Exactly one character
/// iff k' = 1: coincidence for all x would force k' to divide both alpha
/// and beta, contradicting their coprimality when k' > 1.
inline std::set<CharacterOnPi1> well_definedness_audit(long long k, long long l,
                                                       const std::vector<long long>& xs) {
    std::set<CharacterOnPi1> out;
    for (long long x : xs) out.insert(langlands_character(k, l, x));
    return out;
}

/// The repaired variant A -> e^{2 pi i alpha/k'}, B -> e^{2 pi i beta/k'}:
/// independent of the matrix completion, hence well-defined, with
/// (0, 0) -> (1, 1). Not a bijection Z x Z -> mu x mu.
inline CharacterOnPi1 fixed_variant_character(long long k, long long l) {
    if (k == 0 && l == 0) return CharacterOnPi1{{0, 1}, {0, 1}};
    const GcdNormalForm nf = gcd_normal_form(k, l);
    return CharacterOnPi1{make_rational_mod1(nf.alpha, nf.k_prime),
                          make_rational_mod1(nf.beta, nf.k_prime)};
}

/// All reduced elements of Q/Z with denominator <= max_den.
inline std::vector<RationalMod1> rationals_mod1_up_to(long long max_den) {
    std::vector<RationalMod1> out;
    out.push_back({0, 1});
    for (long long d = 2; d <= max_den; ++d)
        for (long long n = 1; n < d; ++n)
            if (std::gcd(n, d) == 1) out.push_back({n, d});
    return out;
}

/// Elements of (Q/Z)^2 with denominators <= max_den not hit by
/// fixed_variant_character on the box |k|, |l| <= bound.
inline std::vector<CharacterOnPi1> unreached_characters(long long bound,
                                                        long long max_den) {
    std::set<CharacterOnPi1> reached;
    for (long long k = -bound; k <= bound; ++k)
        for (long long l = -bound; l <= bound; ++l)
            reached.insert(fixed_variant_character(k, l));
    std::vector<CharacterOnPi1> missing;
    const auto values = rationals_mod1_up_to(max_den);
    for (const auto& va : values)
        for (const auto& vb : values) {
            const CharacterOnPi1 c{va, vb};
            if (!reached.count(c)) missing.push_back(c);
        }
    return missing;
}

} // namespace hecke::pi1
