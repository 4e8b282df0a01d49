#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "legendre/gf.hpp"

namespace legendre {

struct BQuantities {
    FieldElement b2, b4, b6, b8;
};

/// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6. Raw construction allows
/// singular coefficients; j_invariant() rejects them.
class WeierstrassCurve {
public:
    WeierstrassCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6);

    /// Same as the constructor but throws std::domain_error when the
    /// discriminant vanishes.
    static WeierstrassCurve elliptic(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
                                     FieldElement a6);

    const FieldSpec& field() const { return a1_.field(); }
    const FieldElement& a1() const { return a1_; }
    const FieldElement& a2() const { return a2_; }
    const FieldElement& a3() const { return a3_; }
    const FieldElement& a4() const { return a4_; }
    const FieldElement& a6() const { return a6_; }

    /// a1 = a3 = 0
    bool is_short() const { return a1_.is_zero() && a3_.is_zero(); }

    BQuantities b_quantities() const;
    FieldElement discriminant() const;
    /// Throws std::domain_error for a singular curve.
    FieldElement j_invariant() const;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

private:
    FieldElement a1_, a2_, a3_, a4_, a6_;
};

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& W);

/// y^2 = x(x - 1)(x - lambda), lambda not in {0, 1}.
class LegendreCurve {
public:
    /// Throws std::invalid_argument when lambda(lambda - 1) = 0.
    explicit LegendreCurve(FieldElement lambda);

    const FieldSpec& field() const { return lambda_.field(); }
    const FieldElement& lambda() const { return lambda_; }

    friend bool operator==(const LegendreCurve&, const LegendreCurve&) = default;

private:
    FieldElement lambda_;
};

/// y^2 = x(x - a)(x - b) with ab(a - b) != 0.
class TwoParamCurve {
public:
    /// Throws std::invalid_argument when ab(a - b) = 0 or the fields differ.
    TwoParamCurve(FieldElement a, FieldElement b);

    static TwoParamCurve from_legendre(const LegendreCurve& L);

    const FieldSpec& field() const { return a_.field(); }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }

    friend bool operator==(const TwoParamCurve&, const TwoParamCurve&) = default;

private:
    FieldElement a_, b_;
};

BQuantities b_quantities(const WeierstrassCurve& W);
FieldElement discriminant(const WeierstrassCurve& W);
FieldElement j_invariant(const WeierstrassCurve& W);

/// Expansion of x(x - 1)(x - lambda): a2 = -(1 + lambda), a4 = lambda.
WeierstrassCurve to_weierstrass(const LegendreCurve& L);
/// Expansion of x(x - a)(x - b): a2 = -(a + b), a4 = ab.
WeierstrassCurve to_weierstrass(const TwoParamCurve& C);

/// 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)
FieldElement j_legendre(const LegendreCurve& L);
/// Overload for a raw lambda; the caller guarantees lambda(lambda - 1) != 0.
FieldElement j_legendre(const FieldElement& lambda);

/// Distinct values of lambda, 1/lambda, 1 - lambda, 1/(1 - lambda),
/// lambda/(lambda - 1), (lambda - 1)/lambda in canonical order.
/// Size is 6, 3 (j = 1728) or 2 (j = 0).
std::vector<FieldElement> lambda_orbit(const LegendreCurve& L);

struct AffinePoint {
    FieldElement x, y;
};

/// nullopt is the point at infinity.
using CurvePoint = std::optional<AffinePoint>;

/// O, (0,0), (1,0), (lambda,0)
std::vector<CurvePoint> two_torsion(const LegendreCurve& L);

}  // namespace legendre
