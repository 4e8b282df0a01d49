#include "legendre/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace legendre {

namespace {

void require_same_field(std::initializer_list<const FieldElement*> xs) {
    const FieldSpec* f = &(*xs.begin())->field();
    for (const FieldElement* x : xs)
        if (&x->field() != f)
            throw std::invalid_argument("curve coefficients belong to different fields");
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
                                   FieldElement a6)
    : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
    require_same_field({&a1_, &a2_, &a3_, &a4_, &a6_});
}

WeierstrassCurve WeierstrassCurve::elliptic(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
                                            FieldElement a6) {
    WeierstrassCurve W(a1, a2, a3, a4, a6);
    if (W.discriminant().is_zero())
        throw std::domain_error("curve is singular");
    return W;
}

BQuantities WeierstrassCurve::b_quantities() const {
    const FieldSpec& F = field();
    FieldElement two = F.from_integer(2), four = F.from_integer(4);
    return {
        a1_ * a1_ + four * a2_,
        two * a4_ + a1_ * a3_,
        a3_ * a3_ + four * a6_,
        a1_ * a1_ * a6_ - a1_ * a3_ * a4_ + four * a2_ * a6_ + a2_ * a3_ * a3_ - a4_ * a4_,
    };
}

FieldElement WeierstrassCurve::discriminant() const {
    const FieldSpec& F = field();
    auto [b2, b4, b6, b8] = b_quantities();
    return -(b2 * b2 * b8) - F.from_integer(8) * b4 * b4 * b4 - F.from_integer(27) * b6 * b6 +
           F.from_integer(9) * b2 * b4 * b6;
}

FieldElement WeierstrassCurve::j_invariant() const {
    FieldElement delta = discriminant();
    if (delta.is_zero())
        throw std::domain_error("j-invariant of a singular curve");
    auto [b2, b4, b6, b8] = b_quantities();
    FieldElement c4 = b2 * b2 - field().from_integer(24) * b4;
    return c4 * c4 * c4 / delta;
}

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& W) {
    return os << "[" << W.a1() << ", " << W.a2() << ", " << W.a3() << ", " << W.a4() << ", " << W.a6() << "]";
}

LegendreCurve::LegendreCurve(FieldElement lambda) : lambda_(lambda) {
    if (lambda_.is_zero() || lambda_.is_one())
        throw std::invalid_argument("Legendre parameter must not be 0 or 1");
}

TwoParamCurve::TwoParamCurve(FieldElement a, FieldElement b) : a_(a), b_(b) {
    require_same_field({&a_, &b_});
    if (a_.is_zero() || b_.is_zero() || a_ == b_)
        throw std::invalid_argument("two-parameter curve needs ab(a - b) != 0");
}

TwoParamCurve TwoParamCurve::from_legendre(const LegendreCurve& L) {
    return TwoParamCurve(L.field().one(), L.lambda());
}

BQuantities b_quantities(const WeierstrassCurve& W) { return W.b_quantities(); }
FieldElement discriminant(const WeierstrassCurve& W) { return W.discriminant(); }
FieldElement j_invariant(const WeierstrassCurve& W) { return W.j_invariant(); }

WeierstrassCurve to_weierstrass(const LegendreCurve& L) {
    return to_weierstrass(TwoParamCurve::from_legendre(L));
}

WeierstrassCurve to_weierstrass(const TwoParamCurve& C) {
    FieldElement zero = C.field().zero();
    return WeierstrassCurve(zero, -(C.a() + C.b()), zero, C.a() * C.b(), zero);
}

FieldElement j_legendre(const FieldElement& lambda) {
    const FieldSpec& F = lambda.field();
    FieldElement one = F.one();
    FieldElement num = lambda * lambda - lambda + one;
    FieldElement den = lambda * (lambda - one);
    return F.from_integer(256) * num * num * num / (den * den);
}

FieldElement j_legendre(const LegendreCurve& L) { return j_legendre(L.lambda()); }

std::vector<FieldElement> lambda_orbit(const LegendreCurve& L) {
    const FieldElement& l = L.lambda();
    FieldElement one = L.field().one();
    std::vector<FieldElement> orbit{
        l, one / l, one - l, one / (one - l), l / (l - one), (l - one) / l,
    };
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

std::vector<CurvePoint> two_torsion(const LegendreCurve& L) {
    const FieldSpec& F = L.field();
    return {
        std::nullopt,
        AffinePoint{F.zero(), F.zero()},
        AffinePoint{F.one(), F.zero()},
        AffinePoint{L.lambda(), F.zero()},
    };
}

}  // namespace legendre
