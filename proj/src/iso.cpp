#include "legendre/iso.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace legendre {

namespace {

void require_short_pair(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    if (&a.field() != &b.field())
        throw std::invalid_argument("curves belong to different fields");
    if (!a.is_short() || !b.is_short())
        throw std::invalid_argument("short-form search needs a1 = a3 = 0");
}

bool short_system_holds(const WeierstrassCurve& src, const WeierstrassCurve& dst, const FieldElement& u2,
                        const FieldElement& r) {
    const FieldSpec& F = src.field();
    FieldElement u4 = u2 * u2;
    FieldElement u6 = u4 * u2;
    FieldElement r2 = r * r;
    if (u2 * dst.a2() != src.a2() + F.from_integer(3) * r)
        return false;
    if (u4 * dst.a4() != src.a4() + F.from_integer(2) * r * src.a2() + F.from_integer(3) * r2)
        return false;
    return u6 * dst.a6() == src.a6() + r * src.a4() + r2 * src.a2() + r2 * r;
}

std::optional<RootSetCase> case_from_shift(const TwoParamCurve& src, const FieldElement& r) {
    if (r.is_zero())
        return RootSetCase::identity;
    if (r == src.a())
        return RootSetCase::negated;
    if (r == src.b())
        return RootSetCase::swapped;
    return std::nullopt;
}

IsoWitness tagged(IsoWitness w, const TwoParamCurve& src) {
    if (w.isomorphic)
        w.matched_case = case_from_shift(src, w.params->r);
    return w;
}

}  // namespace

TransformParams TransformParams::scaling(FieldElement u, FieldElement r) {
    if (u.is_zero())
        throw std::invalid_argument("transform needs u != 0");
    FieldElement zero = u.field().zero();
    return {u, r, zero, zero};
}

std::string_view to_string(RootSetCase c) {
    switch (c) {
    case RootSetCase::identity:
        return "identity-set";
    case RootSetCase::negated:
        return "negated-set";
    case RootSetCase::swapped:
        return "swapped-set";
    }
    return "?";
}

WeierstrassCurve apply_transform(const WeierstrassCurve& W, const TransformParams& T) {
    const auto& [u, r, s, t] = T;
    if (u.is_zero())
        throw std::invalid_argument("transform needs u != 0");
    const FieldSpec& F = W.field();
    FieldElement two = F.from_integer(2), three = F.from_integer(3);
    FieldElement ui = u.inv();
    FieldElement ui2 = ui * ui;
    FieldElement ui3 = ui2 * ui;
    FieldElement ui4 = ui2 * ui2;
    FieldElement ui6 = ui4 * ui2;
    const FieldElement &a1 = W.a1(), &a2 = W.a2(), &a3 = W.a3(), &a4 = W.a4(), &a6 = W.a6();
    return WeierstrassCurve(
        (a1 + two * s) * ui,
        (a2 - s * a1 + three * r - s * s) * ui2,
        (a3 + r * a1 + two * t) * ui3,
        (a4 - s * a3 + two * r * a2 - (t + r * s) * a1 + three * r * r - two * s * t) * ui4,
        (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) * ui6);
}

IsoWitness simplified_iso_witness(const WeierstrassCurve& source, const WeierstrassCurve& target) {
    require_short_pair(source, target);
    const FieldSpec& F = source.field();
    FieldElement inv3 = F.from_integer(3).inv();
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        FieldElement u = F.element(v);
        FieldElement u2 = u * u;
        FieldElement r = (u2 * target.a2() - source.a2()) * inv3;
        if (short_system_holds(source, target, u2, r))
            return {true, TransformParams::scaling(u, r), std::nullopt};
    }
    return IsoWitness::none();
}

IsoWitness simplified_iso_witness(const TwoParamCurve& source, const TwoParamCurve& target) {
    return tagged(simplified_iso_witness(to_weierstrass(source), to_weierstrass(target)), source);
}

IsoWitness simplified_iso_witness(const LegendreCurve& source, const LegendreCurve& target) {
    return simplified_iso_witness(TwoParamCurve::from_legendre(source), TwoParamCurve::from_legendre(target));
}

IsoWitness simplified_iso_witness_full_scan(const WeierstrassCurve& source, const WeierstrassCurve& target) {
    require_short_pair(source, target);
    const FieldSpec& F = source.field();
    for (std::uint64_t uv = 1; uv < F.order(); ++uv) {
        FieldElement u = F.element(uv);
        FieldElement u2 = u * u;
        for (std::uint64_t rv = 0; rv < F.order(); ++rv) {
            FieldElement r = F.element(rv);
            if (short_system_holds(source, target, u2, r))
                return {true, TransformParams::scaling(u, r), std::nullopt};
        }
    }
    return IsoWitness::none();
}

IsoWitness restricted_shift_witness(const TwoParamCurve& source, const TwoParamCurve& target) {
    if (&source.field() != &target.field())
        throw std::invalid_argument("curves belong to different fields");
    const FieldSpec& F = source.field();
    WeierstrassCurve src = to_weierstrass(source), dst = to_weierstrass(target);
    const std::array<FieldElement, 3> shifts{F.zero(), source.a(), source.b()};
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        FieldElement u = F.element(v);
        FieldElement u2 = u * u;
        for (const FieldElement& r : shifts)
            if (short_system_holds(src, dst, u2, r))
                return tagged({true, TransformParams::scaling(u, r), std::nullopt}, source);
    }
    return IsoWitness::none();
}

IsoWitness lemma31_iso(const TwoParamCurve& source, const TwoParamCurve& target) {
    if (&source.field() != &target.field())
        throw std::invalid_argument("curves belong to different fields");
    const FieldElement &a = source.a(), &b = source.b();
    const FieldElement &d = target.a(), &e = target.b();

    struct Candidate {
        RootSetCase tag;
        FieldElement first, second, shift;
    };
    const std::array<Candidate, 3> candidates{{
        {RootSetCase::identity, a, b, a.field().zero()},
        {RootSetCase::negated, -a, b - a, a},
        {RootSetCase::swapped, a - b, -b, b},
    }};

    for (const Candidate& c : candidates) {
        // {d, e} = {A, B}/u^2 under either matching
        for (const auto& [x, y] : {std::pair{d, e}, std::pair{e, d}}) {
            FieldElement u2 = c.first / x;
            if (c.second != y * u2 || jacobi(u2) != 1)
                continue;
            return {true, TransformParams::scaling(*sqrt(u2), c.shift), c.tag};
        }
    }
    return IsoWitness::none();
}

IsoWitness corollary32_iso(const LegendreCurve& source, const LegendreCurve& target) {
    return lemma31_iso(TwoParamCurve::from_legendre(source), TwoParamCurve::from_legendre(target));
}

bool table1_fast_iso(const LegendreCurve& L, const FieldElement& mu) {
    const FieldElement& l = L.lambda();
    if (&mu.field() != &l.field())
        throw std::invalid_argument("curves belong to different fields");
    FieldElement one = L.field().one();
    // (orbit expression, required u^2)
    const std::array<std::pair<FieldElement, FieldElement>, 6> rows{{
        {l, one},
        {one - l, -one},
        {one / l, l},
        {(l - one) / l, -l},
        {one / (one - l), l - one},
        {l / (l - one), one - l},
    }};
    // mu outside the orbit matches no row
    for (const auto& [expr, u2] : rows)
        if (expr == mu && jacobi(u2) == 1)
            return true;
    return false;
}

}  // namespace legendre
