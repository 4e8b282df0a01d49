#pragma once

#include <optional>
#include <string_view>

#include "legendre/curves.hpp"

namespace legendre {

/// (X, Y) -> (u^2 X + r, u^3 Y + u^2 s X + t), u != 0.
struct TransformParams {
    FieldElement u, r, s, t;

    /// r = s = t = 0 in the field of u. Throws std::invalid_argument if u = 0.
    static TransformParams scaling(FieldElement u, FieldElement r);
};

/// Which root-set equality of the two-parameter criterion matched:
///   identity  {a/u^2, b/u^2}            (shift r = 0)
///   negated   {-a/u^2, (b - a)/u^2}     (shift r = a)
///   swapped   {(a - b)/u^2, -b/u^2}     (shift r = b)
enum class RootSetCase { identity, negated, swapped };

std::string_view to_string(RootSetCase c);

struct IsoWitness {
    bool isomorphic = false;
    std::optional<TransformParams> params;
    std::optional<RootSetCase> matched_case;

    static IsoWitness none() { return {}; }
};

/// Coefficients of the image curve under T. Throws std::invalid_argument
/// when u = 0.
WeierstrassCurve apply_transform(const WeierstrassCurve& W, const TransformParams& T);

/// Exhaustive search over u in F_q^* (ascending) of the short-form system
///   u^2 a2' = a2 + 3r,  u^4 a4' = a4 + 2r a2 + 3r^2,  u^6 a6' = a6 + r a4 + r^2 a2 + r^3.
/// For fixed u the first equation has exactly one solution r, so the first
/// hit equals the first hit of the (u, r) double loop. Both curves must be
/// short (a1 = a3 = 0) and over the same field.
IsoWitness simplified_iso_witness(const WeierstrassCurve& source, const WeierstrassCurve& target);
/// Adds the root-set tag derived from the witness shift r.
IsoWitness simplified_iso_witness(const TwoParamCurve& source, const TwoParamCurve& target);
IsoWitness simplified_iso_witness(const LegendreCurve& source, const LegendreCurve& target);

/// The literal (u, r) double loop over F_q^* x F_q. Quadratic per pair;
/// kept for cross-checking simplified_iso_witness on small fields.
IsoWitness simplified_iso_witness_full_scan(const WeierstrassCurve& source, const WeierstrassCurve& target);

/// Same search with r restricted to the three roots {0, a, b} of the source.
IsoWitness restricted_shift_witness(const TwoParamCurve& source, const TwoParamCurve& target);

/// Root-set criterion for y^2 = x(x-a)(x-b) vs y^2 = x(x-d)(x-e): isomorphic
/// iff {d, e} equals {a, b}/u^2, {-a, b-a}/u^2 or {a-b, -b}/u^2 for some
/// u in F_q^*.
IsoWitness lemma31_iso(const TwoParamCurve& source, const TwoParamCurve& target);

/// lemma31_iso with (a, b) = (1, lambda) and (d, e) = (1, mu).
IsoWitness corollary32_iso(const LegendreCurve& source, const LegendreCurve& target);

/// Orbit lookup: mu must be one of the six orbit expressions of lambda and
/// the matching u^2 entry (1, -1, l, -l, l - 1, 1 - l) must be a nonzero
/// square. Collapsed orbits OR over every expression equal to mu.
bool table1_fast_iso(const LegendreCurve& L, const FieldElement& mu);

}  // namespace legendre
