#include <gtest/gtest.h>

#include <set>

#include "legendre/gf.hpp"

namespace legendre {
namespace {

// Prime powers q <= limit with p > 3, as (p, k).
std::vector<std::pair<std::uint64_t, unsigned>> small_fields(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 5; q <= limit; ++q)
        if (auto pk = prime_power(q); pk && pk->first > 3)
            out.push_back(*pk);
    return out;
}

// Square table built by squaring every element.
std::set<std::uint64_t> squares_of(const FieldSpec& F) {
    std::set<std::uint64_t> sq;
    for (const auto& x : elements(F))
        if (!x.is_zero())
            sq.insert(x.square().value());
    return sq;
}

TEST(NumberTheory, PrimePowerDetection) {
    EXPECT_EQ(prime_power(25), std::make_pair(std::uint64_t{5}, 2u));
    EXPECT_EQ(prime_power(1331), std::make_pair(std::uint64_t{11}, 3u));
    EXPECT_EQ(prime_power(13), std::make_pair(std::uint64_t{13}, 1u));
    EXPECT_FALSE(prime_power(12));
    EXPECT_FALSE(prime_power(1));
    EXPECT_FALSE(prime_power(0));
}

TEST(MakeField, PrimeFieldHasTrivialModulus) {
    auto F = make_field(7, 1);
    EXPECT_EQ(F->order(), 7u);
    EXPECT_EQ(F->modulus(), (std::vector<std::uint64_t>{0, 1}));
}

TEST(MakeField, QuadraticModulusMatchesLexSearch) {
    // Oracle: monic x^2 + c1 x + c0 over F_5, c0 compared first, first one
    // without a root in F_5.
    std::vector<std::uint64_t> expected;
    for (std::uint64_t c0 = 0; c0 < 5 && expected.empty(); ++c0)
        for (std::uint64_t c1 = 0; c1 < 5 && expected.empty(); ++c1) {
            bool has_root = false;
            for (std::uint64_t x = 0; x < 5; ++x)
                has_root |= (x * x + c1 * x + c0) % 5 == 0;
            if (!has_root)
                expected = {c0, c1, 1};
        }
    auto F = make_field(5, 2);
    EXPECT_EQ(F->order(), 25u);
    EXPECT_EQ(F->modulus(), expected);
    EXPECT_EQ(F->modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
}

TEST(MakeField, CubicModulusHasNoRoot) {
    auto F = make_field(7, 3);
    const auto& m = F->modulus();
    ASSERT_EQ(m.size(), 4u);
    for (std::uint64_t x = 0; x < 7; ++x)
        EXPECT_NE((m[0] + m[1] * x + m[2] * x * x + x * x * x) % 7, 0u);
}

TEST(MakeField, Rejections) {
    EXPECT_THROW(make_field(3, 1), std::invalid_argument);
    EXPECT_THROW(make_field(2, 3), std::invalid_argument);
    EXPECT_THROW(make_field(9, 1), std::invalid_argument);
    EXPECT_THROW(make_field(7, 0), std::invalid_argument);
    EXPECT_THROW(make_field(65537, 3), std::invalid_argument);
}

TEST(MakeField, Deterministic) {
    for (auto [p, k] : small_fields(400)) {
        auto a = make_field(p, k), b = make_field(p, k);
        EXPECT_EQ(*a, *b);
        EXPECT_TRUE(is_irreducible(a->modulus(), p));
    }
}

TEST(MakeField, LargestSupportedPrime) {
    // 4294967291 is the largest prime below 2^32
    auto F = make_field(4294967291ull, 1);
    FieldElement a = F->element(4294967290ull);
    EXPECT_TRUE((a * a).is_one());
    EXPECT_TRUE((a.inv() * a).is_one());
    auto r = sqrt(F->element(2));
    if (r)
        EXPECT_EQ(r->square(), F->element(2));
    else
        EXPECT_EQ(jacobi(F->element(2)), -1);
}

TEST(IsIrreducible, KnownPolynomials) {
    const std::uint64_t x2p1[] = {1, 0, 1};  // x^2 + 1
    EXPECT_FALSE(is_irreducible(x2p1, 5));   // 2^2 = -1 mod 5
    EXPECT_TRUE(is_irreducible(x2p1, 7));
    const std::uint64_t quartic[] = {4, 0, 0, 0, 1};  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
    EXPECT_FALSE(is_irreducible(quartic, 7));
}

TEST(Arith, SpecExamples) {
    auto F7 = make_field(7, 1);
    EXPECT_EQ(F7->element(6).inv(), F7->element(6));
    auto F13 = make_field(13, 1);
    EXPECT_EQ(F13->element(2).inv(), F13->element(7));
    EXPECT_EQ(F13->element(5) + F13->zero(), F13->element(5));
}

TEST(Arith, Errors) {
    auto F = make_field(7, 1), G = make_field(11, 1);
    EXPECT_THROW(F->zero().inv(), std::domain_error);
    EXPECT_THROW(F->one() / F->zero(), std::domain_error);
    EXPECT_THROW(F->one() + G->one(), std::invalid_argument);
    EXPECT_THROW(F->element(7), std::invalid_argument);
}

TEST(Arith, InverseAndFermatEverywhere) {
    for (auto [p, k] : small_fields(200)) {
        auto F = make_field(p, k);
        const std::uint64_t q = F->order();
        for (const auto& a : elements(*F)) {
            EXPECT_EQ(a.pow(q), a);
            EXPECT_EQ(a + F->zero(), a);
            EXPECT_EQ(a - a, F->zero());
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inv()).is_one());
                EXPECT_TRUE(a.pow(q - 1).is_one());
            }
        }
    }
}

TEST(Arith, DistributiveInExtensionField) {
    auto F = make_field(5, 3);
    auto xs = elements(*F);
    for (std::size_t i = 0; i < xs.size(); i += 7)
        for (std::size_t j = 0; j < xs.size(); j += 11)
            for (std::size_t l = 0; l < xs.size(); l += 13) {
                const auto &a = xs[i], &b = xs[j], &c = xs[l];
                EXPECT_EQ(a * (b + c), a * b + a * c);
                EXPECT_EQ((a * b) * c, a * (b * c));
            }
}

TEST(Arith, CoefficientEncoding) {
    auto F = make_field(7, 2);
    const std::uint64_t cs[] = {3, 5};
    FieldElement a = F->from_coeffs(cs);
    EXPECT_EQ(a.value(), 3u + 5u * 7u);
    EXPECT_EQ(a.coeffs(), (std::vector<std::uint64_t>{3, 5}));
    const std::uint64_t bad[] = {7};
    EXPECT_THROW(F->from_coeffs(bad), std::invalid_argument);
    EXPECT_EQ(F->from_integer(-1), F->element(6));
}

TEST(Elements, Enumeration) {
    auto F5 = make_field(5, 1);
    auto xs = elements(*F5);
    ASSERT_EQ(xs.size(), 5u);
    for (std::uint64_t i = 0; i < 5; ++i)
        EXPECT_EQ(xs[i].value(), i);

    auto F25 = make_field(5, 2);
    auto ys = elements(*F25);
    EXPECT_EQ(ys.size(), 25u);
    EXPECT_TRUE(ys.front().is_zero());
    EXPECT_TRUE(std::is_sorted(ys.begin(), ys.end()));
    std::set<std::uint64_t> distinct;
    for (const auto& y : ys)
        distinct.insert(y.value());
    EXPECT_EQ(distinct.size(), 25u);
}

TEST(Jacobi, SpecExamples) {
    auto F7 = make_field(7, 1), F13 = make_field(13, 1);
    EXPECT_EQ(jacobi(F7->zero()), 0);
    EXPECT_EQ(jacobi(F7->element(2)), 1);
    EXPECT_EQ(jacobi(F13->element(11)), -1);
}

TEST(Jacobi, EulerMatchesSquareTable) {
    for (auto [p, k] : small_fields(200)) {
        auto F = make_field(p, k);
        auto sq = squares_of(*F);
        EXPECT_EQ(sq.size(), (F->order() - 1) / 2) << "q = " << F->order();
        for (const auto& a : elements(*F)) {
            int expected = a.is_zero() ? 0 : (sq.count(a.value()) ? 1 : -1);
            EXPECT_EQ(jacobi(a), expected) << "q = " << F->order() << ", a = " << a;
        }
    }
}

TEST(Sqrt, SpecExamples) {
    auto F7 = make_field(7, 1), F13 = make_field(13, 1);
    EXPECT_EQ(sqrt(F7->zero()), F7->zero());
    EXPECT_EQ(sqrt(F7->element(2)), F7->element(3));
    EXPECT_FALSE(sqrt(F13->element(11)));
}

TEST(Sqrt, RootsAreCanonicalAndCorrect) {
    for (auto [p, k] : small_fields(200)) {
        auto F = make_field(p, k);
        for (const auto& a : elements(*F)) {
            auto r = sqrt(a);
            ASSERT_EQ(r.has_value(), jacobi(a) != -1);
            if (!r)
                continue;
            EXPECT_EQ(r->square(), a);
            EXPECT_LE(*r, -*r);
        }
    }
}

TEST(Sqrt, TonelliShanksDeepTwoAdicity) {
    // q - 1 = 2^8 for q = 257; q - 1 = 2^4 * 3 * 5 for q = 241
    for (std::uint64_t p : {257ull, 241ull, 65537ull}) {
        auto F = make_field(p, 1);
        for (std::uint64_t v = 1; v < std::min<std::uint64_t>(p, 3000); ++v) {
            FieldElement a = F->element(v);
            auto r = sqrt(a * a);
            ASSERT_TRUE(r);
            EXPECT_EQ(r->square(), a * a);
        }
    }
}

}  // namespace
}  // namespace legendre
