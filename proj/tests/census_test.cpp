#include <gtest/gtest.h>

#include <map>

#include "legendre/census.hpp"
#include "legendre/curves.hpp"
#include "legendre/iso.hpp"

namespace legendre {
namespace {

using Classes = std::vector<std::vector<std::uint64_t>>;

std::vector<FieldRef> fields_up_to(std::uint64_t limit) {
    std::vector<FieldRef> out;
    for (std::uint64_t q = 5; q <= limit; ++q)
        if (auto pk = prime_power(q); pk && pk->first > 3)
            out.push_back(make_field(pk->first, pk->second));
    return out;
}

// Partition by the exhaustive (u, r) search over every pair.
Classes oracle_partition(const FieldSpec& F) {
    std::vector<int> label(F.order(), -1);
    Classes out;
    for (std::uint64_t l = 2; l < F.order(); ++l) {
        if (label[l] >= 0)
            continue;
        label[l] = static_cast<int>(out.size());
        out.push_back({l});
        for (std::uint64_t m = l + 1; m < F.order(); ++m)
            if (label[m] < 0 &&
                simplified_iso_witness(LegendreCurve(F.element(l)), LegendreCurve(F.element(m))).isomorphic) {
                label[m] = label[l];
                out.back().push_back(m);
            }
    }
    return out;
}

TEST(Partition, SpecExamples) {
    EXPECT_EQ(partition_classes(*make_field(7, 1)).classes, (Classes{{2, 4, 6}, {3}, {5}}));
    EXPECT_EQ(partition_classes(*make_field(5, 1)).classes, (Classes{{2, 4}, {3}}));
    EXPECT_EQ(partition_classes(*make_field(13, 1)).classes,
              (Classes{{2, 12}, {3, 5, 9, 11}, {4, 10}, {6, 8}, {7}}));
}

TEST(Partition, MatchesExhaustiveOracle) {
    for (const auto& F : fields_up_to(60))
        EXPECT_EQ(partition_classes(*F).classes, oracle_partition(*F)) << "q = " << F->order();
}

TEST(Partition, Invariants) {
    for (const auto& F : fields_up_to(200)) {
        ClassPartition P = partition_classes(*F);
        std::size_t total = 0;
        std::vector<int> seen(F->order(), 0);
        for (const auto& cls : P.classes) {
            EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end()));
            total += cls.size();
            for (std::uint64_t v : cls)
                ++seen[v];
        }
        EXPECT_EQ(total, F->order() - 2);
        for (std::uint64_t v = 2; v < F->order(); ++v)
            EXPECT_EQ(seen[v], 1);
        EXPECT_TRUE(std::is_sorted(P.classes.begin(), P.classes.end()));
    }
}

TEST(Partition, ClassShapes) {
    for (const auto& F : fields_up_to(200)) {
        const std::uint64_t q = F->order();
        FieldElement one = F->one();
        for (const auto& cls : partition_classes(*F).classes) {
            FieldElement l = F->element(cls.front());
            FieldElement j = j_legendre(l);
            bool generic = !j.is_zero() && j != F->from_integer(1728);
            if (q % 4 == 3 && generic)
                EXPECT_EQ(cls.size(), 3u) << "q = " << q;
            if (q % 4 == 1) {
                Stratum s = stratum_of(l);
                if (s == Stratum::h4) {
                    std::vector<std::uint64_t> pair{l.value(), (one - l).value()};
                    std::sort(pair.begin(), pair.end());
                    pair.erase(std::unique(pair.begin(), pair.end()), pair.end());
                    EXPECT_EQ(cls, pair) << "q = " << q;
                }
                if (s == Stratum::h1 && generic)
                    EXPECT_EQ(cls.size(), 6u) << "q = " << q;
            }
        }
    }
}

TEST(FqbarCount, Examples) {
    EXPECT_EQ(count_fqbar_classes(*make_field(7, 1)), 2u);
    EXPECT_EQ(count_fqbar_classes(*make_field(5, 1)), 1u);
    EXPECT_EQ(count_fqbar_classes(*make_field(13, 1)), 3u);
    EXPECT_EQ(expected_fqbar(7), 2u);
    EXPECT_EQ(expected_fqbar(5), 1u);
    EXPECT_EQ(expected_fqbar(13), 3u);
}

TEST(HStratify, Examples) {
    HStratification h13 = h_stratify(*make_field(13, 1));
    EXPECT_EQ(h13.h1, (std::vector<std::uint64_t>{4, 10}));
    EXPECT_EQ(h13.h2, (std::vector<std::uint64_t>{3, 9, 12}));
    EXPECT_EQ(h13.h3, (std::vector<std::uint64_t>{2, 5, 11}));
    EXPECT_EQ(h13.h4, (std::vector<std::uint64_t>{6, 7, 8}));

    HStratification h5 = h_stratify(*make_field(5, 1));
    EXPECT_TRUE(h5.h1.empty());
    EXPECT_EQ(h5.h2, (std::vector<std::uint64_t>{4}));
    EXPECT_EQ(h5.h3, (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(h5.h4, (std::vector<std::uint64_t>{3}));

    EXPECT_THROW(h_stratify(*make_field(7, 1)), std::invalid_argument);
}

TEST(HStratify, SizesMatchCountingLemma) {
    for (const auto& F : fields_up_to(200)) {
        const std::uint64_t q = F->order();
        if (q % 4 != 1)
            continue;
        HStratification h = h_stratify(*F);
        HSizes e = expected_h_sizes(q);
        EXPECT_EQ(h.h1.size(), e.h1);
        EXPECT_EQ(h.h2.size(), e.h2);
        EXPECT_EQ(h.h3.size(), e.h3);
        EXPECT_EQ(h.h4.size(), e.h4);
        EXPECT_EQ(e.h1, (q - 5) / 4);
        EXPECT_EQ(e.h4, (q - 1) / 4);
    }
}

TEST(ExpectedNq, Examples) {
    EXPECT_EQ(expected_Nq(25), 8u);
    EXPECT_EQ(expected_Nq(7), 3u);
    EXPECT_EQ(expected_Nq(11), 3u);
    EXPECT_EQ(expected_Nq(17), 5u);
    EXPECT_EQ(expected_Nq(13), 5u);
    EXPECT_EQ(expected_Nq(49), 15u);
    EXPECT_EQ(expected_Nq(5), 2u);
}

TEST(ExpectedNq, RejectsInadmissible) {
    EXPECT_THROW(expected_Nq(9), std::invalid_argument);
    EXPECT_THROW(expected_Nq(12), std::invalid_argument);
    EXPECT_THROW(expected_Nq(1), std::invalid_argument);
    EXPECT_THROW(expected_Nq(27), std::invalid_argument);
    EXPECT_THROW(expected_fqbar(8), std::invalid_argument);
}

TEST(ExpectedHCounts, Examples) {
    EXPECT_EQ(expected_h_counts(13), (StratumCounts{1, 2, 2}));
    EXPECT_EQ(expected_h_counts(17), (StratumCounts{1, 2, 2}));
    EXPECT_EQ(expected_h_counts(5), (StratumCounts{0, 1, 1}));
    EXPECT_THROW(expected_h_counts(7), std::invalid_argument);
    EXPECT_THROW(expected_h_sizes(11), std::invalid_argument);
}

TEST(ExpectedHCounts, SumToNq) {
    for (std::uint64_t q = 5; q <= 5000; ++q) {
        auto pk = prime_power(q);
        if (!pk || pk->first <= 3)
            continue;
        EXPECT_NO_THROW(expected_Nq(q)) << q;
        EXPECT_NO_THROW(expected_fqbar(q)) << q;
        if (q % 4 == 1)
            EXPECT_EQ(expected_h_counts(q).total(), expected_Nq(q)) << q;
    }
}

TEST(RunCensus, Examples) {
    CensusReport r13 = run_census(*make_field(13, 1));
    EXPECT_TRUE(r13.all_match);
    EXPECT_EQ(r13.observed_Nq, 5u);
    EXPECT_EQ(r13.q_mod_24, 13u);
    EXPECT_EQ(r13.representatives, (std::vector<std::uint64_t>{2, 3, 4, 6, 7}));
    ASSERT_TRUE(r13.observed_h_counts);
    EXPECT_EQ(*r13.observed_h_counts, (StratumCounts{1, 2, 2}));

    CensusReport r7 = run_census(*make_field(7, 1));
    EXPECT_TRUE(r7.all_match);
    EXPECT_EQ(r7.observed_Nq, 3u);
    EXPECT_FALSE(r7.observed_h_sizes);
    EXPECT_FALSE(r7.observed_h_counts);

    CensusReport r49 = run_census(*make_field(7, 2));
    EXPECT_EQ(r49.q, 49u);
    EXPECT_EQ(r49.k, 2u);
    EXPECT_EQ(r49.expected_Nq, 15u);
    EXPECT_EQ(r49.observed_Nq, 15u);
    EXPECT_TRUE(r49.all_match);
}

TEST(RunCensus, StrataNeverStraddle) {
    for (const auto& F : fields_up_to(200)) {
        CensusReport r = run_census(*F);
        EXPECT_TRUE(r.strata_closed) << "q = " << F->order();
        EXPECT_TRUE(r.all_match) << "q = " << F->order();
    }
}

}  // namespace
}  // namespace legendre
