#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "legendre/gf.hpp"

namespace legendre {

/// F_q-isomorphism classes of Legendre curves, each class a canonically
/// sorted list of lambda encodings; classes ordered by their smallest member.
struct ClassPartition {
    std::vector<std::vector<std::uint64_t>> classes;

    std::size_t size() const { return classes.size(); }
    std::vector<std::uint64_t> representatives() const;
};

/// Sign pattern (jacobi(l), jacobi(1 - l)): h1 (+,+), h2 (+,-), h3 (-,+), h4 (-,-).
/// Only defined when q = 1 (mod 4).
struct HStratification {
    std::vector<std::uint64_t> h1, h2, h3, h4;
};

enum class Stratum { h1, h2, h3, h4 };

/// Sizes |H1|, |H2|, |H3|, |H4|.
struct HSizes {
    std::uint64_t h1 = 0, h2 = 0, h3 = 0, h4 = 0;
    friend bool operator==(const HSizes&, const HSizes&) = default;
};

/// Number of classes inside H1, H2 u H3 and H4.
struct StratumCounts {
    std::uint64_t h1 = 0, h23 = 0, h4 = 0;
    std::uint64_t total() const { return h1 + h23 + h4; }
    friend bool operator==(const StratumCounts&, const StratumCounts&) = default;
};

struct CensusReport {
    std::uint64_t q = 0, p = 0;
    unsigned k = 0;
    unsigned q_mod_24 = 0;
    std::uint64_t observed_Nq = 0, expected_Nq = 0;
    std::uint64_t observed_fqbar = 0, expected_fqbar = 0;
    // present only for q = 1 (mod 4)
    std::optional<HSizes> observed_h_sizes, expected_h_sizes;
    std::optional<StratumCounts> observed_h_counts, expected_h_counts;
    /// False when some class contains curves from two of H1, H2 u H3, H4.
    bool strata_closed = true;
    std::vector<std::uint64_t> representatives;
    bool all_match = false;
};

/// Union-find over orbit partners joined by table1_fast_iso.
ClassPartition partition_classes(const FieldSpec& field);

/// Distinct j-invariants among admissible lambda.
std::uint64_t count_fqbar_classes(const FieldSpec& field);

/// Throws std::invalid_argument when q = 3 (mod 4).
HStratification h_stratify(const FieldSpec& field);
Stratum stratum_of(const FieldElement& lambda);

// Closed-form counts. All throw std::invalid_argument for q that is not a
// prime power p^k with p > 3.
std::uint64_t expected_Nq(std::uint64_t q);
std::uint64_t expected_fqbar(std::uint64_t q);
/// Also throws for q = 3 (mod 4).
HSizes expected_h_sizes(std::uint64_t q);
/// Also throws for q = 3 (mod 4).
StratumCounts expected_h_counts(std::uint64_t q);

CensusReport run_census(const FieldSpec& field);

}  // namespace legendre
