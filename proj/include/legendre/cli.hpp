#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "legendre/census.hpp"
#include "legendre/gf.hpp"

namespace legendre::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { human, csv, json_lines };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepRow {
    std::uint64_t q = 0, p = 0;
    unsigned k = 0;
    unsigned q_mod_24 = 0;
    std::uint64_t observed_Nq = 0, expected_Nq = 0;
    std::uint64_t observed_fqbar = 0, expected_fqbar = 0;
    bool match = false;
};

SweepRow to_sweep_row(const CensusReport& report);

/// Field of order q; throws UsageError unless q = p^k with p > 3.
FieldRef field_for_order(const std::string& q_text);

/// Integer encoding in [0, q), or with coeffs = true a comma-separated
/// coefficient list, low degree first. Throws UsageError.
FieldElement parse_element(const FieldSpec& field, const std::string& text, bool coeffs);

/// Census machine formats:
///   csv: one header line, one record
///   json-lines: one object per line, keys in header order
/// Fields: q,p,k,q_mod_24,observed_Nq,expected_Nq,observed_fqbar,expected_fqbar,
///   observed_h1..h4,expected_h1..h4,observed_NqH1,observed_NqH23,observed_NqH4,
///   expected_NqH1,expected_NqH23,expected_NqH4,strata_closed,representatives,all_match
/// Stratum fields are empty (csv) or null (json) when q = 3 (mod 4);
/// representatives are ';'-separated in csv.
void write_census(std::ostream& os, const CensusReport& report, OutputFormat format);

/// Sweep fields: q,p,k,q_mod_24,observed_Nq,expected_Nq,observed_fqbar,expected_fqbar,match
void write_sweep_header(std::ostream& os, OutputFormat format);
void write_sweep_row(std::ostream& os, const SweepRow& row, OutputFormat format);
void write_sweep_summary(std::ostream& os, std::size_t rows, std::size_t mismatches, OutputFormat format);

/// Census rows for every admissible q in [q_min, q_max], ascending.
/// Throws UsageError when q_min > q_max.
std::vector<SweepRow> sweep(std::uint64_t q_min, std::uint64_t q_max);

/// Entry point; args excludes the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legendre::cli
