#include "legendre/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "legendre/curves.hpp"
#include "legendre/iso.hpp"

namespace legendre::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t parse_uint(const std::string& text, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
    return v;
}

std::string join(const std::vector<std::uint64_t>& xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::vector<std::uint64_t> values(const std::vector<FieldElement>& xs) {
    std::vector<std::uint64_t> out;
    for (const auto& x : xs)
        out.push_back(x.value());
    return out;
}

const char* stratum_name(Stratum s) {
    switch (s) {
    case Stratum::h1:
        return "H1";
    case Stratum::h2:
        return "H2";
    case Stratum::h3:
        return "H3";
    case Stratum::h4:
        return "H4";
    }
    return "?";
}

std::string modulus_text(const FieldSpec& F) {
    const auto& m = F.modulus();
    std::string s;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0 || m[i] != 1)
            s += std::to_string(m[i]);
        if (i >= 1)
            s += "x";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s;
}

void field_line(std::ostream& os, const char* key) { os << std::left << std::setw(14) << key; }

ordered_json census_json(const CensusReport& r) {
    ordered_json j;
    j["q"] = r.q;
    j["p"] = r.p;
    j["k"] = r.k;
    j["q_mod_24"] = r.q_mod_24;
    j["observed_Nq"] = r.observed_Nq;
    j["expected_Nq"] = r.expected_Nq;
    j["observed_fqbar"] = r.observed_fqbar;
    j["expected_fqbar"] = r.expected_fqbar;
    auto sizes = [&](const char* prefix, const std::optional<HSizes>& h) {
        const char* names[] = {"h1", "h2", "h3", "h4"};
        std::uint64_t vals[] = {0, 0, 0, 0};
        if (h)
            std::tie(vals[0], vals[1], vals[2], vals[3]) = std::tie(h->h1, h->h2, h->h3, h->h4);
        for (int i = 0; i < 4; ++i)
            j[std::string(prefix) + names[i]] = h ? ordered_json(vals[i]) : ordered_json(nullptr);
    };
    sizes("observed_", r.observed_h_sizes);
    sizes("expected_", r.expected_h_sizes);
    auto counts = [&](const char* prefix, const std::optional<StratumCounts>& c) {
        j[std::string(prefix) + "NqH1"] = c ? ordered_json(c->h1) : ordered_json(nullptr);
        j[std::string(prefix) + "NqH23"] = c ? ordered_json(c->h23) : ordered_json(nullptr);
        j[std::string(prefix) + "NqH4"] = c ? ordered_json(c->h4) : ordered_json(nullptr);
    };
    counts("observed_", r.observed_h_counts);
    counts("expected_", r.expected_h_counts);
    j["strata_closed"] = r.strata_closed;
    j["representatives"] = r.representatives;
    j["all_match"] = r.all_match;
    return j;
}

std::string csv_cell(const ordered_json& v) {
    if (v.is_null())
        return "";
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::vector<std::uint64_t> xs = v.get<std::vector<std::uint64_t>>();
        return join(xs, ';');
    }
    return v.dump();
}

void write_csv(std::ostream& os, const ordered_json& record, bool header) {
    if (header) {
        bool first = true;
        for (const auto& [key, _] : record.items()) {
            os << (first ? "" : ",") << key;
            first = false;
        }
        os << '\n';
    }
    bool first = true;
    for (const auto& [_, value] : record.items()) {
        os << (first ? "" : ",") << csv_cell(value);
        first = false;
    }
    os << '\n';
}

void write_record(std::ostream& os, const ordered_json& record, OutputFormat format) {
    if (format == OutputFormat::csv)
        write_csv(os, record, true);
    else
        os << record.dump() << '\n';
}

ordered_json sweep_json(const SweepRow& row) {
    ordered_json j;
    j["q"] = row.q;
    j["p"] = row.p;
    j["k"] = row.k;
    j["q_mod_24"] = row.q_mod_24;
    j["observed_Nq"] = row.observed_Nq;
    j["expected_Nq"] = row.expected_Nq;
    j["observed_fqbar"] = row.observed_fqbar;
    j["expected_fqbar"] = row.expected_fqbar;
    j["match"] = row.match;
    return j;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json-lines")
        return OutputFormat::json_lines;
    return OutputFormat::human;
}

int cmd_census(const std::string& q_text, OutputFormat format, std::ostream& out) {
    FieldRef F = field_for_order(q_text);
    CensusReport report = run_census(*F);
    write_census(out, report, format);
    return report.all_match ? kExitOk : kExitMismatch;
}

int cmd_sweep(const std::string& lo, const std::string& hi, OutputFormat format, bool quiet, std::ostream& out) {
    std::vector<SweepRow> rows = sweep(parse_uint(lo, "q_min"), parse_uint(hi, "q_max"));
    std::size_t mismatches = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.match; });
    if (!quiet) {
        write_sweep_header(out, format);
        for (const auto& row : rows)
            write_sweep_row(out, row, format);
        write_sweep_summary(out, rows.size(), mismatches, format);
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

LegendreCurve parse_curve(const FieldSpec& F, const std::string& text, bool coeffs) {
    FieldElement lambda = parse_element(F, text, coeffs);
    if (lambda.is_zero() || lambda.is_one())
        throw UsageError("lambda = " + text + " gives a singular curve");
    return LegendreCurve(lambda);
}

int cmd_iso(const std::string& q_text, const std::string& l1, const std::string& l2, bool coeffs,
            OutputFormat format, std::ostream& out) {
    FieldRef F = field_for_order(q_text);
    LegendreCurve source = parse_curve(*F, l1, coeffs), target = parse_curve(*F, l2, coeffs);
    // verdict from the root-set criterion; witness and its tag from the search
    IsoWitness criterion = corollary32_iso(source, target);
    IsoWitness oracle = simplified_iso_witness(source, target);
    FieldElement j1 = j_legendre(source), j2 = j_legendre(target);

    ordered_json j;
    j["q"] = F->order();
    j["lambda"] = source.lambda().value();
    j["mu"] = target.lambda().value();
    j["isomorphic"] = criterion.isomorphic;
    j["u"] = oracle.isomorphic ? ordered_json(oracle.params->u.value()) : ordered_json(nullptr);
    j["r"] = oracle.isomorphic ? ordered_json(oracle.params->r.value()) : ordered_json(nullptr);
    j["case"] = oracle.matched_case ? ordered_json(std::string(to_string(*oracle.matched_case)))
                                    : ordered_json(nullptr);
    j["j_lambda"] = j1.value();
    j["j_mu"] = j2.value();
    j["equal_j"] = j1 == j2;
    j["routes_agree"] = criterion.isomorphic == oracle.isomorphic;

    if (format == OutputFormat::human) {
        field_line(out, "field");
        out << "F_" << F->order() << '\n';
        field_line(out, "curves");
        out << "E_" << source.lambda() << ", E_" << target.lambda() << '\n';
        field_line(out, "isomorphic");
        out << (criterion.isomorphic ? "yes" : "no") << '\n';
        if (oracle.isomorphic) {
            field_line(out, "witness");
            out << "u = " << oracle.params->u << ", r = " << oracle.params->r << '\n';
        }
        if (oracle.matched_case) {
            field_line(out, "case");
            out << to_string(*oracle.matched_case) << '\n';
        }
        field_line(out, "j");
        out << j1 << ", " << j2 << (j1 == j2 ? " (equal)" : " (different)") << '\n';
        if (criterion.isomorphic != oracle.isomorphic) {
            field_line(out, "MISMATCH");
            out << "criterion and exhaustive search disagree\n";
        }
    } else {
        write_record(out, j, format);
    }
    return criterion.isomorphic == oracle.isomorphic ? kExitOk : kExitMismatch;
}

int cmd_jinv(const std::string& q_text, const std::string& l, bool coeffs, OutputFormat format,
             std::ostream& out) {
    FieldRef F = field_for_order(q_text);
    LegendreCurve curve = parse_curve(*F, l, coeffs);
    std::vector<std::uint64_t> orbit = values(lambda_orbit(curve));
    FieldElement jval = j_legendre(curve);
    std::optional<Stratum> stratum;
    if (F->order() % 4 == 1)
        stratum = stratum_of(curve.lambda());

    if (format == OutputFormat::human) {
        field_line(out, "field");
        out << "F_" << F->order() << '\n';
        field_line(out, "lambda");
        out << curve.lambda() << '\n';
        field_line(out, "j");
        out << jval << '\n';
        field_line(out, "orbit");
        out << "{" << join(orbit, ',') << "}\n";
        field_line(out, "orbit size");
        out << orbit.size() << '\n';
        if (stratum) {
            field_line(out, "stratum");
            out << stratum_name(*stratum) << '\n';
        }
        return kExitOk;
    }
    ordered_json j;
    j["q"] = F->order();
    j["lambda"] = curve.lambda().value();
    j["j"] = jval.value();
    j["orbit"] = orbit;
    j["orbit_size"] = orbit.size();
    j["stratum"] = stratum ? ordered_json(stratum_name(*stratum)) : ordered_json(nullptr);
    write_record(out, j, format);
    return kExitOk;
}

}  // namespace

SweepRow to_sweep_row(const CensusReport& r) {
    return {r.q, r.p, r.k, r.q_mod_24, r.observed_Nq, r.expected_Nq, r.observed_fqbar, r.expected_fqbar,
            r.all_match};
}

FieldRef field_for_order(const std::string& q_text) {
    std::uint64_t q = parse_uint(q_text, "q");
    auto pk = prime_power(q);
    if (!pk)
        throw UsageError("q = " + q_text + " is not a prime power");
    if (pk->first <= 3)
        throw UsageError("q = " + q_text + " has characteristic " + std::to_string(pk->first) +
                         "; characteristic must exceed 3");
    if (q > kMaxFieldOrder)
        throw UsageError("q = " + q_text + " exceeds the supported field order");
    return make_field(pk->first, pk->second);
}

FieldElement parse_element(const FieldSpec& field, const std::string& text, bool coeffs) {
    if (!coeffs) {
        std::uint64_t v = parse_uint(text, "element");
        if (v >= field.order())
            throw UsageError("element " + text + " out of range [0, " + std::to_string(field.order()) + ")");
        return field.element(v);
    }
    std::vector<std::uint64_t> cs;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');)
        cs.push_back(parse_uint(part, "coefficient"));
    if (cs.empty() || cs.size() > field.degree())
        throw UsageError("expected 1 to " + std::to_string(field.degree()) + " coefficients, got '" + text + "'");
    for (std::uint64_t c : cs)
        if (c >= field.characteristic())
            throw UsageError("coefficient " + std::to_string(c) + " not reduced mod " +
                             std::to_string(field.characteristic()));
    return field.from_coeffs(cs);
}

void write_census(std::ostream& os, const CensusReport& r, OutputFormat format) {
    if (format != OutputFormat::human) {
        write_record(os, census_json(r), format);
        return;
    }
    field_line(os, "field");
    os << "F_" << r.q << " (p = " << r.p << ", k = " << r.k << ")\n";
    if (r.k > 1) {
        field_line(os, "modulus");
        os << modulus_text(*make_field(r.p, r.k)) << '\n';
    }
    field_line(os, "q mod 24");
    os << r.q_mod_24 << '\n';
    field_line(os, "N_q");
    os << "observed " << r.observed_Nq << ", expected " << r.expected_Nq << '\n';
    field_line(os, "j classes");
    os << "observed " << r.observed_fqbar << ", expected " << r.expected_fqbar << '\n';
    if (r.observed_h_sizes) {
        const HSizes &o = *r.observed_h_sizes, &e = *r.expected_h_sizes;
        field_line(os, "|H1..H4|");
        os << "observed " << o.h1 << ' ' << o.h2 << ' ' << o.h3 << ' ' << o.h4 << ", expected " << e.h1 << ' '
           << e.h2 << ' ' << e.h3 << ' ' << e.h4 << '\n';
        const StratumCounts &oc = *r.observed_h_counts, &ec = *r.expected_h_counts;
        field_line(os, "N_q by H");
        os << "observed " << oc.h1 << ' ' << oc.h23 << ' ' << oc.h4 << ", expected " << ec.h1 << ' ' << ec.h23
           << ' ' << ec.h4 << "  (H1, H2+H3, H4)\n";
        field_line(os, "strata");
        os << (r.strata_closed ? "closed" : "STRADDLED") << '\n';
    }
    field_line(os, "classes");
    os << join(r.representatives, ' ') << '\n';
    field_line(os, "all_match");
    os << (r.all_match ? "true" : "false") << '\n';
}

void write_sweep_header(std::ostream& os, OutputFormat format) {
    if (format == OutputFormat::csv)
        os << "q,p,k,q_mod_24,observed_Nq,expected_Nq,observed_fqbar,expected_fqbar,match\n";
    else if (format == OutputFormat::human)
        os << std::right << std::setw(8) << "q" << std::setw(8) << "p" << std::setw(4) << "k" << std::setw(6)
           << "mod24" << std::setw(8) << "N_q" << std::setw(8) << "exp" << std::setw(8) << "j-cls" << std::setw(8)
           << "exp" << "  match\n";
}

void write_sweep_row(std::ostream& os, const SweepRow& row, OutputFormat format) {
    if (format == OutputFormat::human) {
        os << std::right << std::setw(8) << row.q << std::setw(8) << row.p << std::setw(4) << row.k << std::setw(6)
           << row.q_mod_24 << std::setw(8) << row.observed_Nq << std::setw(8) << row.expected_Nq << std::setw(8)
           << row.observed_fqbar << std::setw(8) << row.expected_fqbar << "  " << (row.match ? "yes" : "NO")
           << '\n';
        return;
    }
    ordered_json j = sweep_json(row);
    if (format == OutputFormat::csv)
        write_csv(os, j, false);
    else
        os << j.dump() << '\n';
}

void write_sweep_summary(std::ostream& os, std::size_t rows, std::size_t mismatches, OutputFormat format) {
    switch (format) {
    case OutputFormat::human:
        os << "summary: " << rows << " fields, " << mismatches << " mismatches\n";
        break;
    case OutputFormat::csv:
        os << "# rows=" << rows << ",mismatches=" << mismatches << '\n';
        break;
    case OutputFormat::json_lines: {
        ordered_json j;
        j["summary"] = {{"rows", rows}, {"mismatches", mismatches}};
        os << j.dump() << '\n';
        break;
    }
    }
}

std::vector<SweepRow> sweep(std::uint64_t q_min, std::uint64_t q_max) {
    if (q_min > q_max)
        throw UsageError("empty range: q_min > q_max");
    if (q_max > kMaxFieldOrder)
        throw UsageError("q_max exceeds the supported field order");
    std::vector<SweepRow> rows;
    for (std::uint64_t q = q_min; q <= q_max; ++q) {
        auto pk = prime_power(q);
        if (!pk || pk->first <= 3)
            continue;
        FieldRef F = make_field(pk->first, pk->second);
        rows.push_back(to_sweep_row(run_census(*F)));
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Isomorphism classes of Legendre curves y^2 = x(x-1)(x-l) over F_q", "legendre"};
    app.require_subcommand(1);

    std::string format_text = "human";
    bool coeffs = false;
    app.add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"human", "csv", "json-lines"}));
    app.add_flag("--coeffs", coeffs, "Read field elements as comma-separated coefficient lists (low degree first)");

    std::string q, lo, hi, l1, l2;
    auto* census = app.add_subcommand("census", "Classify all Legendre curves over F_q and check the counts");
    census->add_option("q", q, "Field order p^k, p > 3")->required();
    auto* sweep_cmd = app.add_subcommand("sweep", "Census every admissible q in a range");
    sweep_cmd->add_option("qmin", lo)->required();
    sweep_cmd->add_option("qmax", hi)->required();
    auto* verify = app.add_subcommand("verify", "Same as sweep, exit status only");
    verify->add_option("qmin", lo)->required();
    verify->add_option("qmax", hi)->required();
    auto* iso = app.add_subcommand("iso", "Test E_l1 and E_l2 for F_q-isomorphism");
    iso->add_option("q", q)->required();
    iso->add_option("lambda1", l1)->required();
    iso->add_option("lambda2", l2)->required();
    auto* jinv = app.add_subcommand("jinv", "j-invariant, lambda-orbit and stratum of E_l");
    jinv->add_option("q", q)->required();
    jinv->add_option("lambda", l1)->required();
    for (auto* sub : {census, sweep_cmd, verify, iso, jinv})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    OutputFormat format = parse_format(format_text);
    try {
        if (census->parsed())
            return cmd_census(q, format, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(lo, hi, format, false, out);
        if (verify->parsed())
            return cmd_sweep(lo, hi, format, true, out);
        if (iso->parsed())
            return cmd_iso(q, l1, l2, coeffs, format, out);
        return cmd_jinv(q, l1, coeffs, format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace legendre::cli
