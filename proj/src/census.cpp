#include "legendre/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "legendre/curves.hpp"
#include "legendre/iso.hpp"

namespace legendre {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

void require_admissible(std::uint64_t q) {
    auto pk = prime_power(q);
    if (!pk || pk->first <= 3)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power with characteristic > 3");
}

void require_one_mod_four(std::uint64_t q) {
    if (q % 4 != 1)
        throw std::invalid_argument("stratification needs q = 1 (mod 4), got q = " + std::to_string(q));
}

// A residue-case formula that leaves a remainder means the dispatch is wrong.
std::uint64_t exact_div(std::int64_t num, std::int64_t den) {
    if (num < 0 || num % den != 0)
        throw std::logic_error("closed form " + std::to_string(num) + "/" + std::to_string(den) +
                               " is not a nonnegative integer");
    return static_cast<std::uint64_t>(num / den);
}

int stratum_group(Stratum s) {
    switch (s) {
    case Stratum::h1:
        return 0;
    case Stratum::h2:
    case Stratum::h3:
        return 1;
    case Stratum::h4:
        return 2;
    }
    return -1;
}

}  // namespace

std::vector<std::uint64_t> ClassPartition::representatives() const {
    std::vector<std::uint64_t> reps;
    reps.reserve(classes.size());
    for (const auto& c : classes)
        reps.push_back(c.front());
    return reps;
}

ClassPartition partition_classes(const FieldSpec& field) {
    const std::uint64_t q = field.order();
    DisjointSets sets(q);
    for (std::uint64_t v = 2; v < q; ++v) {
        LegendreCurve L(field.element(v));
        for (const FieldElement& nu : lambda_orbit(L))
            if (nu.value() != v && table1_fast_iso(L, nu))
                sets.unite(v, nu.value());
    }

    std::map<std::size_t, std::vector<std::uint64_t>> by_root;
    for (std::uint64_t v = 2; v < q; ++v)
        by_root[sets.find(v)].push_back(v);

    ClassPartition out;
    for (auto& [root, members] : by_root)
        out.classes.push_back(std::move(members));
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

std::uint64_t count_fqbar_classes(const FieldSpec& field) {
    std::set<std::uint64_t> js;
    for (std::uint64_t v = 2; v < field.order(); ++v)
        js.insert(j_legendre(field.element(v)).value());
    return js.size();
}

Stratum stratum_of(const FieldElement& lambda) {
    bool l_square = jacobi(lambda) == 1;
    bool m_square = jacobi(lambda.field().one() - lambda) == 1;
    if (l_square)
        return m_square ? Stratum::h1 : Stratum::h2;
    return m_square ? Stratum::h3 : Stratum::h4;
}

HStratification h_stratify(const FieldSpec& field) {
    require_one_mod_four(field.order());
    HStratification h;
    for (std::uint64_t v = 2; v < field.order(); ++v) {
        switch (stratum_of(field.element(v))) {
        case Stratum::h1:
            h.h1.push_back(v);
            break;
        case Stratum::h2:
            h.h2.push_back(v);
            break;
        case Stratum::h3:
            h.h3.push_back(v);
            break;
        case Stratum::h4:
            h.h4.push_back(v);
            break;
        }
    }
    return h;
}

std::uint64_t expected_Nq(std::uint64_t q) {
    require_admissible(q);
    const auto n = static_cast<std::int64_t>(q);
    switch (q % 24) {
    case 1:
        return exact_div(7 * n + 17, 24);
    case 5:
        return exact_div(7 * n + 13, 24);
    case 7:
    case 19:
        return exact_div(n + 2, 3);
    case 11:
    case 23:
        return exact_div(n - 2, 3);
    case 13:
        return exact_div(7 * n + 29, 24);
    case 17:
        return exact_div(7 * n + 1, 24);
    }
    throw std::logic_error("q = " + std::to_string(q) + " has inadmissible residue mod 24");
}

std::uint64_t expected_fqbar(std::uint64_t q) {
    require_admissible(q);
    const auto n = static_cast<std::int64_t>(q);
    switch (q % 12) {
    case 1:
    case 7:
        return exact_div(n + 5, 6);
    case 5:
    case 11:
        return exact_div(n + 1, 6);
    }
    throw std::logic_error("q = " + std::to_string(q) + " has inadmissible residue mod 12");
}

HSizes expected_h_sizes(std::uint64_t q) {
    require_admissible(q);
    require_one_mod_four(q);
    const auto n = static_cast<std::int64_t>(q);
    std::uint64_t rest = exact_div(n - 1, 4);
    return {exact_div(n - 5, 4), rest, rest, rest};
}

StratumCounts expected_h_counts(std::uint64_t q) {
    require_admissible(q);
    require_one_mod_four(q);
    const auto n = static_cast<std::int64_t>(q);
    switch (q % 24) {
    case 1:
        return {exact_div(n + 23, 24), exact_div(n - 1, 8), exact_div(n - 1, 8)};
    case 5:
        return {exact_div(n - 5, 24), exact_div(n + 3, 8), exact_div(n + 3, 8)};
    case 13:
        return {exact_div(n + 11, 24), exact_div(n + 3, 8), exact_div(n + 3, 8)};
    case 17:
        return {exact_div(n + 7, 24), exact_div(n - 1, 8), exact_div(n - 1, 8)};
    }
    throw std::logic_error("q = " + std::to_string(q) + " has inadmissible residue mod 24");
}

CensusReport run_census(const FieldSpec& field) {
    CensusReport r;
    r.q = field.order();
    r.p = field.characteristic();
    r.k = field.degree();
    r.q_mod_24 = static_cast<unsigned>(r.q % 24);

    ClassPartition classes = partition_classes(field);
    r.observed_Nq = classes.size();
    r.expected_Nq = expected_Nq(r.q);
    r.observed_fqbar = count_fqbar_classes(field);
    r.expected_fqbar = expected_fqbar(r.q);
    r.representatives = classes.representatives();

    bool match = r.observed_Nq == r.expected_Nq && r.observed_fqbar == r.expected_fqbar;

    if (r.q % 4 == 1) {
        HStratification h = h_stratify(field);
        r.observed_h_sizes = HSizes{h.h1.size(), h.h2.size(), h.h3.size(), h.h4.size()};
        r.expected_h_sizes = expected_h_sizes(r.q);

        StratumCounts counts;
        for (const auto& members : classes.classes) {
            int group = stratum_group(stratum_of(field.element(members.front())));
            for (std::uint64_t v : members)
                if (stratum_group(stratum_of(field.element(v))) != group)
                    r.strata_closed = false;
            if (group == 0)
                ++counts.h1;
            else if (group == 1)
                ++counts.h23;
            else
                ++counts.h4;
        }
        r.observed_h_counts = counts;
        r.expected_h_counts = expected_h_counts(r.q);

        match = match && r.observed_h_sizes == r.expected_h_sizes && r.observed_h_counts == r.expected_h_counts &&
                r.strata_closed && r.expected_h_counts->total() == r.expected_Nq;
    }
    r.all_match = match;
    return r;
}

}  // namespace legendre
