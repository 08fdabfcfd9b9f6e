#pragma once

// Cross-checks run by `verify` at a single parameter point (n, t, d):
// closed-form families against orbit enumeration, minimality and
// disjointness, the AR-triangle characterization, the CY-dimension bound,
// and (within the hom budget) the Serre-duality dimension identities.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "classification.hpp"
#include "homspace.hpp"
#include "orbit_oracle.hpp"
#include "serialization.hpp"

namespace nakayama {

struct PointReport {
    int n = 1;
    int t = 2;
    int d = 0;
    int shift_order = 1;
    std::optional<int> category_cydim;
    std::size_t minimal_objects = 0;
    std::map<std::string, long> checks; ///< number of assertions evaluated, by check name
    long discrepancies = 0;
    std::optional<std::string> first_counterexample;

    void fail(const std::string& what)
    {
        ++discrepancies;
        if (!first_counterexample)
            first_counterexample = "n=" + std::to_string(n) + " t=" + std::to_string(t) + " d="
                                   + std::to_string(d) + ": " + what;
    }

    void expect(bool ok, const std::string& check, const std::string& what)
    {
        ++checks[check];
        if (!ok)
            fail(check + ": " + what);
    }
};

inline void to_json(nlohmann::json& j, const PointReport& r)
{
    j = {{"schema_version", schema_version},
         {"n", r.n},
         {"t", r.t},
         {"d", r.d},
         {"shift_order", r.shift_order},
         {"category_cydim", detail::optional_json(r.category_cydim)},
         {"minimal_objects", r.minimal_objects},
         {"checks", r.checks},
         {"discrepancies", r.discrepancies},
         {"first_counterexample", detail::optional_json(r.first_counterexample)}};
}

inline void from_json(const nlohmann::json& j, PointReport& r)
{
    r.n = j.at("n").get<int>();
    r.t = j.at("t").get<int>();
    r.d = j.at("d").get<int>();
    r.shift_order = j.at("shift_order").get<int>();
    r.category_cydim = detail::optional_from<int>(j.at("category_cydim"));
    r.minimal_objects = j.at("minimal_objects").get<std::size_t>();
    r.checks = j.at("checks").get<std::map<std::string, long>>();
    r.discrepancies = j.at("discrepancies").get<long>();
    r.first_counterexample = detail::optional_from<std::string>(j.at("first_counterexample"));
}

struct SweepOptions {
    int hom_max = 8; ///< Serre-duality checks only when n, t <= hom_max
};

inline bool within_hom_budget(const AlgebraParams& A, const SweepOptions& opts)
{
    return A.n <= opts.hom_max && A.t <= opts.hom_max;
}

/// Runs every check at (A, d).  `table` enables the hom-space checks; the
/// degree-independent Serre-duality and field checks run when d == 0.
inline PointReport verify_point(const AlgebraParams& A, int d, const StableHomTable<Rational>* table = nullptr)
{
    PointReport r;
    r.n = A.n;
    r.t = A.t;
    r.d = d;
    r.shift_order = shift_order_global(A);
    const CategoryReport category = category_report(A);
    r.category_cydim = category.cydim;

    const ClassificationResult closed = minimal_cy_modules(A, d);
    const std::vector<StableObject> oracle = minimal_cy_from_orbits(A, d);
    r.minimal_objects = closed.minimal_objects.size();
    r.expect(closed.minimal_objects == oracle, "closed_form_vs_orbits",
             "closed form lists " + std::to_string(closed.minimal_objects.size()) + " objects, orbits give "
                 + std::to_string(oracle.size()));

    std::vector<int> cover(all_modules(A).size(), 0);
    for (const auto& M : closed.minimal_objects) {
        const std::string name = to_string(M);
        r.expect(check_minimality(A, M, d), "minimality", name + " has no canonical order");
        r.expect(M.size() == static_cast<std::size_t>(closed.bigN)
                     || M.size() == 2 * static_cast<std::size_t>(closed.bigN),
                 "summand_count", name + " has " + std::to_string(M.size()) + " summands, N = "
                                      + std::to_string(closed.bigN));
        for (const auto& s : M)
            ++cover[module_index(A, s)];

        const auto dim = cy_dimension(A, M);
        const auto lower = summand_count_degree_bound(A, static_cast<int>(M.size()));
        const int order = shift_order(A, M);
        r.expect(dim && *dim < order && order <= 2 * A.n, "cydim_order_bound",
                 name + " violates CYdim < o([1]_M) <= 2n");
        // The lower bound is about M as a minimal CYdim(M)-th CY object; a
        // module minimal at d can be CY, but not minimal, in a smaller degree.
        if (dim && *dim == d)
            r.expect(lower && *lower <= *dim, "cydim_lower_bound",
                     name + " violates min{d : N(d) or 2N(d) = c(M)} <= CYdim");
    }
    bool partition = true;
    for (int c : cover)
        partition = partition && c == 1;
    r.expect(partition, "disjoint_cover", "minimal objects do not partition the indecomposables");

    for (const auto& X : all_modules(A)) {
        const bool cy = is_d_cy(A, X, d);
        r.expect(ar_triangle_check(A, X, d) == cy, "ar_triangle", to_string(X));
        if (cy) {
            const auto middle = middle_term_cy_check(A, X, d);
            if (middle)
                r.expect(*middle, "ar_middle_term", "middle term at " + to_string(X) + " is not CY");
        }
    }

    if (table) {
        for (const auto& M : closed.minimal_objects)
            r.expect(cy_dim_symmetry_check(*table, M, d), "cy_dim_symmetry", to_string(M));
        if (d == 0) {
            for (const auto& X : table->modules())
                for (const auto& Y : table->modules())
                    r.expect(serre_duality_check(*table, X, Y), "serre_duality",
                             to_string(X) + ", " + to_string(Y));
            const StableHomTable<SmallPrimeField> mod_p(A);
            bool agree = true;
            for (const auto& X : table->modules())
                for (const auto& Y : table->modules())
                    agree = agree && mod_p.report(X, Y) == table->report(X, Y);
            r.expect(agree, "prime_field_agreement", "stable dimensions differ over Z/32003");
        }
    }
    return r;
}

/// All degrees d in [0, o([1])) for one algebra, skipping those in `skip`.
inline std::vector<PointReport> verify_algebra(const AlgebraParams& A, const SweepOptions& opts,
                                               const std::vector<int>& skip = {})
{
    std::vector<PointReport> out;
    std::unique_ptr<StableHomTable<Rational>> table;
    const int period = shift_order_global(A);
    for (int d = 0; d < period; ++d) {
        if (std::find(skip.begin(), skip.end(), d) != skip.end())
            continue;
        if (!table && within_hom_budget(A, opts))
            table = std::make_unique<StableHomTable<Rational>>(A);
        out.push_back(verify_point(A, d, table.get()));
    }
    return out;
}

} // namespace nakayama
