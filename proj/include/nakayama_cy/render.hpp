#pragma once

// Text, CSV and JSON renderings of the CLI commands.  CSV column orders:
//
//   classify  n,t,d,case,bigN,object,summands,cydim
//   category  n,t,is_cy_category,cydim,witness_m,module,module_cydim
//   cydim     n,t,object,cydim
//   orbits    n,t,d,orbit,position,i,l
//   homcheck  n,t,x,y,stable_dim_xy,stable_dim_y_fx,pass

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "classification.hpp"
#include "homspace.hpp"
#include "orbit_oracle.hpp"
#include "serialization.hpp"

namespace nakayama {

enum class Format { table, json, csv };

namespace detail {

inline std::string algebra_name(const AlgebraParams& A)
{
    return "Lambda(" + std::to_string(A.n) + "," + std::to_string(A.t) + ")";
}

inline std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

inline std::string dump(const OutputRecord& r) { return nlohmann::json(r).dump(2) + "\n"; }

} // namespace detail

inline std::string render_classify(const ClassificationResult& result, Format format)
{
    const AlgebraParams& A = result.algebra;
    std::vector<std::optional<int>> dims;
    for (const auto& M : result.minimal_objects)
        dims.push_back(cy_dimension(A, M));

    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t k = 0; k < dims.size(); ++k)
            rows.push_back({{"object", to_string(result.minimal_objects[k])},
                            {"summands", result.minimal_objects[k].size()},
                            {"cydim", detail::optional_json(dims[k])}});
        return detail::dump({"classify", A, result.d, {{"result", result}, {"rows", rows}}});
    }
    case Format::csv:
        out << "n,t,d,case,bigN,object,summands,cydim\n";
        for (std::size_t k = 0; k < dims.size(); ++k)
            out << A.n << ',' << A.t << ',' << result.d << ',' << to_string(result.case_tag) << ','
                << result.bigN << ',' << to_string(result.minimal_objects[k]) << ','
                << result.minimal_objects[k].size() << ',' << detail::opt_str(dims[k]) << '\n';
        return out.str();
    case Format::table: {
        std::size_t width = 6;
        for (const auto& M : result.minimal_objects)
            width = std::max(width, to_string(M).size());
        out << detail::algebra_name(A) << "  d=" << result.d << "  case=" << to_string(result.case_tag)
            << "  N=" << result.bigN << "  objects=" << result.minimal_objects.size() << '\n';
        out << std::left << std::setw(static_cast<int>(width) + 2) << "object" << std::setw(10) << "summands"
            << "cydim\n";
        for (std::size_t k = 0; k < dims.size(); ++k)
            out << std::setw(static_cast<int>(width) + 2) << to_string(result.minimal_objects[k])
                << std::setw(10) << result.minimal_objects[k].size()
                << (dims[k] ? std::to_string(*dims[k]) : "-") << '\n';
        return out.str();
    }
    }
    return {};
}

inline std::string render_category(const CategoryReport& r, Format format)
{
    const AlgebraParams& A = r.algebra;
    std::ostringstream out;
    switch (format) {
    case Format::json:
        return detail::dump({"category", A, std::nullopt, r});
    case Format::csv:
        out << "n,t,is_cy_category,cydim,witness_m,module,module_cydim\n";
        if (r.indecomposable_cy.empty())
            out << A.n << ',' << A.t << ',' << r.is_cy_category << ',' << detail::opt_str(r.cydim) << ','
                << detail::opt_str(r.witness_m) << ",,\n";
        for (const auto& c : r.indecomposable_cy)
            out << A.n << ',' << A.t << ',' << r.is_cy_category << ',' << detail::opt_str(r.cydim) << ','
                << detail::opt_str(r.witness_m) << ',' << to_string(c.module) << ',' << c.cydim << '\n';
        return out.str();
    case Format::table:
        out << detail::algebra_name(A) << "  o([1])=" << r.shift_order << '\n';
        out << "Calabi-Yau category: " << (r.is_cy_category ? "yes" : "no") << '\n';
        if (r.cydim)
            out << "CY dimension: " << *r.cydim << '\n';
        if (r.witness_m)
            out << "witness m: " << *r.witness_m << '\n';
        out << "naturality on irreducible maps: " << (r.naturality_checked ? "checked" : "not checked") << '\n';
        if (r.indecomposable_cy.empty()) {
            out << "indecomposable CY modules: none\n";
        } else {
            out << "indecomposable CY modules (" << r.indecomposable_cy.size() << "):\n";
            for (const auto& c : r.indecomposable_cy)
                out << "  " << to_string(c.module) << "  cydim " << c.cydim << '\n';
        }
        if (!r.decomposable_minimal_cy_case_ii.empty()) {
            out << "decomposable minimal CY modules (" << r.decomposable_minimal_cy_case_ii.size() << "):\n";
            for (const auto& M : r.decomposable_minimal_cy_case_ii)
                out << "  " << to_string(M) << '\n';
        }
        return out.str();
    }
    return {};
}

inline std::string render_cydim(const AlgebraParams& A, const StableObject& X, Format format)
{
    const auto dim = cy_dimension(A, X);
    std::ostringstream out;
    switch (format) {
    case Format::json:
        return detail::dump({"cydim", A, std::nullopt,
                             {{"object", X}, {"text", to_string(X)}, {"cydim", detail::optional_json(dim)}}});
    case Format::csv:
        out << "n,t,object,cydim\n" << A.n << ',' << A.t << ',' << to_string(X) << ',' << detail::opt_str(dim) << '\n';
        return out.str();
    case Format::table:
        out << (dim ? std::to_string(*dim) : std::string("not Calabi-Yau")) << '\n';
        return out.str();
    }
    return {};
}

inline std::string render_orbits(const AlgebraParams& A, int d, const std::vector<OrbitRecord>& orbits,
                                 Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::json:
        return detail::dump({"orbits", A, d, {{"orbits", orbits}}});
    case Format::csv:
        out << "n,t,d,orbit,position,i,l\n";
        for (std::size_t k = 0; k < orbits.size(); ++k)
            for (std::size_t p = 0; p < orbits[k].elements.size(); ++p)
                out << A.n << ',' << A.t << ',' << d << ',' << k << ',' << p << ',' << orbits[k].elements[p].top
                    << ',' << orbits[k].elements[p].length << '\n';
        return out.str();
    case Format::table:
        out << detail::algebra_name(A) << "  d=" << d << "  orbits=" << orbits.size() << '\n';
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            out << "orbit " << k + 1 << " (size " << orbits[k].elements.size() << "):";
            for (const auto& X : orbits[k].elements)
                out << ' ' << to_string(X);
            out << '\n';
        }
        return out.str();
    }
    return {};
}

struct HomcheckEntry {
    IndecModule x;
    IndecModule y;
    std::size_t lhs = 0; ///< stable dim Hom(x, y)
    std::size_t rhs = 0; ///< stable dim Hom(y, F x)
    bool pass() const { return lhs == rhs; }
};

inline std::vector<HomcheckEntry> homcheck(const StableHomTable<Rational>& table)
{
    std::vector<HomcheckEntry> out;
    const AlgebraParams& A = table.algebra();
    for (const auto& X : table.modules())
        for (const auto& Y : table.modules())
            out.push_back({X, Y, table.stable_dim(X, Y), table.stable_dim(Y, serre(A, X))});
    return out;
}

inline std::string render_homcheck(const AlgebraParams& A, const std::vector<HomcheckEntry>& entries,
                                   Format format)
{
    std::size_t failures = 0;
    for (const auto& e : entries)
        failures += e.pass() ? 0 : 1;
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::json failed = nlohmann::json::array();
        for (const auto& e : entries)
            if (!e.pass())
                failed.push_back({{"x", e.x}, {"y", e.y}, {"lhs", e.lhs}, {"rhs", e.rhs}});
        return detail::dump({"homcheck", A, std::nullopt,
                             {{"pairs", entries.size()}, {"failures", failed}, {"passed", failures == 0}}});
    }
    case Format::csv:
        out << "n,t,x,y,stable_dim_xy,stable_dim_y_fx,pass\n";
        for (const auto& e : entries)
            out << A.n << ',' << A.t << ',' << to_string(e.x) << ',' << to_string(e.y) << ',' << e.lhs << ','
                << e.rhs << ',' << e.pass() << '\n';
        return out.str();
    case Format::table: {
        const auto modules = all_modules(A);
        out << detail::algebra_name(A) << "  Serre duality dim Hom(X,Y) = dim Hom(Y,FX)  ('.' pass, 'X' fail)\n";
        out << std::left << std::setw(10) << "";
        for (const auto& Y : modules)
            out << std::setw(8) << to_string(Y);
        out << '\n';
        for (std::size_t a = 0; a < modules.size(); ++a) {
            out << std::setw(10) << to_string(modules[a]);
            for (std::size_t b = 0; b < modules.size(); ++b)
                out << std::setw(8) << (entries[a * modules.size() + b].pass() ? "." : "X");
            out << '\n';
        }
        out << entries.size() - failures << '/' << entries.size() << " pairs pass\n";
        return out.str();
    }
    }
    return {};
}

} // namespace nakayama
