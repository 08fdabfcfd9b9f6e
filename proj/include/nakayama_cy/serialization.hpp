#pragma once

// JSON conversions (nlohmann::json ADL hooks) for the library's value types,
// plus the "S[i,l]" text notation and its parser.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "classification.hpp"
#include "homspace.hpp"
#include "orbit_oracle.hpp"

namespace nakayama {

inline constexpr const char* schema_version = "1";

inline void to_json(nlohmann::json& j, const AlgebraParams& A) { j = {{"n", A.n}, {"t", A.t}}; }
inline void from_json(const nlohmann::json& j, AlgebraParams& A)
{
    A = make_algebra(j.at("n").get<int>(), j.at("t").get<int>());
}

inline void to_json(nlohmann::json& j, const IndecModule& X) { j = {{"i", X.top}, {"l", X.length}}; }
inline void from_json(const nlohmann::json& j, IndecModule& X)
{
    X.top = j.at("i").get<int>();
    X.length = j.at("l").get<int>();
}

inline void to_json(nlohmann::json& j, const StableObject& X) { j = X.summands(); }
inline void from_json(const nlohmann::json& j, StableObject& X)
{
    X = StableObject(j.get<std::vector<IndecModule>>());
}

inline void to_json(nlohmann::json& j, const IndecCy& c) { j = {{"module", c.module}, {"cydim", c.cydim}}; }
inline void from_json(const nlohmann::json& j, IndecCy& c)
{
    c.module = j.at("module").get<IndecModule>();
    c.cydim = j.at("cydim").get<int>();
}

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<T>();
}

} // namespace detail

inline void to_json(nlohmann::json& j, const ClassificationResult& r)
{
    j = {{"algebra", r.algebra}, {"d", r.d},          {"case", to_string(r.case_tag)},
         {"bigN", r.bigN},       {"objects", r.minimal_objects}};
}

inline void from_json(const nlohmann::json& j, ClassificationResult& r)
{
    r.algebra = j.at("algebra").get<AlgebraParams>();
    r.d = j.at("d").get<int>();
    const auto tag = case_tag_from_string(j.at("case").get<std::string>());
    if (!tag)
        throw ValidationError("unknown case tag " + j.at("case").dump());
    r.case_tag = *tag;
    r.bigN = j.at("bigN").get<int>();
    r.minimal_objects = j.at("objects").get<std::vector<StableObject>>();
}

inline void to_json(nlohmann::json& j, const CategoryReport& r)
{
    j = {{"algebra", r.algebra},
         {"shift_order", r.shift_order},
         {"is_cy_category", r.is_cy_category},
         {"cydim", detail::optional_json(r.cydim)},
         {"witness_m", detail::optional_json(r.witness_m)},
         {"naturality_checked", r.naturality_checked},
         {"indecomposable_cy", r.indecomposable_cy},
         {"decomposable_minimal_cy", r.decomposable_minimal_cy_case_ii}};
}

inline void from_json(const nlohmann::json& j, CategoryReport& r)
{
    r.algebra = j.at("algebra").get<AlgebraParams>();
    r.shift_order = j.at("shift_order").get<int>();
    r.is_cy_category = j.at("is_cy_category").get<bool>();
    r.cydim = detail::optional_from<int>(j.at("cydim"));
    r.witness_m = detail::optional_from<int>(j.at("witness_m"));
    r.naturality_checked = j.at("naturality_checked").get<bool>();
    r.indecomposable_cy = j.at("indecomposable_cy").get<std::vector<IndecCy>>();
    r.decomposable_minimal_cy_case_ii = j.at("decomposable_minimal_cy").get<std::vector<StableObject>>();
}

inline void to_json(nlohmann::json& j, const OrbitRecord& o)
{
    j = {{"d", o.d}, {"representative", o.representative}, {"elements", o.elements}};
}

inline void from_json(const nlohmann::json& j, OrbitRecord& o)
{
    o.d = j.at("d").get<int>();
    o.representative = j.at("representative").get<IndecModule>();
    o.elements = j.at("elements").get<std::vector<IndecModule>>();
}

inline void to_json(nlohmann::json& j, const HomReport& r)
{
    j = {{"hom_dim", r.hom_dim}, {"proj_factor_dim", r.proj_factor_dim}, {"stable_dim", r.stable_dim}};
}

inline void from_json(const nlohmann::json& j, HomReport& r)
{
    r.hom_dim = j.at("hom_dim").get<std::size_t>();
    r.proj_factor_dim = j.at("proj_factor_dim").get<std::size_t>();
    r.stable_dim = j.at("stable_dim").get<std::size_t>();
}

/// Envelope for every machine-readable CLI output.
struct OutputRecord {
    std::string command;
    AlgebraParams algebra;
    std::optional<int> d;
    nlohmann::json payload;
    std::string schema = schema_version;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline void to_json(nlohmann::json& j, const OutputRecord& r)
{
    j = {{"command", r.command},
         {"params", {{"n", r.algebra.n}, {"t", r.algebra.t}, {"d", detail::optional_json(r.d)}}},
         {"payload", r.payload},
         {"schema_version", r.schema}};
}

inline void from_json(const nlohmann::json& j, OutputRecord& r)
{
    r.command = j.at("command").get<std::string>();
    const auto& p = j.at("params");
    r.algebra = make_algebra(p.at("n").get<int>(), p.at("t").get<int>());
    r.d = detail::optional_from<int>(p.at("d"));
    r.payload = j.at("payload");
    r.schema = j.at("schema_version").get<std::string>();
}

/// Parse "i,l;i,l;..." into a stable object; indices must already be in
/// range (0 <= i < n, 1 <= l <= t-1).
inline StableObject parse_object_spec(const AlgebraParams& A, std::string_view spec)
{
    std::vector<IndecModule> parts;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t end = std::min(spec.find(';', pos), spec.size());
        const std::string item(spec.substr(pos, end - pos));
        int i = 0, l = 0;
        char comma = 0, extra = 0;
        std::istringstream in(item);
        if (!(in >> i >> comma >> l) || comma != ',' || (in >> extra))
            throw ValidationError("malformed module \"" + item + "\", expected i,l");
        if (i < 0 || i >= A.n)
            throw ValidationError("top index " + std::to_string(i) + " outside [0, " + std::to_string(A.n - 1) + "]");
        parts.push_back(make_module(A, i, l));
        pos = end + 1;
    }
    return StableObject(std::move(parts));
}

} // namespace nakayama
