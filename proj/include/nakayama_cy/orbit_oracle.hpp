#pragma once

// Brute-force counterpart of classification.hpp.  Minimal d-th CY objects are
// the direct sums over finite orbits of G_d = [-d] F = Omega^{d+1} N acting
// on the indecomposables; here the orbits are enumerated by iterating G_d,
// with no use of the closed-form families.

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "classification.hpp"

namespace nakayama {

struct OrbitRecord {
    int d = 0;
    IndecModule representative;
    std::vector<IndecModule> elements; ///< X, G(X), G^2(X), ...

    friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// Shape X[d-1] -> Y -> X -> X[d] of the AR triangle ending at X, at object level.
struct ArTriangleShape {
    IndecModule end;
    IndecModule start;
    StableObject middle; ///< stable part of the middle term; empty for t = 2
};

inline OrbitRecord orbit(const AlgebraParams& A, const IndecModule& X, int d)
{
    OrbitRecord r;
    r.d = d;
    r.representative = X;
    IndecModule cur = X;
    do {
        r.elements.push_back(cur);
        cur = g_functor(A, cur, d);
    } while (cur != X);
    return r;
}

/// Orbit partition of all indecomposables; each orbit starts at its least
/// (length, top) member, orbits sorted by that member.
inline std::vector<OrbitRecord> all_orbits(const AlgebraParams& A, int d)
{
    const auto modules = all_modules(A);
    std::vector<char> seen(modules.size(), 0);
    std::vector<OrbitRecord> out;
    for (const auto& X : modules) {
        if (seen[module_index(A, X)])
            continue;
        out.push_back(orbit(A, X, d));
        for (const auto& Y : out.back().elements)
            seen[module_index(A, Y)] = 1;
    }
    return out;
}

inline std::vector<StableObject> minimal_cy_from_orbits(const AlgebraParams& A, int d)
{
    std::vector<StableObject> out;
    for (const auto& o : all_orbits(A, d))
        out.emplace_back(o.elements);
    std::sort(out.begin(), out.end());
    return out;
}

/// Cyclic order X_1, ..., X_r with F(X_j) = X_{j+1}[d], starting at the
/// least summand; std::nullopt if X is not multiplicity-free or the
/// summands do not form a single such cycle.
inline std::optional<std::vector<IndecModule>> canonical_order(const AlgebraParams& A,
                                                               const StableObject& X, int d)
{
    if (X.empty() || !X.multiplicity_free())
        return std::nullopt;
    std::vector<IndecModule> order{X.summands().front()};
    while (true) {
        const IndecModule target = serre(A, order.back());
        // the unique Y with Y[d] = F(X_j); [d] is a bijection
        const IndecModule next = shift(A, target, -d);
        if (next == order.front())
            break;
        if (!X.contains(next) || order.size() == X.size())
            return std::nullopt;
        order.push_back(next);
    }
    if (order.size() != X.size())
        return std::nullopt;
    return order;
}

inline bool check_minimality(const AlgebraParams& A, const StableObject& X, int d)
{
    return canonical_order(A, X, d).has_value();
}

/// tau X = X[d-1]: the object-level content of an AR triangle
/// X[d-1] -> Y -> X -> X[d].
inline bool ar_triangle_check(const AlgebraParams& A, const IndecModule& X, int d)
{
    return ar_translate(A, X) == shift(A, X, d - 1);
}

/// Middle term of the AR triangle ending at S_i^l: S_i^{l+1} and S_{i+1}^{l-1},
/// dropping the projective S^t and the zero module S^0.
inline ArTriangleShape ar_triangle_shape(const AlgebraParams& A, const IndecModule& X)
{
    ArTriangleShape shape;
    shape.end = X;
    shape.start = ar_translate(A, X);
    std::vector<IndecModule> middle;
    if (X.length + 1 <= A.t - 1)
        middle.push_back({X.top, X.length + 1});
    if (X.length - 1 >= 1)
        middle.push_back({residue(std::int64_t{X.top} + 1, A.n), X.length - 1});
    shape.middle = StableObject(std::move(middle));
    return shape;
}

/// Whether the middle term of the AR triangle ending at a d-th CY
/// indecomposable is again d-th CY; std::nullopt when the middle term is zero.
inline std::optional<bool> middle_term_cy_check(const AlgebraParams& A, const IndecModule& X, int d)
{
    if (!is_d_cy(A, X, d))
        throw PreconditionError(to_string(X) + " is not " + std::to_string(d) + "-th Calabi-Yau");
    const ArTriangleShape shape = ar_triangle_shape(A, X);
    if (shape.middle.empty())
        return std::nullopt;
    return is_d_cy(A, shape.middle, d);
}

} // namespace nakayama
