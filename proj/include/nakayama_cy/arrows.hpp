#pragma once

// Irreducible maps of Lambda(n, t)-mod and the action of the syzygy and
// Nakayama functors on them.
//
//   sigma(i, l) : S_i^l -> S_{i-1}^{l+1}   socle inclusion, 1 <= l <= t-1
//   p(i, l)     : S_i^l -> S_i^{l-1}       top projection,  2 <= l <= t
//
// A map whose domain or codomain is projective vanishes in the stable
// category; functors are only applied to the remaining "stable" arrows.
// Powers of Omega are computed by iterating the single-step rules.

#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace nakayama {

enum class ArrowKind { sigma, p };

struct IrreducibleMap {
    ArrowKind kind = ArrowKind::sigma;
    int top = 0;    ///< top of the domain
    int length = 1; ///< Loewy length of the domain

    friend constexpr bool operator==(const IrreducibleMap&, const IrreducibleMap&) = default;
    friend constexpr auto operator<=>(const IrreducibleMap&, const IrreducibleMap&) = default;
};

inline IrreducibleMap make_arrow(const AlgebraParams& A, ArrowKind kind, std::int64_t top, int length)
{
    const bool ok = kind == ArrowKind::sigma ? (length >= 1 && length <= A.t - 1)
                                             : (length >= 2 && length <= A.t);
    if (!ok)
        throw ValidationError("no irreducible map " + std::string(kind == ArrowKind::sigma ? "sigma" : "p")
                              + " with domain length " + std::to_string(length) + " for t = "
                              + std::to_string(A.t));
    return IrreducibleMap{kind, residue(top, A.n), length};
}

inline ModuleLabel domain(const IrreducibleMap& f) { return {f.top, f.length}; }

inline ModuleLabel codomain(const AlgebraParams& A, const IrreducibleMap& f)
{
    if (f.kind == ArrowKind::sigma)
        return {residue(std::int64_t{f.top} - 1, A.n), f.length + 1};
    return {f.top, f.length - 1};
}

/// True iff neither endpoint is projective, i.e. f is nonzero in the stable category.
inline bool is_stable(const AlgebraParams& A, const IrreducibleMap& f)
{
    return !is_projective(A, domain(f)) && !is_projective(A, codomain(A, f));
}

inline std::string to_string(const IrreducibleMap& f)
{
    return std::string(f.kind == ArrowKind::sigma ? "sigma" : "p") + "(" + std::to_string(f.top) + ","
           + std::to_string(f.length) + ")";
}

/// Every irreducible map of Lambda-mod, in (kind, top, length) order.
inline std::vector<IrreducibleMap> all_arrows(const AlgebraParams& A)
{
    std::vector<IrreducibleMap> out;
    for (int i = 0; i < A.n; ++i)
        for (int l = 1; l <= A.t - 1; ++l)
            out.push_back({ArrowKind::sigma, i, l});
    for (int i = 0; i < A.n; ++i)
        for (int l = 2; l <= A.t; ++l)
            out.push_back({ArrowKind::p, i, l});
    return out;
}

/// Arrows of the stable AR quiver: sigma(i,l) with l <= t-2, p(i,l) with l <= t-1.
inline std::vector<IrreducibleMap> stable_arrows(const AlgebraParams& A)
{
    std::vector<IrreducibleMap> out;
    for (const auto& f : all_arrows(A))
        if (is_stable(A, f))
            out.push_back(f);
    return out;
}

namespace detail {

inline void require_stable(const AlgebraParams& A, const IrreducibleMap& f)
{
    if (!is_stable(A, f))
        throw ValidationError(to_string(f) + " touches a projective and is zero in the stable category");
}

inline ArrowKind swap_kind(ArrowKind k) { return k == ArrowKind::sigma ? ArrowKind::p : ArrowKind::sigma; }

} // namespace detail

/// Omega^{-1}: sigma(i,l) -> p(i+l-t, t-l), p(i,l) -> sigma(i+l-t, t-l).
inline IrreducibleMap cosyzygy(const AlgebraParams& A, const IrreducibleMap& f)
{
    detail::require_stable(A, f);
    return {detail::swap_kind(f.kind), residue(std::int64_t{f.top} + f.length - A.t, A.n), A.t - f.length};
}

/// Omega: sigma(i,l) -> p(i+l, t-l), p(i,l) -> sigma(i+l, t-l).
inline IrreducibleMap syzygy(const AlgebraParams& A, const IrreducibleMap& f)
{
    detail::require_stable(A, f);
    return {detail::swap_kind(f.kind), residue(std::int64_t{f.top} + f.length, A.n), A.t - f.length};
}

/// Omega^k on a stable arrow, by |k| single steps.
inline IrreducibleMap omega_pow(const AlgebraParams& A, const IrreducibleMap& f, int k)
{
    detail::require_stable(A, f);
    IrreducibleMap out = f;
    for (int s = 0; s < k; ++s)
        out = syzygy(A, out);
    for (int s = 0; s > k; --s)
        out = cosyzygy(A, out);
    return out;
}

/// N(sigma_i^l) = sigma_{i+1-t}^l, N(p_i^l) = p_{i+1-t}^l.  Defined on every
/// irreducible map, since N preserves projectivity.
inline IrreducibleMap nakayama(const AlgebraParams& A, const IrreducibleMap& f)
{
    return {f.kind, residue(std::int64_t{f.top} + 1 - A.t, A.n), f.length};
}

enum class ArrowFunctor { syzygy_power, nakayama };

/// Image of an irreducible map under Omega^k or N.
inline IrreducibleMap apply_functor_to_arrow(const AlgebraParams& A, const IrreducibleMap& f,
                                             ArrowFunctor which, int k = 1)
{
    if (which == ArrowFunctor::nakayama)
        return nakayama(A, f);
    return omega_pow(A, f, k);
}

} // namespace nakayama
