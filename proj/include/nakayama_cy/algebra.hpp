#pragma once

// Index-level model of the stable module category of the self-injective
// Nakayama algebra Lambda(n, t) = k Z_n / J^t.
//
// Every non-projective indecomposable is uniserial and is determined by its
// top S(i) and Loewy length l, 1 <= l <= t-1.  The functors of the stable
// category (syzygy, Nakayama, AR translate, Serre functor) permute these
// labels, so they are modelled as closed-form maps on (i, l).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace nakayama {

struct AlgebraParams {
    int n = 1; ///< vertices of the cyclic quiver
    int t = 2; ///< Loewy length of the projectives (paths of length t vanish)

    friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

inline AlgebraParams make_algebra(int n, int t)
{
    if (n < 1)
        throw ValidationError("n must be >= 1 (got " + std::to_string(n) + ")");
    if (t < 2)
        throw ValidationError("t must be >= 2 (got " + std::to_string(t) + ")");
    return AlgebraParams{n, t};
}

/// Least non-negative residue of `value` modulo `n`.
constexpr int residue(std::int64_t value, int n)
{
    const std::int64_t r = value % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

/// Non-projective indecomposable S_i^l.  Ordered by (length, top), which is
/// the order used for canonical representatives everywhere in the library.
struct IndecModule {
    int top = 0;
    int length = 1;

    friend constexpr bool operator==(const IndecModule&, const IndecModule&) = default;
    friend constexpr std::strong_ordering operator<=>(const IndecModule& a, const IndecModule& b)
    {
        if (auto c = a.length <=> b.length; c != 0)
            return c;
        return a.top <=> b.top;
    }
};

inline IndecModule make_module(const AlgebraParams& A, std::int64_t top, int length)
{
    if (length < 1 || length > A.t - 1)
        throw ValidationError("Loewy length " + std::to_string(length) + " outside [1, "
                              + std::to_string(A.t - 1) + "] for t = " + std::to_string(A.t));
    return IndecModule{residue(top, A.n), length};
}

inline bool is_valid(const AlgebraParams& A, const IndecModule& X)
{
    return X.top >= 0 && X.top < A.n && X.length >= 1 && X.length <= A.t - 1;
}

inline int socle(const AlgebraParams& A, const IndecModule& X)
{
    return residue(std::int64_t{X.top} + X.length - 1, A.n);
}

inline std::string to_string(const IndecModule& X)
{
    return "S[" + std::to_string(X.top) + "," + std::to_string(X.length) + "]";
}

/// Any indecomposable of Lambda-mod, projectives S_i^t included.  Used where
/// the stable category is not enough (irreducible maps, matrix models).
struct ModuleLabel {
    int top = 0;
    int length = 1;

    friend constexpr bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
    friend constexpr std::strong_ordering operator<=>(const ModuleLabel& a, const ModuleLabel& b)
    {
        if (auto c = a.length <=> b.length; c != 0)
            return c;
        return a.top <=> b.top;
    }
};

inline ModuleLabel make_label(const AlgebraParams& A, std::int64_t top, int length)
{
    if (length < 1 || length > A.t)
        throw ValidationError("Loewy length " + std::to_string(length) + " outside [1, "
                              + std::to_string(A.t) + "]");
    return ModuleLabel{residue(top, A.n), length};
}

inline bool is_projective(const AlgebraParams& A, const ModuleLabel& M) { return M.length == A.t; }

inline ModuleLabel label_of(const IndecModule& X) { return {X.top, X.length}; }

inline IndecModule to_stable(const AlgebraParams& A, const ModuleLabel& M)
{
    return make_module(A, M.top, M.length);
}

inline std::string to_string(const ModuleLabel& M)
{
    return "S[" + std::to_string(M.top) + "," + std::to_string(M.length) + "]";
}

/// All n(t-1) non-projective indecomposables, sorted by (length, top).
inline std::vector<IndecModule> all_modules(const AlgebraParams& A)
{
    std::vector<IndecModule> out;
    out.reserve(static_cast<std::size_t>(A.n) * (A.t - 1));
    for (int l = 1; l <= A.t - 1; ++l)
        for (int i = 0; i < A.n; ++i)
            out.push_back({i, l});
    return out;
}

/// Dense index of X in all_modules(A).
inline std::size_t module_index(const AlgebraParams& A, const IndecModule& X)
{
    return static_cast<std::size_t>(X.length - 1) * A.n + X.top;
}

/// Object of the stable category up to isomorphism: a finite multiset of
/// indecomposables, kept sorted so that isomorphism is plain equality.
class StableObject {
public:
    StableObject() = default;
    explicit StableObject(std::vector<IndecModule> summands) : summands_(std::move(summands))
    {
        std::sort(summands_.begin(), summands_.end());
    }
    StableObject(std::initializer_list<IndecModule> summands)
        : StableObject(std::vector<IndecModule>(summands))
    {
    }

    const std::vector<IndecModule>& summands() const noexcept { return summands_; }
    std::size_t size() const noexcept { return summands_.size(); }
    bool empty() const noexcept { return summands_.empty(); }
    auto begin() const noexcept { return summands_.begin(); }
    auto end() const noexcept { return summands_.end(); }

    bool multiplicity_free() const
    {
        return std::adjacent_find(summands_.begin(), summands_.end()) == summands_.end();
    }

    bool contains(const IndecModule& X) const
    {
        return std::binary_search(summands_.begin(), summands_.end(), X);
    }

    friend bool operator==(const StableObject&, const StableObject&) = default;
    friend auto operator<=>(const StableObject&, const StableObject&) = default;

private:
    std::vector<IndecModule> summands_;
};

inline std::string to_string(const StableObject& X)
{
    if (X.empty())
        return "0";
    std::string out;
    for (const auto& s : X) {
        if (!out.empty())
            out += '+';
        out += to_string(s);
    }
    return out;
}

/// Apply an object map summand-wise.
template <class Map>
StableObject apply(const StableObject& X, Map&& map)
{
    std::vector<IndecModule> image;
    image.reserve(X.size());
    for (const auto& s : X)
        image.push_back(map(s));
    return StableObject(std::move(image));
}

// ---------------------------------------------------------------------------
// Functors on objects
// ---------------------------------------------------------------------------

/// Omega^k for any integer k.  With k = -2m the module keeps its length and
/// the top moves by -mt; with k = -(2m-1) it becomes S_{i+l-mt}^{t-l}.
inline IndecModule omega_pow(const AlgebraParams& A, const IndecModule& X, int k)
{
    const std::int64_t t = A.t;
    if (k % 2 == 0) {
        const std::int64_t m = -static_cast<std::int64_t>(k) / 2;
        return IndecModule{residue(X.top - m * t, A.n), X.length};
    }
    const std::int64_t m = (1 - static_cast<std::int64_t>(k)) / 2;
    return IndecModule{residue(X.top + X.length - m * t, A.n), A.t - X.length};
}

inline IndecModule nakayama(const AlgebraParams& A, const IndecModule& X)
{
    return IndecModule{residue(std::int64_t{X.top} + 1 - A.t, A.n), X.length};
}

/// Suspension [k] = Omega^{-k}.
inline IndecModule shift(const AlgebraParams& A, const IndecModule& X, int k)
{
    return omega_pow(A, X, -k);
}

/// tau = Omega^2 N; acts as S_i^l -> S_{i+1}^l.
inline IndecModule ar_translate(const AlgebraParams& A, const IndecModule& X)
{
    return omega_pow(A, nakayama(A, X), 2);
}

/// Serre functor F = [1] tau.
inline IndecModule serre(const AlgebraParams& A, const IndecModule& X)
{
    return shift(A, ar_translate(A, X), 1);
}

/// G_d = [-d] F = Omega^{d+1} N.  Minimal d-CY objects are sums over G_d-orbits.
inline IndecModule g_functor(const AlgebraParams& A, const IndecModule& X, int d)
{
    return omega_pow(A, nakayama(A, X), d + 1);
}

inline StableObject shift(const AlgebraParams& A, const StableObject& X, int k)
{
    return apply(X, [&](const IndecModule& s) { return shift(A, s, k); });
}

inline StableObject serre(const AlgebraParams& A, const StableObject& X)
{
    return apply(X, [&](const IndecModule& s) { return serre(A, s); });
}

/// Order o([1]) of the suspension on the whole stable category.
inline int shift_order_global(const AlgebraParams& A)
{
    if (A.t == 2)
        return A.n;
    int m = 1;
    while ((static_cast<std::int64_t>(m) * A.t) % A.n != 0)
        ++m;
    return 2 * m;
}

/// Minimal r >= 1 with step^r(X) = X; std::nullopt if none is found within
/// `max_steps` iterations (cannot happen for the functors above, which are
/// permutations of a finite set).
template <class Step>
std::optional<int> relative_order(const IndecModule& X, Step&& step, int max_steps = 1 << 20)
{
    IndecModule cur = step(X);
    for (int r = 1; r <= max_steps; ++r, cur = step(cur))
        if (cur == X)
            return r;
    return std::nullopt;
}

template <class Step>
std::optional<int> relative_order(const StableObject& X, Step&& step, int max_steps = 1 << 20)
{
    StableObject cur = apply(X, step);
    for (int r = 1; r <= max_steps; ++r, cur = apply(cur, step))
        if (cur == X)
            return r;
    return std::nullopt;
}

/// o([1]_X).
inline int shift_order(const AlgebraParams& A, const IndecModule& X)
{
    return *relative_order(X, [&](const IndecModule& s) { return shift(A, s, 1); });
}

inline int shift_order(const AlgebraParams& A, const StableObject& X)
{
    return *relative_order(X, [&](const IndecModule& s) { return shift(A, s, 1); });
}

/// Lambda(n, t) is symmetric iff n | t-1.
inline bool is_symmetric(const AlgebraParams& A)
{
    return (A.t - 1) % A.n == 0;
}

} // namespace nakayama
