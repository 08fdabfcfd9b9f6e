#pragma once

// Explicit quiver representations of the Lambda(n, t)-modules S_i^l
// (projectives S_i^t included) and exact Hom / stable Hom dimensions.
//
// Basis of S_i^l: b_0, ..., b_{l-1} with b_u at vertex i+u mod n.  The
// arrow a_j : j -> j+1 sends b_u to b_{u+1} when b_u sits at vertex j and
// u+1 <= l-1, and to 0 otherwise.  Within a vertex, b_u has local index u/n.
//
// A homomorphism X -> Y is a family f_j : X_j -> Y_j with
// f_{j+1} a_j^X = a_j^Y f_j.  Its coordinates are the entries of the f_j,
// concatenated vertex by vertex in row-major order.  The stable Hom is Hom
// modulo the span of all composites X -> P(j) -> Y.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "algebra.hpp"
#include "arrows.hpp"
#include "classification.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace nakayama {

/// Scalars used for "rational" dimensions: fraction-free elimination over Z.
using Rational = CheckedInt;
/// Prime field used to cross-check that dimensions do not depend on the field.
using SmallPrimeField = ModP<32003>;

struct MatrixRep {
    ModuleLabel module;
    std::vector<int> vertex_dims;
    std::vector<Matrix<int>> arrow_maps; ///< arrow_maps[j] : V_j -> V_{j+1}

    int total_dim() const
    {
        int s = 0;
        for (int d : vertex_dims)
            s += d;
        return s;
    }
};

inline MatrixRep matrix_rep(const AlgebraParams& A, std::int64_t top, int length)
{
    const ModuleLabel label = make_label(A, top, length);
    const int n = A.n;
    MatrixRep rep;
    rep.module = label;
    rep.vertex_dims.assign(n, 0);
    for (int u = 0; u < label.length; ++u)
        ++rep.vertex_dims[(label.top + u) % n];
    for (int j = 0; j < n; ++j)
        rep.arrow_maps.emplace_back(rep.vertex_dims[(j + 1) % n], rep.vertex_dims[j]);
    for (int u = 0; u + 1 < label.length; ++u) {
        const int j = (label.top + u) % n;
        rep.arrow_maps[j](static_cast<std::size_t>((u + 1) / n), static_cast<std::size_t>(u / n)) = 1;
    }
    return rep;
}

inline MatrixRep matrix_rep(const AlgebraParams& A, const ModuleLabel& M)
{
    return matrix_rep(A, M.top, M.length);
}

/// Coordinate layout of Hom(X, Y).
struct HomLayout {
    std::vector<int> src_dims;
    std::vector<int> dst_dims;
    std::vector<std::size_t> offsets;
    std::size_t coords = 0;

    HomLayout() = default;
    HomLayout(const MatrixRep& X, const MatrixRep& Y) : src_dims(X.vertex_dims), dst_dims(Y.vertex_dims)
    {
        for (std::size_t j = 0; j < src_dims.size(); ++j) {
            offsets.push_back(coords);
            coords += static_cast<std::size_t>(src_dims[j]) * dst_dims[j];
        }
    }

    std::size_t index(std::size_t vertex, std::size_t dst_row, std::size_t src_col) const
    {
        return offsets[vertex] + dst_row * src_dims[vertex] + src_col;
    }
};

template <ExactScalar T>
struct HomSpace {
    HomLayout layout;
    std::vector<std::vector<T>> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

/// Linear system whose solutions are the homomorphisms X -> Y.
template <ExactScalar T>
Matrix<T> intertwiner_system(const MatrixRep& X, const MatrixRep& Y, const HomLayout& layout)
{
    const std::size_t n = X.vertex_dims.size();
    Matrix<T> sys(0, layout.coords);
    std::vector<T> row(layout.coords);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t next = (j + 1) % n;
        const Matrix<int>& ax = X.arrow_maps[j];
        const Matrix<int>& ay = Y.arrow_maps[j];
        // (f_next * ax - ay * f_j)(p, q) = 0, p over Y_next, q over X_j
        for (int p = 0; p < Y.vertex_dims[next]; ++p)
            for (int q = 0; q < X.vertex_dims[j]; ++q) {
                std::fill(row.begin(), row.end(), T(0));
                bool any = false;
                for (int r = 0; r < X.vertex_dims[next]; ++r)
                    if (ax(r, q) != 0) {
                        row[layout.index(next, p, r)] += T(ax(r, q));
                        any = true;
                    }
                for (int r = 0; r < Y.vertex_dims[j]; ++r)
                    if (ay(p, r) != 0) {
                        row[layout.index(j, r, q)] += T(-ay(p, r));
                        any = true;
                    }
                if (any)
                    sys.append_row(row);
            }
    }
    return sys;
}

template <ExactScalar T = Rational>
HomSpace<T> hom_space(const MatrixRep& X, const MatrixRep& Y)
{
    HomSpace<T> out;
    out.layout = HomLayout(X, Y);
    out.basis = nullspace(intertwiner_system<T>(X, Y, out.layout));
    return out;
}

/// Radical maps X -> Y: all maps if X and Y are non-isomorphic, the
/// nilpotent endomorphisms (those not hitting b_0 with b_0) if X = Y.
template <ExactScalar T = Rational>
HomSpace<T> radical_space(const MatrixRep& X, const MatrixRep& Y)
{
    if (!(X.module == Y.module))
        return hom_space<T>(X, Y);
    HomSpace<T> out;
    out.layout = HomLayout(X, Y);
    Matrix<T> sys = intertwiner_system<T>(X, Y, out.layout);
    std::vector<T> row(out.layout.coords, T(0));
    row[out.layout.index(static_cast<std::size_t>(X.module.top), 0, 0)] = T(1);
    sys.append_row(row);
    out.basis = nullspace(std::move(sys));
    return out;
}

template <ExactScalar T = Rational>
std::size_t hom_dim(const MatrixRep& X, const MatrixRep& Y)
{
    return hom_space<T>(X, Y).dim();
}

/// Coordinates of g o h, for h : X -> Y and g : Y -> Z.
template <ExactScalar T>
std::vector<T> compose(const HomLayout& g_layout, const std::vector<T>& g, const HomLayout& h_layout,
                       const std::vector<T>& h)
{
    const HomLayout out_layout = [&] {
        HomLayout l;
        l.src_dims = h_layout.src_dims;
        l.dst_dims = g_layout.dst_dims;
        for (std::size_t j = 0; j < l.src_dims.size(); ++j) {
            l.offsets.push_back(l.coords);
            l.coords += static_cast<std::size_t>(l.src_dims[j]) * l.dst_dims[j];
        }
        return l;
    }();
    std::vector<T> out(out_layout.coords, T(0));
    for (std::size_t j = 0; j < out_layout.src_dims.size(); ++j) {
        const int mid = h_layout.dst_dims[j];
        for (int p = 0; p < out_layout.dst_dims[j]; ++p)
            for (int q = 0; q < out_layout.src_dims[j]; ++q) {
                T acc(0);
                for (int r = 0; r < mid; ++r)
                    acc += g[g_layout.index(j, p, r)] * h[h_layout.index(j, r, q)];
                out[out_layout.index(j, p, q)] = acc;
            }
    }
    return out;
}

struct HomReport {
    std::size_t hom_dim = 0;
    std::size_t proj_factor_dim = 0;
    std::size_t stable_dim = 0;

    friend bool operator==(const HomReport&, const HomReport&) = default;
};

namespace detail {

/// Rank of the span of all composites g o h over the given intermediate spaces.
template <ExactScalar T>
std::size_t composite_rank(std::size_t coords,
                           const std::vector<std::pair<const HomSpace<T>*, const HomSpace<T>*>>& routes)
{
    Matrix<T> span(0, coords);
    for (const auto& [into, out_of] : routes)
        for (const auto& h : into->basis)
            for (const auto& g : out_of->basis)
                span.append_row(compose(out_of->layout, g, into->layout, h));
    return rank(std::move(span));
}

} // namespace detail

template <ExactScalar T = Rational>
HomReport stable_hom(const AlgebraParams& A, const MatrixRep& X, const MatrixRep& Y)
{
    const HomSpace<T> direct = hom_space<T>(X, Y);
    std::vector<HomSpace<T>> into, out_of;
    for (int j = 0; j < A.n; ++j) {
        const MatrixRep P = matrix_rep(A, j, A.t);
        into.push_back(hom_space<T>(X, P));
        out_of.push_back(hom_space<T>(P, Y));
    }
    std::vector<std::pair<const HomSpace<T>*, const HomSpace<T>*>> routes;
    for (int j = 0; j < A.n; ++j)
        routes.emplace_back(&into[j], &out_of[j]);
    HomReport r;
    r.hom_dim = direct.dim();
    r.proj_factor_dim = detail::composite_rank(direct.layout.coords, routes);
    r.stable_dim = r.hom_dim - r.proj_factor_dim;
    return r;
}

template <ExactScalar T = Rational>
HomReport stable_hom(const AlgebraParams& A, const IndecModule& X, const IndecModule& Y)
{
    return stable_hom<T>(A, matrix_rep(A, label_of(X)), matrix_rep(A, label_of(Y)));
}

/// Stable Hom dimensions between all non-projective indecomposables, with
/// the Hom spaces into and out of the projectives computed once.
template <ExactScalar T = Rational>
class StableHomTable {
public:
    explicit StableHomTable(const AlgebraParams& A) : A_(A), modules_(all_modules(A))
    {
        std::vector<MatrixRep> reps;
        std::vector<MatrixRep> projectives;
        for (const auto& X : modules_)
            reps.push_back(matrix_rep(A, label_of(X)));
        for (int j = 0; j < A.n; ++j)
            projectives.push_back(matrix_rep(A, j, A.t));

        const std::size_t count = modules_.size();
        std::vector<std::vector<HomSpace<T>>> into(count), out_of(count);
        for (std::size_t x = 0; x < count; ++x)
            for (const auto& P : projectives) {
                into[x].push_back(hom_space<T>(reps[x], P));
                out_of[x].push_back(hom_space<T>(P, reps[x]));
            }

        dims_.resize(count * count);
        for (std::size_t x = 0; x < count; ++x)
            for (std::size_t y = 0; y < count; ++y) {
                const HomSpace<T> direct = hom_space<T>(reps[x], reps[y]);
                std::vector<std::pair<const HomSpace<T>*, const HomSpace<T>*>> routes;
                for (int j = 0; j < A.n; ++j)
                    routes.emplace_back(&into[x][j], &out_of[y][j]);
                HomReport& r = dims_[x * count + y];
                r.hom_dim = direct.dim();
                r.proj_factor_dim = detail::composite_rank(direct.layout.coords, routes);
                r.stable_dim = r.hom_dim - r.proj_factor_dim;
            }
    }

    const AlgebraParams& algebra() const noexcept { return A_; }
    const std::vector<IndecModule>& modules() const noexcept { return modules_; }

    const HomReport& report(const IndecModule& X, const IndecModule& Y) const
    {
        return dims_[module_index(A_, X) * modules_.size() + module_index(A_, Y)];
    }
    std::size_t stable_dim(const IndecModule& X, const IndecModule& Y) const { return report(X, Y).stable_dim; }

    friend bool operator==(const StableHomTable& a, const StableHomTable& b)
    {
        return a.A_ == b.A_ && a.dims_ == b.dims_;
    }

private:
    AlgebraParams A_;
    std::vector<IndecModule> modules_;
    std::vector<HomReport> dims_;
};

/// Serre duality at the level of dimensions:
/// dim Hom(X, Y) = dim Hom(Y, F X) in the stable category.
template <ExactScalar T = Rational>
bool serre_duality_check(const AlgebraParams& A, const IndecModule& X, const IndecModule& Y)
{
    return stable_hom<T>(A, X, Y).stable_dim == stable_hom<T>(A, Y, serre(A, X)).stable_dim;
}

template <ExactScalar T>
bool serre_duality_check(const StableHomTable<T>& table, const IndecModule& X, const IndecModule& Y)
{
    return table.stable_dim(X, Y) == table.stable_dim(Y, serre(table.algebra(), X));
}

/// Dimension consequence of Hom(X, -) = D Hom(-, X[d]) for a d-th CY object:
/// sum_x dim Hom(x, Z) = sum_x dim Hom(Z, x[d]) for every indecomposable Z.
template <ExactScalar T>
bool cy_dim_symmetry_check(const StableHomTable<T>& table, const StableObject& X, int d)
{
    const AlgebraParams& A = table.algebra();
    if (!is_d_cy(A, X, d))
        throw PreconditionError(to_string(X) + " is not " + std::to_string(d) + "-th Calabi-Yau");
    for (const auto& Z : table.modules()) {
        std::size_t lhs = 0, rhs = 0;
        for (const auto& x : X) {
            lhs += table.stable_dim(x, Z);
            rhs += table.stable_dim(Z, shift(A, x, d));
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

template <ExactScalar T = Rational>
bool cy_dim_symmetry_check(const AlgebraParams& A, const StableObject& X, int d)
{
    if (!is_d_cy(A, X, d))
        throw PreconditionError(to_string(X) + " is not " + std::to_string(d) + "-th Calabi-Yau");
    return cy_dim_symmetry_check(StableHomTable<T>(A), X, d);
}

/// Irreducible maps ending at X: sigma(i+1, l-1) if l >= 2 and p(i, l+1).
/// The p arrow out of the projective S_i^t (l = t-1) is included; callers
/// can recognise it with is_stable().
inline std::vector<IrreducibleMap> irreducible_map_census(const AlgebraParams& A, const IndecModule& X)
{
    std::vector<IrreducibleMap> out;
    if (X.length >= 2)
        out.push_back(make_arrow(A, ArrowKind::sigma, std::int64_t{X.top} + 1, X.length - 1));
    out.push_back(make_arrow(A, ArrowKind::p, X.top, X.length + 1));
    return out;
}

/// dim rad(Y, X) / rad^2(Y, X), the number of arrows Y -> X in the AR quiver
/// of Lambda-mod, computed in the matrix model.
template <ExactScalar T = Rational>
std::size_t irreducible_dim(const AlgebraParams& A, const ModuleLabel& Y, const ModuleLabel& X)
{
    const MatrixRep y = matrix_rep(A, Y);
    const MatrixRep x = matrix_rep(A, X);
    const HomSpace<T> rad = radical_space<T>(y, x);
    std::vector<HomSpace<T>> into, out_of;
    for (int l = 1; l <= A.t; ++l)
        for (int i = 0; i < A.n; ++i) {
            const MatrixRep z = matrix_rep(A, i, l);
            into.push_back(radical_space<T>(y, z));
            out_of.push_back(radical_space<T>(z, x));
        }
    std::vector<std::pair<const HomSpace<T>*, const HomSpace<T>*>> routes;
    for (std::size_t k = 0; k < into.size(); ++k)
        routes.emplace_back(&into[k], &out_of[k]);
    return rad.dim() - detail::composite_rank(rad.layout.coords, routes);
}

} // namespace nakayama
