#include <catch_amalgamated.hpp>

#include <numeric>

#include <nakayama_cy/algebra.hpp>
#include <nakayama_cy/arrows.hpp>

using namespace nakayama;

namespace {

std::vector<AlgebraParams> small_algebras(int n_max = 12, int t_max = 12)
{
    std::vector<AlgebraParams> out;
    for (int n = 1; n <= n_max; ++n)
        for (int t = 2; t <= t_max; ++t)
            out.push_back(make_algebra(n, t));
    return out;
}

// Reference model: only the single step Omega^{-1}(S_i^l) = S_{i+l-t}^{t-l}
// is assumed; Omega is found by searching for the preimage.
IndecModule ref_cosyzygy(const AlgebraParams& A, const IndecModule& X)
{
    return IndecModule{residue(std::int64_t{X.top} + X.length - A.t, A.n), A.t - X.length};
}

IndecModule ref_syzygy(const AlgebraParams& A, const IndecModule& X)
{
    for (const auto& Y : all_modules(A))
        if (ref_cosyzygy(A, Y) == X)
            return Y;
    FAIL("Omega^{-1} is not surjective");
    return X;
}

IndecModule ref_omega_pow(const AlgebraParams& A, IndecModule X, int k)
{
    for (; k > 0; --k)
        X = ref_syzygy(A, X);
    for (; k < 0; ++k)
        X = ref_cosyzygy(A, X);
    return X;
}

} // namespace

TEST_CASE("parameters are validated", "[algebra]")
{
    CHECK_THROWS_AS(make_algebra(0, 3), ValidationError);
    CHECK_THROWS_AS(make_algebra(3, 1), ValidationError);
    const auto A = make_algebra(3, 4);
    CHECK_THROWS_AS(make_module(A, 0, 0), ValidationError);
    CHECK_THROWS_AS(make_module(A, 0, 4), ValidationError);
    CHECK(make_module(A, -1, 2) == IndecModule{2, 2});
    CHECK(make_module(A, 7, 3) == IndecModule{1, 3});
    CHECK(is_projective(A, make_label(A, 0, 4)));
    CHECK_THROWS_AS(make_label(A, 0, 5), ValidationError);
    CHECK(socle(A, IndecModule{0, 3}) == 2);
    CHECK(to_string(IndecModule{1, 2}) == "S[1,2]");
    CHECK(to_string(StableObject{}) == "0");
}

TEST_CASE("module enumeration", "[algebra]")
{
    const auto A = make_algebra(3, 4);
    const auto mods = all_modules(A);
    REQUIRE(mods.size() == 9);
    for (std::size_t k = 0; k < mods.size(); ++k)
        CHECK(module_index(A, mods[k]) == k);
    CHECK(mods.front() == IndecModule{0, 1});
    CHECK(mods.back() == IndecModule{2, 3});
}

TEST_CASE("stable objects are sorted multisets", "[algebra]")
{
    const StableObject a{IndecModule{1, 1}, IndecModule{0, 2}, IndecModule{0, 1}};
    const StableObject b{IndecModule{0, 1}, IndecModule{1, 1}, IndecModule{0, 2}};
    CHECK(a == b);
    CHECK(a.multiplicity_free());
    CHECK_FALSE((StableObject{IndecModule{0, 1}, IndecModule{0, 1}}).multiplicity_free());
    CHECK(a.contains(IndecModule{0, 2}));
    CHECK(to_string(a) == "S[0,1]+S[1,1]+S[0,2]");
}

TEST_CASE("functor values", "[algebra]")
{
    const auto A = make_algebra(3, 4);
    CHECK(omega_pow(A, IndecModule{0, 2}, 2) == IndecModule{1, 2});
    CHECK(omega_pow(A, IndecModule{0, 1}, -1) == IndecModule{0, 3});
    CHECK(omega_pow(A, IndecModule{0, 1}, 1) == IndecModule{1, 3});
    CHECK(nakayama::nakayama(A, IndecModule{0, 1}) == IndecModule{0, 1});
    CHECK(ar_translate(A, IndecModule{2, 3}) == IndecModule{0, 3});
    CHECK(serre(A, IndecModule{0, 1}) == IndecModule{1, 3});
    CHECK(serre(A, IndecModule{0, 2}) == IndecModule{2, 2});
    CHECK(shift_order_global(A) == 6);
    CHECK(shift_order(A, IndecModule{0, 2}) == 3);
    CHECK(shift_order(A, IndecModule{0, 1}) == 6);

    const auto B = make_algebra(2, 3);
    CHECK(g_functor(B, IndecModule{0, 1}, 0) == IndecModule{1, 2});
    CHECK(shift_order_global(make_algebra(5, 2)) == 5);
    CHECK(shift_order_global(make_algebra(4, 6)) == 4);
    CHECK(is_symmetric(make_algebra(3, 4)));
    CHECK_FALSE(is_symmetric(make_algebra(2, 4)));
}

TEST_CASE("Omega powers agree with the single-step reference model", "[algebra][property]")
{
    for (const auto& A : small_algebras(9, 9))
        for (const auto& X : all_modules(A))
            for (int k = -6; k <= 6; ++k)
                REQUIRE(omega_pow(A, X, k) == ref_omega_pow(A, X, k));
}

TEST_CASE("Omega powers compose", "[algebra][property]")
{
    for (const auto& A : small_algebras())
        for (const auto& X : all_modules(A))
            for (int a = -6; a <= 6; ++a)
                for (int b = -6; b <= 6; ++b)
                    REQUIRE(omega_pow(A, omega_pow(A, X, a), b) == omega_pow(A, X, a + b));
}

TEST_CASE("functor identities", "[algebra][property]")
{
    for (const auto& A : small_algebras()) {
        auto om = [&](const IndecModule& X) { return omega_pow(A, X, 1); };
        auto nk = [&](const IndecModule& X) { return nakayama::nakayama(A, X); };
        auto tau = [&](const IndecModule& X) { return ar_translate(A, X); };
        auto F = [&](const IndecModule& X) { return serre(A, X); };
        for (const auto& X : all_modules(A)) {
            // F = [1] tau = tau [1] = Omega N
            REQUIRE(F(X) == shift(A, tau(X), 1));
            REQUIRE(F(X) == tau(shift(A, X, 1)));
            REQUIRE(F(X) == om(nk(X)));
            REQUIRE(F(X) == IndecModule{residue(std::int64_t{X.top} + X.length + 1 - A.t, A.n), A.t - X.length});
            REQUIRE(tau(X) == IndecModule{residue(X.top + 1, A.n), X.length});

            REQUIRE(om(nk(X)) == nk(om(X)));
            REQUIRE(om(tau(X)) == tau(om(X)));
            REQUIRE(om(F(X)) == F(om(X)));
            REQUIRE(nk(tau(X)) == tau(nk(X)));
            REQUIRE(nk(F(X)) == F(nk(X)));
            REQUIRE(tau(F(X)) == F(tau(X)));

            IndecModule Y = X;
            for (int k = 0; k < A.n; ++k)
                Y = tau(Y);
            REQUIRE(Y == X);
        }
    }
}

TEST_CASE("shift order is the least global period", "[algebra][property]")
{
    for (const auto& A : small_algebras()) {
        const int o = shift_order_global(A);
        const auto mods = all_modules(A);
        auto fixes_all = [&](int k) {
            return std::all_of(mods.begin(), mods.end(), [&](const IndecModule& X) { return shift(A, X, k) == X; });
        };
        REQUIRE(fixes_all(o));
        for (int k = 1; k < o; ++k)
            REQUIRE_FALSE(fixes_all(k));
        int lcm = 1;
        for (const auto& X : mods) {
            const int r = shift_order(A, X);
            REQUIRE(o % r == 0);
            lcm = std::lcm(lcm, r);
        }
        REQUIRE(lcm == o);
        REQUIRE(o <= 2 * A.n);
    }
}

TEST_CASE("arrow enumeration", "[arrows]")
{
    const auto A = make_algebra(2, 3);
    CHECK(all_arrows(A).size() == 8);
    CHECK(stable_arrows(A).size() == 4);
    CHECK_THROWS_AS(make_arrow(A, ArrowKind::sigma, 0, 3), ValidationError);
    CHECK_THROWS_AS(make_arrow(A, ArrowKind::p, 0, 1), ValidationError);
    const auto s = make_arrow(A, ArrowKind::sigma, 0, 1);
    CHECK(codomain(A, s) == ModuleLabel{1, 2});
    CHECK(cosyzygy(A, s) == IrreducibleMap{ArrowKind::p, 0, 2});
    CHECK(syzygy(A, s) == IrreducibleMap{ArrowKind::p, 1, 2});
    CHECK(nakayama::nakayama(A, s) == IrreducibleMap{ArrowKind::sigma, 0, 1});
    CHECK_THROWS_AS(cosyzygy(A, make_arrow(A, ArrowKind::sigma, 0, 2)), ValidationError);
    CHECK_THROWS_AS(apply_functor_to_arrow(A, make_arrow(A, ArrowKind::p, 0, 3), ArrowFunctor::syzygy_power, -1),
                    ValidationError);
}

TEST_CASE("arrow functor values", "[arrows]")
{
    const auto A = make_algebra(3, 4);
    CHECK(apply_functor_to_arrow(A, make_arrow(A, ArrowKind::sigma, 0, 1), ArrowFunctor::syzygy_power, -2)
          == IrreducibleMap{ArrowKind::sigma, 2, 1});
    CHECK(apply_functor_to_arrow(A, make_arrow(A, ArrowKind::p, 0, 2), ArrowFunctor::syzygy_power, -1)
          == IrreducibleMap{ArrowKind::sigma, 1, 2});
    CHECK(apply_functor_to_arrow(A, make_arrow(A, ArrowKind::p, 0, 2), ArrowFunctor::nakayama)
          == IrreducibleMap{ArrowKind::p, 0, 2});

    const auto B = make_algebra(2, 4);
    CHECK(relative_order(IndecModule{0, 1}, [&](const IndecModule& X) { return g_functor(B, X, 3); }) == 2);
    CHECK(relative_order(IndecModule{0, 1}, [](const IndecModule& X) { return X; }) == 1);
}

TEST_CASE("arrow images connect the images of their endpoints", "[arrows][property]")
{
    for (const auto& A : small_algebras()) {
        for (const auto& f : all_arrows(A)) {
            const auto g = nakayama::nakayama(A, f);
            REQUIRE(domain(g) == make_label(A, std::int64_t{f.top} + 1 - A.t, f.length));
            REQUIRE(codomain(A, g).length == codomain(A, f).length);
        }
        for (const auto& f : stable_arrows(A)) {
            const IndecModule src = to_stable(A, domain(f));
            const IndecModule dst = to_stable(A, codomain(A, f));
            for (int k = -4; k <= 4; ++k) {
                const auto g = apply_functor_to_arrow(A, f, ArrowFunctor::syzygy_power, k);
                REQUIRE(is_stable(A, g));
                REQUIRE(domain(g) == label_of(omega_pow(A, src, k)));
                REQUIRE(codomain(A, g) == label_of(omega_pow(A, dst, k)));
            }
            REQUIRE(syzygy(A, cosyzygy(A, f)) == f);
            REQUIRE(nakayama::nakayama(A, cosyzygy(A, f)) == cosyzygy(A, nakayama::nakayama(A, f)));
        }
    }
}
