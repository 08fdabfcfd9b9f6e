#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include <nakayama_cy/cache.hpp>

using namespace nakayama;

namespace {

std::filesystem::path temp_path(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("nakayama-cy-" + name + "-" + std::to_string(::getpid()));
    std::filesystem::remove(p);
    return p;
}

} // namespace

TEST_CASE("sweep points are deterministic and clean", "[sweep]")
{
    for (const auto& [n, t] : {std::pair{2, 4}, {3, 4}, {4, 6}, {3, 2}, {1, 5}}) {
        const auto A = make_algebra(n, t);
        const auto a = verify_algebra(A, SweepOptions{});
        const auto b = verify_algebra(A, SweepOptions{});
        REQUIRE(a.size() == static_cast<std::size_t>(shift_order_global(A)));
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(nlohmann::json(a[k]) == nlohmann::json(b[k]));
            CHECK(a[k].discrepancies == 0);
        }
        CHECK(a.front().checks.count("serre_duality") == 1);
        CHECK(a.front().checks.count("prime_field_agreement") == 1);
    }
    const auto skipped = verify_algebra(make_algebra(3, 4), SweepOptions{0}, {0, 2});
    CHECK(skipped.size() == 4);
    CHECK(skipped.front().checks.count("serre_duality") == 0);
}

TEST_CASE("cache round trip", "[cache]")
{
    const auto path = temp_path("roundtrip");
    {
        ResultCache cache(path);
        CHECK(cache.load().empty());
        for (const auto& r : verify_algebra(make_algebra(2, 3), SweepOptions{}))
            cache.append(r);
    }
    {
        std::ofstream out(path, std::ios::app);
        out << "{\"schema_version\":\"0\",\"n\":9}\n";
        out << "{\"truncated\n";
    }
    const auto loaded = ResultCache(path).load();
    REQUIRE(loaded.size() == static_cast<std::size_t>(shift_order_global(make_algebra(2, 3))));
    const StableHomTable<Rational> table(make_algebra(2, 3));
    const auto fresh = verify_point(make_algebra(2, 3), 1, &table);
    const auto& cached = loaded.at({2, 3, 1});
    CHECK(cached.checks == fresh.checks);
    CHECK(cached.minimal_objects == fresh.minimal_objects);
    std::filesystem::remove(path);
}

TEST_CASE("cache path from the environment", "[cache]")
{
    ::setenv("NAKAYAMA_CY_CACHE", "/tmp/elsewhere.jsonl", 1);
    CHECK(ResultCache::default_path() == "/tmp/elsewhere.jsonl");
    ::unsetenv("NAKAYAMA_CY_CACHE");
    CHECK(ResultCache::default_path() == "cy-cache.jsonl");
}
