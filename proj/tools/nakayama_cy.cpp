// nakayama-cy: command-line front end for the Calabi-Yau classification of
// the self-injective Nakayama algebras Lambda(n, t).
//
// Exit codes: 0 success, 1 verification discrepancy, 2 usage error.

#include <atomic>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <nakayama_cy/nakayama_cy.hpp>

namespace {

using namespace nakayama;

constexpr int exit_ok = 0;
constexpr int exit_discrepancy = 1;
constexpr int exit_usage = 2;

const std::map<std::string, Format> format_names{
    {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

struct AlgebraFlags {
    int n = 0;
    int t = 0;
    std::string format = "table";

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--n", n, "number of vertices of the cyclic quiver")->required();
        cmd->add_option("--t", t, "truncation exponent (Loewy length of projectives)")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
    }

    AlgebraParams algebra() const { return make_algebra(n, t); }
    Format fmt() const { return format_names.at(format); }
};

struct VerifyFlags {
    int n_min = 1;
    int n_max = 12;
    int t_min = 2;
    int t_max = 12;
    int jobs = 1;
    int hom_max = 8;
    std::string cache;
    bool no_cache = false;
};

int run_verify(const VerifyFlags& f)
{
    if (f.n_min < 1 || f.t_min < 2 || f.n_max < f.n_min || f.t_max < f.t_min || f.jobs < 1)
        throw ValidationError("need 1 <= n-min <= n-max, 2 <= t-min <= t-max, jobs >= 1");

    ResultCache cache(f.cache.empty() ? ResultCache::default_path() : std::filesystem::path(f.cache));
    const auto cached = f.no_cache ? std::map<ResultCache::Key, PointReport>{} : cache.load();

    std::vector<AlgebraParams> tasks;
    for (int n = f.n_min; n <= f.n_max; ++n)
        for (int t = f.t_min; t <= f.t_max; ++t)
            tasks.push_back(make_algebra(n, t));

    const SweepOptions opts{f.hom_max};
    std::vector<std::vector<PointReport>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            const AlgebraParams& A = tasks[k];
            std::vector<int> skip;
            for (int d = 0; d < shift_order_global(A); ++d)
                if (auto it = cached.find({A.n, A.t, d}); it != cached.end()) {
                    skip.push_back(d);
                    results[k].push_back(it->second);
                }
            for (auto& r : verify_algebra(A, opts, skip)) {
                if (!f.no_cache)
                    cache.append(r);
                results[k].push_back(std::move(r));
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < f.jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    long points = 0, from_cache = 0, checks = 0, discrepancies = 0;
    std::optional<std::string> first;
    for (auto& per_algebra : results) {
        std::sort(per_algebra.begin(), per_algebra.end(),
                  [](const PointReport& a, const PointReport& b) { return a.d < b.d; });
        for (const auto& r : per_algebra) {
            ++points;
            if (cached.count({r.n, r.t, r.d}))
                ++from_cache;
            for (const auto& [name, count] : r.checks)
                checks += count;
            discrepancies += r.discrepancies;
            if (!first && r.first_counterexample)
                first = r.first_counterexample;
        }
    }
    std::cout << "verify n=" << f.n_min << ".." << f.n_max << " t=" << f.t_min << ".." << f.t_max
              << " hom-max=" << f.hom_max << ": " << points << " points (" << from_cache << " cached), "
              << checks << " checks, " << discrepancies << " discrepancies\n";
    if (first)
        std::cout << "first counterexample: " << *first << '\n';
    return discrepancies == 0 ? exit_ok : exit_discrepancy;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Calabi-Yau modules over the self-injective Nakayama algebras Lambda(n,t)"};
    app.require_subcommand(1);

    AlgebraFlags classify_flags, category_flags, cydim_flags, orbits_flags, homcheck_flags;
    int classify_d = 0, orbits_d = 0;
    std::string object_spec;
    VerifyFlags verify_flags;

    auto* classify = app.add_subcommand("classify", "list the minimal d-th CY modules");
    classify_flags.add_to(classify);
    classify->add_option("--d", classify_d, "CY degree (negative values are reduced mod o([1]))")->required();

    auto* category = app.add_subcommand("category", "decide whether the stable category is Calabi-Yau");
    category_flags.add_to(category);

    auto* cydim = app.add_subcommand("cydim", "CY dimension of an object");
    cydim_flags.add_to(cydim);
    cydim->add_option("--object", object_spec, "summands as \"i,l;i,l;...\"")->required();

    auto* orbits = app.add_subcommand("orbits", "orbits of G = Omega^{d+1} N on the indecomposables");
    orbits_flags.add_to(orbits);
    orbits->add_option("--d", orbits_d, "CY degree")->required();

    auto* hc = app.add_subcommand("homcheck", "Serre-duality dimension check on all indecomposable pairs");
    homcheck_flags.add_to(hc);

    auto* verify = app.add_subcommand("verify", "sweep (n, t, d) and cross-check closed forms against oracles");
    verify->add_option("--n-min", verify_flags.n_min)->capture_default_str();
    verify->add_option("--n-max", verify_flags.n_max)->capture_default_str();
    verify->add_option("--t-min", verify_flags.t_min)->capture_default_str();
    verify->add_option("--t-max", verify_flags.t_max)->capture_default_str();
    verify->add_option("--jobs", verify_flags.jobs, "worker threads")->capture_default_str();
    verify->add_option("--hom-max", verify_flags.hom_max, "run hom-space checks only for n, t <= this")
        ->capture_default_str();
    verify->add_option("--cache", verify_flags.cache, "cache file (default $NAKAYAMA_CY_CACHE or ./cy-cache.jsonl)");
    verify->add_flag("--no-cache", verify_flags.no_cache, "neither read nor write the cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*classify) {
            const auto A = classify_flags.algebra();
            std::cout << render_classify(minimal_cy_modules(A, classify_d), classify_flags.fmt());
        } else if (*category) {
            const auto A = category_flags.algebra();
            std::cout << render_category(category_report(A), category_flags.fmt());
        } else if (*cydim) {
            const auto A = cydim_flags.algebra();
            std::cout << render_cydim(A, parse_object_spec(A, object_spec), cydim_flags.fmt());
        } else if (*orbits) {
            const auto A = orbits_flags.algebra();
            std::cout << render_orbits(A, orbits_d, all_orbits(A, orbits_d), orbits_flags.fmt());
        } else if (*hc) {
            const auto A = homcheck_flags.algebra();
            const auto entries = homcheck(StableHomTable<Rational>(A));
            std::cout << render_homcheck(A, entries, homcheck_flags.fmt());
            for (const auto& e : entries)
                if (!e.pass())
                    return exit_discrepancy;
        } else if (*verify) {
            return run_verify(verify_flags);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
