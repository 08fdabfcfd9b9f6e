#include <catch_amalgamated.hpp>

#include <nakayama_cy/render.hpp>
#include <nakayama_cy/serialization.hpp>

using namespace nakayama;
using nlohmann::json;

TEST_CASE("JSON round trips", "[serialization]")
{
    const auto A = make_algebra(2, 4);
    CHECK(json(A).get<AlgebraParams>() == A);
    CHECK(json(IndecModule{1, 3}) == json::parse(R"({"i":1,"l":3})"));

    for (int d = 0; d < 4; ++d) {
        const auto r = minimal_cy_modules(make_algebra(4, 6), d);
        CHECK(json(r).get<ClassificationResult>() == r);
    }
    for (auto [n, t] : {std::pair{3, 4}, {4, 6}, {2, 4}, {5, 2}}) {
        const auto c = category_report(make_algebra(n, t));
        CHECK(json(c).get<CategoryReport>() == c);
    }
    const auto o = orbit(A, IndecModule{0, 1}, 3);
    const auto o2 = json(o).get<OrbitRecord>();
    CHECK(o2.elements == o.elements);
    CHECK(o2.representative == o.representative);
    const HomReport h{3, 1, 2};
    CHECK(json(h).get<HomReport>() == h);

    const OutputRecord rec{"classify", A, 3, json{{"x", 1}}};
    const json j = rec;
    CHECK(j.at("schema_version") == schema_version);
    CHECK(j.at("params").at("d") == 3);
    CHECK(j.get<OutputRecord>() == rec);
    const OutputRecord no_d{"category", A, std::nullopt, json::object()};
    CHECK(json(no_d).at("params").at("d").is_null());
    CHECK(json(no_d).get<OutputRecord>() == no_d);

    json bad = json(minimal_cy_modules(A, 3));
    bad["case"] = "odd";
    CHECK_THROWS_AS(bad.get<ClassificationResult>(), ValidationError);
}

TEST_CASE("object specifications", "[serialization]")
{
    const auto A = make_algebra(3, 4);
    CHECK(parse_object_spec(A, "0,2") == StableObject{IndecModule{0, 2}});
    CHECK(parse_object_spec(A, "2,1;0,3") == (StableObject{IndecModule{0, 3}, IndecModule{2, 1}}));
    for (const char* bad : {"", "0", "0,4", "3,1", "-1,1", "0,1;", "0;1", "a,b", "0,1x", "0,0"})
        CHECK_THROWS_AS(parse_object_spec(A, bad), ValidationError);
}

TEST_CASE("rendering", "[render]")
{
    const auto A = make_algebra(2, 4);
    const auto r = minimal_cy_modules(A, 3);

    const std::string csv = render_classify(r, Format::csv);
    CHECK(csv == "n,t,d,case,bigN,object,summands,cydim\n"
                 "2,4,3,odd-d,2,S[0,1]+S[1,1],2,1\n"
                 "2,4,3,odd-d,2,S[0,2]+S[1,2],2,0\n"
                 "2,4,3,odd-d,2,S[0,3]+S[1,3],2,1\n");
    CHECK(render_classify(r, Format::json) == render_classify(r, Format::json));

    const json j = json::parse(render_classify(r, Format::json));
    CHECK(j.at("command") == "classify");
    CHECK(j.at("payload").at("rows").size() == 3);
    CHECK(j.at("payload").at("result").get<ClassificationResult>() == r);

    CHECK(render_cydim(A, StableObject{IndecModule{0, 1}}, Format::table) == "not Calabi-Yau\n");
    CHECK(render_cydim(A, StableObject{IndecModule{0, 1}}, Format::csv) == "n,t,object,cydim\n2,4,S[0,1],\n");
    CHECK(render_cydim(make_algebra(3, 4), StableObject{IndecModule{0, 2}}, Format::table) == "2\n");

    const auto orbits = all_orbits(make_algebra(2, 3), 0);
    CHECK(render_orbits(make_algebra(2, 3), 0, orbits, Format::csv)
          == "n,t,d,orbit,position,i,l\n2,3,0,0,0,0,1\n2,3,0,0,1,1,2\n2,3,0,0,2,1,1\n2,3,0,0,3,0,2\n");

    const auto cat = render_category(category_report(make_algebra(3, 4)), Format::table);
    CHECK(cat.find("CY dimension: 5") != std::string::npos);

    const auto entries = homcheck(StableHomTable<Rational>(make_algebra(2, 3)));
    CHECK(entries.size() == 16);
    CHECK(render_homcheck(make_algebra(2, 3), entries, Format::table).find("16/16 pairs pass") != std::string::npos);
}
