#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "pmet/generator.hpp"
#include "pmet/json_io.hpp"

using namespace pmet;

TEST_CASE("space documents round-trip byte-exactly") {
    const PMSpace pm2 = fixtures::pm2();
    const Json j = toJson(pm2);
    CHECK(spaceFromJson(j) == pm2);
    CHECK(canonicalDump(toJson(spaceFromJson(j))) == canonicalDump(j));
    CHECK(j["alpha"]["x|y"][0]["at"] == "2");
    CHECK(j["alpha"]["x|y"][0]["to"] == "1/2");
    CHECK(j["tnorm"] == "product");
}

TEST_CASE("family documents round-trip byte-exactly") {
    const LevelFamily f2 = fixtures::f2Family();
    const Json j = toJson(f2);
    CHECK(familyFromJson(j) == f2);
    CHECK(canonicalDump(toJson(familyFromJson(j))) == canonicalDump(j));
    CHECK(j["levels"]["x|y"][0]["upto"] == "1/2");
    CHECK(j["levels"]["x|y"][0]["value"] == "5");
}

TEST_CASE("serialization is canonical for parsed non-canonical input") {
    // Unsorted jumps and non-lowest-terms rationals normalize on parse.
    const Json doc = {{"carrier", {"x", "y"}},
                      {"tnorm", "product"},
                      {"alpha",
                       {{"x|y",
                         {{{"at", "10/2"}, {"to", "2/2"}},
                          {{"at", "4/2"}, {"to", "2/4"}}}}}}};
    CHECK(spaceFromJson(doc) == fixtures::pm2());
    CHECK(canonicalDump(toJson(spaceFromJson(doc))) == canonicalDump(toJson(fixtures::pm2())));
}

TEST_CASE("malformed documents are rejected") {
    Json good = toJson(fixtures::pm2());

    Json bad = good;
    bad["alpha"]["x|y"][0]["to"] = "3/2";
    CHECK_THROWS_AS(spaceFromJson(bad), InputError);

    bad = good;
    bad["tnorm"] = "drastic";
    CHECK_THROWS_AS(spaceFromJson(bad), InputError);

    bad = good;
    bad["alpha"].erase("x|y");
    CHECK_THROWS_AS(spaceFromJson(bad), InputError);

    bad = good;
    bad["alpha"]["y|x"] = bad["alpha"]["x|y"];
    CHECK_THROWS_AS(spaceFromJson(bad), InputError);  // unsorted pair key

    bad = good;
    bad["alpha"]["x|z"] = bad["alpha"]["x|y"];
    CHECK_THROWS_AS(spaceFromJson(bad), InputError);  // unknown point

    bad = good;
    bad["carrier"] = {"x", "x"};
    CHECK_THROWS_AS(spaceFromJson(bad), InputError);

    CHECK_THROWS_AS(spaceFromJson(Json::object()), InputError);
    CHECK_THROWS_AS(familyFromJson(Json{{"carrier", {"x"}}}), InputError);
}

TEST_CASE("distance and local tables round-trip") {
    DistanceTable t({"a", "b"}, std::vector<ExtNonneg>(4, ExtNonneg::zero()));
    t.set(0, 1, ExtNonneg(3, 1));
    t.set(1, 0, ExtNonneg::infinity());
    const Json j = toJson(t);
    CHECK(j["table"]["a|>b"] == "3");
    CHECK(j["table"]["b|>a"] == "inf");
    CHECK(distanceTableFromJson(j) == t);

    const LocalTable l({"a", "b"}, 0, {ExtNonneg::zero(), ExtNonneg(7, 2)});
    const Json jl = toJson(l);
    CHECK(jl["anchor"] == "a");
    CHECK(jl["table"]["a|>b"] == "7/2");
    CHECK(localTableFromJson(jl) == l);

    Json badLocal = jl;
    badLocal["table"] = {{"b|>a", "1"}};
    CHECK_THROWS_AS(localTableFromJson(badLocal), InputError);
}

TEST_CASE("map documents parse") {
    const Json j = {{"domain", "X.json"},
                    {"codomain", "Y.json"},
                    {"assign", {{"x", "u"}, {"y", "v"}}}};
    const MapDocument m = mapDocumentFromJson(j);
    CHECK(m.domainPath == "X.json");
    CHECK(m.assign.at("y") == "v");
    CHECK_THROWS_AS(mapDocumentFromJson(Json{{"domain", "X.json"}}), InputError);
}

TEST_CASE("axiom reports serialize with witnesses") {
    const Json j = toJson(checkPmAxioms(fixtures::pm3Bad()));
    CHECK(j["all_pass"] == false);
    bool sawWitness = false;
    for (const auto& c : j["checks"])
        if (c["axiom"] == "P5") {
            CHECK(c["verdict"] == "fail");
            sawWitness = c.contains("witness") && !c["witness"].get<std::string>().empty();
        }
    CHECK(sawWitness);
}

TEST_CASE("generated documents of every kind round-trip") {
    Generator gen(555);
    for (int i = 0; i < 10; ++i) {
        const PMSpace s =
            gen.validSpace(gen.uniform(1, 4), gen.uniform(1, 3), gen.randomTnorm(), i % 2 == 0);
        CHECK(spaceFromJson(toJson(s)) == s);
        const LevelFamily f =
            gen.validFamily(gen.uniform(1, 4), gen.uniform(1, 3), gen.randomTnorm(), i % 2 == 1);
        CHECK(familyFromJson(toJson(f)) == f);
    }
}
