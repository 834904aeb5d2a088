#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "pmet/generator.hpp"
#include "pmet/space.hpp"

using namespace pmet;

TEST_CASE("construction validates the pair map") {
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    CHECK_THROWS_AS(PMSpace({"x", "y"}, alpha, TNorm(TNormKind::Product)), InputError);
    alpha.emplace(std::make_pair(0, 1), Distribution::epsilonZero());
    alpha.emplace(std::make_pair(0, 2), Distribution::epsilonZero());
    CHECK_THROWS_AS(PMSpace({"x", "y"}, alpha, TNorm(TNormKind::Product)), InputError);
}

TEST_CASE("diagonal and symmetry are built in") {
    const PMSpace s = fixtures::pm2();
    CHECK(s.alpha(0, 0) == Distribution::epsilonZero());
    CHECK(s.alpha(0, 1) == s.alpha(1, 0));
    CHECK(s.indexOf("y") == 1);
    CHECK_THROWS_AS(s.indexOf("nope"), InputError);
}

TEST_CASE("the two-point example passes the full battery") {
    const AxiomReport r = checkPmAxioms(fixtures::pm2());
    CHECK(r.allPass());
    for (const char* ax : {"P1", "P2", "P3"}) CHECK(r.find(ax)->note == "holds by construction");
    CHECK(r.passed("P4"));
    CHECK(r.passed("P5"));
}

TEST_CASE("triangle failure is caught with an interior witness") {
    const AxiomReport r = checkPmAxioms(fixtures::pm3Bad());
    CHECK_FALSE(r.allPass());
    CHECK(r.failedAxioms() == std::vector<std::string>{"P5"});
    const std::string w = r.find("P5")->witness;
    CHECK(w.find("r=3/2") != std::string::npos);
    CHECK(w.find("s=3/2") != std::string::npos);
    CHECK(w.find("lhs=1") != std::string::npos);
    CHECK(w.find("rhs=0") != std::string::npos);
}

TEST_CASE("a distribution equal to epsilon_0 off the diagonal fails P4 only") {
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    alpha.emplace(std::make_pair(0, 1), Distribution::epsilonZero());
    const PMSpace s({"x", "y"}, std::move(alpha), TNorm(TNormKind::Product));
    const AxiomReport r = checkPmAxioms(s);
    CHECK(r.failedAxioms() == std::vector<std::string>{"P4"});
}

TEST_CASE("one-point space is trivially valid") {
    const PMSpace s({"x"}, {}, TNorm(TNormKind::Minimum));
    CHECK(checkPmAxioms(s).allPass());
}

TEST_CASE("grid oracle agrees on the hand fixtures") {
    CHECK(oracleP5Grid(fixtures::pm2(), standardGammaGrid(fixtures::pm2())).allPass());
    const AxiomReport bad =
        oracleP5Grid(fixtures::pm3Bad(), standardGammaGrid(fixtures::pm3Bad()));
    CHECK_FALSE(bad.allPass());
    CHECK(bad.failedAxioms() == std::vector<std::string>{"P5"});
}

TEST_CASE("grid oracle agrees with the exact checker on random instances") {
    Generator gen(20250823);
    for (int i = 0; i < 25; ++i) {
        const TNorm t = gen.randomTnorm();
        const PMSpace s = gen.validSpace(gen.uniform(2, 4), gen.uniform(1, 3), t);
        CHECK(checkPmAxioms(s).allPass());
        CHECK(oracleP5Grid(s, standardGammaGrid(s)).allPass());
    }
    for (int i = 0; i < 15; ++i) {
        const auto m = gen.mutantSpace(3, 2, gen.randomTnorm());
        const AxiomReport exact = checkPmAxioms(m.space);
        CHECK(exact.failedAxioms() == std::vector<std::string>{m.brokenAxiom});
        if (m.brokenAxiom == "P5") {
            const AxiomReport oracle = oracleP5Grid(m.space, standardGammaGrid(m.space));
            CHECK(oracle.failedAxioms() == std::vector<std::string>{"P5"});
        }
    }
}

TEST_CASE("limit-space detection") {
    CHECK(isLimSpace(fixtures::pm2()));
    CHECK_FALSE(isLimSpace(fixtures::pm2Infinite()));
}
