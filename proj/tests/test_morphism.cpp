#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "pmet/generator.hpp"
#include "pmet/morphism.hpp"

using namespace pmet;

namespace {

SpaceMap identityXY() {
    return SpaceMap({"x", "y"}, {"x", "y"}, {{"x", "x"}, {"y", "y"}});
}

}  // namespace

TEST_CASE("space maps are total with image in the codomain") {
    CHECK_THROWS_AS(SpaceMap({"x", "y"}, {"x", "y"}, {{"x", "x"}}), InputError);
    CHECK_THROWS_AS(SpaceMap({"x"}, {"u"}, {{"x", "v"}}), InputError);
    const SpaceMap f = identityXY();
    CHECK(f.apply(0) == 0);
    const SpaceMap id = SpaceMap::identity({"x", "y"});
    CHECK(id.apply(1) == 1);
    CHECK_THROWS_AS(SpaceMap::compose(SpaceMap({"x"}, {"u"}, {{"x", "u"}}), identityXY()),
                    InputError);
}

TEST_CASE("non-expansiveness on the hand fixtures") {
    const PMSpace pm2 = fixtures::pm2();
    const PMSpace pm2p = fixtures::pm2Prime();
    CHECK(isNonexpansive(identityXY(), pm2, pm2));
    CHECK(isNonexpansive(identityXY(), pm2p, pm2));  // larger distances into smaller
    CHECK_FALSE(isNonexpansive(identityXY(), pm2, pm2p));
    const auto w = nonexpansiveWitness(identityXY(), pm2, pm2p);
    REQUIRE(w.has_value());
    CHECK(w->t == ExtNonneg(5, 2));
    CHECK_THROWS_AS(isNonexpansive(identityXY(), fixtures::pm3Bad(), pm2), InputError);
}

TEST_CASE("levelwise non-expansiveness mirrors the distribution order") {
    const LevelFamily f2 = deltaTransform(fixtures::pm2());
    const LevelFamily f2p = deltaTransform(fixtures::pm2Prime());
    CHECK(isLevelwiseNonexpansive(identityXY(), f2, f2));
    CHECK(isLevelwiseNonexpansive(identityXY(), f2p, f2));
    // Reverse direction: at lambda = 7/10 the codomain value 3 exceeds 2.
    CHECK(f2p.levelEval(UnitRat(7, 10), 0, 1) == ExtNonneg(3, 1));
    CHECK(f2.levelEval(UnitRat(7, 10), 0, 1) == ExtNonneg(2, 1));
    CHECK_FALSE(isLevelwiseNonexpansive(identityXY(), f2, f2p));
}

TEST_CASE("the morphism suite is consistent on the fixtures") {
    const PMSpace pm2 = fixtures::pm2();
    const PMSpace pm2p = fixtures::pm2Prime();

    MorphismSuiteReport r = morphismEquivalenceSuite(identityXY(), pm2, pm2);
    CHECK(r.nonexpansive);
    CHECK(r.levelwiseNonexpansive);
    CHECK(r.localContraction);
    CHECK(r.uniformContraction);
    CHECK(r.consistent());

    r = morphismEquivalenceSuite(identityXY(), pm2p, pm2);
    CHECK(r.nonexpansive);
    CHECK(r.consistent());

    r = morphismEquivalenceSuite(identityXY(), pm2, pm2p);
    CHECK_FALSE(r.nonexpansive);
    CHECK_FALSE(r.levelwiseNonexpansive);
    CHECK(r.consistent());
}

TEST_CASE("constant maps into a one-point space are non-expansive") {
    const PMSpace one({"p"}, {}, TNorm(TNormKind::Product));
    const SpaceMap c({"x", "y"}, {"p"}, {{"x", "p"}, {"y", "p"}});
    const MorphismSuiteReport r = morphismEquivalenceSuite(c, fixtures::pm2(), one);
    CHECK(r.nonexpansive);
    CHECK(r.consistent());
}

TEST_CASE("composition preserves non-expansiveness along the chain") {
    CHECK(functorCompositionCheck(identityXY(), identityXY(), fixtures::pm2DoublePrime(),
                                  fixtures::pm2Prime(), fixtures::pm2()));
    CHECK(functorCompositionCheck(identityXY(), identityXY(), fixtures::pm2(), fixtures::pm2(),
                                  fixtures::pm2()));
}

TEST_CASE("random maps satisfy the levelwise equivalence") {
    Generator gen(31337);
    int nonexpansiveSeen = 0;
    for (int i = 0; i < 200; ++i) {
        const TNorm t = gen.randomTnorm();
        const PMSpace X = gen.validSpace(gen.uniform(2, 4), gen.uniform(1, 3), t);
        const PMSpace Y = gen.validSpace(gen.uniform(1, 4), gen.uniform(1, 3), t);
        const auto assign = gen.randomAssignment(X.size(), Y.size());
        std::map<std::string, std::string> byLabel;
        for (std::size_t k = 0; k < X.size(); ++k)
            byLabel[X.carrier()[k]] = Y.carrier()[assign[k]];
        const SpaceMap f(X.carrier(), Y.carrier(), byLabel);
        const MorphismSuiteReport r = morphismEquivalenceSuite(f, X, Y);
        CHECK(r.nonexpansive == r.levelwiseNonexpansive);
        CHECK(r.consistent());
        if (r.nonexpansive) ++nonexpansiveSeen;
    }
    CHECK(nonexpansiveSeen > 0);  // the sample exercises both outcomes
}
