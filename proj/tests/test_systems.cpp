#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "pmet/generator.hpp"
#include "pmet/systems.hpp"

using namespace pmet;

namespace {

DistanceTable table3(ExtNonneg ab, ExtNonneg ba, ExtNonneg ac, ExtNonneg ca, ExtNonneg bc,
                     ExtNonneg cb) {
    std::vector<ExtNonneg> v(9, ExtNonneg::zero());
    v[0 * 3 + 1] = ab;
    v[1 * 3 + 0] = ba;
    v[0 * 3 + 2] = ac;
    v[2 * 3 + 0] = ca;
    v[1 * 3 + 2] = bc;
    v[2 * 3 + 1] = cb;
    return DistanceTable({"a", "b", "c"}, std::move(v));
}

DistanceTable symTable3(ExtNonneg ab, ExtNonneg ac, ExtNonneg bc) {
    return table3(ab, ab, ac, ac, bc, bc);
}

}  // namespace

TEST_CASE("table invariants") {
    CHECK_THROWS_AS(DistanceTable({"a"}, {ExtNonneg(1, 1)}), InputError);
    CHECK_THROWS_AS(DistanceTable({"a", "b"}, std::vector<ExtNonneg>(3)), InputError);
    CHECK_THROWS_AS(LocalTable({"a", "b"}, 0, {ExtNonneg(1, 1), ExtNonneg(2, 1)}), InputError);
    CHECK_THROWS_AS(LocalTable({"a", "b"}, 5, std::vector<ExtNonneg>(2)), InputError);
    DistanceTable t = symTable3(ExtNonneg(1, 1), ExtNonneg(2, 1), ExtNonneg(3, 1));
    CHECK_THROWS_AS(t.set(1, 1, ExtNonneg(1, 1)), InputError);
    CHECK(t.transpose() == t);
    const DistanceTable asym =
        table3(ExtNonneg(1, 1), ExtNonneg(2, 1), ExtNonneg(1, 1), ExtNonneg(1, 1),
               ExtNonneg(1, 1), ExtNonneg(1, 1));
    CHECK(asym.transpose().at(0, 1) == ExtNonneg(2, 1));
    CHECK(t.pointwiseMax(asym).at(0, 2) == ExtNonneg(2, 1));
}

TEST_CASE("saturation membership basics") {
    const DistanceTable d = symTable3(ExtNonneg(1, 1), ExtNonneg(2, 1), ExtNonneg(3, 1));
    const std::vector<DistanceTable> basis{d};
    CHECK(saturationMember(basis, d));

    DistanceTable dPlusOne = d;
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            if (x != y) dPlusOne.set(x, y, d.at(x, y) + ExtNonneg(1, 1));
    CHECK_FALSE(saturationMember(basis, dPlusOne));

    DistanceTable capped = d;
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            if (x != y) capped.set(x, y, min(d.at(x, y), ExtNonneg(5, 2)));
    CHECK(saturationMember(basis, capped));

    CHECK_THROWS_AS(saturationMember({}, d), InputError);
}

TEST_CASE("membership of a capped-at-finite candidate against an infinite member") {
    // The symbolic cap requires the dominating member to be infinite
    // wherever the candidate is.
    const DistanceTable finite = symTable3(ExtNonneg(1, 1), ExtNonneg(1, 1), ExtNonneg(1, 1));
    const DistanceTable infinite =
        symTable3(ExtNonneg::infinity(), ExtNonneg(1, 1), ExtNonneg(1, 1));
    CHECK(saturationMember({infinite}, finite));
    CHECK_FALSE(saturationMember({finite}, infinite));
}

TEST_CASE("saturation membership is monotone and transitive") {
    Generator gen(4242);
    auto randomTable = [&] {
        return symTable3(ExtNonneg(long(gen.uniform(1, 8)), 2),
                         ExtNonneg(long(gen.uniform(1, 8)), 2),
                         ExtNonneg(long(gen.uniform(1, 8)), 2));
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<DistanceTable> basis{randomTable(), randomTable()};
        const DistanceTable cand = randomTable();
        if (saturationMember(basis, cand)) {
            // Monotone: shrinking the candidate preserves membership.
            DistanceTable smaller = cand;
            smaller.set(0, 1, ExtNonneg::zero());
            smaller.set(1, 0, ExtNonneg::zero());
            CHECK(saturationMember(basis, smaller));
            // Transitive: a basis whose members dominate this basis
            // also contains the candidate.
            std::vector<DistanceTable> bigger;
            for (const auto& b : basis) {
                DistanceTable g = b;
                g.set(0, 2, b.at(0, 2) + ExtNonneg(1, 1));
                g.set(2, 0, b.at(2, 0) + ExtNonneg(1, 1));
                bigger.push_back(std::move(g));
            }
            bool allDominated = true;
            for (const auto& b : basis)
                if (!saturationMember(bigger, b)) allDominated = false;
            REQUIRE(allDominated);
            CHECK(saturationMember(bigger, cand));
        }
    }
}

TEST_CASE("uniform basis axioms on the induced level tables") {
    const auto basis = uniformBasisOf(deltaTransform(fixtures::pm2()));
    CHECK(basis.size() == 2);  // the two distinct levels
    const AxiomReport r = checkUniformBasis(basis);
    CHECK(r.allPass());
    CHECK(r.find("AU1")->note == "holds by construction");
    CHECK(r.find("directedness")->note == "decided as domination up to saturation");
}

TEST_CASE("an asymmetric singleton fails the inverse axiom") {
    const DistanceTable asym =
        table3(ExtNonneg(1, 1), ExtNonneg(2, 1), ExtNonneg(3, 1), ExtNonneg(3, 1),
               ExtNonneg(3, 1), ExtNonneg(3, 1));
    const AxiomReport r = checkUniformBasis({asym});
    CHECK_FALSE(r.allPass());
    CHECK(r.find("AU4")->verdict == Verdict::Fail);
}

TEST_CASE("the zero table is a uniform basis") {
    const DistanceTable zero({"a", "b"}, std::vector<ExtNonneg>(4, ExtNonneg::zero()));
    CHECK(checkUniformBasis({zero}).allPass());
}

TEST_CASE("local basis axioms on the induced per-point slices") {
    const auto bases = localBasesOf(deltaTransform(fixtures::pm2()));
    const AxiomReport r = checkLocalBasis(bases);
    CHECK(r.allPass());
    CHECK(r.find("A1")->note == "holds by construction");
}

TEST_CASE("one-point local basis is trivially fine") {
    const std::vector<std::vector<LocalTable>> bases{
        {LocalTable({"a"}, 0, {ExtNonneg::zero()})}};
    CHECK(checkLocalBasis(bases).allPass());
}

TEST_CASE("an unreachable infinite value fails the local triangle axiom") {
    // phi(c) = inf at a, but the only tables available at b and c are
    // finite, so going through b caps the composite bound at 2 and the
    // direct head at b is finite as well: no selection covers phi.
    const LocalTable phiA({"a", "b", "c"}, 0,
                          {ExtNonneg::zero(), ExtNonneg(1, 1), ExtNonneg::infinity()});
    const LocalTable tB({"a", "b", "c"}, 1,
                        {ExtNonneg(1, 1), ExtNonneg::zero(), ExtNonneg(1, 1)});
    const LocalTable tC({"a", "b", "c"}, 2,
                        {ExtNonneg(1, 1), ExtNonneg(1, 1), ExtNonneg::zero()});
    const AxiomReport r = checkLocalBasis({{phiA}, {tB}, {tC}});
    CHECK(r.find("A3")->verdict == Verdict::Fail);
    CHECK_FALSE(r.allPass());
}

TEST_CASE("the search cutoff yields an explicit undecided verdict") {
    const auto bases = localBasesOf(deltaTransform(fixtures::pm2()));
    const AxiomReport r = checkLocalBasis(bases, 1);
    CHECK(r.find("A3")->verdict == Verdict::Undecided);
    CHECK(r.anyUndecided());
    CHECK_FALSE(r.allPass());
}

TEST_CASE("identity maps are contractions at both layers") {
    const LevelFamily fam = deltaTransform(fixtures::pm2());
    const PointMap id{fam.carrier(), fam.carrier(), {0, 1}};
    CHECK(isContraction(id, localBasesOf(fam), localBasesOf(fam)));
    CHECK(isUniformContraction(id, uniformBasisOf(fam), uniformBasisOf(fam)));
}

TEST_CASE("a strictly larger codomain table breaks contraction") {
    const LevelFamily fam = deltaTransform(fixtures::pm2());
    auto basis = uniformBasisOf(fam);
    std::vector<ExtNonneg> values(4, ExtNonneg::zero());
    values[0 * 2 + 1] = ExtNonneg(100, 1);
    values[1 * 2 + 0] = ExtNonneg(100, 1);
    std::vector<DistanceTable> finer = basis;
    finer.emplace_back(fam.carrier(), std::move(values));
    const PointMap id{fam.carrier(), fam.carrier(), {0, 1}};
    CHECK_FALSE(isUniformContraction(id, basis, finer));
    CHECK(isUniformContraction(id, finer, basis));
}

TEST_CASE("maps into a one-point structure always contract") {
    const LevelFamily fam = deltaTransform(fixtures::pm2());
    const PointMap collapse{fam.carrier(), {"p"}, {0, 0}};
    const std::vector<DistanceTable> pointBasis{
        DistanceTable({"p"}, {ExtNonneg::zero()})};
    const std::vector<std::vector<LocalTable>> pointLocal{
        {LocalTable({"p"}, 0, {ExtNonneg::zero()})}};
    CHECK(isUniformContraction(collapse, uniformBasisOf(fam), pointBasis));
    CHECK(isContraction(collapse, localBasesOf(fam), pointLocal));
}

TEST_CASE("induced bases of random valid families pass both batteries") {
    Generator gen(99);
    for (int i = 0; i < 10; ++i) {
        const LevelFamily fam =
            gen.validFamily(gen.uniform(2, 3), gen.uniform(1, 3), gen.randomTnorm());
        CHECK(checkUniformBasis(uniformBasisOf(fam)).allPass());
        CHECK(checkLocalBasis(localBasesOf(fam)).allPass());
    }
}
