#include "pmet/morphism.hpp"

#include <algorithm>

namespace pmet {

SpaceMap::SpaceMap(std::vector<std::string> domain, std::vector<std::string> codomain,
                   std::map<std::string, std::string> assign)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    for (const std::string& x : domain_) {
        auto it = assign.find(x);
        if (it == assign.end()) throw InputError("map not defined at " + x);
        auto target = std::find(codomain_.begin(), codomain_.end(), it->second);
        if (target == codomain_.end())
            throw InputError("map sends " + x + " outside the codomain");
        assign_.push_back(static_cast<std::size_t>(target - codomain_.begin()));
    }
}

SpaceMap SpaceMap::identity(std::vector<std::string> carrier) {
    std::map<std::string, std::string> assign;
    for (const std::string& x : carrier) assign[x] = x;
    return SpaceMap(carrier, carrier, std::move(assign));
}

SpaceMap SpaceMap::compose(const SpaceMap& f, const SpaceMap& g) {
    if (f.codomain_ != g.domain_) throw InputError("maps are not composable");
    std::map<std::string, std::string> assign;
    for (std::size_t x = 0; x < f.domain_.size(); ++x)
        assign[f.domain_[x]] = g.codomain_[g.apply(f.apply(x))];
    return SpaceMap(f.domain_, g.codomain_, std::move(assign));
}

std::optional<NonexpansiveWitness> nonexpansiveWitness(const SpaceMap& f, const PMSpace& X,
                                                       const PMSpace& Y) {
    if (f.domain() != X.carrier() || f.codomain() != Y.carrier())
        throw InputError("map carriers do not match the spaces");
    const std::size_t n = X.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t xp = x + 1; xp < n; ++xp) {
            auto w = pointwiseLeqWitness(X.alpha(x, xp), Y.alpha(f.apply(x), f.apply(xp)));
            if (w) return NonexpansiveWitness{x, xp, *w};
        }
    return std::nullopt;
}

bool isNonexpansive(const SpaceMap& f, const PMSpace& X, const PMSpace& Y) {
    return !nonexpansiveWitness(f, X, Y).has_value();
}

bool isLevelwiseNonexpansive(const SpaceMap& f, const LevelFamily& F, const LevelFamily& G) {
    if (f.domain() != F.carrier() || f.codomain() != G.carrier())
        throw InputError("map carriers do not match the families");
    if (!(F.tnorm() == G.tnorm())) throw InputError("families use different t-norms");
    const std::size_t n = F.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t xp = x + 1; xp < n; ++xp) {
            const Profile& dom = F.profile(x, xp);
            const Profile& cod = G.profile(f.apply(x), f.apply(xp));
            // Both sides are constant on the merged intervals and
            // attain the interval value at its right endpoint.
            std::vector<UnitRat> lambdas = dom.boundaries();
            for (const UnitRat& b : cod.boundaries()) lambdas.push_back(b);
            for (const UnitRat& l : lambdas)
                if (cod.valueAt(l) > dom.valueAt(l)) return false;
        }
    return true;
}

MorphismSuiteReport morphismEquivalenceSuite(const SpaceMap& f, const PMSpace& X,
                                             const PMSpace& Y) {
    const LevelFamily FX = deltaTransform(X);
    const LevelFamily FY = deltaTransform(Y);
    MorphismSuiteReport r;
    r.nonexpansive = isNonexpansive(f, X, Y);
    r.levelwiseNonexpansive = isLevelwiseNonexpansive(f, FX, FY);
    r.localContraction = isContraction(f.asPointMap(), localBasesOf(FX), localBasesOf(FY));
    r.uniformContraction =
        isUniformContraction(f.asPointMap(), uniformBasisOf(FX), uniformBasisOf(FY));
    return r;
}

bool functorCompositionCheck(const SpaceMap& f, const SpaceMap& g, const PMSpace& X,
                             const PMSpace& Y, const PMSpace& Z) {
    const SpaceMap gf = SpaceMap::compose(f, g);
    // Delta is the identity on assignments: the composed assignment is
    // the same on both sides by construction; what remains is the
    // preservation of both non-expansiveness notions.
    const bool fOk = isNonexpansive(f, X, Y);
    const bool gOk = isNonexpansive(g, Y, Z);
    if (fOk && gOk && !isNonexpansive(gf, X, Z)) return false;
    const LevelFamily FX = deltaTransform(X);
    const LevelFamily FY = deltaTransform(Y);
    const LevelFamily FZ = deltaTransform(Z);
    const bool fLw = isLevelwiseNonexpansive(f, FX, FY);
    const bool gLw = isLevelwiseNonexpansive(g, FY, FZ);
    if (fLw && gLw && !isLevelwiseNonexpansive(gf, FX, FZ)) return false;
    return true;
}

}  // namespace pmet
