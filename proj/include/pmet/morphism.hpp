#pragma once

#include <map>
#include <string>

#include "pmet/level.hpp"
#include "pmet/space.hpp"
#include "pmet/systems.hpp"

namespace pmet {

/// Total assignment between two carriers.
class SpaceMap {
public:
    SpaceMap(std::vector<std::string> domain, std::vector<std::string> codomain,
             std::map<std::string, std::string> assign);

    const std::vector<std::string>& domain() const { return domain_; }
    const std::vector<std::string>& codomain() const { return codomain_; }
    std::size_t apply(std::size_t x) const { return assign_[x]; }

    PointMap asPointMap() const { return {domain_, codomain_, assign_}; }

    static SpaceMap identity(std::vector<std::string> carrier);
    static SpaceMap compose(const SpaceMap& f, const SpaceMap& g);  // g after f

private:
    std::vector<std::string> domain_;
    std::vector<std::string> codomain_;
    std::vector<std::size_t> assign_;
};

/// alpha_X(x,x',.) <= alpha_Y(f x, f x',.) pointwise, on merged jump sets.
bool isNonexpansive(const SpaceMap& f, const PMSpace& X, const PMSpace& Y);

/// As isNonexpansive, reporting a violating (pair, t).
struct NonexpansiveWitness {
    std::size_t x, xPrime;
    ExtNonneg t;
};
std::optional<NonexpansiveWitness> nonexpansiveWitness(const SpaceMap& f, const PMSpace& X,
                                                       const PMSpace& Y);

/// d'_lambda(f x, f x') <= d_lambda(x, x') for every lambda, decided on
/// the merged profile boundary sets.
bool isLevelwiseNonexpansive(const SpaceMap& f, const LevelFamily& F, const LevelFamily& G);

struct MorphismSuiteReport {
    bool nonexpansive;
    bool levelwiseNonexpansive;
    bool localContraction;
    bool uniformContraction;
    /// Biconditional plus, when non-expansive, both contraction notions.
    bool consistent() const {
        if (nonexpansive != levelwiseNonexpansive) return false;
        if (nonexpansive && !(localContraction && uniformContraction)) return false;
        return true;
    }
};

/// All four morphism verdicts along Delta, plus the induced bases.
MorphismSuiteReport morphismEquivalenceSuite(const SpaceMap& f, const PMSpace& X,
                                             const PMSpace& Y);

/// Functor laws on a composable chain: Delta is the identity on
/// assignments, and non-expansiveness is preserved by composition.
bool functorCompositionCheck(const SpaceMap& f, const SpaceMap& g, const PMSpace& X,
                             const PMSpace& Y, const PMSpace& Z);

}  // namespace pmet
