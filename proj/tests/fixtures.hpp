#pragma once

// Shared hand-checked fixtures used across the test binaries.  The
// numeric expectations frozen in the tests were first confirmed against
// the brute-force grid oracles (see the oracle-agreement tests).

#include "pmet/level.hpp"
#include "pmet/space.hpp"

namespace fixtures {

using namespace pmet;

// Two points, product t-norm, alpha(x,y) with jumps (2 -> 1/2), (5 -> 1).
inline PMSpace pm2() {
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    alpha.emplace(std::make_pair(0, 1),
                  Distribution::fromJumps({{ExtNonneg(2, 1), UnitRat(1, 2)},
                                           {ExtNonneg(5, 1), UnitRat::one()}}));
    return PMSpace({"x", "y"}, std::move(alpha), TNorm(TNormKind::Product));
}

// As pm2 but with later jumps (3 -> 1/2), (6 -> 1): pointwise smaller alpha.
inline PMSpace pm2Prime() {
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    alpha.emplace(std::make_pair(0, 1),
                  Distribution::fromJumps({{ExtNonneg(3, 1), UnitRat(1, 2)},
                                           {ExtNonneg(6, 1), UnitRat::one()}}));
    return PMSpace({"x", "y"}, std::move(alpha), TNorm(TNormKind::Product));
}

// One step later still: jumps (4 -> 1/2), (7 -> 1).
inline PMSpace pm2DoublePrime() {
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    alpha.emplace(std::make_pair(0, 1),
                  Distribution::fromJumps({{ExtNonneg(4, 1), UnitRat(1, 2)},
                                           {ExtNonneg(7, 1), UnitRat::one()}}));
    return PMSpace({"x", "y"}, std::move(alpha), TNorm(TNormKind::Product));
}

// Three points where the triangle condition fails: alpha(x,y) and
// alpha(y,z) jump to 1 at 1, but alpha(x,z) only at 10.
inline PMSpace pm3Bad() {
    const Distribution near = Distribution::fromJumps({{ExtNonneg(1, 1), UnitRat::one()}});
    const Distribution far = Distribution::fromJumps({{ExtNonneg(10, 1), UnitRat::one()}});
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    alpha.emplace(std::make_pair(0, 1), near);
    alpha.emplace(std::make_pair(1, 2), near);
    alpha.emplace(std::make_pair(0, 2), far);
    return PMSpace({"x", "y", "z"}, std::move(alpha), TNorm(TNormKind::Product));
}

// The level profile of pm2: 5 on (0,1/2], 2 on (1/2,1].
inline Profile f2Profile() {
    return Profile::fromPieces({{UnitRat(1, 2), ExtNonneg(5, 1)},
                                {UnitRat::one(), ExtNonneg(2, 1)}});
}

inline LevelFamily f2Family() {
    std::map<std::pair<std::size_t, std::size_t>, Profile> levels;
    levels.emplace(std::make_pair(0, 1), f2Profile());
    return LevelFamily({"x", "y"}, std::move(levels), TNorm(TNormKind::Product));
}

// Non-limit control: alpha(x,y) never reaches 1 at a finite point.
inline PMSpace pm2Infinite() {
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    alpha.emplace(std::make_pair(0, 1),
                  Distribution::fromJumps({{ExtNonneg(1, 1), UnitRat(1, 2)}}));
    return PMSpace({"x", "y"}, std::move(alpha), TNorm(TNormKind::Product));
}

}  // namespace fixtures
