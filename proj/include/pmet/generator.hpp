#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pmet/level.hpp"
#include "pmet/space.hpp"

namespace pmet {

/// Seeded instance generator.  Valid instances come from level chains of
/// exact metrics (iterated pointwise-min followed by shortest-path
/// closure), which satisfy every level axiom for every t-norm; near-miss
/// instances are produced by single targeted mutations and re-verified
/// so that exactly the named axiom fails.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    TNorm randomTnorm();

    /// Family on `points` points with at most `levels` lambda-pieces per
    /// pair; passes checkLevelAxioms by construction.  With
    /// allowInfinite, pairs may carry the value infinity.
    LevelFamily validFamily(std::size_t points, std::size_t levels, const TNorm& t,
                            bool allowInfinite = false);

    /// phiReconstruct of a valid family; passes checkPmAxioms.
    PMSpace validSpace(std::size_t points, std::size_t levels, const TNorm& t,
                       bool allowInfinite = false);

    struct MutantSpace {
        PMSpace space;
        std::string brokenAxiom;  // "P4" or "P5"
    };
    /// Space failing exactly brokenAxiom (verified before return).
    MutantSpace mutantSpace(std::size_t points, std::size_t levels, const TNorm& t);

    struct MutantFamily {
        LevelFamily family;
        std::string brokenAxiom;  // "UH" or "UT"
    };
    /// Family failing exactly brokenAxiom (verified before return).
    MutantFamily mutantFamily(std::size_t points, std::size_t levels, const TNorm& t);

    /// Uniform random total assignment between carriers of the given sizes.
    std::vector<std::size_t> randomAssignment(std::size_t domainSize, std::size_t codomainSize);

    std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive bounds

private:
    std::mt19937_64 rng_;
};

/// "a", "b", ... single-letter labels (points <= 26).
std::vector<std::string> defaultCarrier(std::size_t points);

}  // namespace pmet
