#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmet/report.hpp"
#include "pmet/space.hpp"

namespace pmet {

struct Piece {
    UnitRat upto;
    ExtNonneg value;
    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Left-continuous nonincreasing step function of lambda in (0,1] into
/// [0,inf]: value_i on (upto_{i-1}, upto_i], with upto_0 = 0 and the
/// final upto exactly 1.  Canonical form: upto strictly increasing,
/// values strictly decreasing.  Left-continuity in lambda is the
/// half-open-interval semantics itself.
class Profile {
public:
    /// Merges adjacent equal values; rejects pieces that do not cover
    /// (0,1] or whose values increase with lambda.
    static Profile fromPieces(std::vector<Piece> pieces);

    /// Constant 0 on (0,1] (the implicit diagonal profile).
    static Profile zero();
    static Profile constant(ExtNonneg value);

    const std::vector<Piece>& pieces() const { return pieces_; }

    /// d_lambda for lambda in (0,1].
    const ExtNonneg& valueAt(const UnitRat& lambda) const;

    /// lim_{e downto lambda0} d_e, for lambda0 in [0,1).
    const ExtNonneg& rightLimitAt(const UnitRat& lambda0) const;

    /// Left endpoint of piece i (0 for the first piece).
    UnitRat leftEndpoint(std::size_t i) const;

    /// The upto values, excluding neither interior boundaries nor 1.
    std::vector<UnitRat> boundaries() const;

    bool hasInfiniteValue() const;

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    Profile() = default;
    std::vector<Piece> pieces_;
};

/// Lambda-indexed family of level distances over a finite carrier: one
/// profile per unordered pair of distinct points, implicit 0 diagonal.
class LevelFamily {
public:
    LevelFamily(std::vector<std::string> carrier,
                std::map<std::pair<std::size_t, std::size_t>, Profile> levels, TNorm tnorm);

    const std::vector<std::string>& carrier() const { return carrier_; }
    const TNorm& tnorm() const { return tnorm_; }
    std::size_t size() const { return carrier_.size(); }
    std::size_t indexOf(const std::string& label) const;

    /// Profile for the ordered index pair; constant 0 on the diagonal.
    const Profile& profile(std::size_t i, std::size_t j) const;

    /// d_lambda(x,y); 0 when x == y.  Rejects lambda = 0.
    ExtNonneg levelEval(const UnitRat& lambda, std::size_t x, std::size_t y) const;

    /// Union of all profile boundaries (always contains 1).
    std::vector<UnitRat> allBoundaries() const;

    friend bool operator==(const LevelFamily&, const LevelFamily&) = default;

private:
    std::vector<std::string> carrier_;
    std::map<std::pair<std::size_t, std::size_t>, Profile> levels_;  // keys i < j
    TNorm tnorm_;
    Profile diag_;
};

/// d_lambda(x,y) = inf{ gamma finite : alpha(x,y,gamma) > 1-lambda },
/// computed in closed form from the jumps.  Precondition (not checked
/// here): the space satisfies (P1)-(P5).
LevelFamily deltaTransform(const PMSpace& space);

/// beta(x,y,gamma) = sup{ 1-lambda : d_lambda(x,y) < gamma } for finite
/// gamma (sup of the empty set is 0), beta(x,y,inf) = 1.  Precondition
/// (not checked here): the family satisfies (US)(UD)(UT)(UH).
PMSpace phiReconstruct(const LevelFamily& family);

/// Brute-force inf over a gamma grid; differential test for the closed
/// form.
ExtNonneg oracleLevelDistance(const PMSpace& space, const UnitRat& lambda, std::size_t x,
                              std::size_t y, const std::vector<ExtNonneg>& grid);

/// (US)(UD) structural, (UH) from the profiles, (UT) decided exactly on
/// piece-endpoint pairs with right limits.
AxiomReport checkLevelAxioms(const LevelFamily& family);

/// Brute-force (UT) over a lambda grid cube; sound, not complete.
AxiomReport oracleUtGrid(const LevelFamily& family, const std::vector<UnitRat>& lambdaGrid);

/// Mixed triangle inequality (UM): for each epsilon in the boundary
/// set, lambda = lambdaForEpsilon, check
/// d_eps(x,z) <= d_lambda(x,y) + d_lambda(y,z) on all triples.
AxiomReport checkMixedTriangle(const LevelFamily& family);

/// The biconditional d_lambda(x,y) < gamma <=> alpha(x,y,gamma) > 1-l,
/// tested at all (pair, gamma, lambda) boundary perturbations.
/// Precondition: family = deltaTransform(space).
bool dualityCheck(const PMSpace& space, const LevelFamily& family, unsigned denominator = 1024);

/// Profile boundaries, each +- 1/denominator, clamped to (0,1].
std::vector<UnitRat> standardLambdaGrid(const LevelFamily& family, unsigned denominator = 1024);

/// True iff no profile takes the value infinity.
bool isFinFamily(const LevelFamily& family);

}  // namespace pmet
