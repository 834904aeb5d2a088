#pragma once

#include <functional>
#include <vector>

#include "pmet/rational.hpp"
#include "pmet/report.hpp"

namespace pmet {

enum class TNormKind { Minimum, Product, Lukasiewicz };

/// Continuous t-norm on [0,1]. Only the three classical kinds are
/// supported; continuity is analytic, never sampled.
class TNorm {
public:
    explicit TNorm(TNormKind kind) : kind_(kind) {}

    TNormKind kind() const { return kind_; }

    UnitRat apply(const UnitRat& a, const UnitRat& b) const;

    std::string name() const;
    static TNorm parse(const std::string& name);

    friend bool operator==(const TNorm& a, const TNorm& b) { return a.kind_ == b.kind_; }

private:
    TNormKind kind_;
};

/// Monoid/monotonicity laws checked exhaustively over a finite grid.
AxiomReport verifyTnormLaws(const TNorm& t, const std::vector<UnitRat>& grid);

/// Same law battery against an arbitrary binary operation; used as a
/// negative control for broken candidates.
AxiomReport verifyBinaryOpLaws(const std::function<UnitRat(const UnitRat&, const UnitRat&)>& op,
                               const std::vector<UnitRat>& grid);

/// Smallest dyadic lambda in {1/2, 1/4, ...} with T(1-l, 1-l) > 1-eps.
/// The minimum t-norm is resolved analytically as eps/2.
UnitRat lambdaForEpsilon(const TNorm& t, const UnitRat& eps);

struct LemmaStarResult {
    bool c1;  // d >= a * b
    bool c2;  // grid-relative two-level form
    bool c3;  // grid-relative single-level form
};

/// The three equivalent conditions of the level lemma, with c2/c3
/// quantified over the supplied grid only. a, b, d must be positive.
LemmaStarResult checkLemmaStar(const TNorm& t, const UnitRat& a, const UnitRat& b,
                               const UnitRat& d, const std::vector<UnitRat>& grid);

/// Dyadics k/denominator in [0,1] (or (0,1] when excludeZero).
std::vector<UnitRat> dyadicGrid(unsigned denominator, bool excludeZero = false);

}  // namespace pmet
