#pragma once

#include <optional>
#include <vector>

#include "pmet/rational.hpp"

namespace pmet {

struct Jump {
    ExtNonneg at;
    UnitRat to;
    friend bool operator==(const Jump&, const Jump&) = default;
};

/// Left-continuous nondecreasing step function [0,inf] -> [0,1] with
/// value 0 at 0 and 1 at infinity:  phi(x) = max{ to_i : at_i < x },
/// phi(inf) = 1.  Kept in canonical form: jump positions and values
/// both strictly increasing, last value 1 (possibly via a jump at
/// infinity).  Canonical form makes equality decidable as sequence
/// equality.
class Distribution {
public:
    /// Normalizes an arbitrary jump list: sorts, drops dominated jumps
    /// and zero-valued jumps, appends the jump at infinity when the
    /// finite jumps do not reach 1.
    static Distribution fromJumps(std::vector<Jump> jumps);

    /// Single jump (0 -> 1): value 1 for every x > 0.
    static Distribution epsilonZero();

    const std::vector<Jump>& jumps() const { return jumps_; }

    /// max{ to_i : at_i < gamma }; 1 when gamma is infinite.
    UnitRat eval(const ExtNonneg& gamma) const;

    /// Right limit at a finite point: max{ to_i : at_i <= gamma }.
    UnitRat rightLimit(const ExtNonneg& gamma) const;

    /// True iff the distribution reaches 1 at a finite jump.
    bool reachesOneFinitely() const;

    /// Finite jump positions, in increasing order.
    std::vector<ExtNonneg> finiteBreakpoints() const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    Distribution() = default;
    std::vector<Jump> jumps_;
};

/// phi <= psi everywhere, decided on the merged breakpoint set.
bool pointwiseLeq(const Distribution& phi, const Distribution& psi);

/// As pointwiseLeq, but reports a finite gamma where phi > psi.
std::optional<ExtNonneg> pointwiseLeqWitness(const Distribution& phi, const Distribution& psi);

}  // namespace pmet
