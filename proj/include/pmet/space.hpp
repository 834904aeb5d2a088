#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmet/distribution.hpp"
#include "pmet/report.hpp"
#include "pmet/tnorm.hpp"

namespace pmet {

/// Finite probabilistic metric space: carrier, one distance
/// distribution per unordered pair of distinct points, and a t-norm.
/// Reflexivity and symmetry are unrepresentable: the diagonal is
/// implicitly epsilon_0 and storage is per unordered pair.
class PMSpace {
public:
    PMSpace(std::vector<std::string> carrier,
            std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha, TNorm tnorm);

    const std::vector<std::string>& carrier() const { return carrier_; }
    const TNorm& tnorm() const { return tnorm_; }
    std::size_t size() const { return carrier_.size(); }

    std::size_t indexOf(const std::string& label) const;

    /// Distribution for the ordered index pair; epsilon_0 on the diagonal.
    const Distribution& alpha(std::size_t i, std::size_t j) const;

    friend bool operator==(const PMSpace&, const PMSpace&) = default;

private:
    std::vector<std::string> carrier_;
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha_;  // keys i < j
    TNorm tnorm_;
    Distribution diag_;
};

/// Exact decision of (P1)-(P5). (P1)-(P3) hold by construction and are
/// reported as such; (P4) is a canonical-form comparison against
/// epsilon_0; (P5) enumerates the rectangle regions induced by the jump
/// points and compares the constant left side against the right limit
/// of alpha(x,z,.) at the region corner.
AxiomReport checkPmAxioms(const PMSpace& space);

/// Brute-force (P5) at all grid pairs (r,s); sound, not complete.
AxiomReport oracleP5Grid(const PMSpace& space, const std::vector<ExtNonneg>& grid);

/// All jump points of every pair, each +- 1/denominator, plus {0, inf}.
std::vector<ExtNonneg> standardGammaGrid(const PMSpace& space, unsigned denominator = 1024);

/// True iff every alpha(x,y,.) reaches 1 at a finite jump.
bool isLimSpace(const PMSpace& space);

}  // namespace pmet
