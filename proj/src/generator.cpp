#include "pmet/generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmet {

namespace {

using PairMap = std::map<std::pair<std::size_t, std::size_t>, Profile>;

/// Symmetric matrix with zero diagonal over the extended values.
struct Matrix {
    std::size_t n;
    std::vector<ExtNonneg> v;  // row-major

    explicit Matrix(std::size_t n_) : n(n_), v(n_ * n_, ExtNonneg::zero()) {}

    const ExtNonneg& at(std::size_t i, std::size_t j) const { return v[i * n + j]; }
    void set(std::size_t i, std::size_t j, ExtNonneg x) {
        v[i * n + j] = x;
        v[j * n + i] = std::move(x);
    }

    /// Shortest-path closure; enforces the triangle inequality.
    void close() {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ExtNonneg via = at(i, k) + at(k, j);
                    if (via < at(i, j)) v[i * n + j] = std::move(via);
                }
    }
};

/// Last (largest) finite jump position; requires a finitely-reaching
/// distribution.
ExtNonneg lastFiniteBreak(const Distribution& d) {
    const auto bps = d.finiteBreakpoints();
    if (bps.empty()) throw std::logic_error("distribution with no finite jump");
    return bps.back();
}

}  // namespace

std::vector<std::string> defaultCarrier(std::size_t points) {
    if (points > 26) throw InputError("at most 26 points supported");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < points; ++i) out.push_back(std::string(1, char('a' + i)));
    return out;
}

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

TNorm Generator::randomTnorm() {
    switch (uniform(0, 2)) {
        case 0: return TNorm(TNormKind::Minimum);
        case 1: return TNorm(TNormKind::Product);
        default: return TNorm(TNormKind::Lukasiewicz);
    }
}

LevelFamily Generator::validFamily(std::size_t points, std::size_t levels, const TNorm& t,
                                   bool allowInfinite) {
    if (points < 1) throw InputError("need at least one point");
    if (levels < 1) throw InputError("need at least one level");
    const std::size_t n = points;
    const std::size_t k = std::min<std::size_t>(levels, 15);

    // Interval right endpoints: k-1 distinct interior sixteenths plus 1.
    std::vector<std::size_t> nums{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    std::shuffle(nums.begin(), nums.end(), rng_);
    nums.resize(k - 1);
    std::sort(nums.begin(), nums.end());
    std::vector<UnitRat> bounds;
    for (std::size_t num : nums) bounds.emplace_back(long(num), 16L);
    bounds.push_back(UnitRat::one());

    auto freshValue = [&] { return ExtNonneg(long(uniform(1, 48)), 16L); };

    // Level chain: each matrix a closed (triangle-satisfying) symmetric
    // metric, entrywise nonincreasing along the chain.
    std::vector<Matrix> chain;
    Matrix first(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (allowInfinite && uniform(0, 2) == 0)
                first.set(i, j, ExtNonneg::infinity());
            else
                first.set(i, j, freshValue());
        }
    first.close();
    chain.push_back(first);
    for (std::size_t l = 1; l < k; ++l) {
        Matrix next = chain.back();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (uniform(0, 1) == 0) next.set(i, j, min(next.at(i, j), freshValue()));
        next.close();
        chain.push_back(std::move(next));
    }

    PairMap profiles;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Piece> pieces;
            for (std::size_t l = 0; l < k; ++l)
                pieces.push_back({bounds[l], chain[l].at(i, j)});
            profiles.emplace(std::make_pair(i, j), Profile::fromPieces(std::move(pieces)));
        }
    return LevelFamily(defaultCarrier(n), std::move(profiles), t);
}

PMSpace Generator::validSpace(std::size_t points, std::size_t levels, const TNorm& t,
                              bool allowInfinite) {
    return phiReconstruct(validFamily(points, levels, t, allowInfinite));
}

Generator::MutantSpace Generator::mutantSpace(std::size_t points, std::size_t levels,
                                              const TNorm& t) {
    if (points < 2) throw InputError("mutants need at least two points");
    const bool canP5 = points >= 3;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const PMSpace base = validSpace(points, levels, t, false);
        const std::size_t n = base.size();
        std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                alpha.emplace(std::make_pair(i, j), base.alpha(i, j));

        const bool targetP5 = canP5 && uniform(0, 1) == 0;
        std::size_t x = uniform(0, n - 2);
        std::size_t z = uniform(x + 1, n - 1);
        std::string target;
        if (!targetP5) {
            target = "P4";
            alpha.insert_or_assign({x, z}, Distribution::epsilonZero());
        } else {
            target = "P5";
            // Raise the (x,z) distances past the cheapest two-leg bound
            // so the triangle fails just above that bound.
            ExtNonneg best = ExtNonneg::infinity();
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                best = min(best, lastFiniteBreak(base.alpha(x, y)) +
                                     lastFiniteBreak(base.alpha(y, z)));
            }
            const Rational shift =
                best.finiteValue() - lastFiniteBreak(base.alpha(x, z)).finiteValue() + 1;
            const Rational c = shift > 1 ? shift : Rational(1);
            std::vector<Jump> jumps;
            for (const Jump& jm : base.alpha(x, z).jumps()) {
                if (jm.at.isInfinite()) continue;
                jumps.push_back({ExtNonneg(jm.at.finiteValue() + c), jm.to});
            }
            alpha.insert_or_assign({x, z}, Distribution::fromJumps(std::move(jumps)));
        }
        PMSpace mutant(base.carrier(), std::move(alpha), t);
        if (checkPmAxioms(mutant).failedAxioms() == std::vector<std::string>{target})
            return {std::move(mutant), target};
    }
    throw std::logic_error("space mutation did not converge");
}

Generator::MutantFamily Generator::mutantFamily(std::size_t points, std::size_t levels,
                                                const TNorm& t) {
    if (points < 2) throw InputError("mutants need at least two points");
    const bool canUt = points >= 3;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const LevelFamily base = validFamily(points, levels, t, false);
        const std::size_t n = base.size();
        PairMap profiles;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                profiles.emplace(std::make_pair(i, j), base.profile(i, j));

        const bool targetUt = canUt && uniform(0, 1) == 0;
        std::size_t x = uniform(0, n - 2);
        std::size_t z = uniform(x + 1, n - 1);
        std::string target;
        if (!targetUt) {
            target = "UH";
            // Make x and z twins: zero distance between them, identical
            // distances to everyone else, so only (UH) can fail.
            profiles.insert_or_assign({x, z}, Profile::zero());
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                profiles.insert_or_assign({std::min(x, y), std::max(x, y)},
                                          base.profile(std::min(z, y), std::max(z, y)));
            }
        } else {
            target = "UT";
            Rational maxVal = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (const Piece& p : base.profile(i, j).pieces())
                        maxVal = std::max(maxVal, p.value.finiteValue());
            const Rational c = 2 * maxVal + 1;
            std::vector<Piece> pieces;
            for (const Piece& p : base.profile(x, z).pieces())
                pieces.push_back({p.upto, ExtNonneg(p.value.finiteValue() + c)});
            profiles.insert_or_assign({x, z}, Profile::fromPieces(std::move(pieces)));
        }
        LevelFamily mutant(base.carrier(), std::move(profiles), t);
        if (checkLevelAxioms(mutant).failedAxioms() == std::vector<std::string>{target})
            return {std::move(mutant), target};
    }
    throw std::logic_error("family mutation did not converge");
}

std::vector<std::size_t> Generator::randomAssignment(std::size_t domainSize,
                                                     std::size_t codomainSize) {
    std::vector<std::size_t> assign;
    for (std::size_t i = 0; i < domainSize; ++i) assign.push_back(uniform(0, codomainSize - 1));
    return assign;
}

}  // namespace pmet
