#include "pmet/level.hpp"

#include <algorithm>

namespace pmet {

Profile Profile::fromPieces(std::vector<Piece> pieces) {
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.upto < b.upto; });
    if (pieces.empty()) throw InputError("empty level profile");
    if (!pieces.back().upto.isOne()) throw InputError("level profile must end at lambda = 1");
    Profile p;
    for (const Piece& piece : pieces) {
        if (!p.pieces_.empty()) {
            if (p.pieces_.back().upto == piece.upto)
                throw InputError("duplicate profile boundary " + piece.upto.str());
            if (piece.value > p.pieces_.back().value)
                throw InputError("level profile not nonincreasing at lambda = " +
                                 piece.upto.str());
            if (piece.value == p.pieces_.back().value) {
                p.pieces_.back().upto = piece.upto;  // merge equal values
                continue;
            }
        }
        p.pieces_.push_back(piece);
    }
    return p;
}

Profile Profile::zero() { return constant(ExtNonneg::zero()); }

Profile Profile::constant(ExtNonneg value) {
    return fromPieces({{UnitRat::one(), std::move(value)}});
}

const ExtNonneg& Profile::valueAt(const UnitRat& lambda) const {
    if (lambda.isZero()) throw InputError("level distances are indexed by lambda in ]0,1]");
    for (const Piece& p : pieces_)
        if (p.upto >= lambda) return p.value;
    throw std::logic_error("profile does not cover (0,1]");
}

const ExtNonneg& Profile::rightLimitAt(const UnitRat& lambda0) const {
    if (lambda0.isOne()) throw InputError("right limit undefined at lambda = 1");
    for (const Piece& p : pieces_)
        if (p.upto > lambda0) return p.value;
    throw std::logic_error("profile does not cover (0,1]");
}

UnitRat Profile::leftEndpoint(std::size_t i) const {
    return i == 0 ? UnitRat::zero() : pieces_.at(i - 1).upto;
}

std::vector<UnitRat> Profile::boundaries() const {
    std::vector<UnitRat> out;
    for (const Piece& p : pieces_) out.push_back(p.upto);
    return out;
}

bool Profile::hasInfiniteValue() const {
    return !pieces_.empty() && pieces_.front().value.isInfinite();
}

LevelFamily::LevelFamily(std::vector<std::string> carrier,
                         std::map<std::pair<std::size_t, std::size_t>, Profile> levels,
                         TNorm tnorm)
    : carrier_(std::move(carrier)),
      levels_(std::move(levels)),
      tnorm_(tnorm),
      diag_(Profile::zero()) {
    const std::size_t n = carrier_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!levels_.count({i, j}))
                throw InputError("missing level profile for pair " + carrier_[i] + "|" +
                                 carrier_[j]);
    if (levels_.size() != n * (n - 1) / 2) throw InputError("unexpected pair key in levels");
}

std::size_t LevelFamily::indexOf(const std::string& label) const {
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (carrier_[i] == label) return i;
    throw InputError("unknown point: " + label);
}

const Profile& LevelFamily::profile(std::size_t i, std::size_t j) const {
    if (i == j) return diag_;
    if (i > j) std::swap(i, j);
    return levels_.at({i, j});
}

ExtNonneg LevelFamily::levelEval(const UnitRat& lambda, std::size_t x, std::size_t y) const {
    if (x >= size() || y >= size()) throw InputError("point index out of range");
    return profile(x, y).valueAt(lambda);
}

std::vector<UnitRat> LevelFamily::allBoundaries() const {
    std::vector<UnitRat> out{UnitRat::one()};
    for (const auto& [key, prof] : levels_)
        for (const auto& b : prof.boundaries()) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LevelFamily deltaTransform(const PMSpace& space) {
    const std::size_t n = space.size();
    std::map<std::pair<std::size_t, std::size_t>, Profile> levels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& jumps = space.alpha(i, j).jumps();
            std::vector<Jump> finite;
            for (const Jump& jm : jumps)
                if (!jm.at.isInfinite()) finite.push_back(jm);
            std::vector<Piece> pieces;
            if (finite.empty()) {
                pieces.push_back({UnitRat::one(), ExtNonneg::infinity()});
            } else {
                // d_lambda = min{ at_i : to_i > 1-lambda }: the profile
                // changes value exactly at lambda = 1 - to_i.
                if (!finite.back().to.isOne())
                    pieces.push_back({finite.back().to.complement(), ExtNonneg::infinity()});
                for (std::size_t k = finite.size(); k-- > 1;)
                    pieces.push_back({finite[k - 1].to.complement(), finite[k].at});
                pieces.push_back({UnitRat::one(), finite[0].at});
            }
            levels.emplace(std::make_pair(i, j), Profile::fromPieces(std::move(pieces)));
        }
    return LevelFamily(space.carrier(), std::move(levels), space.tnorm());
}

PMSpace phiReconstruct(const LevelFamily& family) {
    const std::size_t n = family.size();
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Profile& prof = family.profile(i, j);
            // A piece with value v on (a, b] contributes
            // beta(gamma) = 1-a for gamma just above v.
            std::vector<Jump> jumps;
            for (std::size_t k = 0; k < prof.pieces().size(); ++k)
                jumps.push_back({prof.pieces()[k].value, prof.leftEndpoint(k).complement()});
            alpha.emplace(std::make_pair(i, j), Distribution::fromJumps(std::move(jumps)));
        }
    return PMSpace(family.carrier(), std::move(alpha), family.tnorm());
}

ExtNonneg oracleLevelDistance(const PMSpace& space, const UnitRat& lambda, std::size_t x,
                              std::size_t y, const std::vector<ExtNonneg>& grid) {
    if (x == y) return ExtNonneg::zero();
    const Distribution& phi = space.alpha(x, y);
    const UnitRat target = lambda.complement();
    ExtNonneg best = ExtNonneg::infinity();
    for (const ExtNonneg& g : grid) {
        if (g.isInfinite()) continue;
        if (phi.eval(g) > target && g < best) best = g;
    }
    return best;
}

namespace {

struct UtViolation {
    std::size_t x, y, z;
    UnitRat eps, lambda, lambdaPrime;
    ExtNonneg lhs, rhs;
};

std::string formatUtWitness(const LevelFamily& fam, const std::string& axiom,
                            const UtViolation& w) {
    return "x=" + fam.carrier()[w.x] + " y=" + fam.carrier()[w.y] + " z=" + fam.carrier()[w.z] +
           " eps=" + w.eps.str() + " lambda=" + w.lambda.str() +
           " lambda'=" + w.lambdaPrime.str() + " " + axiom + "-lhs=" + w.lhs.str() +
           " rhs=" + w.rhs.str();
}

// Replayable (eps, lambda, lambda') for a violating piece pair: eps in
// the region where d_eps(x,z) equals the right limit, lambda/lambda'
// pushed toward the piece left endpoints until the strict t-norm
// condition holds.
UtViolation makeUtWitness(const LevelFamily& fam, std::size_t x, std::size_t y, std::size_t z,
                          const UnitRat& a, const UnitRat& aRight, const UnitRat& c,
                          const UnitRat& cRight, const UnitRat& lambda0, const ExtNonneg& bound,
                          const ExtNonneg& rhs) {
    const TNorm& T = fam.tnorm();
    const Profile& R = fam.profile(x, z);
    UnitRat nextBoundary = UnitRat::one();
    for (const UnitRat& b : R.boundaries())
        if (b > lambda0) {
            nextBoundary = b;
            break;
        }
    const UnitRat eps{lambda0.value() + (nextBoundary.value() - lambda0.value()) / 2};
    Rational delta =
        std::min(aRight.value() - a.value(), cRight.value() - c.value()) / 2;
    for (;;) {
        UnitRat lam{a.value() + delta};
        UnitRat lamP{c.value() + delta};
        if (T.apply(lamP.complement(), lam.complement()) > eps.complement())
            return {x, y, z, eps, lam, lamP, bound, rhs};
        delta /= 2;
    }
}

std::optional<UtViolation> findUtViolation(const LevelFamily& fam) {
    const TNorm& T = fam.tnorm();
    const std::size_t n = fam.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Profile& P = fam.profile(x, y);
                const Profile& Q = fam.profile(y, z);
                const Profile& R = fam.profile(x, z);
                for (std::size_t pi = 0; pi < P.pieces().size(); ++pi) {
                    const UnitRat a = P.leftEndpoint(pi);
                    const ExtNonneg& u = P.pieces()[pi].value;
                    for (std::size_t qi = 0; qi < Q.pieces().size(); ++qi) {
                        const UnitRat c = Q.leftEndpoint(qi);
                        const ExtNonneg& v = Q.pieces()[qi].value;
                        // Strongest attainable strict condition on this
                        // piece pair: sup T(1-lambda', 1-lambda) over
                        // the open corner is T(1-c, 1-a).
                        const UnitRat s = T.apply(c.complement(), a.complement());
                        if (s.isZero()) continue;  // no eps satisfies the condition
                        const UnitRat lambda0 = s.complement();
                        const ExtNonneg& bound = R.rightLimitAt(lambda0);
                        const ExtNonneg rhs = u + v;
                        if (bound <= rhs) continue;
                        return makeUtWitness(fam, x, y, z, a, P.pieces()[pi].upto, c,
                                             Q.pieces()[qi].upto, lambda0, bound, rhs);
                    }
                }
            }
    return std::nullopt;
}

}  // namespace

AxiomReport checkLevelAxioms(const LevelFamily& family) {
    AxiomReport report;
    report.checks.push_back(CheckResult::pass("US", "holds by construction"));
    report.checks.push_back(CheckResult::pass("UD", "holds by construction"));

    CheckResult uh = CheckResult::pass("UH");
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n && uh.verdict == Verdict::Pass; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (family.profile(i, j).pieces().front().value.isZero()) {
                uh = CheckResult::fail("UH", "x=" + family.carrier()[i] +
                                                 " y=" + family.carrier()[j] +
                                                 " all level distances are 0");
                break;
            }
    report.checks.push_back(uh);

    if (auto w = findUtViolation(family))
        report.checks.push_back(CheckResult::fail("UT", formatUtWitness(family, "UT", *w)));
    else
        report.checks.push_back(CheckResult::pass("UT"));
    return report;
}

AxiomReport oracleUtGrid(const LevelFamily& family, const std::vector<UnitRat>& lambdaGrid) {
    const TNorm& T = family.tnorm();
    const std::size_t n = family.size();
    AxiomReport report;
    // One distance table per grid level.
    std::vector<std::vector<ExtNonneg>> tables(lambdaGrid.size(),
                                               std::vector<ExtNonneg>(n * n));
    for (std::size_t gi = 0; gi < lambdaGrid.size(); ++gi)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                tables[gi][x * n + y] = family.levelEval(lambdaGrid[gi], x, y);

    for (std::size_t li = 0; li < lambdaGrid.size(); ++li)
        for (std::size_t lj = 0; lj < lambdaGrid.size(); ++lj) {
            const UnitRat t = T.apply(lambdaGrid[lj].complement(), lambdaGrid[li].complement());
            for (std::size_t ei = 0; ei < lambdaGrid.size(); ++ei) {
                if (!(t > lambdaGrid[ei].complement())) continue;
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        for (std::size_t z = 0; z < n; ++z) {
                            const ExtNonneg& lhs = tables[ei][x * n + z];
                            const ExtNonneg rhs =
                                tables[li][x * n + y] + tables[lj][y * n + z];
                            if (lhs > rhs) {
                                report.checks.push_back(CheckResult::fail(
                                    "UT", formatUtWitness(family, "UT",
                                                          {x, y, z, lambdaGrid[ei],
                                                           lambdaGrid[li], lambdaGrid[lj], lhs,
                                                           rhs})));
                                return report;
                            }
                        }
            }
        }
    report.checks.push_back(CheckResult::pass("UT"));
    return report;
}

AxiomReport checkMixedTriangle(const LevelFamily& family) {
    const TNorm& T = family.tnorm();
    const std::size_t n = family.size();
    AxiomReport report;
    for (const UnitRat& eps : family.allBoundaries()) {
        if (eps.isZero()) continue;
        const UnitRat lambda = lambdaForEpsilon(T, eps);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    const ExtNonneg lhs = family.levelEval(eps, x, z);
                    const ExtNonneg rhs =
                        family.levelEval(lambda, x, y) + family.levelEval(lambda, y, z);
                    if (lhs > rhs) {
                        report.checks.push_back(CheckResult::fail(
                            "UM", formatUtWitness(family, "UM",
                                                  {x, y, z, eps, lambda, lambda, lhs, rhs})));
                        return report;
                    }
                }
    }
    report.checks.push_back(CheckResult::pass("UM"));
    return report;
}

bool dualityCheck(const PMSpace& space, const LevelFamily& family, unsigned denominator) {
    const std::size_t n = space.size();
    const Rational step(1, denominator);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Distribution& phi = space.alpha(i, j);
            std::vector<ExtNonneg> gammas{ExtNonneg::zero()};
            for (const ExtNonneg& p : phi.finiteBreakpoints()) {
                gammas.push_back(p);
                gammas.push_back(p + ExtNonneg(step));
                if (p.finiteValue() >= step) gammas.emplace_back(p.finiteValue() - step);
            }
            std::vector<UnitRat> lambdas;
            for (const UnitRat& b : family.profile(i, j).boundaries()) {
                lambdas.push_back(b);
                if (b.value() + step <= 1) lambdas.emplace_back(b.value() + step);
                if (b.value() > step) lambdas.emplace_back(b.value() - step);
            }
            for (const ExtNonneg& gamma : gammas)
                for (const UnitRat& lambda : lambdas) {
                    const bool left = family.levelEval(lambda, i, j) < gamma;
                    const bool right = phi.eval(gamma) > lambda.complement();
                    if (left != right) return false;
                }
        }
    return true;
}

std::vector<UnitRat> standardLambdaGrid(const LevelFamily& family, unsigned denominator) {
    const Rational step(1, denominator);
    std::vector<UnitRat> grid{UnitRat::one()};
    std::vector<Rational> lefts{Rational(0)};
    for (const UnitRat& b : family.allBoundaries()) {
        if (!b.isZero()) grid.push_back(b);
        if (b.value() + step <= 1) grid.emplace_back(b.value() + step);
        if (b.value() > step) grid.emplace_back(b.value() - step);
        if (b.value() < 1) lefts.push_back(b.value());
    }
    // Levels just above each piece's left endpoint, together with the
    // triangle levels they induce through the t-norm, so that
    // premise-tight violations in the first piece are sampled too.
    std::vector<UnitRat> probes;
    for (const Rational& a : lefts) {
        if (a + step <= 1) probes.emplace_back(a + step);
    }
    const TNorm& T = family.tnorm();
    for (const UnitRat& u : probes)
        for (const UnitRat& v : probes) {
            const UnitRat t = T.apply(u.complement(), v.complement());
            if (t.isZero()) continue;
            const Rational eps = Rational(1) - t.value() + step;
            if (eps <= 1) grid.emplace_back(eps);
        }
    grid.insert(grid.end(), probes.begin(), probes.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

bool isFinFamily(const LevelFamily& family) {
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (family.profile(i, j).hasInfiniteValue()) return false;
    return true;
}

}  // namespace pmet
