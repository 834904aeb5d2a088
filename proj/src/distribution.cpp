#include "pmet/distribution.hpp"

#include <algorithm>

namespace pmet {

Distribution Distribution::fromJumps(std::vector<Jump> jumps) {
    std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) {
        if (a.at != b.at) return a.at < b.at;
        return a.to < b.to;
    });
    Distribution d;
    for (const Jump& j : jumps) {
        if (j.at.isInfinite()) continue;  // phi(inf)=1 is implicit
        if (j.to.isZero()) continue;
        if (!d.jumps_.empty()) {
            if (d.jumps_.back().at == j.at) {
                d.jumps_.back().to = std::max(d.jumps_.back().to, j.to);
                continue;
            }
            if (j.to <= d.jumps_.back().to) continue;  // dominated
        }
        d.jumps_.push_back(j);
    }
    if (d.jumps_.empty() || !d.jumps_.back().to.isOne())
        d.jumps_.push_back({ExtNonneg::infinity(), UnitRat::one()});
    return d;
}

Distribution Distribution::epsilonZero() {
    return fromJumps({{ExtNonneg::zero(), UnitRat::one()}});
}

UnitRat Distribution::eval(const ExtNonneg& gamma) const {
    if (gamma.isInfinite()) return UnitRat::one();
    UnitRat best = UnitRat::zero();
    for (const Jump& j : jumps_) {
        if (j.at < gamma)
            best = j.to;
        else
            break;
    }
    return best;
}

UnitRat Distribution::rightLimit(const ExtNonneg& gamma) const {
    if (gamma.isInfinite()) throw InputError("rightLimit requires a finite point");
    UnitRat best = UnitRat::zero();
    for (const Jump& j : jumps_) {
        if (j.at <= gamma)
            best = j.to;
        else
            break;
    }
    return best;
}

bool Distribution::reachesOneFinitely() const {
    return !jumps_.empty() && !jumps_.back().at.isInfinite();
}

std::vector<ExtNonneg> Distribution::finiteBreakpoints() const {
    std::vector<ExtNonneg> out;
    for (const Jump& j : jumps_)
        if (!j.at.isInfinite()) out.push_back(j.at);
    return out;
}

std::optional<ExtNonneg> pointwiseLeqWitness(const Distribution& phi, const Distribution& psi) {
    // Both sides are constant on intervals between merged breakpoints,
    // with the value on (a, b] equal to the right limit at a.
    std::vector<ExtNonneg> points{ExtNonneg::zero()};
    for (const auto& p : phi.finiteBreakpoints()) points.push_back(p);
    for (const auto& p : psi.finiteBreakpoints()) points.push_back(p);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ExtNonneg& a = points[i];
        if (phi.rightLimit(a) <= psi.rightLimit(a)) continue;
        // Pick a replayable interior point of the violating interval.
        ExtNonneg gap(Rational(1));
        if (i + 1 < points.size() && !points[i + 1].isInfinite())
            gap = min(gap, ExtNonneg(points[i + 1].finiteValue() - a.finiteValue()));
        return a + ExtNonneg(gap.finiteValue() / 2);
    }
    return std::nullopt;
}

bool pointwiseLeq(const Distribution& phi, const Distribution& psi) {
    return !pointwiseLeqWitness(phi, psi).has_value();
}

}  // namespace pmet
