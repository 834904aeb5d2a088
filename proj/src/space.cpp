#include "pmet/space.hpp"

#include <algorithm>

namespace pmet {

PMSpace::PMSpace(std::vector<std::string> carrier,
                 std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha, TNorm tnorm)
    : carrier_(std::move(carrier)),
      alpha_(std::move(alpha)),
      tnorm_(tnorm),
      diag_(Distribution::epsilonZero()) {
    const std::size_t n = carrier_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!alpha_.count({i, j}))
                throw InputError("missing distribution for pair " + carrier_[i] + "|" +
                                 carrier_[j]);
    if (alpha_.size() != n * (n - 1) / 2) throw InputError("unexpected pair key in alpha");
}

std::size_t PMSpace::indexOf(const std::string& label) const {
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (carrier_[i] == label) return i;
    throw InputError("unknown point: " + label);
}

const Distribution& PMSpace::alpha(std::size_t i, std::size_t j) const {
    if (i == j) return diag_;
    if (i > j) std::swap(i, j);
    return alpha_.at({i, j});
}

namespace {

// Smallest element of `points` strictly above t, as a gap; 1 if none.
Rational gapAbove(const std::vector<ExtNonneg>& points, const ExtNonneg& t) {
    Rational gap(1);
    for (const auto& p : points)
        if (p > t && !p.isInfinite()) {
            Rational g = p.finiteValue() - t.finiteValue();
            if (g < gap) gap = g;
            break;
        }
    return gap;
}

struct P5Violation {
    std::size_t x, y, z;
    ExtNonneg r, s;
    UnitRat lhs, rhs;
};

std::string formatP5Witness(const PMSpace& sp, const P5Violation& w) {
    return "x=" + sp.carrier()[w.x] + " y=" + sp.carrier()[w.y] + " z=" + sp.carrier()[w.z] +
           " r=" + w.r.str() + " s=" + w.s.str() + " lhs=" + w.lhs.str() +
           " rhs=" + w.rhs.str();
}

std::optional<P5Violation> findP5Violation(const PMSpace& sp) {
    const TNorm& T = sp.tnorm();
    const std::size_t n = sp.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Distribution& f = sp.alpha(y, z);  // argument r
                const Distribution& g = sp.alpha(x, y);  // argument s
                const Distribution& h = sp.alpha(x, z);
                auto cornersF = f.finiteBreakpoints();
                auto cornersG = g.finiteBreakpoints();
                cornersF.insert(cornersF.begin(), ExtNonneg::zero());
                cornersG.insert(cornersG.begin(), ExtNonneg::zero());
                const auto hPoints = h.finiteBreakpoints();
                // On the region (a, a'] x (c, c'] the left side is the
                // constant T(f(a+), g(c+)) and the infimum of the right
                // side is the right limit of h at a+c.
                for (const auto& a : cornersF) {
                    const UnitRat u = f.rightLimit(a);
                    for (const auto& c : cornersG) {
                        const UnitRat v = g.rightLimit(c);
                        const UnitRat lhs = T.apply(u, v);
                        const ExtNonneg corner = a + c;
                        const UnitRat bound = h.rightLimit(corner);
                        if (lhs <= bound) continue;
                        Rational delta = std::min(
                            {Rational(1), gapAbove(cornersF, a), gapAbove(cornersG, c),
                             gapAbove(hPoints, corner)});
                        delta /= 2;
                        P5Violation w;
                        w.x = x;
                        w.y = y;
                        w.z = z;
                        w.r = a + ExtNonneg(delta);
                        w.s = c + ExtNonneg(delta);
                        w.lhs = lhs;
                        w.rhs = h.eval(w.r + w.s);
                        return w;
                    }
                }
                // Boundary cases r,s in {0, inf}, via direct evaluation.
                for (const auto& c : cornersG) {
                    const UnitRat v = g.rightLimit(c);
                    if (T.apply(UnitRat::zero(), v) > h.rightLimit(c))
                        return P5Violation{x, y, z, ExtNonneg::zero(), c, T.apply(UnitRat::zero(), v),
                                           h.rightLimit(c)};
                    if (T.apply(UnitRat::one(), v) > UnitRat::one())
                        return P5Violation{x, y, z, ExtNonneg::infinity(), c,
                                           T.apply(UnitRat::one(), v), UnitRat::one()};
                }
                for (const auto& a : cornersF) {
                    const UnitRat u = f.rightLimit(a);
                    if (T.apply(u, UnitRat::zero()) > h.rightLimit(a))
                        return P5Violation{x, y, z, a, ExtNonneg::zero(), T.apply(u, UnitRat::zero()),
                                           h.rightLimit(a)};
                }
            }
    return std::nullopt;
}

}  // namespace

AxiomReport checkPmAxioms(const PMSpace& space) {
    AxiomReport report;
    report.checks.push_back(CheckResult::pass("P1", "holds by construction"));
    report.checks.push_back(CheckResult::pass("P2", "holds by construction"));
    report.checks.push_back(CheckResult::pass("P3", "holds by construction"));

    CheckResult p4 = CheckResult::pass("P4");
    const std::size_t n = space.size();
    const Distribution eps0 = Distribution::epsilonZero();
    for (std::size_t i = 0; i < n && p4.verdict == Verdict::Pass; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (space.alpha(i, j) == eps0) {
                p4 = CheckResult::fail("P4", "x=" + space.carrier()[i] +
                                                 " y=" + space.carrier()[j] +
                                                 " alpha equals epsilon_0");
                break;
            }
    report.checks.push_back(p4);

    if (auto w = findP5Violation(space))
        report.checks.push_back(CheckResult::fail("P5", formatP5Witness(space, *w)));
    else
        report.checks.push_back(CheckResult::pass("P5"));
    return report;
}

AxiomReport oracleP5Grid(const PMSpace& space, const std::vector<ExtNonneg>& grid) {
    const TNorm& T = space.tnorm();
    const std::size_t n = space.size();
    AxiomReport report;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Distribution& f = space.alpha(y, z);
                const Distribution& g = space.alpha(x, y);
                const Distribution& h = space.alpha(x, z);
                std::vector<UnitRat> fv, gv;
                fv.reserve(grid.size());
                gv.reserve(grid.size());
                for (const auto& t : grid) {
                    fv.push_back(f.eval(t));
                    gv.push_back(g.eval(t));
                }
                for (std::size_t i = 0; i < grid.size(); ++i)
                    for (std::size_t j = 0; j < grid.size(); ++j) {
                        const UnitRat lhs = T.apply(fv[i], gv[j]);
                        if (lhs > h.eval(grid[i] + grid[j])) {
                            report.checks.push_back(CheckResult::fail(
                                "P5",
                                "x=" + space.carrier()[x] + " y=" + space.carrier()[y] +
                                    " z=" + space.carrier()[z] + " r=" + grid[i].str() +
                                    " s=" + grid[j].str() + " lhs=" + lhs.str() +
                                    " rhs=" + h.eval(grid[i] + grid[j]).str()));
                            return report;
                        }
                    }
            }
    report.checks.push_back(CheckResult::pass("P5"));
    return report;
}

std::vector<ExtNonneg> standardGammaGrid(const PMSpace& space, unsigned denominator) {
    std::vector<ExtNonneg> grid{ExtNonneg::zero(), ExtNonneg::infinity()};
    const Rational step(1, denominator);
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& p : space.alpha(i, j).finiteBreakpoints()) {
                grid.push_back(p);
                grid.push_back(p + ExtNonneg(step));
                if (p.finiteValue() >= step) grid.emplace_back(p.finiteValue() - step);
            }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

bool isLimSpace(const PMSpace& space) {
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!space.alpha(i, j).reachesOneFinitely()) return false;
    return true;
}

}  // namespace pmet
