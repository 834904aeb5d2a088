#include "pmet/tnorm.hpp"

#include <functional>

namespace pmet {

UnitRat TNorm::apply(const UnitRat& a, const UnitRat& b) const {
    switch (kind_) {
        case TNormKind::Minimum:
            return a <= b ? a : b;
        case TNormKind::Product:
            return UnitRat(a.value() * b.value());
        case TNormKind::Lukasiewicz: {
            Rational s = a.value() + b.value() - 1;
            if (s < 0) s = 0;
            return UnitRat(std::move(s));
        }
    }
    throw std::logic_error("unreachable t-norm kind");
}

std::string TNorm::name() const {
    switch (kind_) {
        case TNormKind::Minimum: return "minimum";
        case TNormKind::Product: return "product";
        case TNormKind::Lukasiewicz: return "lukasiewicz";
    }
    throw std::logic_error("unreachable t-norm kind");
}

TNorm TNorm::parse(const std::string& name) {
    if (name == "minimum") return TNorm(TNormKind::Minimum);
    if (name == "product") return TNorm(TNormKind::Product);
    if (name == "lukasiewicz") return TNorm(TNormKind::Lukasiewicz);
    throw InputError("unknown t-norm: " + name);
}

AxiomReport verifyBinaryOpLaws(const std::function<UnitRat(const UnitRat&, const UnitRat&)>& op,
                               const std::vector<UnitRat>& grid) {
    AxiomReport report;
    auto witness2 = [](const UnitRat& a, const UnitRat& b) {
        return "a=" + a.str() + " b=" + b.str();
    };

    bool unitOk = true, commOk = true, assocOk = true, monoOk = true;
    std::string unitW, commW, assocW, monoW;

    for (const auto& a : grid) {
        if (unitOk && op(UnitRat::one(), a) != a) {
            unitOk = false;
            unitW = "a=" + a.str();
        }
    }
    for (const auto& a : grid)
        for (const auto& b : grid) {
            if (commOk && op(a, b) != op(b, a)) {
                commOk = false;
                commW = witness2(a, b);
            }
        }
    for (const auto& a : grid)
        for (const auto& b : grid)
            for (const auto& c : grid) {
                if (assocOk && op(op(a, b), c) != op(a, op(b, c))) {
                    assocOk = false;
                    assocW = witness2(a, b) + " c=" + c.str() +
                             " lhs=" + op(op(a, b), c).str() + " rhs=" + op(a, op(b, c)).str();
                }
            }
    for (const auto& a : grid)
        for (const auto& a2 : grid) {
            if (a2 < a) continue;
            for (const auto& b : grid)
                for (const auto& b2 : grid) {
                    if (b2 < b) continue;
                    if (monoOk && op(a, b) > op(a2, b2)) {
                        monoOk = false;
                        monoW = witness2(a, b) + " a'=" + a2.str() + " b'=" + b2.str();
                    }
                }
        }

    report.checks.push_back(unitOk ? CheckResult::pass("unit") : CheckResult::fail("unit", unitW));
    report.checks.push_back(commOk ? CheckResult::pass("commutativity")
                                   : CheckResult::fail("commutativity", commW));
    report.checks.push_back(assocOk ? CheckResult::pass("associativity")
                                    : CheckResult::fail("associativity", assocW));
    report.checks.push_back(monoOk ? CheckResult::pass("monotonicity")
                                   : CheckResult::fail("monotonicity", monoW));
    return report;
}

AxiomReport verifyTnormLaws(const TNorm& t, const std::vector<UnitRat>& grid) {
    return verifyBinaryOpLaws([&t](const UnitRat& a, const UnitRat& b) { return t.apply(a, b); },
                              grid);
}

UnitRat lambdaForEpsilon(const TNorm& t, const UnitRat& eps) {
    if (eps.isZero()) throw InputError("lambdaForEpsilon requires eps > 0");
    if (t.kind() == TNormKind::Minimum) return UnitRat(eps.value() / 2);
    const UnitRat target = eps.complement();
    Rational lam(1, 2);
    for (;;) {
        UnitRat l{Rational(lam)};
        const UnitRat c = l.complement();
        if (t.apply(c, c) > target) return l;
        lam /= 2;
    }
}

LemmaStarResult checkLemmaStar(const TNorm& t, const UnitRat& a, const UnitRat& b,
                               const UnitRat& d, const std::vector<UnitRat>& grid) {
    if (a.isZero() || b.isZero() || d.isZero())
        throw InputError("checkLemmaStar requires a, b, d in ]0,1]");
    const UnitRat ab = t.apply(a, b);
    LemmaStarResult r;
    r.c1 = d >= ab;

    std::vector<UnitRat> comp;
    comp.reserve(grid.size());
    for (const auto& l : grid) comp.push_back(l.complement());

    r.c2 = true;
    for (std::size_t i = 0; i < grid.size() && r.c2; ++i) {
        if (grid[i].isZero() || !(a > comp[i])) continue;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            if (grid[j].isZero() || !(b > comp[j])) continue;
            if (d < t.apply(comp[j], comp[i])) {
                r.c2 = false;
                break;
            }
        }
    }

    r.c3 = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].isZero()) continue;
        if (ab > comp[i] && d < comp[i]) {
            r.c3 = false;
            break;
        }
    }
    return r;
}

std::vector<UnitRat> dyadicGrid(unsigned denominator, bool excludeZero) {
    std::vector<UnitRat> out;
    for (unsigned k = excludeZero ? 1 : 0; k <= denominator; ++k)
        out.emplace_back(Rational(k, denominator));
    return out;
}

}  // namespace pmet
