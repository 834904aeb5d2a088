#include "pmet/systems.hpp"

#include <algorithm>

namespace pmet {

DistanceTable::DistanceTable(std::vector<std::string> carrier, std::vector<ExtNonneg> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
    const std::size_t n = carrier_.size();
    if (values_.size() != n * n) throw InputError("distance table has wrong shape");
    for (std::size_t x = 0; x < n; ++x)
        if (!at(x, x).isZero())
            throw InputError("distance table nonzero on the diagonal at " + carrier_[x]);
}

void DistanceTable::set(std::size_t x, std::size_t y, ExtNonneg v) {
    if (x == y && !v.isZero()) throw InputError("diagonal of a distance table must stay 0");
    values_[x * carrier_.size() + y] = std::move(v);
}

DistanceTable DistanceTable::transpose() const {
    const std::size_t n = size();
    std::vector<ExtNonneg> out(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out[y * n + x] = at(x, y);
    return DistanceTable(carrier_, std::move(out));
}

DistanceTable DistanceTable::pointwiseMax(const DistanceTable& other) const {
    const std::size_t n = size();
    std::vector<ExtNonneg> out(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out[x * n + y] = max(at(x, y), other.at(x, y));
    return DistanceTable(carrier_, std::move(out));
}

LocalTable::LocalTable(std::vector<std::string> carrier, std::size_t anchor,
                       std::vector<ExtNonneg> values)
    : carrier_(std::move(carrier)), anchor_(anchor), values_(std::move(values)) {
    if (values_.size() != carrier_.size()) throw InputError("local table has wrong shape");
    if (anchor_ >= carrier_.size()) throw InputError("local table anchor out of range");
    if (!values_[anchor_].isZero())
        throw InputError("local table nonzero at its anchor " + carrier_[anchor_]);
}

namespace {

void requireSameCarrier(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a != b) throw InputError("tables do not share a carrier");
}

// Distinct finite values occurring in a table, as caps.
template <typename Values>
std::vector<ExtNonneg> finiteCaps(const Values& values) {
    std::vector<ExtNonneg> caps;
    for (const ExtNonneg& v : values)
        if (!v.isInfinite()) caps.push_back(v);
    std::sort(caps.begin(), caps.end());
    caps.erase(std::unique(caps.begin(), caps.end()), caps.end());
    return caps;
}

// Dominance of the capped candidate by one basis member; the symbolic
// cap is the uncapped comparison.
template <typename Entries>
bool dominates(const Entries& member, const Entries& candidate,
               const ExtNonneg* cap /* nullptr = symbolic */) {
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        const ExtNonneg capped = cap ? min(candidate[i], *cap) : candidate[i];
        if (!(capped <= member[i])) return false;
    }
    return true;
}

std::vector<ExtNonneg> tableValues(const DistanceTable& t) {
    std::vector<ExtNonneg> out;
    const std::size_t n = t.size();
    out.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out.push_back(t.at(x, y));
    return out;
}

std::vector<ExtNonneg> tableValues(const LocalTable& t) {
    std::vector<ExtNonneg> out;
    for (std::size_t y = 0; y < t.size(); ++y) out.push_back(t.at(y));
    return out;
}

}  // namespace

bool saturationMember(const std::vector<DistanceTable>& basis, const DistanceTable& candidate) {
    if (basis.empty()) throw InputError("saturation of an empty basis");
    std::vector<std::vector<ExtNonneg>> basisValues;
    for (const auto& b : basis) {
        requireSameCarrier(b.carrier(), candidate.carrier());
        basisValues.push_back(tableValues(b));
    }
    const auto candValues = tableValues(candidate);
    std::vector<const ExtNonneg*> caps;
    const auto finite = finiteCaps(candValues);
    for (const auto& c : finite) caps.push_back(&c);
    caps.push_back(nullptr);
    for (const ExtNonneg* cap : caps) {
        bool found = false;
        for (const auto& bv : basisValues)
            if (dominates(bv, candValues, cap)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool saturationMemberLocal(const std::vector<LocalTable>& basis, const LocalTable& candidate) {
    if (basis.empty()) throw InputError("saturation of an empty basis");
    std::vector<std::vector<ExtNonneg>> basisValues;
    for (const auto& b : basis) {
        requireSameCarrier(b.carrier(), candidate.carrier());
        basisValues.push_back(tableValues(b));
    }
    const auto candValues = tableValues(candidate);
    std::vector<const ExtNonneg*> caps;
    const auto finite = finiteCaps(candValues);
    for (const auto& c : finite) caps.push_back(&c);
    caps.push_back(nullptr);
    for (const ExtNonneg* cap : caps) {
        bool found = false;
        for (const auto& bv : basisValues)
            if (dominates(bv, candValues, cap)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

AxiomReport checkUniformBasis(const std::vector<DistanceTable>& basis) {
    if (basis.empty()) throw InputError("uniform basis must be nonempty");
    for (const auto& b : basis) requireSameCarrier(b.carrier(), basis.front().carrier());
    const std::size_t n = basis.front().size();
    AxiomReport report;
    report.checks.push_back(CheckResult::pass("AU1", "holds by construction"));

    CheckResult directed =
        CheckResult::pass("directedness", "decided as domination up to saturation");
    for (std::size_t i = 0; i < basis.size() && directed.verdict == Verdict::Pass; ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!saturationMember(basis, basis[i].pointwiseMax(basis[j]))) {
                directed = CheckResult::fail("directedness",
                                             "members " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " have no dominating member");
                break;
            }
    report.checks.push_back(directed);

    CheckResult au3 = CheckResult::pass("AU3");
    for (std::size_t di = 0; di < basis.size() && au3.verdict == Verdict::Pass; ++di) {
        const DistanceTable& d = basis[di];
        auto caps = finiteCaps(tableValues(d));
        std::vector<const ExtNonneg*> capPtrs;
        for (const auto& c : caps) capPtrs.push_back(&c);
        capPtrs.push_back(nullptr);
        for (const ExtNonneg* cap : capPtrs) {
            bool found = false;
            for (const DistanceTable& e : basis) {
                bool ok = true;
                for (std::size_t x = 0; x < n && ok; ++x)
                    for (std::size_t z = 0; z < n && ok; ++z) {
                        const ExtNonneg lhs = cap ? min(d.at(x, z), *cap) : d.at(x, z);
                        for (std::size_t y = 0; y < n && ok; ++y)
                            if (!(lhs <= e.at(x, y) + e.at(y, z))) ok = false;
                    }
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                au3 = CheckResult::fail(
                    "AU3", "member " + std::to_string(di) + " cap " +
                               (cap ? cap->str() : std::string("unbounded")) +
                               " has no halving member");
                break;
            }
        }
    }
    report.checks.push_back(au3);

    CheckResult au4 = CheckResult::pass("AU4");
    for (std::size_t di = 0; di < basis.size(); ++di)
        if (!saturationMember(basis, basis[di].transpose())) {
            au4 = CheckResult::fail("AU4",
                                    "transpose of member " + std::to_string(di) +
                                        " is outside the saturation");
            break;
        }
    report.checks.push_back(au4);
    return report;
}

AxiomReport checkLocalBasis(const std::vector<std::vector<LocalTable>>& bases,
                            std::size_t cutoff) {
    AxiomReport report;
    const std::size_t n = bases.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (bases[x].empty()) throw InputError("local basis must be nonempty at every point");
        for (const auto& t : bases[x]) {
            if (t.size() != n) throw InputError("local table carrier mismatch");
            if (t.anchor() != x) throw InputError("local table anchored at the wrong point");
        }
    }
    report.checks.push_back(CheckResult::pass("A1", "holds by construction"));

    std::size_t work = 0;
    CheckResult a3 = CheckResult::pass("A3");
    for (std::size_t x = 0; x < n && a3.verdict == Verdict::Pass; ++x) {
        for (const LocalTable& phi : bases[x]) {
            auto caps = finiteCaps(tableValues(phi));
            std::vector<const ExtNonneg*> capPtrs;
            for (const auto& c : caps) capPtrs.push_back(&c);
            capPtrs.push_back(nullptr);
            for (const ExtNonneg* cap : capPtrs) {
                std::vector<ExtNonneg> capped(n);
                for (std::size_t z = 0; z < n; ++z)
                    capped[z] = cap ? min(phi.at(z), *cap) : phi.at(z);
                // A selection works iff some choice at x admits, for
                // every y independently, a choice at y covering all z.
                bool found = false;
                for (const LocalTable& selX : bases[x]) {
                    bool ok = true;
                    for (std::size_t y = 0; y < n && ok; ++y) {
                        const ExtNonneg& head = selX.at(y);
                        bool anyT = false;
                        // The component at x is selX itself; other
                        // points pick freely from their bases.
                        const std::vector<LocalTable> own{selX};
                        const std::vector<LocalTable>& pool = (y == x) ? own : bases[y];
                        for (const LocalTable& t : pool) {
                            bool covers = true;
                            for (std::size_t z = 0; z < n; ++z) {
                                if (++work > cutoff) {
                                    report.checks.push_back(CheckResult::undecided(
                                        "A3", "search cutoff exceeded at point " +
                                                  std::to_string(x)));
                                    return report;
                                }
                                if (!(capped[z] <= head + t.at(z))) {
                                    covers = false;
                                    break;
                                }
                            }
                            if (covers) {
                                anyT = true;
                                break;
                            }
                        }
                        ok = anyT;
                    }
                    if (ok) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    a3 = CheckResult::fail(
                        "A3", "point " + std::to_string(x) + " cap " +
                                  (cap ? cap->str() : std::string("unbounded")) +
                                  " admits no covering selection");
                    break;
                }
            }
            if (a3.verdict != Verdict::Pass) break;
        }
    }
    report.checks.push_back(a3);
    return report;
}

bool isContraction(const PointMap& f, const std::vector<std::vector<LocalTable>>& domainBases,
                   const std::vector<std::vector<LocalTable>>& codomainBases) {
    if (f.assign.size() != f.domain.size()) throw InputError("map not total on its domain");
    if (domainBases.size() != f.domain.size() || codomainBases.size() != f.codomain.size())
        throw InputError("bases do not match the map carriers");
    for (std::size_t x = 0; x < f.domain.size(); ++x) {
        const std::size_t fx = f.assign[x];
        if (fx >= f.codomain.size()) throw InputError("map image outside the codomain");
        for (const LocalTable& phiPrime : codomainBases[fx]) {
            std::vector<ExtNonneg> values(f.domain.size());
            for (std::size_t y = 0; y < f.domain.size(); ++y)
                values[y] = phiPrime.at(f.assign[y]);
            LocalTable composed(f.domain, x, std::move(values));
            if (!saturationMemberLocal(domainBases[x], composed)) return false;
        }
    }
    return true;
}

bool isUniformContraction(const PointMap& f, const std::vector<DistanceTable>& domainBasis,
                          const std::vector<DistanceTable>& codomainBasis) {
    if (f.assign.size() != f.domain.size()) throw InputError("map not total on its domain");
    const std::size_t n = f.domain.size();
    for (const DistanceTable& dPrime : codomainBasis) {
        if (dPrime.size() != f.codomain.size())
            throw InputError("codomain basis carrier mismatch");
        std::vector<ExtNonneg> values(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                values[x * n + y] = dPrime.at(f.assign[x], f.assign[y]);
        DistanceTable composed(f.domain, std::move(values));
        if (!saturationMember(domainBasis, composed)) return false;
    }
    return true;
}

std::vector<DistanceTable> uniformBasisOf(const LevelFamily& family) {
    const std::size_t n = family.size();
    std::vector<DistanceTable> out;
    for (const UnitRat& b : family.allBoundaries()) {
        std::vector<ExtNonneg> values(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) values[x * n + y] = family.levelEval(b, x, y);
        DistanceTable t(family.carrier(), std::move(values));
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<LocalTable>> localBasesOf(const LevelFamily& family) {
    const std::size_t n = family.size();
    std::vector<std::vector<LocalTable>> out(n);
    for (std::size_t x = 0; x < n; ++x)
        for (const UnitRat& b : family.allBoundaries()) {
            std::vector<ExtNonneg> values(n);
            for (std::size_t y = 0; y < n; ++y) values[y] = family.levelEval(b, x, y);
            LocalTable t(family.carrier(), x, std::move(values));
            if (std::find(out[x].begin(), out[x].end(), t) == out[x].end())
                out[x].push_back(std::move(t));
        }
    return out;
}

}  // namespace pmet
