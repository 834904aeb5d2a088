#pragma once

#include <map>
#include <string>
#include <vector>

#include "pmet/level.hpp"
#include "pmet/report.hpp"

namespace pmet {

/// Pair-distance table over a finite carrier, zero on the diagonal.
/// No symmetry is assumed.
class DistanceTable {
public:
    DistanceTable(std::vector<std::string> carrier, std::vector<ExtNonneg> values);

    const std::vector<std::string>& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }

    const ExtNonneg& at(std::size_t x, std::size_t y) const {
        return values_[x * carrier_.size() + y];
    }
    void set(std::size_t x, std::size_t y, ExtNonneg v);

    DistanceTable transpose() const;
    DistanceTable pointwiseMax(const DistanceTable& other) const;

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    std::vector<std::string> carrier_;
    std::vector<ExtNonneg> values_;  // row-major
};

/// Point-distance table anchored at one point, zero at the anchor.
class LocalTable {
public:
    LocalTable(std::vector<std::string> carrier, std::size_t anchor,
               std::vector<ExtNonneg> values);

    const std::vector<std::string>& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }
    std::size_t anchor() const { return anchor_; }
    const ExtNonneg& at(std::size_t y) const { return values_[y]; }

    friend bool operator==(const LocalTable&, const LocalTable&) = default;

private:
    std::vector<std::string> carrier_;
    std::size_t anchor_;
    std::vector<ExtNonneg> values_;
};

/// Exact membership of a candidate table in the saturation of a finite
/// basis: for every cap drawn from the candidate's finite values plus
/// the symbolic unbounded cap, some basis member dominates the capped
/// candidate (the for-all-epsilon quantifier collapses to non-strict
/// comparison over exact rationals).
bool saturationMember(const std::vector<DistanceTable>& basis, const DistanceTable& candidate);
bool saturationMemberLocal(const std::vector<LocalTable>& basis, const LocalTable& candidate);

/// (AU1) structural, directedness up to saturation, (AU3) with the cap
/// quantifier collapsed to the finite value set plus the symbolic cap,
/// (AU4) via saturation membership of the transpose.
AxiomReport checkUniformBasis(const std::vector<DistanceTable>& basis);

/// (A1) structural; (A3) searched over selections from the per-point
/// bases with a work cutoff; exceeding the cutoff yields an explicit
/// undecided verdict.
AxiomReport checkLocalBasis(const std::vector<std::vector<LocalTable>>& bases,
                            std::size_t cutoff = 1u << 20);

/// Carrier-to-carrier assignment, used by every contraction notion.
struct PointMap {
    std::vector<std::string> domain;
    std::vector<std::string> codomain;
    std::vector<std::size_t> assign;  // domain index -> codomain index
};

/// phi' o f lands in the saturation of the domain basis at x, for every
/// codomain basis member at f(x).
bool isContraction(const PointMap& f, const std::vector<std::vector<LocalTable>>& domainBases,
                   const std::vector<std::vector<LocalTable>>& codomainBases);

/// d' o (f x f) lands in the saturation of the domain basis, for every
/// codomain basis member.
bool isUniformContraction(const PointMap& f, const std::vector<DistanceTable>& domainBasis,
                          const std::vector<DistanceTable>& codomainBasis);

/// The finitely many distinct level tables {d_lambda} of a family.
std::vector<DistanceTable> uniformBasisOf(const LevelFamily& family);

/// Per-point slices phi_{lambda,x} = d_lambda(x,-) of the same tables.
std::vector<std::vector<LocalTable>> localBasesOf(const LevelFamily& family);

}  // namespace pmet
