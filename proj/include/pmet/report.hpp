#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pmet {

enum class Verdict { Pass, Fail, Undecided };

std::string verdictName(Verdict v);

/// One axiom verdict. A failing check always carries a replayable witness.
struct CheckResult {
    std::string axiom;
    Verdict verdict = Verdict::Pass;
    std::string witness;  // empty on pass
    std::string note;     // interpretation flags, cutoff info

    static CheckResult pass(std::string axiom, std::string note = "") {
        return {std::move(axiom), Verdict::Pass, "", std::move(note)};
    }
    static CheckResult fail(std::string axiom, std::string witness) {
        return {std::move(axiom), Verdict::Fail, std::move(witness), ""};
    }
    static CheckResult undecided(std::string axiom, std::string note) {
        return {std::move(axiom), Verdict::Undecided, "", std::move(note)};
    }
};

struct AxiomReport {
    std::vector<CheckResult> checks;

    bool allPass() const {
        for (const auto& c : checks)
            if (c.verdict != Verdict::Pass) return false;
        return true;
    }
    bool anyUndecided() const {
        for (const auto& c : checks)
            if (c.verdict == Verdict::Undecided) return true;
        return false;
    }
    const CheckResult* find(const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }
    bool passed(const std::string& axiom) const {
        const CheckResult* c = find(axiom);
        return c != nullptr && c->verdict == Verdict::Pass;
    }
    std::vector<std::string> failedAxioms() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (c.verdict == Verdict::Fail) out.push_back(c.axiom);
        return out;
    }
};

}  // namespace pmet
