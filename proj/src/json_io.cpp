#include "pmet/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pmet {

namespace {

std::string requireString(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InputError("expected a string at " + where);
    return j.get<std::string>();
}

std::vector<std::string> carrierFromJson(const Json& j) {
    if (!j.contains("carrier") || !j["carrier"].is_array())
        throw InputError("document needs a carrier array");
    std::vector<std::string> carrier;
    for (const auto& e : j["carrier"]) carrier.push_back(requireString(e, "carrier"));
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t k = i + 1; k < carrier.size(); ++k)
            if (carrier[i] == carrier[k])
                throw InputError("duplicate carrier label " + carrier[i]);
    return carrier;
}

std::size_t indexOf(const std::vector<std::string>& carrier, const std::string& label,
                    const std::string& where) {
    for (std::size_t i = 0; i < carrier.size(); ++i)
        if (carrier[i] == label) return i;
    throw InputError("unknown point " + label + " in " + where);
}

std::pair<std::string, std::string> splitPairKey(const std::string& key, const char* sep) {
    const auto pos = key.find(sep);
    if (pos == std::string::npos) throw InputError("malformed pair key " + key);
    return {key.substr(0, pos), key.substr(pos + std::string(sep).size())};
}

std::string pairKey(const std::string& a, const std::string& b) {
    return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace

Json toJson(const Distribution& d) {
    Json out = Json::array();
    for (const Jump& j : d.jumps()) out.push_back({{"at", j.at.str()}, {"to", j.to.str()}});
    return out;
}

Distribution distributionFromJson(const Json& j) {
    if (!j.is_array()) throw InputError("distribution must be a jump array");
    std::vector<Jump> jumps;
    for (const auto& e : j) {
        if (!e.contains("at") || !e.contains("to"))
            throw InputError("jump needs \"at\" and \"to\"");
        jumps.push_back({ExtNonneg::parse(requireString(e["at"], "at")),
                         UnitRat::parse(requireString(e["to"], "to"))});
    }
    return Distribution::fromJumps(std::move(jumps));
}

Json toJson(const PMSpace& space) {
    Json alpha = Json::object();
    const auto& carrier = space.carrier();
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t j = i + 1; j < carrier.size(); ++j)
            alpha[pairKey(carrier[i], carrier[j])] = toJson(space.alpha(i, j));
    return Json{{"carrier", carrier}, {"tnorm", space.tnorm().name()}, {"alpha", alpha}};
}

PMSpace spaceFromJson(const Json& j) {
    const auto carrier = carrierFromJson(j);
    if (!j.contains("tnorm")) throw InputError("space document needs a tnorm");
    const TNorm tnorm = TNorm::parse(requireString(j["tnorm"], "tnorm"));
    if (!j.contains("alpha") || !j["alpha"].is_object())
        throw InputError("space document needs an alpha object");
    std::map<std::pair<std::size_t, std::size_t>, Distribution> alpha;
    for (const auto& [key, value] : j["alpha"].items()) {
        const auto [a, b] = splitPairKey(key, "|");
        if (!(a < b)) throw InputError("pair key not in sorted order: " + key);
        std::size_t i = indexOf(carrier, a, "alpha");
        std::size_t k = indexOf(carrier, b, "alpha");
        if (i > k) std::swap(i, k);
        alpha.emplace(std::make_pair(i, k), distributionFromJson(value));
    }
    return PMSpace(carrier, std::move(alpha), tnorm);
}

Json toJson(const LevelFamily& family) {
    Json levels = Json::object();
    const auto& carrier = family.carrier();
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t j = i + 1; j < carrier.size(); ++j) {
            Json pieces = Json::array();
            for (const Piece& p : family.profile(i, j).pieces())
                pieces.push_back({{"upto", p.upto.str()}, {"value", p.value.str()}});
            levels[pairKey(carrier[i], carrier[j])] = pieces;
        }
    return Json{{"carrier", carrier}, {"tnorm", family.tnorm().name()}, {"levels", levels}};
}

LevelFamily familyFromJson(const Json& j) {
    const auto carrier = carrierFromJson(j);
    if (!j.contains("tnorm")) throw InputError("family document needs a tnorm");
    const TNorm tnorm = TNorm::parse(requireString(j["tnorm"], "tnorm"));
    if (!j.contains("levels") || !j["levels"].is_object())
        throw InputError("family document needs a levels object");
    std::map<std::pair<std::size_t, std::size_t>, Profile> levels;
    for (const auto& [key, value] : j["levels"].items()) {
        const auto [a, b] = splitPairKey(key, "|");
        if (!(a < b)) throw InputError("pair key not in sorted order: " + key);
        std::size_t i = indexOf(carrier, a, "levels");
        std::size_t k = indexOf(carrier, b, "levels");
        if (i > k) std::swap(i, k);
        if (!value.is_array()) throw InputError("profile must be a piece array");
        std::vector<Piece> pieces;
        for (const auto& e : value) {
            if (!e.contains("upto") || !e.contains("value"))
                throw InputError("piece needs \"upto\" and \"value\"");
            pieces.push_back({UnitRat::parse(requireString(e["upto"], "upto")),
                              ExtNonneg::parse(requireString(e["value"], "value"))});
        }
        levels.emplace(std::make_pair(i, k), Profile::fromPieces(std::move(pieces)));
    }
    return LevelFamily(carrier, std::move(levels), tnorm);
}

Json toJson(const DistanceTable& table) {
    Json entries = Json::object();
    const auto& carrier = table.carrier();
    for (std::size_t x = 0; x < carrier.size(); ++x)
        for (std::size_t y = 0; y < carrier.size(); ++y) {
            if (x == y) continue;
            entries[carrier[x] + "|>" + carrier[y]] = table.at(x, y).str();
        }
    return Json{{"carrier", carrier}, {"table", entries}};
}

DistanceTable distanceTableFromJson(const Json& j) {
    const auto carrier = carrierFromJson(j);
    if (!j.contains("table") || !j["table"].is_object())
        throw InputError("table document needs a table object");
    const std::size_t n = carrier.size();
    std::vector<ExtNonneg> values(n * n, ExtNonneg::zero());
    for (const auto& [key, value] : j["table"].items()) {
        const auto [a, b] = splitPairKey(key, "|>");
        const std::size_t x = indexOf(carrier, a, "table");
        const std::size_t y = indexOf(carrier, b, "table");
        values[x * n + y] = ExtNonneg::parse(requireString(value, key));
    }
    return DistanceTable(carrier, std::move(values));
}

Json toJson(const LocalTable& table) {
    Json entries = Json::object();
    const auto& carrier = table.carrier();
    for (std::size_t y = 0; y < carrier.size(); ++y) {
        if (y == table.anchor()) continue;
        entries[carrier[table.anchor()] + "|>" + carrier[y]] = table.at(y).str();
    }
    return Json{{"carrier", carrier}, {"anchor", carrier[table.anchor()]}, {"table", entries}};
}

LocalTable localTableFromJson(const Json& j) {
    const auto carrier = carrierFromJson(j);
    if (!j.contains("anchor")) throw InputError("local table document needs an anchor");
    const std::size_t anchor = indexOf(carrier, requireString(j["anchor"], "anchor"), "anchor");
    if (!j.contains("table") || !j["table"].is_object())
        throw InputError("table document needs a table object");
    std::vector<ExtNonneg> values(carrier.size(), ExtNonneg::zero());
    for (const auto& [key, value] : j["table"].items()) {
        const auto [a, b] = splitPairKey(key, "|>");
        if (indexOf(carrier, a, "table") != anchor)
            throw InputError("local table key " + key + " does not start at the anchor");
        values[indexOf(carrier, b, "table")] = ExtNonneg::parse(requireString(value, key));
    }
    return LocalTable(carrier, anchor, std::move(values));
}

Json toJson(const AxiomReport& report) {
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json e{{"axiom", c.axiom}, {"verdict", verdictName(c.verdict)}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(e);
    }
    return Json{{"checks", checks}, {"all_pass", report.allPass()}};
}

MapDocument mapDocumentFromJson(const Json& j) {
    MapDocument doc;
    if (!j.contains("domain") || !j.contains("codomain") || !j.contains("assign"))
        throw InputError("map document needs domain, codomain and assign");
    doc.domainPath = requireString(j["domain"], "domain");
    doc.codomainPath = requireString(j["codomain"], "codomain");
    if (!j["assign"].is_object()) throw InputError("assign must be an object");
    for (const auto& [key, value] : j["assign"].items())
        doc.assign[key] = requireString(value, "assign");
    return doc;
}

std::string canonicalDump(const Json& j) { return j.dump(2) + "\n"; }

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return j;
}

void writeTextFile(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << contents;
}

}  // namespace pmet
