#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "segalkit/bridge.hpp"
#include "segalkit/category.hpp"
#include "segalkit/core.hpp"

namespace segalkit {

using json = nlohmann::json;

// --- semisimplicial sets ---------------------------------------------------
//
// { "top_level": N,
//   "levels": [ { "count": c },
//               { "simplices": [ { "faces": [i0, ..., ik] }, ... ] }, ... ] }

inline json sst_to_json(const SemiSimplicialSet& sst) {
    json levels = json::array();
    levels.push_back({{"count", sst.count(0)}});
    for (int k = 1; k <= sst.top_level(); ++k) {
        json simplices = json::array();
        for (int i = 0; i < sst.count(k); ++i) {
            auto f = sst.faces_of(k, i);
            simplices.push_back({{"faces", std::vector<int>(f.begin(), f.end())}});
        }
        levels.push_back({{"simplices", std::move(simplices)}});
    }
    return {{"top_level", sst.top_level()}, {"levels", std::move(levels)}};
}

inline SemiSimplicialSet sst_from_json(const json& j) {
    if (!j.is_object() || !j.contains("top_level") || !j.contains("levels"))
        throw StructuralError("expected an object with top_level and levels");
    int top = j.at("top_level").get<int>();
    const json& levels = j.at("levels");
    if (!levels.is_array() || static_cast<int>(levels.size()) != top + 1)
        throw StructuralError("levels must be an array of top_level + 1 entries");
    std::vector<std::vector<Simplex>> out;
    out.emplace_back(static_cast<std::size_t>(levels.at(0).at("count").get<int>()));
    for (int k = 1; k <= top; ++k) {
        const json& lvl = levels.at(static_cast<std::size_t>(k));
        if (!lvl.contains("simplices"))
            throw StructuralError("level " + std::to_string(k) + " must list simplices");
        std::vector<Simplex> simplices;
        for (const json& s : lvl.at("simplices")) {
            Simplex sx;
            sx.faces = s.at("faces").get<std::vector<int>>();
            if (static_cast<int>(sx.faces.size()) != k + 1)
                throw StructuralError("level-" + std::to_string(k) +
                                      " simplex must list exactly " + std::to_string(k + 1) +
                                      " faces");
            simplices.push_back(std::move(sx));
        }
        out.push_back(std::move(simplices));
    }
    return SemiSimplicialSet(top, std::move(out));
}

// --- categories ------------------------------------------------------------
//
// { "objects": n,
//   "hom": { "a,b": k, ... },              (absent pairs are empty)
//   "comp": [ [a, b, c, g, f, result], ... ],
//   "id": [m0, ..., m_{n-1}] }             (optional)

struct CategoryFile {
    TransitiveGraph tg;
    std::optional<std::vector<int>> ids;
};

inline json category_to_json(const TransitiveGraph& tg,
                             const std::optional<std::vector<int>>& ids = std::nullopt) {
    json hom = json::object();
    for (int a = 0; a < tg.objects(); ++a)
        for (int b = 0; b < tg.objects(); ++b)
            if (tg.hom_size(a, b) > 0)
                hom[std::to_string(a) + "," + std::to_string(b)] = tg.hom_size(a, b);
    json comp = json::array();
    for (int a = 0; a < tg.objects(); ++a)
        for (int b = 0; b < tg.objects(); ++b)
            for (int c = 0; c < tg.objects(); ++c)
                for (int g = 0; g < tg.hom_size(b, c); ++g)
                    for (int f = 0; f < tg.hom_size(a, b); ++f)
                        comp.push_back({a, b, c, g, f, tg.compose(a, b, c, g, f)});
    json out = {{"objects", tg.objects()}, {"hom", std::move(hom)}, {"comp", std::move(comp)}};
    if (ids) out["id"] = *ids;
    return out;
}

inline CategoryFile category_from_json(const json& j) {
    if (!j.is_object() || !j.contains("objects"))
        throw StructuralError("expected an object with an objects count");
    int n = j.at("objects").get<int>();
    if (n < 0) throw StructuralError("objects count must be nonnegative");
    Graph g = Graph::discrete(n);
    if (j.contains("hom")) {
        for (const auto& [key, value] : j.at("hom").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw StructuralError("hom key '" + key + "' must look like \"a,b\"");
            int a = std::stoi(key.substr(0, comma));
            int b = std::stoi(key.substr(comma + 1));
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw StructuralError("hom key '" + key + "' names a missing object");
            g.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = value.get<int>();
        }
    }
    TransitiveGraph tg = TransitiveGraph::over(std::move(g));
    if (j.contains("comp")) {
        for (const json& row : j.at("comp")) {
            if (!row.is_array() || row.size() != 6)
                throw StructuralError("comp rows must be [a,b,c,g,f,result]");
            int a = row[0], b = row[1], c = row[2], gg = row[3], f = row[4], r = row[5];
            if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n || f < 0 ||
                f >= tg.hom_size(a, b) || gg < 0 || gg >= tg.hom_size(b, c) || r < 0 ||
                r >= tg.hom_size(a, c))
                throw StructuralError("comp row out of range");
            tg.set_compose(a, b, c, gg, f, r);
        }
    }
    if (!tg.total()) throw StructuralError("composition table is not total");
    CategoryFile out;
    out.tg = std::move(tg);
    if (j.contains("id")) {
        auto ids = j.at("id").get<std::vector<int>>();
        if (static_cast<int>(ids.size()) != n)
            throw StructuralError("id table must assign every object");
        for (int x = 0; x < n; ++x)
            if (ids[static_cast<std::size_t>(x)] < 0 ||
                ids[static_cast<std::size_t>(x)] >= out.tg.hom_size(x, x))
                throw StructuralError("id table entry out of range");
        out.ids = std::move(ids);
    }
    return out;
}

// --- degeneracy structures ---------------------------------------------------

inline json degeneracies_to_json(const DegeneracyStructure& d) {
    json out = {{"level", d.level}, {"s00", d.s00}};
    if (d.level >= 2) {
        out["s10"] = d.s10;
        out["s11"] = d.s11;
    }
    if (d.level >= 3) {
        out["s20"] = d.s20;
        out["s21"] = d.s21;
        out["s22"] = d.s22;
    }
    return out;
}

inline DegeneracyStructure degeneracies_from_json(const json& j) {
    DegeneracyStructure d;
    d.level = j.at("level").get<int>();
    d.s00 = j.at("s00").get<std::vector<int>>();
    if (d.level >= 2) {
        d.s10 = j.at("s10").get<std::vector<int>>();
        d.s11 = j.at("s11").get<std::vector<int>>();
    }
    if (d.level >= 3) {
        d.s20 = j.at("s20").get<std::vector<int>>();
        d.s21 = j.at("s21").get<std::vector<int>>();
        d.s22 = j.at("s22").get<std::vector<int>>();
    }
    return d;
}

// --- reports -----------------------------------------------------------------

inline json witness_to_json(const Witness& w) {
    json out = {{"kind", w.kind}};
    for (const auto& [key, value] : w.data) out[key] = value;
    if (!w.faces.empty()) out["faces"] = w.faces;
    if (!w.note.empty()) out["note"] = w.note;
    return out;
}

inline json report_to_json(const CheckReport& r) {
    json out = {{"check", r.check}, {"verdict", r.verdict}};
    if (r.structural) out["structural"] = true;
    if (r.witness) out["witness"] = witness_to_json(*r.witness);
    if (!r.counts.empty()) {
        json counts = json::object();
        for (const auto& [key, value] : r.counts) counts[key] = value;
        out["counts"] = std::move(counts);
    }
    return out;
}

}  // namespace segalkit
