#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "segalkit/category.hpp"
#include "segalkit/horns.hpp"

namespace segalkit {

/// Edges of a semisimplicial set grouped by (source, target), ascending
/// by global id inside each bucket. Bucket rank is the local morphism id
/// used when the set is read as a categorical structure.
struct EdgeBuckets {
    std::vector<std::vector<std::vector<int>>> by_pair;  // [src][tgt] -> global edge ids
    std::vector<int> local_of;                           // global edge id -> bucket rank

    int global(int src, int tgt, int local) const {
        return by_pair[static_cast<std::size_t>(src)][static_cast<std::size_t>(tgt)]
                      [static_cast<std::size_t>(local)];
    }
};

inline EdgeBuckets edge_buckets(const SemiSimplicialSet& sst) {
    EdgeBuckets b;
    int n = sst.count(0);
    b.by_pair.assign(static_cast<std::size_t>(n),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
    b.local_of.assign(static_cast<std::size_t>(sst.count(1)), -1);
    for (int e = 0; e < sst.count(1); ++e) {
        auto& bucket = b.by_pair[static_cast<std::size_t>(sst.edge_source(e))]
                                [static_cast<std::size_t>(sst.edge_target(e))];
        b.local_of[static_cast<std::size_t>(e)] = static_cast<int>(bucket.size());
        bucket.push_back(e);
    }
    return b;
}

namespace detail {

/// Nerve without law preconditions: objects and morphisms as levels 0/1,
/// one triangle per composable pair placed on its composite, and one
/// simplex per compatible boundary at levels 3 and 4.
inline SemiSimplicialSet nerve_unchecked(const TransitiveGraph& c, int target_level) {
    if (target_level < 1 || target_level > kMaxLevel)
        throw PreconditionError("nerve target level must be between 1 and 4");
    if (!c.total()) throw PreconditionError("composition table is not total");
    int n = c.objects();
    std::vector<std::vector<Simplex>> levels;
    levels.emplace_back(static_cast<std::size_t>(n));

    std::vector<std::vector<int>> offset(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<Simplex> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            offset[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                static_cast<int>(edges.size());
            for (int f = 0; f < c.hom_size(a, b); ++f) edges.push_back(Simplex{{b, a}});
        }
    levels.push_back(std::move(edges));
    auto global = [&](int a, int b, int f) {
        return offset[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] + f;
    };

    if (target_level >= 2) {
        std::vector<Simplex> triangles;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int cc = 0; cc < n; ++cc)
                    for (int f = 0; f < c.hom_size(a, b); ++f)
                        for (int g = 0; g < c.hom_size(b, cc); ++g)
                            triangles.push_back(Simplex{{global(b, cc, g),
                                                         global(a, cc, c.compose(a, b, cc, g, f)),
                                                         global(a, b, f)}});
        levels.push_back(std::move(triangles));
    }
    for (int k = 3; k <= target_level; ++k) {
        SemiSimplicialSet partial(k - 1, levels);
        std::vector<Simplex> cells;
        detail::for_each_boundary_tuple(partial, k, [&](const Boundary& bd) {
            cells.push_back(Simplex{bd.faces});
            return true;
        });
        levels.push_back(std::move(cells));
    }
    return SemiSimplicialSet(target_level, std::move(levels));
}

}  // namespace detail

inline SemiSimplicialSet nerve(const TransitiveGraph& c, int target_level) {
    if (target_level >= 3) {
        auto assoc = check_associativity(c);
        if (!assoc.verdict)
            throw PreconditionError("nerve above level 2 needs a verified associativity law");
    }
    return detail::nerve_unchecked(c, target_level);
}

inline SemiSimplicialSet nerve(const WildSemicategory& c, int target_level) {
    if (target_level >= 3 && !c.assoc_certificate.verdict)
        throw PreconditionError("nerve above level 2 needs a verified associativity law");
    return detail::nerve_unchecked(c.tg, target_level);
}

inline SemiSimplicialSet nerve(const Precategory& c, int target_level) {
    if (!c.laws_verified()) throw PreconditionError("nerve needs verified law certificates");
    return detail::nerve_unchecked(c.tg(), target_level);
}

/// Reads a 2-restricted Segal set back as a transitive graph: vertices
/// become objects, edge buckets become hom-sets, and composition is the
/// missing face of the unique inner 2-horn filler.
inline TransitiveGraph extract_transitive_graph(const SemiSimplicialSet& sst) {
    if (sst.top_level() < 2)
        throw PreconditionError("extraction needs at least two levels");
    int n = sst.count(0);
    Graph g = Graph::discrete(n);
    EdgeBuckets buckets = edge_buckets(sst);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(
                buckets.by_pair[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].size());
    TransitiveGraph tg = TransitiveGraph::over(std::move(g));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int f = 0; f < tg.hom_size(a, b); ++f)
                    for (int gg = 0; gg < tg.hom_size(b, cc); ++gg) {
                        Horn h{2, 1, {buckets.global(b, cc, gg), -1, buckets.global(a, b, f)}};
                        auto fills = horn_fillers(sst, h);
                        if (fills.size() != 1)
                            throw PreconditionError(
                                "extraction hit an inner 2-horn with " +
                                std::to_string(fills.size()) + " fillers (edges " +
                                std::to_string(h.faces[2]) + ", " + std::to_string(h.faces[0]) +
                                ")");
                        tg.set_compose(a, b, cc, gg, f,
                                       buckets.local_of[static_cast<std::size_t>(
                                           fills.front().missing_face)]);
                    }
    return tg;
}

/// Levelwise bijection commuting with all face maps, under the canonical
/// vertex identification and ascending edge matching per (source, target)
/// bucket. Complete for Segal instances, where fibers above level 1 are
/// subsingletons; returns false on any ambiguity.
inline bool sst_isomorphic(const SemiSimplicialSet& a, const SemiSimplicialSet& b) {
    if (a.top_level() != b.top_level()) return false;
    for (int k = 0; k <= a.top_level(); ++k)
        if (a.count(k) != b.count(k)) return false;
    if (a.top_level() == 0) return true;

    EdgeBuckets ba = edge_buckets(a), bb = edge_buckets(b);
    std::vector<int> map(static_cast<std::size_t>(a.count(1)), -1);
    for (int e = 0; e < a.count(1); ++e) {
        int s = a.edge_source(e), t = a.edge_target(e);
        const auto& target_bucket =
            bb.by_pair[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        int local = ba.local_of[static_cast<std::size_t>(e)];
        if (local >= static_cast<int>(target_bucket.size())) return false;
        map[static_cast<std::size_t>(e)] = target_bucket[static_cast<std::size_t>(local)];
    }
    std::vector<int> prev = std::move(map);
    for (int k = 2; k <= a.top_level(); ++k) {
        std::vector<int> cur(static_cast<std::size_t>(a.count(k)), -1);
        std::vector<char> used(static_cast<std::size_t>(b.count(k)), 0);
        for (int i = 0; i < a.count(k); ++i) {
            auto f = a.faces_of(k, i);
            std::vector<int> mapped(f.size());
            for (std::size_t p = 0; p < f.size(); ++p)
                mapped[p] = prev[static_cast<std::size_t>(f[p])];
            const auto& fibre = b.fillers(k, mapped);
            if (fibre.size() != 1 || used[static_cast<std::size_t>(fibre.front())]) return false;
            used[static_cast<std::size_t>(fibre.front())] = 1;
            cur[static_cast<std::size_t>(i)] = fibre.front();
        }
        prev = std::move(cur);
    }
    return true;
}

/// The face over vertices {0,2,3} of the unique filler of an inner
/// 3-horn: the composite-of-composites witness the horn forces.
inline SimplexId generalized_associator(const SemiSimplicialSet& sst, const Horn& h) {
    if (h.level != 3 || h.missing != 1)
        throw PreconditionError("generalized_associator expects a (3,1)-horn");
    auto fills = horn_fillers(sst, h);
    if (fills.size() != 1)
        throw PreconditionError("generalized_associator needs the Segal property; horn has " +
                                std::to_string(fills.size()) + " fillers");
    return {2, fills.front().missing_face};
}

/// Level-3 Segal condition, cross-referenced against the associativity of
/// the extracted composition table.
inline CheckReport check_associativity_via_sst(const SemiSimplicialSet& sst) {
    if (sst.top_level() < 3)
        throw PreconditionError("associativity check needs three levels");
    auto base = check_segal_up_to(sst, 2);
    if (!base.verdict) throw PreconditionError("level-2 Segal condition fails");

    std::int64_t scanned = 0;
    std::optional<Witness> first;
    for_each_horn(sst, 3, 1, [&](const Horn& h) {
        ++scanned;
        auto fills = horn_fillers(sst, h);
        if (fills.size() != 1) {
            first = Witness("segal_horn",
                            {{"level", 3},
                             {"missing", 1},
                             {"filler_count", static_cast<std::int64_t>(fills.size())}},
                            h.faces);
            return false;
        }
        return true;
    });
    CheckReport r;
    r.check = "associativity_via_sst";
    r.verdict = !first.has_value();
    r.witness = std::move(first);
    r.count("horns_scanned", scanned);
    auto table = check_associativity(extract_transitive_graph(sst));
    r.count("extracted_associativity", table.verdict ? 1 : 0);
    return r;
}

/// Level-4 Segal condition; additionally re-derives each horn from its
/// spine through the staged construction and demands it reproduces the
/// enumerated horn.
inline CheckReport check_pentagon_level(const SemiSimplicialSet& sst) {
    if (sst.top_level() < 4)
        throw PreconditionError("pentagon-level check needs four levels");
    auto base = check_segal_up_to(sst, 3);
    if (!base.verdict) throw PreconditionError("Segal condition fails below level 4");

    std::int64_t scanned = 0, reconstructed = 0;
    std::optional<Witness> first;
    for_each_horn(sst, 4, 1, [&](const Horn& h) {
        ++scanned;
        auto fills = horn_fillers(sst, h);
        if (fills.size() != 1) {
            first = Witness("segal_horn",
                            {{"level", 4},
                             {"missing", 1},
                             {"filler_count", static_cast<std::int64_t>(fills.size())}},
                            h.faces);
            return false;
        }
        if (phi_inverse(sst, spine_of(sst, h)) != h) {
            first = Witness("spine_reconstruction", {{"level", 4}}, h.faces,
                            "staged reconstruction from the spine disagrees with the horn");
            return false;
        }
        ++reconstructed;
        return true;
    });
    CheckReport r;
    r.check = "pentagon_level";
    r.verdict = !first.has_value();
    r.witness = std::move(first);
    r.count("horns_scanned", scanned).count("reconstructions_verified", reconstructed);
    return r;
}

/// Degeneracy assignments s00 (per vertex), s10/s11 (per edge, level >= 2)
/// and s20/s21/s22 (per triangle, level 3). Each assigned simplex must
/// carry exactly the boundary the simplicial identities dictate.
struct DegeneracyStructure {
    int level = 1;
    std::vector<int> s00;
    std::vector<int> s10, s11;
    std::vector<int> s20, s21, s22;

    friend bool operator==(const DegeneracyStructure&, const DegeneracyStructure&) = default;
};

namespace detail {

inline bool deg_entry_ok(const SemiSimplicialSet& sst, int level, int id,
                         const std::vector<int>& want) {
    if (id < 0 || id >= sst.count(level)) return false;
    auto f = sst.faces_of(level, id);
    return std::equal(f.begin(), f.end(), want.begin(), want.end());
}

}  // namespace detail

/// Required boundary of each degeneracy assignment.
inline std::vector<int> degeneracy_boundary_s00(int vertex) { return {vertex, vertex}; }
inline std::vector<int> degeneracy_boundary_s10(const SemiSimplicialSet& sst,
                                                const DegeneracyStructure& d, int e) {
    return {e, e, d.s00[static_cast<std::size_t>(sst.edge_source(e))]};
}
inline std::vector<int> degeneracy_boundary_s11(const SemiSimplicialSet& sst,
                                                const DegeneracyStructure& d, int e) {
    return {d.s00[static_cast<std::size_t>(sst.edge_target(e))], e, e};
}
inline std::vector<int> degeneracy_boundary_s20(const SemiSimplicialSet& sst,
                                                const DegeneracyStructure& d, int t) {
    return {t, t, d.s10[static_cast<std::size_t>(sst.face(2, t, 1))],
            d.s10[static_cast<std::size_t>(sst.face(2, t, 2))]};
}
inline std::vector<int> degeneracy_boundary_s21(const SemiSimplicialSet& sst,
                                                const DegeneracyStructure& d, int t) {
    return {d.s10[static_cast<std::size_t>(sst.face(2, t, 0))], t, t,
            d.s11[static_cast<std::size_t>(sst.face(2, t, 2))]};
}
inline std::vector<int> degeneracy_boundary_s22(const SemiSimplicialSet& sst,
                                                const DegeneracyStructure& d, int t) {
    return {d.s11[static_cast<std::size_t>(sst.face(2, t, 0))],
            d.s11[static_cast<std::size_t>(sst.face(2, t, 1))], t, t};
}

inline CheckReport validate_degeneracies(const SemiSimplicialSet& sst,
                                         const DegeneracyStructure& d) {
    auto fail = [](std::string map, int arg, std::string why) {
        return CheckReport::fail("degeneracies",
                                 Witness("degeneracy_boundary", {{"argument", arg}},
                                         {}, std::move(map) + ": " + std::move(why)));
    };
    if (d.level < 1 || d.level > 3)
        return CheckReport::fail("degeneracies",
                                 Witness("level", {{"level", d.level}}, {}, "level must be 1..3"));
    if (d.level > sst.top_level() - 1)
        return CheckReport::fail(
            "degeneracies",
            Witness("level", {{"level", d.level}, {"top_level", sst.top_level()}}, {},
                    "degeneracy structure must sit at least one level below the top"));
    std::int64_t checked = 0;
    if (static_cast<int>(d.s00.size()) != sst.count(0))
        return fail("s00", -1, "must assign every vertex");
    for (int x = 0; x < sst.count(0); ++x) {
        ++checked;
        if (!detail::deg_entry_ok(sst, 1, d.s00[static_cast<std::size_t>(x)],
                                  degeneracy_boundary_s00(x)))
            return fail("s00", x, "assigned edge must be a loop on its vertex");
    }
    if (d.level >= 2) {
        if (static_cast<int>(d.s10.size()) != sst.count(1) ||
            static_cast<int>(d.s11.size()) != sst.count(1))
            return fail("s10/s11", -1, "must assign every edge");
        for (int e = 0; e < sst.count(1); ++e) {
            checked += 2;
            if (!detail::deg_entry_ok(sst, 2, d.s10[static_cast<std::size_t>(e)],
                                      degeneracy_boundary_s10(sst, d, e)))
                return fail("s10", e, "wrong boundary");
            if (!detail::deg_entry_ok(sst, 2, d.s11[static_cast<std::size_t>(e)],
                                      degeneracy_boundary_s11(sst, d, e)))
                return fail("s11", e, "wrong boundary");
        }
    }
    if (d.level >= 3) {
        if (static_cast<int>(d.s20.size()) != sst.count(2) ||
            static_cast<int>(d.s21.size()) != sst.count(2) ||
            static_cast<int>(d.s22.size()) != sst.count(2))
            return fail("s20/s21/s22", -1, "must assign every triangle");
        for (int t = 0; t < sst.count(2); ++t) {
            checked += 3;
            if (!detail::deg_entry_ok(sst, 3, d.s20[static_cast<std::size_t>(t)],
                                      degeneracy_boundary_s20(sst, d, t)))
                return fail("s20", t, "wrong boundary");
            if (!detail::deg_entry_ok(sst, 3, d.s21[static_cast<std::size_t>(t)],
                                      degeneracy_boundary_s21(sst, d, t)))
                return fail("s21", t, "wrong boundary");
            if (!detail::deg_entry_ok(sst, 3, d.s22[static_cast<std::size_t>(t)],
                                      degeneracy_boundary_s22(sst, d, t)))
                return fail("s22", t, "wrong boundary");
        }
    }
    auto r = CheckReport::pass("degeneracies");
    r.count("assignments_checked", checked);
    return r;
}

namespace detail {

inline int unique_boundary_filler(const SemiSimplicialSet& sst, int level,
                                  const std::vector<int>& faces, const char* where) {
    const auto& ids = sst.fillers(level, faces);
    if (ids.size() != 1)
        throw InconsistencyError(std::string(where) + ": expected exactly one filler, found " +
                                 std::to_string(ids.size()));
    return ids.front();
}

}  // namespace detail

/// Translates an identity structure into degeneracies on the nerve:
/// s00 places the identity edges, everything above is the unique filler
/// of the dictated boundary.
inline DegeneracyStructure degeneracies_from_identities(const Precategory& c,
                                                        const SemiSimplicialSet& nerve_sst) {
    if (!c.laws_verified())
        throw PreconditionError("degeneracies_from_identities needs verified certificates");
    if (nerve_sst.top_level() < 2)
        throw PreconditionError("nerve must have at least two levels");
    EdgeBuckets buckets = edge_buckets(nerve_sst);
    DegeneracyStructure d;
    d.level = std::min(3, nerve_sst.top_level() - 1);
    d.s00.resize(static_cast<std::size_t>(nerve_sst.count(0)));
    for (int x = 0; x < nerve_sst.count(0); ++x)
        d.s00[static_cast<std::size_t>(x)] =
            buckets.global(x, x, c.rtg.id_table[static_cast<std::size_t>(x)]);
    if (d.level >= 2) {
        d.s10.resize(static_cast<std::size_t>(nerve_sst.count(1)));
        d.s11.resize(static_cast<std::size_t>(nerve_sst.count(1)));
        for (int e = 0; e < nerve_sst.count(1); ++e) {
            d.s10[static_cast<std::size_t>(e)] = detail::unique_boundary_filler(
                nerve_sst, 2, degeneracy_boundary_s10(nerve_sst, d, e),
                "degeneracies_from_identities(s10)");
            d.s11[static_cast<std::size_t>(e)] = detail::unique_boundary_filler(
                nerve_sst, 2, degeneracy_boundary_s11(nerve_sst, d, e),
                "degeneracies_from_identities(s11)");
        }
    }
    if (d.level >= 3) {
        d.s20.resize(static_cast<std::size_t>(nerve_sst.count(2)));
        d.s21.resize(static_cast<std::size_t>(nerve_sst.count(2)));
        d.s22.resize(static_cast<std::size_t>(nerve_sst.count(2)));
        for (int t = 0; t < nerve_sst.count(2); ++t) {
            d.s20[static_cast<std::size_t>(t)] = detail::unique_boundary_filler(
                nerve_sst, 3, degeneracy_boundary_s20(nerve_sst, d, t),
                "degeneracies_from_identities(s20)");
            d.s21[static_cast<std::size_t>(t)] = detail::unique_boundary_filler(
                nerve_sst, 3, degeneracy_boundary_s21(nerve_sst, d, t),
                "degeneracies_from_identities(s21)");
            d.s22[static_cast<std::size_t>(t)] = detail::unique_boundary_filler(
                nerve_sst, 3, degeneracy_boundary_s22(nerve_sst, d, t),
                "degeneracies_from_identities(s22)");
        }
    }
    return d;
}

/// The converse translation: the identity table plus unit certificates
/// read off a validated degeneracy structure.
struct IdentityStructure {
    std::vector<int> id_table;
    CheckReport unit_certificates;
};

inline IdentityStructure identities_from_degeneracies(const SemiSimplicialSet& sst,
                                                      const DegeneracyStructure& d) {
    auto v = validate_degeneracies(sst, d);
    if (!v.verdict)
        throw PreconditionError("degeneracy structure does not validate: " +
                                (v.witness ? v.witness->note : std::string()));
    EdgeBuckets buckets = edge_buckets(sst);
    ReflexiveTransitiveGraph rtg;
    rtg.tg = extract_transitive_graph(sst);
    rtg.id_table.resize(static_cast<std::size_t>(sst.count(0)));
    for (int x = 0; x < sst.count(0); ++x)
        rtg.id_table[static_cast<std::size_t>(x)] =
            buckets.local_of[static_cast<std::size_t>(d.s00[static_cast<std::size_t>(x)])];
    IdentityStructure out;
    out.id_table = rtg.id_table;
    out.unit_certificates = check_units(rtg);
    out.unit_certificates.count("degeneracy_level", d.level);
    return out;
}

/// Completes a structure carrying s00, s10, s11, s21 with the two outer
/// degeneracies, each the unique filler of its dictated boundary.
inline DegeneracyStructure derive_outer_degeneracies(const SemiSimplicialSet& sst,
                                                     DegeneracyStructure d) {
    if (sst.top_level() < 4)
        throw PreconditionError("outer degeneracy derivation needs four levels");
    if (static_cast<int>(d.s00.size()) != sst.count(0) ||
        static_cast<int>(d.s10.size()) != sst.count(1) ||
        static_cast<int>(d.s11.size()) != sst.count(1) ||
        static_cast<int>(d.s21.size()) != sst.count(2))
        throw PreconditionError("partial structure must carry s00, s10, s11 and s21");
    auto segal = check_segal_up_to(sst, 4);
    if (!segal.verdict) throw PreconditionError("Segal condition fails");
    d.level = 3;
    d.s20.assign(static_cast<std::size_t>(sst.count(2)), -1);
    d.s22.assign(static_cast<std::size_t>(sst.count(2)), -1);
    for (int t = 0; t < sst.count(2); ++t) {
        d.s20[static_cast<std::size_t>(t)] = detail::unique_boundary_filler(
            sst, 3, degeneracy_boundary_s20(sst, d, t), "derive_outer_degeneracies(s20)");
        d.s22[static_cast<std::size_t>(t)] = detail::unique_boundary_filler(
            sst, 3, degeneracy_boundary_s22(sst, d, t), "derive_outer_degeneracies(s22)");
    }
    auto check = validate_degeneracies(sst, d);
    if (!check.verdict)
        throw InconsistencyError("derived structure fails validation");
    return d;
}

}  // namespace segalkit
