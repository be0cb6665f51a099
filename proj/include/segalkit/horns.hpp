#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segalkit/core.hpp"
#include "segalkit/parallel.hpp"

namespace segalkit {

/// A boundary with the face opposite vertex `missing` (and the top cell)
/// removed. faces[missing] == -1; present faces are pairwise compatible.
/// Inner if 0 < missing < level, outer otherwise.
struct Horn {
    int level = 2;
    int missing = 1;
    std::vector<int> faces;
    friend bool operator==(const Horn&, const Horn&) = default;
};

/// A pair completing a horn: the missing face plus a top cell whose
/// boundary is the completed tuple.
struct HornFiller {
    int missing_face = -1;
    int top_cell = -1;
    friend auto operator<=>(const HornFiller&, const HornFiller&) = default;
};

/// The chain of consecutive edges through a simplex: edges[i] runs from
/// vertices[i] to vertices[i+1].
struct Spine {
    std::vector<int> vertices;
    std::vector<int> edges;
    friend bool operator==(const Spine&, const Spine&) = default;
};

/// Number of cells of a (level, missing)-horn in subset form: one for
/// every nonempty vertex subset that misses at least one retained vertex.
inline std::int64_t horn_cell_count(int level) {
    return (std::int64_t{1} << (level + 1)) - 3;
}

inline bool horn_compatible(const SemiSimplicialSet& sst, const Horn& h) {
    if (h.level < 2 || h.level > sst.top_level()) return false;
    if (h.missing < 0 || h.missing > h.level) return false;
    if (static_cast<int>(h.faces.size()) != h.level + 1) return false;
    for (int i = 0; i <= h.level; ++i) {
        int f = h.faces[static_cast<std::size_t>(i)];
        if (i == h.missing) {
            if (f != -1) return false;
            continue;
        }
        if (f < 0 || f >= sst.count(h.level - 1)) return false;
    }
    for (int i = 0; i < h.level; ++i) {
        if (i == h.missing) continue;
        for (int j = i + 1; j <= h.level; ++j) {
            if (j == h.missing) continue;
            if (sst.face(h.level - 1, h.faces[static_cast<std::size_t>(j)], i) !=
                sst.face(h.level - 1, h.faces[static_cast<std::size_t>(i)], j - 1))
                return false;
        }
    }
    return true;
}

/// The vertex at position pos of a horn, read off any present face.
inline int horn_vertex(const SemiSimplicialSet& sst, const Horn& h, int pos) {
    for (int j = 0; j <= h.level; ++j) {
        if (j == h.missing || j == pos) continue;
        int p = pos < j ? pos : pos - 1;
        return sst.vertex_of(h.level - 1, h.faces[static_cast<std::size_t>(j)], p);
    }
    return -1;  // unreachable: level >= 2 leaves a donor face
}

/// The sub-simplex of a horn spanned by the given vertex positions.
/// Defined exactly for the horn's cells (a donor face must exist).
inline SimplexId horn_subsimplex(const SemiSimplicialSet& sst, const Horn& h,
                                 const std::vector<int>& positions) {
    for (int j = 0; j <= h.level; ++j) {
        if (j == h.missing) continue;
        if (std::find(positions.begin(), positions.end(), j) != positions.end()) continue;
        std::vector<int> shifted;
        shifted.reserve(positions.size());
        for (int p : positions) shifted.push_back(p < j ? p : p - 1);
        return sst.subsimplex({h.level - 1, h.faces[static_cast<std::size_t>(j)]}, shifted);
    }
    throw PreconditionError("horn has no cell over the requested vertex set");
}

inline int horn_edge(const SemiSimplicialSet& sst, const Horn& h, int i, int j) {
    return horn_subsimplex(sst, h, {i, j}).index;
}

namespace detail {

template <class Fn>
bool horn_backtrack(const SemiSimplicialSet& sst, int n, int m, std::vector<int>& chosen,
                    int slot, Fn&& fn) {
    if (slot > n) {
        Horn h{n, m, chosen};
        return fn(h);
    }
    if (slot == m) {
        chosen.push_back(-1);
        bool cont = horn_backtrack(sst, n, m, chosen, slot + 1, fn);
        chosen.pop_back();
        return cont;
    }
    // forced faces of a candidate at slot j: position i for every present i < j
    std::vector<int> prefix;
    int plen = std::min(slot, m);
    prefix.reserve(static_cast<std::size_t>(plen));
    for (int i = 0; i < plen; ++i)
        prefix.push_back(sst.face(n - 1, chosen[static_cast<std::size_t>(i)], slot - 1));
    const std::vector<int>* candidates;
    std::vector<int> all;
    if (prefix.empty()) {
        all.resize(static_cast<std::size_t>(sst.count(n - 1)));
        for (int c = 0; c < sst.count(n - 1); ++c) all[static_cast<std::size_t>(c)] = c;
        candidates = &all;
    } else {
        candidates = &sst.with_face_prefix(n - 1, prefix);
    }
    for (int c : *candidates) {
        bool ok = true;
        for (int i = m + 1; i < slot && ok; ++i)
            ok = sst.face(n - 1, c, i) ==
                 sst.face(n - 1, chosen[static_cast<std::size_t>(i)], slot - 1);
        if (!ok) continue;
        chosen.push_back(c);
        if (!horn_backtrack(sst, n, m, chosen, slot + 1, fn)) return false;
        chosen.pop_back();
    }
    return true;
}

}  // namespace detail

/// Streams every compatible (n,m)-horn exactly once, lexicographic on the
/// present face tuple. fn returning false stops the stream.
template <class Fn>
void for_each_horn(const SemiSimplicialSet& sst, int n, int m, Fn&& fn) {
    if (n < 2 || n > sst.top_level())
        throw PreconditionError("horn level must be between 2 and the top level");
    if (m < 0 || m > n) throw PreconditionError("horn missing index out of range");
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(n) + 1);
    detail::horn_backtrack(sst, n, m, chosen, 0, fn);
}

inline std::vector<Horn> enumerate_horns(const SemiSimplicialSet& sst, int n, int m) {
    std::vector<Horn> out;
    for_each_horn(sst, n, m, [&](const Horn& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

/// All pairs (missing face, top cell) completing the horn, ordered by
/// missing face then top cell. The missing face's own boundary is forced
/// by compatibility, so candidates come straight off the fiber index.
inline std::vector<HornFiller> horn_fillers(const SemiSimplicialSet& sst, const Horn& h) {
    if (!horn_compatible(sst, h)) throw PreconditionError("horn is not compatible");
    const int n = h.level, m = h.missing;
    std::vector<int> forced(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i < m)
            forced[static_cast<std::size_t>(i)] =
                sst.face(n - 1, h.faces[static_cast<std::size_t>(i)], m - 1);
        else
            forced[static_cast<std::size_t>(i)] =
                sst.face(n - 1, h.faces[static_cast<std::size_t>(i + 1)], m);
    }
    std::vector<HornFiller> out;
    std::vector<int> full = h.faces;
    for (int c : sst.fillers(n - 1, forced)) {
        full[static_cast<std::size_t>(m)] = c;
        for (int top : sst.fillers(n, full)) out.push_back({c, top});
    }
    return out;
}

/// Exactly-one filler for every horn with the missing face opposite
/// vertex 1, at every level from 2 up to the top. The default mode stops
/// at the first violation; exhaustive mode scans everything (in parallel)
/// and reports totals.
inline CheckReport check_segal(const SemiSimplicialSet& sst, bool exhaustive = false) {
    std::int64_t scanned = 0, violations = 0;
    std::optional<Witness> first;
    for (int p = 2; p <= sst.top_level(); ++p) {
        if (!exhaustive) {
            bool ok = true;
            for_each_horn(sst, p, 1, [&](const Horn& h) {
                ++scanned;
                auto fills = horn_fillers(sst, h);
                if (fills.size() != 1) {
                    first = Witness("segal_horn",
                                    {{"level", p},
                                     {"missing", 1},
                                     {"filler_count", static_cast<std::int64_t>(fills.size())}},
                                    h.faces);
                    ++violations;
                    ok = false;
                    return false;
                }
                return true;
            });
            if (!ok) break;
        } else {
            struct ChunkResult {
                std::int64_t scanned = 0, violations = 0;
                std::optional<Witness> first;
            };
            int slots0 = sst.count(p - 1);
            std::vector<ChunkResult> results(static_cast<std::size_t>(thread_budget()) + 1);
            parallel_chunks(slots0, [&](int chunk, int begin, int end) {
                auto& r = results[static_cast<std::size_t>(chunk)];
                std::vector<int> chosen;
                for (int c = begin; c < end; ++c) {
                    chosen.assign(1, c);
                    detail::horn_backtrack(sst, p, 1, chosen, 1, [&](const Horn& h) {
                        ++r.scanned;
                        auto fills = horn_fillers(sst, h);
                        if (fills.size() != 1) {
                            ++r.violations;
                            if (!r.first)
                                r.first = Witness(
                                    "segal_horn",
                                    {{"level", p},
                                     {"missing", 1},
                                     {"filler_count", static_cast<std::int64_t>(fills.size())}},
                                    h.faces);
                        }
                        return true;
                    });
                    chosen.clear();
                }
            });
            for (auto& r : results) {
                scanned += r.scanned;
                violations += r.violations;
                if (!first && r.first) first = std::move(r.first);
            }
        }
    }
    CheckReport r;
    r.check = "segal";
    r.verdict = violations == 0;
    r.witness = std::move(first);
    r.count("horns_scanned", scanned);
    if (exhaustive) r.count("violations", violations);
    return r;
}

/// check_segal restricted to levels 2..max_level (used by constructions
/// whose contract only needs the lower levels).
inline CheckReport check_segal_up_to(const SemiSimplicialSet& sst, int max_level) {
    std::int64_t scanned = 0;
    std::optional<Witness> first;
    for (int p = 2; p <= std::min(max_level, sst.top_level()) && !first; ++p) {
        for_each_horn(sst, p, 1, [&](const Horn& h) {
            ++scanned;
            auto fills = horn_fillers(sst, h);
            if (fills.size() != 1) {
                first = Witness("segal_horn",
                                {{"level", p},
                                 {"missing", 1},
                                 {"filler_count", static_cast<std::int64_t>(fills.size())}},
                                h.faces);
                return false;
            }
            return true;
        });
    }
    CheckReport r;
    r.check = "segal";
    r.verdict = !first.has_value();
    r.witness = std::move(first);
    r.count("horns_scanned", scanned);
    return r;
}

inline Spine spine_of(const SemiSimplicialSet& sst, SimplexId s) {
    if (s.level < 1) throw PreconditionError("spine needs level >= 1");
    Spine sp;
    for (int i = 0; i <= s.level; ++i) sp.vertices.push_back(sst.vertex_of(s.level, s.index, i));
    for (int i = 0; i < s.level; ++i) sp.edges.push_back(sst.subsimplex(s, {i, i + 1}).index);
    return sp;
}

inline Spine spine_of(const SemiSimplicialSet& sst, const Horn& h) {
    Spine sp;
    for (int i = 0; i <= h.level; ++i) sp.vertices.push_back(horn_vertex(sst, h, i));
    for (int i = 0; i < h.level; ++i) sp.edges.push_back(horn_edge(sst, h, i, i + 1));
    return sp;
}

/// Streams every length-n chain of composable edges, lexicographic on the
/// edge tuple.
template <class Fn>
void for_each_spine(const SemiSimplicialSet& sst, int n, Fn&& fn) {
    if (n < 1 || sst.top_level() < 1) return;
    std::vector<int> edges;
    auto rec = [&](auto&& self, int need) -> bool {
        if (need == 0) {
            Spine sp;
            sp.edges = edges;
            sp.vertices.push_back(sst.edge_source(edges.front()));
            for (int e : edges) sp.vertices.push_back(sst.edge_target(e));
            return fn(sp);
        }
        for (int e = 0; e < sst.count(1); ++e) {
            if (!edges.empty() && sst.edge_source(e) != sst.edge_target(edges.back())) continue;
            edges.push_back(e);
            if (!self(self, need - 1)) return false;
            edges.pop_back();
        }
        return true;
    };
    rec(rec, n);
}

inline std::vector<Spine> enumerate_spines(const SemiSimplicialSet& sst, int n) {
    std::vector<Spine> out;
    for_each_spine(sst, n, [&](const Spine& sp) {
        out.push_back(sp);
        return true;
    });
    return out;
}

namespace detail {

inline HornFiller unique_filler(const SemiSimplicialSet& sst, const Horn& h,
                                const char* where) {
    auto fills = horn_fillers(sst, h);
    if (fills.size() != 1) {
        std::string msg = std::string(where) + ": horn (level " + std::to_string(h.level) +
                          ", missing " + std::to_string(h.missing) + ", faces";
        for (int f : h.faces) msg += " " + std::to_string(f);
        msg += ") has " + std::to_string(fills.size()) + " fillers, expected 1";
        throw InconsistencyError(msg);
    }
    return fills.front();
}

// unique filler of the inner 2-horn on edges (f, g): returns (g.f, triangle)
inline HornFiller fill2(const SemiSimplicialSet& sst, int f, int g, const char* where) {
    return unique_filler(sst, Horn{2, 1, {g, -1, f}}, where);
}

// unique filler of the inner 3-horn with faces opposite 0, 2, 3
inline HornFiller fill3(const SemiSimplicialSet& sst, int x012, int x013, int x123,
                        const char* where) {
    return unique_filler(sst, Horn{3, 1, {x123, -1, x013, x012}}, where);
}

}  // namespace detail

/// Inverse of the spine projection on horns with the face opposite
/// vertex 1 removed: rebuilds the unique such horn over a length-3 or
/// length-4 spine by resolving inner-horn fillers stage by stage.
inline Horn phi_inverse(const SemiSimplicialSet& sst, const Spine& sp) {
    const auto& e = sp.edges;
    if (e.size() == 3) {
        auto [x02, t012] = detail::fill2(sst, e[0], e[1], "phi_inverse");
        auto [x13, t123] = detail::fill2(sst, e[1], e[2], "phi_inverse");
        auto [x03, t013] = detail::fill2(sst, e[0], x13, "phi_inverse");
        (void)x02;
        (void)x03;
        return Horn{3, 1, {t123, -1, t013, t012}};
    }
    if (e.size() == 4) {
        // inner 2-horns among vertices 1..4
        auto [x24, t234] = detail::fill2(sst, e[2], e[3], "phi_inverse");
        auto [x13, t123] = detail::fill2(sst, e[1], e[2], "phi_inverse");
        auto [x14, t124] = detail::fill2(sst, e[1], x24, "phi_inverse");
        // the tetrahedron on vertices 1..4
        auto [tri134, t1234] = detail::fill3(sst, t123, t124, t234, "phi_inverse");
        // re-attach vertex 0: edges out of 0, then the three tetrahedra on it
        auto [x02, t012] = detail::fill2(sst, e[0], e[1], "phi_inverse");
        auto [x03, t013] = detail::fill2(sst, e[0], x13, "phi_inverse");
        auto [x04, t014] = detail::fill2(sst, e[0], x14, "phi_inverse");
        auto [tri023, t0123] = detail::fill3(sst, t012, t013, t123, "phi_inverse");
        auto [tri034, t0134] = detail::fill3(sst, t013, t014, tri134, "phi_inverse");
        auto [tri024, t0124] = detail::fill3(sst, t012, t014, t124, "phi_inverse");
        (void)x02;
        (void)x03;
        (void)x04;
        (void)tri023;
        (void)tri034;
        (void)tri024;
        return Horn{4, 1, {t1234, -1, t0134, t0124, t0123}};
    }
    throw PreconditionError("phi_inverse takes a spine of length 3 or 4");
}

/// Unique filler of an inner (3,2)-horn, obtained by chaining two inner
/// fillers: first the edge/triangle over (x01, x13), then the (3,1)-horn
/// it completes. Uniqueness is re-asserted by direct search.
inline HornFiller derive_inner_horn_filling(const SemiSimplicialSet& sst, const Horn& h) {
    if (h.level != 3 || h.missing != 2)
        throw PreconditionError("derive_inner_horn_filling expects a (3,2)-horn");
    if (!horn_compatible(sst, h)) throw PreconditionError("horn is not compatible");
    const int x012 = h.faces[3], x023 = h.faces[1], x123 = h.faces[0];
    const int x01 = horn_edge(sst, h, 0, 1);
    const int x13 = horn_edge(sst, h, 1, 3);
    auto [x03, t013] = detail::fill2(sst, x01, x13, "derive_inner_horn_filling");
    auto [got023, t0123] = detail::fill3(sst, x012, t013, x123, "derive_inner_horn_filling");
    if (got023 != x023)
        throw InconsistencyError(
            "derive_inner_horn_filling: reconstructed face over {0,2,3} is " +
            std::to_string(got023) + ", horn carries " + std::to_string(x023));
    HornFiller result{t013, t0123};
    auto direct = horn_fillers(sst, h);
    if (direct.size() != 1 || direct.front() != result)
        throw InconsistencyError(
            "derive_inner_horn_filling: direct search disagrees with the staged filler");
    return result;
}

}  // namespace segalkit
