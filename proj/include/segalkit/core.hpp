#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "segalkit/report.hpp"

namespace segalkit {

inline constexpr int kMaxLevel = 4;

/// Reference to one simplex: the dimension and the dense per-level index.
struct SimplexId {
    int level = 0;
    int index = 0;
    friend auto operator<=>(const SimplexId&, const SimplexId&) = default;
};

/// A k-simplex records its k+1 faces at level k-1; faces[i] is the face
/// opposite vertex i. Vertices carry no faces.
struct Simplex {
    std::vector<int> faces;
};

/// A compatible (k+1)-tuple of (k-1)-simplices: the full boundary of a
/// potential k-simplex. faces[i] is opposite vertex i.
struct Boundary {
    int level = 1;
    std::vector<int> faces;
    friend bool operator==(const Boundary&, const Boundary&) = default;
    friend auto operator<=>(const Boundary&, const Boundary&) = default;
};

/// Finite semisimplicial set restricted to dimension <= 4: a list of
/// simplices per level with face tables. Immutable after construction;
/// safe to share across concurrent readers.
///
/// Construction accepts raw (possibly broken) data so that validate()
/// can report on it; every other operation assumes a valid instance.
class SemiSimplicialSet {
public:
    SemiSimplicialSet() : SemiSimplicialSet(0, {{}}) {}

    SemiSimplicialSet(int top_level, std::vector<std::vector<Simplex>> levels)
        : top_(top_level), levels_(std::move(levels)) {
        if (top_ < 0 || top_ > kMaxLevel)
            throw StructuralError("top_level must be between 0 and 4, got " +
                                  std::to_string(top_));
        if (static_cast<int>(levels_.size()) != top_ + 1)
            throw StructuralError("expected " + std::to_string(top_ + 1) +
                                  " levels, got " + std::to_string(levels_.size()));
        build_indexes();
    }

    /// Levels given as (count of vertices, simplex lists for levels 1..N).
    static SemiSimplicialSet from_counts(int vertex_count,
                                         std::vector<std::vector<Simplex>> higher) {
        std::vector<std::vector<Simplex>> levels;
        levels.emplace_back(static_cast<std::size_t>(vertex_count));
        for (auto& l : higher) levels.push_back(std::move(l));
        int top = static_cast<int>(levels.size()) - 1;
        return SemiSimplicialSet(top, std::move(levels));
    }

    int top_level() const { return top_; }

    int count(int level) const {
        if (level < 0 || level > top_) return 0;
        return static_cast<int>(levels_[static_cast<std::size_t>(level)].size());
    }

    const std::vector<Simplex>& level(int k) const {
        return levels_[static_cast<std::size_t>(k)];
    }

    std::span<const int> faces_of(int level, int index) const {
        return levels_[static_cast<std::size_t>(level)][static_cast<std::size_t>(index)].faces;
    }

    int face(int level, int index, int i) const {
        return faces_of(level, index)[static_cast<std::size_t>(i)];
    }

    /// The vertex at position `pos` of a simplex, by iterated face
    /// projection (drop the last vertex until only `pos` is left).
    int vertex_of(int level, int index, int pos) const {
        while (level > 0) {
            if (pos < level) {
                index = face(level, index, level);  // drop the last vertex
            } else {
                index = face(level, index, 0);  // drop vertex 0, pos shifts down
                --pos;
            }
            --level;
        }
        return index;
    }

    /// The face of a simplex spanned by the given strictly increasing
    /// vertex positions (recovers any sub-simplex via iterated faces).
    SimplexId subsimplex(SimplexId s, std::vector<int> positions) const {
        int lvl = s.level, idx = s.index;
        while (lvl + 1 > static_cast<int>(positions.size())) {
            // remove the largest vertex position not requested
            int drop = lvl;
            while (std::find(positions.begin(), positions.end(), drop) != positions.end())
                --drop;
            idx = face(lvl, idx, drop);
            --lvl;
            for (auto& p : positions)
                if (p > drop) --p;
        }
        return {lvl, idx};
    }

    int edge_source(int edge) const { return face(1, edge, 1); }
    int edge_target(int edge) const { return face(1, edge, 0); }

    /// All simplices at `level` whose face tuple equals `faces`, ascending.
    const std::vector<int>& fillers(int level, const std::vector<int>& faces) const {
        if (level < 1 || level > top_) return empty_;
        const auto& index = by_prefix_[static_cast<std::size_t>(level)].back();
        auto it = index.find(faces);
        return it == index.end() ? empty_ : it->second;
    }

    /// All simplices at `level` whose first prefix.size() faces equal
    /// `prefix`, ascending. prefix.size() == 0 is not indexed.
    const std::vector<int>& with_face_prefix(int level, const std::vector<int>& prefix) const {
        if (level < 1 || level > top_) return empty_;
        const auto& maps = by_prefix_[static_cast<std::size_t>(level)];
        const auto& index = maps[prefix.size() - 1];
        auto it = index.find(prefix);
        return it == index.end() ? empty_ : it->second;
    }

    /// Size of the largest fiber at `level`: the maximum number of
    /// simplices sharing one face tuple.
    int max_fiber(int level) const {
        if (level < 1 || level > top_) return 0;
        int best = 0;
        for (const auto& [faces, ids] : by_prefix_[static_cast<std::size_t>(level)].back())
            best = std::max(best, static_cast<int>(ids.size()));
        return best;
    }

    friend bool operator==(const SemiSimplicialSet& a, const SemiSimplicialSet& b) {
        if (a.top_ != b.top_) return false;
        for (int k = 0; k <= a.top_; ++k) {
            if (a.count(k) != b.count(k)) return false;
            for (int i = 0; i < a.count(k); ++i)
                if (a.level(k)[static_cast<std::size_t>(i)].faces !=
                    b.level(k)[static_cast<std::size_t>(i)].faces)
                    return false;
        }
        return true;
    }

private:
    void build_indexes() {
        by_prefix_.assign(static_cast<std::size_t>(top_) + 1, {});
        for (int k = 1; k <= top_; ++k) {
            auto& maps = by_prefix_[static_cast<std::size_t>(k)];
            maps.resize(static_cast<std::size_t>(k) + 1);
            int n = count(k);
            for (int i = 0; i < n; ++i) {
                auto f = faces_of(k, i);
                if (static_cast<int>(f.size()) != k + 1) continue;  // validate() reports it
                bool in_range = true;
                for (int v : f)
                    if (v < 0 || v >= count(k - 1)) in_range = false;
                if (!in_range) continue;
                std::vector<int> key;
                key.reserve(f.size());
                for (std::size_t len = 1; len <= f.size(); ++len) {
                    key.push_back(f[len - 1]);
                    maps[len - 1][key].push_back(i);
                }
            }
        }
    }

    int top_ = 0;
    std::vector<std::vector<Simplex>> levels_;
    // by_prefix_[level][len-1]: face prefix of length len -> matching simplices
    std::vector<std::vector<std::map<std::vector<int>, std::vector<int>>>> by_prefix_;
    inline static const std::vector<int> empty_{};
};

/// Checks well-formedness: face arities, reference ranges, and the
/// identity face_i(face_j(s)) == face_{j-1}(face_i(s)) for i < j.
inline CheckReport validate(const SemiSimplicialSet& sst) {
    std::int64_t simplices = 0, identities = 0;
    for (int k = 1; k <= sst.top_level(); ++k) {
        for (int i = 0; i < sst.count(k); ++i) {
            ++simplices;
            auto f = sst.faces_of(k, i);
            if (static_cast<int>(f.size()) != k + 1)
                return CheckReport::fail(
                    "validate",
                    Witness("face_arity",
                            {{"level", k}, {"index", i}, {"arity", static_cast<int>(f.size())}},
                            {}, "a k-simplex must list exactly k+1 faces"),
                    /*structural=*/true);
            for (int pos = 0; pos <= k; ++pos)
                if (f[static_cast<std::size_t>(pos)] < 0 ||
                    f[static_cast<std::size_t>(pos)] >= sst.count(k - 1))
                    return CheckReport::fail(
                        "validate",
                        Witness("dangling_face",
                                {{"level", k},
                                 {"index", i},
                                 {"position", pos},
                                 {"target", f[static_cast<std::size_t>(pos)]}}),
                        /*structural=*/true);
        }
    }
    for (int k = 2; k <= sst.top_level(); ++k) {
        for (int s = 0; s < sst.count(k); ++s) {
            for (int i = 0; i < k; ++i) {
                for (int j = i + 1; j <= k; ++j) {
                    ++identities;
                    int left = sst.face(k - 1, sst.face(k, s, j), i);
                    int right = sst.face(k - 1, sst.face(k, s, i), j - 1);
                    if (left != right)
                        return CheckReport::fail(
                            "validate",
                            Witness("simplicial_identity",
                                    {{"level", k}, {"index", s}, {"i", i}, {"j", j}}));
                }
            }
        }
    }
    auto r = CheckReport::pass("validate");
    r.count("simplices", simplices).count("identities_checked", identities);
    return r;
}

inline bool boundary_compatible(const SemiSimplicialSet& sst, const Boundary& b) {
    if (b.level < 1 || static_cast<int>(b.faces.size()) != b.level + 1) return false;
    for (int f : b.faces)
        if (f < 0 || f >= sst.count(b.level - 1)) return false;
    if (b.level == 1) return true;  // vertex pairs carry no constraint
    for (int i = 0; i < b.level; ++i)
        for (int j = i + 1; j <= b.level; ++j)
            if (sst.face(b.level - 1, b.faces[static_cast<std::size_t>(j)], i) !=
                sst.face(b.level - 1, b.faces[static_cast<std::size_t>(i)], j - 1))
                return false;
    return true;
}

namespace detail {

// Backtracking enumeration of compatible (k+1)-tuples. Slot j candidates
// are constrained on their first j faces by the already chosen slots, so
// the prefix index prunes hard. fn returning false stops the stream.
template <class Fn>
bool boundary_backtrack(const SemiSimplicialSet& sst, int k, std::vector<int>& chosen,
                        Fn&& fn) {
    int j = static_cast<int>(chosen.size());
    if (j == k + 1) {
        Boundary b{k, chosen};
        return fn(b);
    }
    if (k == 1) {
        // slots are vertices; every pair is compatible
        for (int v = 0; v < sst.count(0); ++v) {
            chosen.push_back(v);
            if (!boundary_backtrack(sst, k, chosen, fn)) return false;
            chosen.pop_back();
        }
        return true;
    }
    if (j == 0) {
        for (int c = 0; c < sst.count(k - 1); ++c) {
            chosen.push_back(c);
            if (!boundary_backtrack(sst, k, chosen, fn)) return false;
            chosen.pop_back();
        }
        return true;
    }
    std::vector<int> prefix(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i)
        prefix[static_cast<std::size_t>(i)] = sst.face(k - 1, chosen[static_cast<std::size_t>(i)], j - 1);
    for (int c : sst.with_face_prefix(k - 1, prefix)) {
        chosen.push_back(c);
        if (!boundary_backtrack(sst, k, chosen, fn)) return false;
        chosen.pop_back();
    }
    return true;
}

}  // namespace detail

namespace detail {

// k may exceed the top level by one: the slots live one level down, which
// is how fresh levels are enumerated during nerve construction.
template <class Fn>
void for_each_boundary_tuple(const SemiSimplicialSet& sst, int k, Fn&& fn) {
    if (k < 1 || k > sst.top_level() + 1 || k > kMaxLevel) return;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k) + 1);
    detail::boundary_backtrack(sst, k, chosen, fn);
}

}  // namespace detail

/// Streams every compatible boundary at level k exactly once, in
/// lexicographic order on the face tuple. fn returning false stops.
/// Levels outside 1..top are empty streams.
template <class Fn>
void for_each_boundary(const SemiSimplicialSet& sst, int k, Fn&& fn) {
    if (k < 1 || k > sst.top_level()) return;
    detail::for_each_boundary_tuple(sst, k, fn);
}

inline std::vector<Boundary> boundaries(const SemiSimplicialSet& sst, int k) {
    std::vector<Boundary> out;
    for_each_boundary(sst, k, [&](const Boundary& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

/// All k-simplices whose face tuple equals the boundary, ascending.
inline std::vector<SimplexId> fillers_of(const SemiSimplicialSet& sst, const Boundary& b) {
    std::vector<SimplexId> out;
    for (int i : sst.fillers(b.level, b.faces)) out.push_back({b.level, i});
    return out;
}

/// The boundary read off an existing simplex.
inline Boundary boundary_of(const SemiSimplicialSet& sst, SimplexId s) {
    auto f = sst.faces_of(s.level, s.index);
    return Boundary{s.level, std::vector<int>(f.begin(), f.end())};
}

}  // namespace segalkit
