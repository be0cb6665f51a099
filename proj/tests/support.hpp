#pragma once

// Shared corpus builders and brute-force oracles. The oracles deliberately
// avoid the library's indexed lookups and staged constructions: they scan
// raw face tables so that cross-checks are independent of the code paths
// they verify.

#include <algorithm>
#include <vector>

#include "segalkit/segalkit.hpp"

namespace oracle {

using segalkit::Boundary;
using segalkit::DegeneracyStructure;
using segalkit::Horn;
using segalkit::HornFiller;
using segalkit::SemiSimplicialSet;
using segalkit::Simplex;

inline std::vector<int> raw_faces(const SemiSimplicialSet& sst, int level, int index) {
    auto f = sst.faces_of(level, index);
    return std::vector<int>(f.begin(), f.end());
}

/// Pairwise compatibility by direct face arithmetic; -1 slots are skipped.
inline bool tuple_compatible(const SemiSimplicialSet& sst, int level,
                             const std::vector<int>& faces) {
    for (int i = 0; i < level; ++i) {
        if (faces[static_cast<std::size_t>(i)] < 0) continue;
        for (int j = i + 1; j <= level; ++j) {
            if (faces[static_cast<std::size_t>(j)] < 0) continue;
            if (level == 1) continue;  // vertex pairs carry no constraint
            int left = raw_faces(sst, level - 1, faces[static_cast<std::size_t>(j)])
                           [static_cast<std::size_t>(i)];
            int right = raw_faces(sst, level - 1, faces[static_cast<std::size_t>(i)])
                            [static_cast<std::size_t>(j - 1)];
            if (left != right) return false;
        }
    }
    return true;
}

/// All simplices over a face tuple, by linear scan.
inline std::vector<int> fillers(const SemiSimplicialSet& sst, int level,
                                const std::vector<int>& faces) {
    std::vector<int> out;
    for (int i = 0; i < sst.count(level); ++i)
        if (raw_faces(sst, level, i) == faces) out.push_back(i);
    return out;
}

/// Every compatible (k+1)-tuple by full product scan. Exponential; only
/// for small instances.
inline std::vector<Boundary> boundaries(const SemiSimplicialSet& sst, int k) {
    std::vector<Boundary> out;
    std::vector<int> tuple(static_cast<std::size_t>(k) + 1, 0);
    int n = sst.count(k - 1);
    if (n == 0) return out;
    while (true) {
        if (tuple_compatible(sst, k, tuple)) out.push_back({k, tuple});
        int pos = k;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - 1) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return out;
}

inline std::vector<Horn> horns(const SemiSimplicialSet& sst, int n, int m) {
    std::vector<Horn> out;
    std::vector<int> tuple(static_cast<std::size_t>(n) + 1, 0);
    tuple[static_cast<std::size_t>(m)] = -1;
    int count = sst.count(n - 1);
    if (count == 0) return out;
    while (true) {
        if (tuple_compatible(sst, n, tuple)) out.push_back({n, m, tuple});
        int pos = n;
        while (pos >= 0) {
            if (pos == m) {
                --pos;
                continue;
            }
            if (tuple[static_cast<std::size_t>(pos)] == count - 1) {
                tuple[static_cast<std::size_t>(pos)] = 0;
                --pos;
            } else {
                break;
            }
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return out;
}

/// All horn fillers by scanning every (candidate, top-cell) pair.
inline std::vector<HornFiller> horn_fillers(const SemiSimplicialSet& sst, const Horn& h) {
    std::vector<HornFiller> out;
    for (int cand = 0; cand < sst.count(h.level - 1); ++cand) {
        std::vector<int> full = h.faces;
        full[static_cast<std::size_t>(h.missing)] = cand;
        if (!tuple_compatible(sst, h.level, full)) continue;
        for (int top = 0; top < sst.count(h.level); ++top)
            if (raw_faces(sst, h.level, top) == full) out.push_back({cand, top});
    }
    return out;
}

/// Number of length-n edge chains, counted directly off source/target.
inline long spine_count(const SemiSimplicialSet& sst, int n) {
    long total = 0;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int need, int at) -> void {
        if (need == 0) {
            ++total;
            return;
        }
        for (int e = 0; e < sst.count(1); ++e) {
            if (at >= 0 && raw_faces(sst, 1, e)[1] != at) continue;
            self(self, need - 1, raw_faces(sst, 1, e)[0]);
        }
    };
    rec(rec, n, -1);
    return total;
}

/// Exhaustive count of total degeneracy structures with the dictated
/// boundaries, searching every assignment level by level.
inline long count_degeneracy_structures(const SemiSimplicialSet& sst) {
    int level = std::min(3, sst.top_level() - 1);
    if (level < 1) return 0;
    long total = 0;
    DegeneracyStructure d;
    d.level = level;
    d.s00.assign(static_cast<std::size_t>(sst.count(0)), -1);
    if (level >= 2) {
        d.s10.assign(static_cast<std::size_t>(sst.count(1)), -1);
        d.s11.assign(static_cast<std::size_t>(sst.count(1)), -1);
    }
    if (level >= 3) {
        d.s20.assign(static_cast<std::size_t>(sst.count(2)), -1);
        d.s21.assign(static_cast<std::size_t>(sst.count(2)), -1);
        d.s22.assign(static_cast<std::size_t>(sst.count(2)), -1);
    }

    auto tri_choices = [&](auto&& self, int t) -> void {
        if (t == sst.count(2)) {
            ++total;
            return;
        }
        for (int a : fillers(sst, 3, segalkit::degeneracy_boundary_s20(sst, d, t))) {
            d.s20[static_cast<std::size_t>(t)] = a;
            for (int b : fillers(sst, 3, segalkit::degeneracy_boundary_s21(sst, d, t))) {
                d.s21[static_cast<std::size_t>(t)] = b;
                for (int c : fillers(sst, 3, segalkit::degeneracy_boundary_s22(sst, d, t))) {
                    d.s22[static_cast<std::size_t>(t)] = c;
                    self(self, t + 1);
                }
            }
        }
    };
    auto edge_choices = [&](auto&& self, int e) -> void {
        if (e == sst.count(1)) {
            if (level >= 3)
                tri_choices(tri_choices, 0);
            else
                ++total;
            return;
        }
        for (int a : fillers(sst, 2, segalkit::degeneracy_boundary_s10(sst, d, e))) {
            d.s10[static_cast<std::size_t>(e)] = a;
            for (int b : fillers(sst, 2, segalkit::degeneracy_boundary_s11(sst, d, e))) {
                d.s11[static_cast<std::size_t>(e)] = b;
                self(self, e + 1);
            }
        }
    };
    auto vertex_choices = [&](auto&& self, int x) -> void {
        if (x == sst.count(0)) {
            if (level >= 2)
                edge_choices(edge_choices, 0);
            else
                ++total;
            return;
        }
        for (int a : fillers(sst, 1, segalkit::degeneracy_boundary_s00(x))) {
            d.s00[static_cast<std::size_t>(x)] = a;
            self(self, x + 1);
        }
    };
    vertex_choices(vertex_choices, 0);
    return total;
}

}  // namespace oracle

namespace corpus {

using segalkit::GeneratedCategory;

/// Categories whose nerves satisfy the Segal condition at every level.
inline std::vector<GeneratedCategory> lawful() {
    std::vector<GeneratedCategory> out;
    out.push_back(segalkit::gen_terminal());
    for (int n = 1; n <= 4; ++n) out.push_back(segalkit::gen_chain_poset(n));
    out.push_back(segalkit::gen_walking_iso());
    for (int n = 1; n <= 4; ++n)
        out.push_back(segalkit::gen_group_delooping("z" + std::to_string(n)));
    out.push_back(segalkit::gen_group_delooping("klein"));
    for (std::uint64_t seed = 0; seed < 4; ++seed)
        out.push_back(segalkit::gen_random_poset(4, 0.5, seed));
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        out.push_back(segalkit::gen_random_category(3, 2, seed));
    out.push_back(segalkit::gen_random_category(2, 3, 11));
    return out;
}

/// The two-element table with a*(a*a) != (a*a)*a.
inline segalkit::TransitiveGraph nonassociative_magma() {
    segalkit::Graph g = segalkit::Graph::discrete(1);
    g.hom[0][0] = 2;
    auto tg = segalkit::TransitiveGraph::over(std::move(g));
    // 0*0=1, 0*1=0, 1*0=0, 1*1=0: 0*(0*0)=0*1=0 but (0*0)*0=1*0=0... use:
    // 0*0=1, 0*1=1, 1*0=0, 1*1=0: 0*(0*0)=0*1=1, (0*0)*0=1*0=0
    tg.set_compose(0, 0, 0, 0, 0, 1);
    tg.set_compose(0, 0, 0, 0, 1, 1);
    tg.set_compose(0, 0, 0, 1, 0, 0);
    tg.set_compose(0, 0, 0, 1, 1, 0);
    return tg;
}

/// Three objects, every hom-set a singleton: a non-antisymmetric preorder
/// (every object isomorphic to every other).
inline GeneratedCategory indiscrete3() {
    segalkit::Graph g = segalkit::Graph::discrete(3);
    for (auto& row : g.hom) std::fill(row.begin(), row.end(), 1);
    auto tg = segalkit::TransitiveGraph::over(std::move(g));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) tg.set_compose(a, b, c, 0, 0, 0);
    GeneratedCategory out;
    out.tg = std::move(tg);
    out.ids = std::vector<int>{0, 0, 0};
    out.name = "indiscrete-3";
    return out;
}

inline segalkit::Precategory as_precategory(const GeneratedCategory& g) {
    return segalkit::make_precategory({g.tg, *g.ids});
}

}  // namespace corpus
