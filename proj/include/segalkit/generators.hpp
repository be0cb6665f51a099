#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "segalkit/category.hpp"

namespace segalkit {

/// A generated category plus the identity table when the kind has one.
struct GeneratedCategory {
    TransitiveGraph tg;
    std::optional<std::vector<int>> ids;
    std::string name;
};

namespace detail {

// deterministic coin: avoids std::uniform_real_distribution, whose output
// is implementation-defined
inline bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline GeneratedCategory thin_from_relation(const std::vector<std::vector<char>>& le,
                                            std::string name) {
    int n = static_cast<int>(le.size());
    Graph g = Graph::discrete(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ? 1 : 0;
    TransitiveGraph tg = TransitiveGraph::over(std::move(g));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (tg.hom_size(a, b) == 1 && tg.hom_size(b, c) == 1)
                    tg.set_compose(a, b, c, 0, 0, 0);
    GeneratedCategory out;
    out.tg = std::move(tg);
    out.ids = std::vector<int>(static_cast<std::size_t>(n), 0);
    out.name = std::move(name);
    return out;
}

}  // namespace detail

/// The total order 0 <= 1 <= ... <= n-1 as a thin category.
inline GeneratedCategory gen_chain_poset(int n) {
    if (n < 1) throw PreconditionError("chain poset needs at least one object");
    std::vector<std::vector<char>> le(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    return detail::thin_from_relation(le, "chain-poset-" + std::to_string(n));
}

/// Random partial order: forward arcs i < j kept with the given density,
/// closed reflexively and transitively. Antisymmetric by construction.
inline GeneratedCategory gen_random_poset(int n, double density, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random poset needs at least one object");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<char>> le(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (detail::coin(rng, density)) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (le[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] &&
                    le[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)])
                    le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    return detail::thin_from_relation(le, "random-poset-" + std::to_string(n));
}

/// One-object category over a named group: z<n> (cyclic) or klein.
inline GeneratedCategory gen_group_delooping(const std::string& group) {
    std::vector<std::vector<int>> table;
    if (group.size() >= 2 && group[0] == 'z') {
        int n = std::stoi(group.substr(1));
        if (n < 1 || n > 64) throw PreconditionError("cyclic group order must be 1..64");
        table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    } else if (group == "klein") {
        table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    } else {
        throw PreconditionError("unknown group '" + group + "' (use z<n> or klein)");
    }
    int n = static_cast<int>(table.size());
    Graph g = Graph::discrete(1);
    g.hom[0][0] = n;
    TransitiveGraph tg = TransitiveGraph::over(std::move(g));
    for (int f = 0; f < n; ++f)
        for (int gg = 0; gg < n; ++gg)
            tg.set_compose(0, 0, 0, gg, f,
                           table[static_cast<std::size_t>(gg)][static_cast<std::size_t>(f)]);
    GeneratedCategory out;
    out.tg = std::move(tg);
    out.ids = std::vector<int>{0};
    out.name = "delooping-" + group;
    return out;
}

/// Two objects with exactly one morphism in every direction: the walking
/// isomorphism (equivalently, the two-point non-antisymmetric preorder).
inline GeneratedCategory gen_walking_iso() {
    std::vector<std::vector<char>> le = {{1, 1}, {1, 1}};
    auto out = detail::thin_from_relation(le, "walking-iso");
    return out;
}

/// The one-object one-morphism category.
inline GeneratedCategory gen_terminal() {
    std::vector<std::vector<char>> le = {{1}};
    return detail::thin_from_relation(le, "terminal");
}

/// Random category with hom-sets of size k: a random poset skeleton
/// where every inhabited hom-set carries the truncated-addition monoid
/// min(a+b, k-1). Associativity and units hold by construction.
inline GeneratedCategory gen_random_category(int n, int k, std::uint64_t seed,
                                             double density = 0.5) {
    if (n < 1 || k < 1) throw PreconditionError("random category needs n >= 1 and k >= 1");
    GeneratedCategory skeleton = gen_random_poset(n, density, seed);
    Graph g = Graph::discrete(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                skeleton.tg.hom_size(a, b) ? k : 0;
    TransitiveGraph tg = TransitiveGraph::over(std::move(g));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int f = 0; f < tg.hom_size(a, b); ++f)
                    for (int gg = 0; gg < tg.hom_size(b, c); ++gg)
                        tg.set_compose(a, b, c, gg, f, std::min(gg + f, k - 1));
    GeneratedCategory out;
    out.tg = std::move(tg);
    out.ids = std::vector<int>(static_cast<std::size_t>(n), 0);
    out.name = "random-category-" + std::to_string(n) + "x" + std::to_string(k);
    return out;
}

}  // namespace segalkit
