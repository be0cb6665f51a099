// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Runs the full decision-procedure stack over a generated corpus at desk
// scale, cross-checked against the brute-force oracles in support.hpp.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "support.hpp"

using namespace segalkit;

namespace {

int failures = 0;

void criterion(int num, const char* description, bool ok, const std::string& detail = {}) {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", num, description,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

template <class Fn>
void run_criterion(int num, const char* description, Fn&& fn) {
    try {
        std::string detail;
        bool ok = fn(detail);
        criterion(num, description, ok, detail);
    } catch (const std::exception& e) {
        criterion(num, description, false, std::string("exception: ") + e.what());
    }
}

std::vector<corpus::GeneratedCategory> acceptance_corpus() {
    std::vector<corpus::GeneratedCategory> out;
    out.push_back(gen_terminal());
    out.push_back(gen_walking_iso());
    out.push_back(corpus::indiscrete3());
    for (int n = 1; n <= 6; ++n) out.push_back(gen_chain_poset(n));
    for (int n = 1; n <= 6; ++n) out.push_back(gen_group_delooping("z" + std::to_string(n)));
    out.push_back(gen_group_delooping("klein"));
    for (std::uint64_t seed = 0; seed < 12; ++seed)
        out.push_back(gen_random_poset(5, 0.45, seed));
    for (std::uint64_t seed = 0; seed < 9; ++seed)
        out.push_back(gen_random_category(3, 2, seed));
    for (std::uint64_t seed = 0; seed < 9; ++seed)
        out.push_back(gen_random_category(4, (seed % 3) + 1, seed + 100));
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        out.push_back(gen_random_category(2, 3, seed + 40));
    return out;  // 55 instances
}

std::int64_t witness_value(const CheckReport& r, const char* key) {
    if (!r.witness) return -1;
    for (auto& [k, v] : r.witness->data)
        if (k == key) return v;
    return -1;
}

// A corrupted face pointer must produce a refutation whose (i, j) really
// fails, or a structural report naming a genuinely dangling reference.
bool witness_is_correct(const SemiSimplicialSet& sst, const CheckReport& r) {
    if (r.verdict || !r.witness) return false;
    auto lvl = static_cast<int>(witness_value(r, "level"));
    auto idx = static_cast<int>(witness_value(r, "index"));
    if (r.witness->kind == "simplicial_identity") {
        auto i = static_cast<int>(witness_value(r, "i"));
        auto j = static_cast<int>(witness_value(r, "j"));
        auto fs = oracle::raw_faces(sst, lvl, idx);
        return oracle::raw_faces(sst, lvl - 1, fs[static_cast<std::size_t>(j)])
                   [static_cast<std::size_t>(i)] !=
               oracle::raw_faces(sst, lvl - 1, fs[static_cast<std::size_t>(i)])
                   [static_cast<std::size_t>(j - 1)];
    }
    if (r.witness->kind == "dangling_face") {
        auto target = witness_value(r, "target");
        return r.structural && (target < 0 || target >= sst.count(lvl - 1));
    }
    return false;
}

}  // namespace

int main() {
    auto corpus_all = acceptance_corpus();

    run_criterion(1, "simplicial validity and mutation witnesses", [&](std::string& detail) {
        int mutations = 0;
        for (const auto& g : corpus_all) {
            auto sst = nerve(g.tg, 3);
            if (!validate(sst).verdict) return false;
            for (int k = 2; k <= sst.top_level(); ++k) {
                if (sst.count(k) == 0) continue;
                int s = sst.count(k) / 2;
                int p = (s + k) % (k + 1);
                std::vector<std::vector<Simplex>> levels;
                for (int l = 0; l <= sst.top_level(); ++l) levels.push_back(sst.level(l));
                auto& faces = levels[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)].faces;
                int old = faces[static_cast<std::size_t>(p)];
                int replacement = -1;
                for (int cand = 0; cand < sst.count(k - 1); ++cand)
                    if (oracle::raw_faces(sst, k - 1, cand) != oracle::raw_faces(sst, k - 1, old)) {
                        replacement = cand;
                        break;
                    }
                if (replacement >= 0) {
                    faces[static_cast<std::size_t>(p)] = replacement;
                    SemiSimplicialSet mutated(sst.top_level(), levels);
                    if (!witness_is_correct(mutated, validate(mutated))) return false;
                    faces[static_cast<std::size_t>(p)] = old;
                    ++mutations;
                }
                faces[static_cast<std::size_t>(p)] = sst.count(k - 1);  // dangling
                SemiSimplicialSet dangling(sst.top_level(), levels);
                if (!witness_is_correct(dangling, validate(dangling))) return false;
                ++mutations;
            }
        }
        detail = std::to_string(corpus_all.size()) + " nerves, " + std::to_string(mutations) +
                 " mutations refuted";
        return mutations > 0;
    });

    run_criterion(2, "extraction undoes the nerve (exact and up to isomorphism)",
                  [&](std::string& detail) {
                      for (const auto& g : corpus_all) {
                          auto sst = nerve(g.tg, 3);
                          if (!(extract_transitive_graph(sst) == g.tg)) return false;
                          auto back = nerve(extract_transitive_graph(sst), 3);
                          if (!sst_isomorphic(sst, back)) return false;
                      }
                      // a taller spot check
                      auto z3 = gen_group_delooping("z3");
                      auto tall = nerve(z3.tg, 4);
                      if (!(extract_transitive_graph(tall) == z3.tg)) return false;
                      if (!sst_isomorphic(tall, nerve(extract_transitive_graph(tall), 4)))
                          return false;
                      detail = std::to_string(corpus_all.size()) + " instances, 0 tolerance";
                      return true;
                  });

    run_criterion(3, "extracted composition tables equal the inputs entry for entry",
                  [&](std::string& detail) {
                      long entries = 0;
                      for (const auto& g : corpus_all) {
                          auto got = extract_transitive_graph(nerve(g.tg, 2));
                          for (int a = 0; a < g.tg.objects(); ++a)
                              for (int b = 0; b < g.tg.objects(); ++b)
                                  for (int c = 0; c < g.tg.objects(); ++c)
                                      for (int f = 0; f < g.tg.hom_size(a, b); ++f)
                                          for (int gg = 0; gg < g.tg.hom_size(b, c); ++gg) {
                                              ++entries;
                                              if (got.compose(a, b, c, gg, f) !=
                                                  g.tg.compose(a, b, c, gg, f))
                                                  return false;
                                          }
                      }
                      detail = std::to_string(entries) + " table entries";
                      return true;
                  });

    run_criterion(4, "spine equivalences with two-sided inverses", [&](std::string& detail) {
        long horns3 = 0, horns4 = 0;
        for (const auto& g : corpus_all) {
            if (g.tg.objects() > 4) continue;
            auto sst = nerve(g.tg, 4);
            for (int n = 3; n <= 4; ++n) {
                std::vector<Horn> hs = enumerate_horns(sst, n, 1);
                std::vector<Spine> sps = enumerate_spines(sst, n);
                if (hs.size() != sps.size()) return false;
                (n == 3 ? horns3 : horns4) += static_cast<long>(hs.size());
                for (const auto& h : hs)
                    if (!(phi_inverse(sst, spine_of(sst, h)) == h)) return false;
                for (const auto& sp : sps)
                    if (!(spine_of(sst, phi_inverse(sst, sp)) == sp)) return false;
            }
        }
        detail = std::to_string(horns3) + " three-horns, " + std::to_string(horns4) +
                 " four-horns matched";
        return horns3 > 0 && horns4 > 0;
    });

    run_criterion(5, "all inner horns fill uniquely; the staged (3,2)-filler matches brute force",
                  [&](std::string& detail) {
                      long scanned = 0;
                      for (const auto& g : corpus_all) {
                          if (g.tg.objects() > 4) continue;
                          auto sst = nerve(g.tg, 4);
                          for (int n = 2; n <= 4; ++n)
                              for (int m = 1; m < n; ++m) {
                                  bool ok = true;
                                  for_each_horn(sst, n, m, [&](const Horn& h) {
                                      ++scanned;
                                      auto fills = horn_fillers(sst, h);
                                      if (fills.size() != 1) {
                                          ok = false;
                                          return false;
                                      }
                                      if (n == 3 && m == 2) {
                                          auto staged = derive_inner_horn_filling(sst, h);
                                          auto direct = oracle::horn_fillers(sst, h);
                                          if (direct.size() != 1 || !(staged == direct.front())) {
                                              ok = false;
                                              return false;
                                          }
                                      }
                                      return true;
                                  });
                                  if (!ok) return false;
                              }
                      }
                      detail = std::to_string(scanned) + " inner horns";
                      return true;
                  });

    run_criterion(6, "identity-derived degeneracies validate and are unique",
                  [&](std::string& detail) {
                      int searched = 0;
                      for (const auto& g : corpus_all) {
                          auto pc = corpus::as_precategory(g);
                          auto sst = nerve(pc, 4);
                          auto d = degeneracies_from_identities(pc, sst);
                          if (!validate_degeneracies(sst, d).verdict) return false;
                          long cells = 0;
                          for (int k = 0; k <= 4; ++k) cells += sst.count(k);
                          if (cells <= 40) {
                              ++searched;
                              if (oracle::count_degeneracy_structures(sst) != 1) return false;
                          }
                      }
                      detail = std::to_string(searched) + " instances searched exhaustively";
                      return searched > 0;
                  });

    run_criterion(7, "neutral/iso and completeness/univalence agree everywhere",
                  [&](std::string& detail) {
                      long edges = 0;
                      for (const auto& g : corpus_all) {
                          auto pc = corpus::as_precategory(g);
                          auto sst = nerve(pc, 3);
                          auto d = degeneracies_from_identities(pc, sst);
                          auto ctx = make_iso_context(sst, d);
                          EdgeBuckets buckets = edge_buckets(sst);
                          for (int e = 0; e < sst.count(1); ++e) {
                              ++edges;
                              bool n = edge_is_neutral(sst, e);
                              if (n != is_iso(sst, d, ctx, e)) return false;
                              bool maps = neutral_via_composition_maps(
                                              g.tg, sst.edge_source(e), sst.edge_target(e),
                                              buckets.local_of[static_cast<std::size_t>(e)])
                                              .verdict;
                              if (n != maps) return false;
                          }
                          if (!completeness_iff_univalence(sst, d).verdict) return false;
                      }
                      detail = std::to_string(edges) + " edges, 100% agreement";
                      return true;
                  });

    run_criterion(8, "synthesized degeneracies validate and equal the identity-derived ones",
                  [&](std::string& detail) {
                      int complete_instances = 0;
                      for (const auto& g : corpus_all) {
                          auto pc = corpus::as_precategory(g);
                          auto sst = nerve(pc, 4);
                          if (!check_completeness(sst).verdict) continue;
                          ++complete_instances;
                          auto synthesized = synthesize_degeneracies(sst, 3);
                          if (!validate_degeneracies(sst, synthesized).verdict) return false;
                          if (!(synthesized == degeneracies_from_identities(pc, sst)))
                              return false;
                      }
                      detail = std::to_string(complete_instances) + " complete instances";
                      return complete_instances > 0;
                  });

    run_criterion(9, "completeness characterizes gaunt sources; with propositional fibers, posets",
                  [&](std::string& detail) {
                      bool saw_refuters[3] = {false, false, false};
                      for (const auto& g : corpus_all) {
                          auto pc = corpus::as_precategory(g);
                          auto sst = nerve(pc, 3);
                          if (!check_segal(sst).verdict) return false;
                          bool complete = check_completeness(sst).verdict;
                          bool gaunt = check_gaunt(pc).verdict;
                          if (complete != gaunt) return false;
                          bool prop_fibers = sst.max_fiber(1) <= 1;
                          bool lhs0 = complete && prop_fibers;
                          bool thin = check_hom_props(pc.rtg).verdict;
                          bool poset = thin && gaunt;
                          if (lhs0 != poset) return false;
                          if (g.name == "walking-iso") saw_refuters[0] = !complete && !gaunt;
                          if (g.name == "delooping-z2") saw_refuters[1] = !complete && !gaunt;
                          if (g.name == "indiscrete-3") saw_refuters[2] = !complete && !gaunt;
                      }
                      if (!(saw_refuters[0] && saw_refuters[1] && saw_refuters[2])) return false;
                      detail = "both directions on " + std::to_string(corpus_all.size()) +
                               " instances incl. the three refuters";
                      return true;
                  });

    run_criterion(10, "full pass over a 10-object random category nerve (level 4) in < 10 s",
                  [&](std::string& detail) {
                      auto start = std::chrono::steady_clock::now();
                      auto g = gen_random_category(10, 2, 2024);
                      auto pc = corpus::as_precategory(g);
                      auto sst = nerve(pc, 4);
                      bool ok = validate(sst).verdict;
                      ok = ok && check_segal(sst, /*exhaustive=*/true).verdict;
                      ok = ok && check_pentagon_level(sst).verdict;
                      ok = ok && check_completeness(sst).verdict == check_gaunt(pc).verdict;
                      auto d = degeneracies_from_identities(pc, sst);
                      ok = ok && validate_degeneracies(sst, d).verdict;
                      ok = ok && check_univalence(sst, d).verdict == check_gaunt(pc).verdict;
                      if (check_completeness(sst).verdict)
                          ok = ok && synthesize_degeneracies(sst, 3) == d;
                      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - start)
                                         .count();
                      detail = std::to_string(sst.count(4)) + " top cells, " +
                               std::to_string(elapsed) + " ms";
                      return ok && elapsed < 10000;
                  });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
