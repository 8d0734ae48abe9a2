// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance             run all criteria
//   acceptance --only 4    run a single criterion

#include "oracles.hpp"

#include <sopi/distribution.hpp>
#include <sopi/experiments.hpp>
#include <sopi/large_object.hpp>
#include <sopi/modarith.hpp>
#include <sopi/overlap.hpp>
#include <sopi/set_designer.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace sopi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure message; later ones only bump the count.
struct Failures {
  std::uint64_t count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const FieldParams kBig = FieldParams::mersenne31();
const FieldParams kSmall = FieldParams::make(10007);

Outcome proposition_unique_sopi(double& limit) {
  limit = 5;
  const auto f = FieldParams::make(11);
  std::vector<Sopi> all;
  for (std::uint32_t b = 1; b < 11; ++b)
    for (std::uint32_t a = 0; a < 11; ++a) all.push_back(Sopi{a, b});
  Failures bad;
  std::uint64_t quads = 0;
  for (std::uint64_t i0 = 0; i0 < 11; ++i0)
    for (std::uint64_t i1 = 0; i1 < 11; ++i1)
      for (std::uint32_t j0 = 0; j0 < 11; ++j0)
        for (std::uint32_t j1 = 0; j1 < 11; ++j1) {
          if (i0 == i1 || j0 == j1) continue;
          ++quads;
          int hits = 0;
          for (const auto& p : all) {
            hits += symbol_id_at(p, i0, f).value == j0 && symbol_id_at(p, i1, f).value == j1;
          }
          if (hits != 1) bad.add(fmt("(%llu,%llu,%u,%u) has %d SOPIs", (unsigned long long)i0,
                                     (unsigned long long)i1, j0, j1, hits));
        }
  return {bad.count == 0 && quads == 12100 && all.size() == 110,
          fmt("%zu SOPIs, %llu quadruples, %llu exceptions %s", all.size(), (unsigned long long)quads,
              (unsigned long long)bad.count, bad.first.c_str())};
}

Outcome distance_oracle(double& limit) {
  limit = 10;
  const DiffSet diff(50);
  Rng rng(2);
  Failures bad;
  std::uint64_t matched = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto b0 = static_cast<std::uint32_t>(rng.between(1, 10006));
    // A quarter of the pairs are small multiples so that short matches occur.
    const auto b1 = k % 4 == 0 ? mod_mul(b0, static_cast<std::uint32_t>(rng.between(1, 49)), kSmall)
                               : static_cast<std::uint32_t>(rng.between(1, 10006));
    const auto fast = distance(b0, b1, diff, kSmall);
    const auto slow = distance_bruteforce(b0, b1, diff, kSmall);
    matched += fast.matched;
    if (fast.matched != slow.matched || fast.distance != slow.distance || fast.d0 != slow.d0 || fast.d1 != slow.d1)
      bad.add(fmt("B0=%u B1=%u", b0, b1));
    const auto oracle = oracle::min_match_sum(b0, b1, 50, 10007);
    if (oracle != static_cast<std::int64_t>(slow.distance)) bad.add(fmt("oracle B0=%u B1=%u", b0, b1));
  }
  return {bad.count == 0, fmt("1000 pairs, %llu matched, %llu mismatches %s", (unsigned long long)matched,
                              (unsigned long long)bad.count, bad.first.c_str())};
}

Outcome pair_lemma(double& limit) {
  limit = 0;
  const std::uint32_t m_max = 60;
  const DiffSet diff(m_max);
  const auto design = DesignParams::make(kSmall, 5, m_max);
  const auto set = build_sopi_set(design, 40, 4, 3);
  const auto entries = set.entries();
  Rng rng(3);
  Failures bad;
  std::uint64_t splits = 0;
  std::uint64_t designed = 0;
  std::uint64_t tight = 0;
  for (int k = 0; k < 500; ++k) {
    Sopi p0, p1;
    if (k % 2 == 0) {
      // Two distinct members of a designed set.
      const auto x = rng.below(entries.size());
      auto y = rng.below(entries.size() - 1);
      if (y >= x) ++y;
      p0 = entries[x];
      p1 = entries[y];
      ++designed;
    } else {
      p0 = random_sopi(rng, kSmall);
      p1 = random_sopi(rng, kSmall);
      if (k % 6 == 1) p1.b = mod_mul(p0.b, static_cast<std::uint32_t>(rng.between(1, 6)), kSmall);
    }
    const auto d = distance(p0.b, p1.b, diff, kSmall).distance;
    if (k % 2 == 0 && p0.b != p1.b && d < design.min_distance()) bad.add("designed pair below d");
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      for (std::uint64_t m0 = 0; m0 <= m; ++m0) {
        ++splits;
        const std::vector<PrefixSpec> ps{{p0, m0}, {p1, m - m0}};
        const auto got = count_distinct(ps, kSmall).distinct;
        const auto bound = pair_overlap_lower_bound(m, d);
        if (got < bound) {
          bad.add(fmt("(%u,%u) (%u,%u) m0=%llu m1=%llu: %llu < %llu", p0.a, p0.b, p1.a, p1.b,
                      (unsigned long long)m0, (unsigned long long)(m - m0), (unsigned long long)got,
                      (unsigned long long)bound));
        }
        tight += got == bound && m > 1;
      }
    }
  }
  return {bad.count == 0, fmt("500 pairs (%llu designed), %llu splits, %llu at the bound, %llu violations %s",
                              (unsigned long long)designed, (unsigned long long)splits, (unsigned long long)tight,
                              (unsigned long long)bad.count, bad.first.c_str())};
}

Outcome designed_duplication(double& limit) {
  limit = 120;
  const auto design = DesignParams::make(kBig, 1000, 30000);
  const auto set = build_sopi_set(design, 10, 10, 4, BuildStrategy::incremental);
  const auto audit = audit_sopi_set(set);
  const auto rep = designed_overlap_experiment(set, 10, 30000, 100, 4);
  const double analytic = 1.0 - multi_overlap_lower_bound(30000, 10, 1000) / 30000.0;
  const bool pass = audit.ok() && rep.samples == 100 && rep.violations == 0 &&
                    rep.max_duplicate_fraction < 0.015 && analytic <= 0.0105;
  return {pass, fmt("|set|=%zu, 100 samples: max %.4f%% mean %.2f dups, analytic bound %.4f%%, audit %s",
                    set.size(), 100 * rep.max_duplicate_fraction, rep.mean_duplicates, 100 * analytic,
                    audit.ok() ? "ok" : "FAILED")};
}

Outcome theorem_monte_carlo(double& limit) {
  limit = 600;
  struct Grid {
    FieldParams field;
    std::uint64_t k;
  };
  const Grid grid[] = {{kSmall, 90}, {kBig, 1000}};
  std::ostringstream detail;
  bool pass = true;
  std::uint64_t seed = 5;
  for (const auto& g : grid) {
    for (double delta : {0.1, 0.3}) {
      for (std::uint32_t s : {2u, 4u, 8u}) {
        const auto c = TrialConfig::make(g.field, g.k, delta, s, SplitKind::random, 100000, seed++);
        const auto r = estimate_failure_probability(c);
        const bool ok = r.trials_run == 100000 && r.within_bound && (!g.field.is_mersenne31() || r.failures == 0);
        pass = pass && ok;
        detail << fmt("[N=%u d=%.1f s=%u %llu/%llu%s] ", g.field.n(), delta, s, (unsigned long long)r.failures,
                      (unsigned long long)r.trials_run, ok ? "" : " OVER");
      }
    }
  }
  return {pass, "failures per config " + detail.str()};
}

Outcome capacity(double& limit) {
  limit = 0;
  const auto c101 = capacity_bounds(DesignParams::make(kBig, 101, 30000));
  const auto c1000 = capacity_bounds(DesignParams::make(kBig, 1000, 30000));
  const auto small = DesignParams::make(kSmall, 5, 50);
  const double need = (10007.0 - 1.0) / 25.0;
  const auto inc = build_b_set(small, 1u << 20, BuildStrategy::incremental).size();
  const auto sieve = build_b_set(small, 1u << 20, BuildStrategy::sieve).size();
  const bool pass = c101.total_lower >= 1.5e10 && c1000.total_lower >= 1.5e8 && inc >= need && sieve >= need;
  return {pass, fmt("d=101: %.4g, d=1000: %.4g, exhaustion at N=10007 d=5: incremental %zu sieve %zu (need %.2f)",
                    c101.total_lower, c1000.total_lower, inc, sieve, need)};
}

Outcome partition_properties(double& limit) {
  limit = 0;
  Rng rng(7);
  Failures bad;
  for (int k = 0; k < 10000; ++k) {
    const std::uint64_t kt = k % 2 == 0 ? rng.between(1, 1000) : rng.between(1, std::uint64_t{1} << 40);
    const std::uint64_t z = rng.between(1, std::min<std::uint64_t>(kt, k % 3 == 0 ? 10 : kt));
    const auto p = partition(kt, z);
    const unsigned __int128 sum =
        (unsigned __int128)p.large_count * p.large_size + (unsigned __int128)p.small_count * p.small_size;
    if (sum != kt || p.large_count + p.small_count != z || p.large_size - p.small_size > 1 ||
        p.large_size < p.small_size)
      bad.add(fmt("Kt=%llu Z=%llu", (unsigned long long)kt, (unsigned long long)z));
  }

  const double mb80 = static_cast<double>(kRaptorQMaxSourceSymbols) * 1400.0;
  const double err80 = std::abs(mb80 - 80e6) / 80e6;
  // The single-block limit must be the largest object with Z = 1.
  const auto edge = block_structure(kRaptorQMaxSourceSymbols * 1400, 1400, kRaptorQMaxSourceSymbols * 1400);
  const auto over = block_structure(kRaptorQMaxSourceSymbols * 1400 + 1, 1400, kRaptorQMaxSourceSymbols * 1400);
  const bool limit_ok = edge.block_count == 1 && over.block_count == 2;

  const double eb8 = static_cast<double>(kRaptorQMaxSourceSymbols) * 65536.0 * static_cast<double>(kMersenne31);
  const double err8 = std::abs(eb8 - 8e18) / 8e18;
  const bool pass = bad.count == 0 && limit_ok && err80 <= 0.01 && err8 <= 0.01;
  return {pass, fmt("10^4 partitions, %llu violations%s; single block max %.0f B vs 80 MB (%.2f%% off, %s); "
                    "max object %.4g B vs 8e18 (%.2f%% off, %s)",
                    (unsigned long long)bad.count, bad.count ? (" " + bad.first).c_str() : "", mb80, 100 * err80,
                    err80 <= 0.01 ? "ok" : "outside 1%", eb8, 100 * err8, err8 <= 0.01 ? "ok" : "outside 1%")};
}

Outcome large_sopi_structure(double& limit) {
  limit = 0;
  Rng rng(8);
  Failures bad;
  std::uint64_t groups = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto p = random_large_sopi(rng, kBig);
    for (std::uint64_t z : {2u, 3u, 7u}) {
      // First groups, groups near the end of the stream, and random ones.
      const std::uint64_t last_group = kBig.n() - 1;
      const std::uint64_t picks[] = {0, 1, last_group, rng.below(kBig.n())};
      for (std::uint64_t r : picks) {
        ++groups;
        std::vector<bool> seen(z, false);
        const auto first = large_symbol_at(p, r * z, z, kBig);
        if (first.symbol_id.value != oracle::affine(p.a, r, p.b, kBig.n())) bad.add("symbol ID");
        for (std::uint64_t t = 0; t < z; ++t) {
          const auto ref = large_symbol_at(p, r * z + t, z, kBig);
          if (ref.symbol_id != first.symbol_id || ref.block_index >= z || seen[ref.block_index])
            bad.add(fmt("A=%u B=%u C=%u D=%u Z=%llu r=%llu", p.a, p.b, p.c, p.d, (unsigned long long)z,
                        (unsigned long long)r));
          else
            seen[ref.block_index] = true;
          // Block index is a cyclic shift (i + C + rD) mod Z.
          if (ref.block_index != (r * z + t + p.c + r * p.d) % z) bad.add("shift");
        }
      }
    }
    for (std::uint64_t i : {std::uint64_t{0}, std::uint64_t{1}, rng.below(kBig.n()), std::uint64_t{kBig.n() - 1}}) {
      const auto ref = large_symbol_at(p, i, 1, kBig);
      if (ref.block_index != 0 || ref.symbol_id != symbol_id_at(p.symbol_part(), i, kBig)) bad.add("Z=1");
    }
  }
  return {bad.count == 0, fmt("1000 LargeSopis, %llu aligned groups, %llu violations %s", (unsigned long long)groups,
                              (unsigned long long)bad.count, bad.first.c_str())};
}

Outcome fast_reduction(double& limit) {
  limit = 5;
  Rng rng(9);
  Failures bad;
  const std::uint64_t top = (std::uint64_t{1} << 62) - 1;
  for (int k = 0; k < 1000000; ++k) {
    std::uint64_t x;
    switch (k % 4) {
      case 0: x = rng.below(top + 1); break;
      case 1: x = rng.below(kMersenne31) * rng.below(kMersenne31); break;  // products of residues
      case 2: x = kMersenne31 * rng.below(std::uint64_t{1} << 31) + rng.below(3); break;  // near multiples of N
      default: x = rng.below(std::uint64_t{1} << 33); break;
    }
    if (x > top) x = top;
    if (mersenne_reduce(x) != oracle::wide_mod(x, kMersenne31)) bad.add(fmt("x=%llu", (unsigned long long)x));
  }
  return {bad.count == 0, fmt("10^6 inputs, %llu mismatches %s", (unsigned long long)bad.count, bad.first.c_str())};
}

Outcome coloring(double& limit) {
  limit = 0;
  Rng rng(10);
  Failures bad;
  std::size_t worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto n = rng.between(1, 200);
    std::vector<std::string> nodes;
    for (std::uint64_t v = 0; v < n; ++v) nodes.push_back("n" + std::to_string(v));
    // Edge density varies from sparse to near-complete.
    const double p = rng.unit() * (k % 10 == 0 ? 1.0 : 0.1);
    std::vector<NodeGraph::Edge> edges;
    for (std::uint64_t u = 0; u < n; ++u)
      for (std::uint64_t v = u + 1; v < n; ++v)
        if (rng.unit() < p) edges.emplace_back(nodes[u], nodes[v]);
    const auto g = NodeGraph::make(nodes, edges);

    std::set<Sopi> palette_set;
    while (palette_set.size() < g.max_degree() + 1) palette_set.insert(random_sopi(rng, kBig));
    const std::vector<Sopi> palette(palette_set.begin(), palette_set.end());
    const auto a = greedy_color(g, palette);
    if (!validate_assignment(g, a).empty()) bad.add(fmt("graph %d: edge violations", k));
    if (a.colors_used > g.max_degree() + 1) bad.add(fmt("graph %d: %zu colors", k, a.colors_used));
    if (a.sopi_of.size() != n) bad.add(fmt("graph %d: unassigned nodes", k));
    worst = std::max(worst, a.colors_used);
  }
  return {bad.count == 0, fmt("1000 graphs, most colors %zu, %llu violations %s", worst, (unsigned long long)bad.count,
                              bad.first.c_str())};
}

struct Criterion {
  const char* name;
  std::function<Outcome(double&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {"unique SOPI through two points, N=11", proposition_unique_sopi},
      {"distance equals brute force, N=10007 M=50", distance_oracle},
      {"pair overlap lemma, N=10007 M=60, all splits", pair_lemma},
      {"designed set duplication < 1.5%, d=1000 M=30000 s=10", designed_duplication},
      {"random SOPI failure rate within 1/(delta^2 N) + 3 sigma", theorem_monte_carlo},
      {"capacity arithmetic and exhaustion", capacity},
      {"partition conservation and size figures", partition_properties},
      {"large SOPI cyclic block structure", large_sopi_structure},
      {"Mersenne reduction equals wide modulo", fast_reduction},
      {"greedy coloring validity", coloring},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    double limit = 0;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run(limit);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = limit == 0 || secs < limit;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %zu: %s (%.2f s%s) %s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                limit == 0 ? "" : fmt(", limit %.0f s", limit).c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
