#include "splitword/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "splitword/labelling.hpp"
#include "splitword/oracles.hpp"
#include "splitword/orientation.hpp"
#include "splitword/poset.hpp"
#include "splitword/prn.hpp"
#include "splitword/split.hpp"
#include "splitword/word.hpp"

namespace splitword {

void SweepSummary::merge(const SweepSummary& other) {
  graphs += other.graphs;
  split += other.split;
  comparability += other.comparability;
  for (std::size_t i = 0; i < prn_histogram.size(); ++i) prn_histogram[i] += other.prn_histogram[i];
  failures += other.failures;
}

namespace {

// Deterministic across standard libraries, unlike the std distributions.
int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(std::mt19937_64& rng, int percent) { return pick(rng, 1, 100) <= percent; }

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = g.order() - 1; i > 0; --i) std::swap(perm[i], perm[pick(rng, 0, i)]);
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph random_split(std::mt19937_64& rng, int n_max) {
  const int n = pick(rng, 1, n_max);
  const int k = pick(rng, 1, n);
  Graph g(n);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  for (int a = k; a < n; ++a)
    for (int c = 0; c < k; ++c)
      if (coin(rng, 50)) g.add_edge(a, c);
  return shuffled(g, rng);
}

Graph random_graph(std::mt19937_64& rng, int n_max) {
  const int n = pick(rng, 1, n_max);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, 50)) g.add_edge(u, v);
  return g;
}

std::string describe(const std::string& check) { return "check failed: " + check; }

}  // namespace

Graph random_split_comparability(std::mt19937_64& rng, int n_max, int k_max) {
  const int n = pick(rng, 1, n_max);
  const int k = pick(rng, 1, std::min(k_max, std::max(1, n - 1)));
  IClassification cls;
  Graph g(n);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  // Clique vertex i - 1 carries label i; draw admissible neighborhoods and
  // keep only those compatible with the ones already placed.
  for (int a = k; a < n; ++a) {
    if (k == 1 || coin(rng, 5)) continue;
    std::optional<IRecord> accepted;
    for (int attempt = 0; attempt < 20 && !accepted; ++attempt) {
      IRecord rec{a, IClass::A2, 0, 0};
      const int kind = pick(rng, 0, k >= 3 ? 2 : 1);
      if (kind == 2) {
        const int m = pick(rng, 1, k - 2);
        rec = {a, IClass::A1, m, pick(rng, m + 2, k)};
      } else if (kind == 1) {
        rec = {a, IClass::A3, 0, pick(rng, 2, k)};
      } else {
        rec = {a, IClass::A2, pick(rng, 1, k - 1), k + 1};
      }
      cls.records.push_back(rec);
      if (verify_properties(cls, k).empty()) accepted = rec;
      cls.records.pop_back();
    }
    // A2 with r = 1 is compatible with every admissible record.
    IRecord rec = accepted.value_or(IRecord{a, IClass::A2, 1, k + 1});
    cls.records.push_back(rec);
    for (int i = 1; i <= rec.prefix_end; ++i) g.add_edge(a, i - 1);
    for (int j = rec.suffix_start; j <= k; ++j) g.add_edge(a, j - 1);
  }
  return shuffled(g, rng);
}

std::vector<Graph> sample_graphs(int n_max, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  if (n_max >= 7 && count > 0) out.push_back(forbidden_graph(Forbidden::B4));
  while (static_cast<int>(out.size()) < count) {
    const int roll = pick(rng, 1, 10);
    if (roll <= 5) out.push_back(random_split_comparability(rng, n_max, n_max));
    else if (roll <= 8) out.push_back(random_split(rng, n_max));
    else out.push_back(random_graph(rng, n_max));
  }
  return out;
}

std::optional<std::string> check_graph(const Graph& g, SweepSummary& tally) {
  const int n = g.order();
  ++tally.graphs;

  auto sg_opt = try_split_partition(g);
  if (n <= 12 && sg_opt.has_value() != oracle::is_split(g)) return describe("split recognition vs subset oracle");
  bool obstruction = false;
  for (const auto& [name, pattern] : split_obstructions())
    obstruction = obstruction || find_induced(g, pattern).has_value();
  if (sg_opt.has_value() == obstruction) return describe("split iff no induced 2K2/C4/C5");
  if (!sg_opt) return std::nullopt;
  ++tally.split;

  const SplitGraph& sg = *sg_opt;
  if (!sg.is_valid_partition() || !sg.is_maximal()) return describe("split partition invariants");
  {
    SplitGraph again = normalize_maximal(sg);
    if (again.clique != sg.clique || again.independent != sg.independent)
      return describe("normalize_maximal idempotent");
  }

  const auto d = find_transitive_orientation(g);
  if (d && !(verify_transitive(g, *d) && verify_semi_transitive(g, *d)))
    return describe("found orientation verifies");
  if (auto brute = oracle::is_comparability(g); brute && *brute != d.has_value())
    return describe("orientation search vs brute-force enumeration");
  const auto forbidden = find_forbidden(g, {kNonComparability.begin(), kNonComparability.end()});
  const auto labelled = find_labelling(sg);
  if (d.has_value() == forbidden.has_value() || d.has_value() != labelled.has_value())
    return describe("labelling <=> orientation <=> no B1/B2/B3");
  if (!d) return std::nullopt;
  ++tally.comparability;

  // Forward direction: the clique order of any transitive orientation is
  // an admissible labelling.
  {
    CliqueLabelling from_d(n, clique_order(sg, *d));
    IClassification cls;
    try {
      cls = classify(sg, from_d);
    } catch (const std::exception&) {
      return describe("orientation-derived labelling classifies");
    }
    if (!verify_properties(cls, from_d.k()).empty())
      return describe("orientation-derived labelling satisfies properties");
  }

  const auto& lab = labelled->labelling;
  const auto& cls = labelled->classification;
  const int k = lab.k();
  if (!verify_transitive(g, orientation_from_labelling(sg, lab, cls)))
    return describe("orientation from labelling is transitive");

  int max_m = 0, min_l = k + 1;
  for (const IRecord& a : cls.records) {
    if (a.kind == IClass::A1) max_m = std::max(max_m, a.m());
    if (a.kind == IClass::A3) min_l = std::min(min_l, a.l());
    for (const IRecord& b : cls.records)
      if (a.kind == IClass::A2 && b.kind == IClass::A3 && a.r() >= b.l())
        return describe("A2 and A3 neighborhoods are disjoint");
  }
  if (max_m >= min_l) return describe("max m over A1 < min l over A3");

  const WordBlocks blocks = build_word(sg, lab, cls);
  const Word z = blocks.concatenated();
  if (!is_permutation_of(blocks.q1, n) || !is_permutation_of(blocks.q2, n) ||
      !is_permutation_of(blocks.q3, n))
    return describe("word blocks are permutations");
  if (uniformity(z) != 3) return describe("word is 3-uniform");
  if (!represents(z, g)) return describe("word represents graph");
  {
    Word expected;
    for (int i = 0; i < 3; ++i) expected.insert(expected.end(), lab.order().begin(), lab.order().end());
    if (restrict(z, sg.clique) != expected) return describe("word restricted to clique is (1..k)^3");
  }

  const PrnResult r = prn(g);
  if (!verify_prn_certificate(g, r)) return describe("prn certificate");
  ++tally.prn_histogram[r.value];

  if (n <= 8) {
    const int dim = dimension(poset_from_orientation(*d), 3);
    if (dim != r.value) return describe("prn equals poset dimension");
  }
  if (n <= kMaxOracleVertices) {
    int least = 1;
    while (least <= kMaxOracleBlocks && !prn_oracle(g, least)) ++least;
    if (least != r.value) return describe("prn equals exhaustive permutation-word search");
  }
  return std::nullopt;
}

namespace {

template <typename GraphAt>
SweepSummary sweep_indexed(long total, const GraphAt& graph_at, int workers) {
  workers = std::max(1, workers);
  std::atomic<long> next{0};
  std::atomic<long> fail_index{std::numeric_limits<long>::max()};
  std::mutex mu;
  SweepSummary merged;
  std::string fail_reason;

  auto work = [&] {
    SweepSummary local;
    for (;;) {
      const long i = next.fetch_add(1);
      if (i >= total || i >= fail_index.load()) break;
      std::optional<std::string> failure;
      try {
        failure = check_graph(graph_at(i), local);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        std::lock_guard lock(mu);
        if (i < fail_index.load()) {
          fail_index = i;
          fail_reason = *failure;
        }
      }
    }
    std::lock_guard lock(mu);
    merged.merge(local);
  };

  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  if (fail_index.load() != std::numeric_limits<long>::max()) {
    // Counts depend on scheduling once a failure stops the sweep; only the
    // reproducer is reported.
    SweepSummary failed;
    failed.failures = 1;
    failed.failure_graph6 = encode_graph6(graph_at(fail_index.load()));
    failed.failure_reason = fail_reason;
    return failed;
  }
  return merged;
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& opts) {
  if (opts.mode == SweepMode::Exhaustive) {
    if (opts.n_max < 1 || opts.n_max > kMaxExhaustiveVertices)
      throw std::invalid_argument("exhaustive sweeps need 1 <= n-max <= 6");
    // Graphs with n vertices occupy a contiguous index block of size
    // 2^(n choose 2); within a block, bit e selects the e-th pair (u<v).
    std::vector<long> block_start{0};
    for (int n = 1; n <= opts.n_max; ++n) block_start.push_back(block_start.back() + (1L << (n * (n - 1) / 2)));
    auto graph_at = [&](long i) {
      int n = 1;
      while (i >= block_start[n]) ++n;
      long bits = i - block_start[n - 1];
      Graph g(n);
      int e = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e)
          if ((bits >> e) & 1) g.add_edge(u, v);
      return g;
    };
    return sweep_indexed(block_start.back(), graph_at, opts.workers);
  }
  if (opts.n_max < 1 || opts.n_max > kMaxSampleVertices)
    throw std::invalid_argument("sampled sweeps need 1 <= n-max <= 10");
  if (opts.count < 0) throw std::invalid_argument("sample count must be non-negative");
  const auto graphs = sample_graphs(opts.n_max, opts.seed, opts.count);
  return sweep_indexed(static_cast<long>(graphs.size()), [&](long i) { return graphs[i]; },
                       opts.workers);
}

nlohmann::json to_json(const SweepSummary& s) {
  nlohmann::json out = {{"schema", 1},
                        {"graphs", s.graphs},
                        {"split", s.split},
                        {"comparability", s.comparability},
                        {"prn_histogram",
                         {{"1", s.prn_histogram[1]}, {"2", s.prn_histogram[2]}, {"3", s.prn_histogram[3]}}},
                        {"failures", s.failures}};
  if (s.failures) {
    out["failure"] = {{"graph6", s.failure_graph6}, {"reason", s.failure_reason}};
  }
  return out;
}

std::string to_text(const SweepSummary& s) {
  std::ostringstream os;
  if (s.failures) {
    os << "FAILED on " << s.failure_graph6 << ": " << s.failure_reason << "\n";
    return os.str();
  }
  os << "graphs=" << s.graphs << " split=" << s.split << " comparability=" << s.comparability
     << " prn[1]=" << s.prn_histogram[1] << " prn[2]=" << s.prn_histogram[2]
     << " prn[3]=" << s.prn_histogram[3] << " failures=" << s.failures << "\n";
  return os.str();
}

int default_workers() {
  if (const char* env = std::getenv("SPLITWORD_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace splitword
