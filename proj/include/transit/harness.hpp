#pragma once

#include "transit/gds.hpp"
#include "transit/morphism.hpp"
#include "transit/report.hpp"
#include "transit/system.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace transit {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Instance generators

// Every NDDS with |X| <= max_points (cyclic metric), a family of up to
// max_maps distinct maps, a prefix of length <= max_prefix and a period of
// length 1..max_period. Sequences are listed only when they use every family
// member, so each system appears once per family order.
std::vector<Ndds> exhaustive_corpus(std::size_t max_points = 3, std::size_t max_maps = 2, std::size_t max_prefix = 1,
                                    std::size_t max_period = 2);

struct RandomOptions {
  std::size_t min_points = 1;
  std::size_t max_points = 6;
  std::size_t max_maps = 3;
  std::size_t max_prefix = 2;
  std::size_t max_period = 3;
  // Probability that a generated map is a permutation.
  double permutation_bias = 0.4;
  // Force every map to be a permutation.
  bool surjective = false;
};

// Random metric: discrete, cyclic, or distinct integer positions on a line.
FiniteSpace random_space(Rng& rng, std::size_t n);
FiniteMap random_map(Rng& rng, std::size_t n, bool permutation);
Ndds random_ndds(Rng& rng, const RandomOptions& opt = {});
PointSet random_subset(Rng& rng, std::size_t n);

// A system lifted along a random surjection π: X -> Y so that π∘f_i = g_i∘π
// for every family member, hence a strong semiconjugacy. `mode` only sets the
// mode field that verification and preservation use.
MorphismSpec random_quotient(Rng& rng, MorphismMode mode, const RandomOptions& opt = {});

// Family of powers of one random map, so the members commute.
Ndds random_commuting(Rng& rng, bool surjective, const RandomOptions& opt = {});
Rearrangement random_rearrangement(Rng& rng, Rearrangement::Kind kind);

GdsFamily random_gds_family(Rng& rng, std::size_t max_points = 5, std::size_t max_maps = 3);

// One-line description, e.g. "n=3 maps=[1,2,0|0,0,1] prefix=[0] period=[1]".
std::string describe(const Ndds& sys);
std::string describe(const GdsFamily& f);

// ---------------------------------------------------------------------------
// Suites per instance

// Equivalence suites for every property, the open-map, lattice, corollary and
// orbit-law suites, invariance laws over subsets, and the GDS association,
// theorem and word-family suites.
Report instance_suites(const Ndds& sys);

// ---------------------------------------------------------------------------
// Aggregation

// Collapses many reports into one record per (suite, property, variant):
// verdict False if any instance failed, witness holds the counts and the
// first failing instance.
class Tally {
 public:
  void add(const Report& r, const std::string& instance);
  void add_error(const std::string& suite, const std::string& what, const std::string& instance);
  void merge(const Tally& other);
  Report report(const std::string& command) const;
  std::size_t failures() const;
  std::size_t instances() const noexcept { return instances_; }

 private:
  struct Entry {
    std::size_t pass = 0, fail = 0, unknown = 0;
    std::string first_failure;
  };
  std::vector<std::string> order_;
  std::map<std::string, Entry> entries_;
  std::size_t instances_ = 0;
  void bump(const std::string& key, const Record& r, const std::string& instance);
};

// Runs `job(i, tally)` for i in [0, count) over up to `threads` workers in
// contiguous chunks and merges the tallies in chunk order, so the result does
// not depend on the thread count.
Tally run_parallel(std::size_t count, unsigned threads, const std::function<void(std::size_t, Tally&)>& job);

struct HarnessOptions {
  std::uint64_t seed = 7;
  std::size_t samples = 1000;
  std::size_t max_points = 6;
  unsigned threads = 0;  // 0: hardware concurrency
  bool exhaustive = true;
};

// Exhaustive corpus plus `samples` random systems, then samples/2 quotient
// morphisms of each mode, samples/5 products, samples/2 rearrangements of each
// kind and samples GDS families.
Report cross_validate(const HarnessOptions& opt);

}  // namespace transit
