#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wvc/graph.hpp"
#include "wvc/patterns.hpp"
#include "wvc/pipelines.hpp"

namespace wvc {

// Deterministic on every platform: raw mt19937_64 output with explicit
// conversions instead of the implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next();
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
// Seed of trial `index` of a campaign seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

enum class GenMode { erdos_renyi, grow };
enum class SeedStructure { none, hole, p5 };

struct GenSpec {
  int n = 10;
  int min_n = 0;  // when positive, n is drawn uniformly from [min_n, n] per attempt
  double p = 0.5;
  std::uint64_t seed = 1;
  std::vector<Pattern> filter;
  bool require_prime = false;
  Weight max_weight = 1;
  int max_attempts = 1000;
  GenMode mode = GenMode::erdos_renyi;
  // Grow mode only: planted induced subgraph the growth starts from.
  SeedStructure seed_structure = SeedStructure::none;
  int hole_min = 6;
  int hole_max = 6;
  int grow_retries = 30;  // adjacency redraws per added vertex
};

// A graph satisfying the filter (and primality when requested), or
// nothing when every attempt failed. Identical specs give identical
// graphs.
std::optional<WeightedGraph> generate(const GenSpec& spec);

struct C5Partition {
  HoleWitness cycle;
  // Index i stands for v_{i+1}; all indices modulo 5.
  std::array<VertexSet, 5> w;  // N_C = {v_{i-1}, v_{i+1}}
  std::array<VertexSet, 5> x;  // N_C = {v_{i-1}, v_i, v_{i+1}}
  std::array<VertexSet, 5> y;  // N_C = {v_i, v_{i+1}, v_{i-2}}
  std::array<VertexSet, 5> z;  // N_C = C \ {v_i}
  VertexSet t;                 // N_C = C
  VertexSet r;                 // N_C empty
  VertexSet overflow;          // anything else
};

C5Partition c5_partition(const WeightedGraph& g, const HoleWitness& c);

enum class Verdict { pass, vacuous, fail };
std::string to_string(Verdict v);

struct StructureReport {
  std::string check;
  Verdict verdict = Verdict::vacuous;
  std::string detail;
  std::vector<Vertex> witness;  // vertices of the violating configuration
};

struct CheckOptions {
  ClassLabel label = ClassLabel::automatic;  // for the differential check
  int max_hole_length = 9;                   // bounded odd hole/antihole search
  std::uint64_t hole_budget = 2'000'000;
  int oracle_max_vertices = 14;  // chi = omega spot check
  SearchOptions search;
};

// Known check ids, in a fixed order.
const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);

// Re-verifies the hypothesis (vacuous when it fails), then the conclusion.
StructureReport check_structure(std::string_view check, const WeightedGraph& g,
                                const CheckOptions& options = {});

// Generator settings under which `check` is frequently non-vacuous.
GenSpec tuned_spec(std::string_view check);

struct CheckTally {
  std::string check;
  int pass = 0;
  int vacuous = 0;
  int fail = 0;
  std::vector<std::string> failure_files;
  std::vector<std::string> failure_details;
  // How often each pass or vacuous outcome occurred, by detail text.
  std::map<std::string, int> pass_outcomes;
  std::map<std::string, int> vacuous_outcomes;

  int trials() const { return pass + vacuous + fail; }
  double vacuity_rate() const { return trials() ? static_cast<double>(vacuous) / trials() : 0.0; }
  // A campaign that never produced a non-vacuous instance.
  bool flagged() const { return trials() > 0 && pass + fail == 0; }
};

struct CampaignOptions {
  std::optional<std::filesystem::path> out_dir;
  CheckOptions check;
};

struct CampaignResult {
  std::vector<CheckTally> tallies;
  int trials = 0;
  int generation_failures = 0;

  int failures() const;
  nlohmann::json to_json() const;
};

// Trial k generates from `spec` with seed trial_seed(spec.seed, k) and runs
// every check on it. Failing instances are written to out_dir as graph
// JSON named <check>-<trial>.json.
CampaignResult campaign(const GenSpec& spec, std::span<const std::string> checks, int trials,
                        const CampaignOptions& options = {});

}  // namespace wvc
