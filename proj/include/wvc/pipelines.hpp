#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wvc/engines.hpp"
#include "wvc/errors.hpp"
#include "wvc/graph.hpp"
#include "wvc/patterns.hpp"

namespace wvc {

enum class ClassLabel { p5dart, p5banner, p5bull, forkbull, automatic };

std::string to_string(ClassLabel label);
// "auto", "p5dart", "p5banner", "p5bull", "forkbull".
std::optional<ClassLabel> parse_class_label(std::string_view name);
// The two forbidden patterns of a concrete class.
std::vector<Pattern> forbidden_patterns(ClassLabel label);
// The four concrete classes in dispatch order.
std::vector<ClassLabel> concrete_classes();

// A state the structure theory rules out for an in-class input. Carries
// the offending block so that it can be serialized and replayed.
class StructureViolation : public Error {
 public:
  StructureViolation(std::string claim, WeightedGraph block, std::vector<Vertex> witness = {})
      : Error("structure violation: " + claim),
        claim_(std::move(claim)),
        block_(std::move(block)),
        witness_(std::move(witness)) {}

  const std::string& claim() const noexcept { return claim_; }
  const WeightedGraph& block() const noexcept { return block_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::string claim_;
  WeightedGraph block_;
  std::vector<Vertex> witness_;
};

struct TraceEntry {
  std::string stage;          // "modules", "cutset", "prime-block", "engine", ...
  std::string detail;         // sizes, vertices, engine name
  std::string justification;  // the structural fact the branch relies on

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct PipelineTrace {
  std::vector<TraceEntry> entries;
  // Blocks routed to the perfect engine whose colouring needed more
  // colours than the weighted clique number.
  int perfection_misses = 0;
  int decrement_steps = 0;

  void add(std::string stage, std::string detail, std::string justification = {});

  friend bool operator==(const PipelineTrace&, const PipelineTrace&) = default;
};

struct PipelineOptions {
  SearchOptions search;
};

struct PipelineResult {
  ClassLabel label = ClassLabel::automatic;
  WeightedColoring coloring;
  PipelineTrace trace;
};

// Each pipeline checks membership first and throws PreconditionError with
// the forbidden pattern found; StructureViolation and BudgetExceeded
// propagate from the block solvers.
PipelineResult p5dart_wvc(const WeightedGraph& g, const PipelineOptions& options = {});
PipelineResult p5banner_wvc(const WeightedGraph& g, const PipelineOptions& options = {});
PipelineResult p5bull_wvc(const WeightedGraph& g, const PipelineOptions& options = {});
PipelineResult forkbull_wvc(const WeightedGraph& g, const PipelineOptions& options = {});
// First class (in dispatch order) containing g.
PipelineResult auto_wvc(const WeightedGraph& g, const PipelineOptions& options = {});
PipelineResult run_pipeline(ClassLabel label, const WeightedGraph& g,
                            const PipelineOptions& options = {});

struct Membership {
  ClassLabel label = ClassLabel::automatic;
  bool member = false;
  std::string pattern;  // forbidden pattern found when not a member
  Embedding witness;
};

std::vector<Membership> recognize(const WeightedGraph& g);

// Partition of V(G) \ B around an induced P5 v1-v2-v3-v4-v5 of a
// (fork, bull)-free graph with no hole of length at least 6. Classes S_J
// are indexed by the bitmask of J (bit i-1 for v_i).
struct P5Context {
  Embedding path;
  std::array<VertexSet, 32> by_mask;
  std::array<VertexSet, 5> v;  // V_1 .. V_5
  VertexSet a_prime;
  VertexSet f;
  VertexSet s1;
  VertexSet s5;

  const VertexSet& s(unsigned mask) const { return by_mask.at(mask); }
};

// Bitmask of the class labels "12", "135", ... .
unsigned p5_class_mask(std::string_view digits);
// The neighbourhood types an outside vertex may have.
bool p5_class_allowed(unsigned mask);

// Throws StructureViolation naming the vertex and its neighbourhood on the
// path when some vertex falls outside the allowed classes.
P5Context build_p5_context(const WeightedGraph& g, const Embedding& path);
// V_1, V_3, V_5 homogeneous and V_2 anticomplete to V_4; otherwise a
// description of the failure.
std::optional<std::string> verify_p5_context(const WeightedGraph& g, const P5Context& ctx);

}  // namespace wvc
