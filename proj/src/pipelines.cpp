#include <algorithm>
#include <cctype>
#include <functional>

#include "wvc/decomp.hpp"
#include "wvc/pipelines.hpp"

namespace wvc {

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::p5dart: return "p5dart";
    case ClassLabel::p5banner: return "p5banner";
    case ClassLabel::p5bull: return "p5bull";
    case ClassLabel::forkbull: return "forkbull";
    case ClassLabel::automatic: return "auto";
  }
  return "auto";
}

std::optional<ClassLabel> parse_class_label(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (auto label : {ClassLabel::p5dart, ClassLabel::p5banner, ClassLabel::p5bull,
                     ClassLabel::forkbull, ClassLabel::automatic}) {
    if (key == to_string(label)) return label;
  }
  return std::nullopt;
}

std::vector<Pattern> forbidden_patterns(ClassLabel label) {
  switch (label) {
    case ClassLabel::p5dart: return {Pattern::path(5), Pattern::dart()};
    case ClassLabel::p5banner: return {Pattern::path(5), Pattern::banner()};
    case ClassLabel::p5bull: return {Pattern::path(5), Pattern::bull()};
    case ClassLabel::forkbull: return {Pattern::fork(), Pattern::bull()};
    case ClassLabel::automatic: break;
  }
  throw InputError("auto is not a concrete class");
}

std::vector<ClassLabel> concrete_classes() {
  return {ClassLabel::p5dart, ClassLabel::p5banner, ClassLabel::p5bull, ClassLabel::forkbull};
}

void PipelineTrace::add(std::string stage, std::string detail, std::string justification) {
  entries.push_back({std::move(stage), std::move(detail), std::move(justification)});
}

std::vector<Membership> recognize(const WeightedGraph& g) {
  std::vector<Membership> out;
  for (ClassLabel label : concrete_classes()) {
    const auto patterns = forbidden_patterns(label);
    const auto verdict = is_free(g, patterns);
    out.push_back({label, verdict.free, verdict.pattern, verdict.witness});
  }
  return out;
}

namespace {

std::string describe(const WeightedGraph& g) {
  return "n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) +
         " sum_w=" + std::to_string(g.total_weight());
}

void require_membership(ClassLabel label, const WeightedGraph& g) {
  const auto patterns = forbidden_patterns(label);
  const auto verdict = is_free(g, patterns);
  if (!verdict.free) {
    throw PreconditionError("graph is not in class " + to_string(label) + ": contains " +
                                verdict.pattern + " on " + to_string(verdict.witness),
                            verdict.pattern, verdict.witness);
  }
}

class Pipeline {
 public:
  Pipeline(ClassLabel label, const PipelineOptions& options) : label_(label), options_(options) {}

  PipelineResult run(const WeightedGraph& g) {
    require_membership(label_, g);
    PipelineResult result;
    result.label = label_;
    result.coloring = label_ == ClassLabel::forkbull ? forkbull_solve(g) : by_modules(g);
    result.trace = std::move(trace_);
    return result;
  }

 private:
  WeightedColoring by_modules(const WeightedGraph& g) {
    if (g.empty()) return {};
    const auto tree = modular_decompose(g);
    trace_.add("modules", "root " + to_string(tree.root_node().kind) + ", " +
                              std::to_string(tree.nodes.size()) + " nodes, " + describe(g));
    return wvc_by_modules(g, [this](const WeightedGraph& q) { return prime_block(q); });
  }

  WeightedColoring prime_block(const WeightedGraph& q) {
    switch (label_) {
      case ClassLabel::p5dart: return p5dart_block(q);
      case ClassLabel::p5banner: return p5banner_block(q);
      case ClassLabel::p5bull: return p5bull_block(q);
      default: return forkbull_prime(q);
    }
  }

  WeightedColoring triadfree(const WeightedGraph& q, std::string justification) {
    trace_.add("engine", "triad-free matching, " + describe(q), std::move(justification));
    return triadfree_wvc(q);
  }

  WeightedColoring perfect(const WeightedGraph& q, std::string justification) {
    trace_.add("engine", "perfect branch and bound, " + describe(q), std::move(justification));
    WeightedColoring c = perfect_wvc(q, options_.search);
    const Weight omega = max_weight_clique(q).weight;
    if (c.class_count() != omega) {
      ++trace_.perfection_misses;
      trace_.add("perfection-miss", "colours " + std::to_string(c.class_count()) +
                                        " > weighted clique " + std::to_string(omega));
    }
    return c;
  }

  WeightedColoring p5dart_block(const WeightedGraph& q) {
    if (!has_triad(q)) {
      return triadfree(q, "prime (P5,dart)-free block without a triad");
    }
    if (q.size() <= 18) {
      trace_.add("engine", "oracle, " + describe(q),
                 "prime (P5,dart)-free block with a triad and at most 18 vertices");
      return oracle_wvc(q, options_.search);
    }
    if (auto c5 = find_c5(q)) {
      throw StructureViolation(
          "prime (P5,dart)-free block with a C5 has more than 18 vertices and a triad", q,
          c5->vertices);
    }
    return perfect(q, "prime (P5,C5,dart)-free block with a triad is perfect");
  }

  WeightedColoring p5banner_block(const WeightedGraph& q) {
    if (!has_triad(q)) return triadfree(q, "prime (P5,banner)-free block without a triad");
    return perfect(q, "complement is prime (house,hammer)-free with a triangle, hence perfect");
  }

  WeightedColoring p5bull_block(const WeightedGraph& q) {
    if (!has_triad(q)) return triadfree(q, "prime (P5,bull)-free block without a triad");
    return perfect(q, "complement is prime (house,bull)-free with a triangle, hence (P5,C5)-free; "
                      "(P5,C5,house)-free graphs are perfect");
  }

  WeightedColoring forkbull_solve(const WeightedGraph& g) { return by_modules(g); }

  WeightedColoring forkbull_prime(const WeightedGraph& q) {
    if (auto cut = find_clique_cutset(q)) {
      trace_.add("cutset", "clique " + to_string(cut->clique) + " splits into " +
                               std::to_string(cut->parts.size()) + " parts, " + describe(q));
      return wvc_by_cblocks(q, [this](const WeightedGraph& b) { return forkbull_solve(b); });
    }
    return forkbull_terminal(q);
  }

  // q is prime and has no clique cutset.
  WeightedColoring forkbull_terminal(const WeightedGraph& q) {
    if (auto hole = find_hole_at_least(q, 6)) {
      if (hole->length() == q.size()) {
        trace_.add("engine", "weighted hole of length " + std::to_string(hole->length()),
                   "prime (fork,bull)-free block with a hole of length >= 6 is that hole or "
                   "bipartite");
        return weighted_hole_wvc(q, *hole);
      }
      if (bipartition(q).sides) {
        trace_.add("engine", "bipartite closed form, " + describe(q),
                   "prime (fork,bull)-free block with a hole of length >= 6 is that hole or "
                   "bipartite");
        return bipartite_wvc(q);
      }
      throw StructureViolation(
          "prime (fork,bull)-free block with a hole of length >= 6 is neither the hole nor "
          "bipartite",
          q, hole->vertices);
    }
    if (auto path = find_p5(q)) {
      const P5Context ctx = build_p5_context(q, *path);
      if (auto failure = verify_p5_context(q, ctx)) throw StructureViolation(*failure, q, *path);
      VertexSet cls{(*path)[0], (*path)[2], (*path)[4]};
      std::sort(cls.begin(), cls.end());
      ++trace_.decrement_steps;
      trace_.add("p5-step", "class " + to_string(cls) + " from P5 " + to_string(*path) + ", " +
                                describe(q),
                 "prime (fork,bull)-free block without clique cutset or long hole has an "
                 "optimal colouring with {v1,v3,v5} as a class");
      std::vector<Weight> w(q.weights().begin(), q.weights().end());
      for (Vertex v : cls) --w[v];
      VertexSet keep;
      for (Vertex v = 0; v < q.size(); ++v) {
        if (w[v] > 0) keep.push_back(v);
      }
      const auto rest = q.induced(keep);
      std::vector<Weight> reduced;
      for (Vertex v : keep) reduced.push_back(w[v]);
      WeightedColoring out;
      out.classes.push_back(cls);
      const auto inner = forkbull_solve(rest.graph.with_weights(reduced));
      for (auto& c : lift_coloring(inner, rest.to_parent).classes) {
        out.classes.push_back(std::move(c));
      }
      return out;
    }
    return p5bull_block(q);
  }

  ClassLabel label_;
  const PipelineOptions& options_;
  PipelineTrace trace_;
};

}  // namespace

PipelineResult p5dart_wvc(const WeightedGraph& g, const PipelineOptions& options) {
  return Pipeline(ClassLabel::p5dart, options).run(g);
}

PipelineResult p5banner_wvc(const WeightedGraph& g, const PipelineOptions& options) {
  return Pipeline(ClassLabel::p5banner, options).run(g);
}

PipelineResult p5bull_wvc(const WeightedGraph& g, const PipelineOptions& options) {
  return Pipeline(ClassLabel::p5bull, options).run(g);
}

PipelineResult forkbull_wvc(const WeightedGraph& g, const PipelineOptions& options) {
  return Pipeline(ClassLabel::forkbull, options).run(g);
}

PipelineResult run_pipeline(ClassLabel label, const WeightedGraph& g,
                            const PipelineOptions& options) {
  if (label == ClassLabel::automatic) return auto_wvc(g, options);
  return Pipeline(label, options).run(g);
}

PipelineResult auto_wvc(const WeightedGraph& g, const PipelineOptions& options) {
  std::string reasons;
  const auto memberships = recognize(g);
  for (const auto& m : memberships) {
    if (m.member) return Pipeline(m.label, options).run(g);
    reasons += (reasons.empty() ? "" : "; ") + to_string(m.label) + ": " + m.pattern + " on " +
               to_string(m.witness);
  }
  throw PreconditionError("no supported class (" + reasons + ")", memberships.front().pattern,
                          memberships.front().witness);
}

}  // namespace wvc
