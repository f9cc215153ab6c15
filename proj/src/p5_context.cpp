#include <algorithm>

#include "wvc/decomp.hpp"
#include "wvc/pipelines.hpp"

namespace wvc {

unsigned p5_class_mask(std::string_view digits) {
  unsigned mask = 0;
  for (char d : digits) {
    if (d < '1' || d > '5') throw InputError("bad P5 class label '" + std::string(digits) + "'");
    mask |= 1U << (d - '1');
  }
  return mask;
}

bool p5_class_allowed(unsigned mask) {
  static const unsigned allowed[] = {
      p5_class_mask(""),    p5_class_mask("12345"), p5_class_mask("1"),
      p5_class_mask("5"),   p5_class_mask("12"),    p5_class_mask("45"),
      p5_class_mask("24"),  p5_class_mask("123"),   p5_class_mask("234"),
      p5_class_mask("345"), p5_class_mask("135"),   p5_class_mask("1345"),
      p5_class_mask("1235")};
  return std::find(std::begin(allowed), std::end(allowed), mask) != std::end(allowed);
}

namespace {

std::string mask_digits(unsigned mask) {
  std::string out;
  for (int i = 0; i < 5; ++i) {
    if (mask & (1U << i)) out += static_cast<char>('1' + i);
  }
  return out.empty() ? "{}" : out;
}

VertexSet unite(std::initializer_list<const VertexSet*> parts) {
  VertexSet out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

P5Context build_p5_context(const WeightedGraph& g, const Embedding& path) {
  bool induced_path = path.size() == 5;
  for (int i = 0; induced_path && i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) induced_path = false;
    }
  }
  if (!induced_path) throw InputError("build_p5_context needs an induced P5 in path order");
  P5Context ctx;
  ctx.path = path;
  std::vector<bool> on_path(g.size(), false);
  for (Vertex v : path) on_path[v] = true;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (on_path[x]) continue;
    unsigned mask = 0;
    for (int i = 0; i < 5; ++i) {
      if (g.adjacent(x, path[i])) mask |= 1U << i;
    }
    if (!p5_class_allowed(mask)) {
      std::vector<Vertex> witness{x};
      for (int i = 0; i < 5; ++i) {
        if (mask & (1U << i)) witness.push_back(path[i]);
      }
      throw StructureViolation("vertex " + std::to_string(x) + " has neighbourhood v" +
                                   mask_digits(mask) + " on the P5 " + to_string(path),
                               g, witness);
    }
    ctx.by_mask[mask].push_back(x);
  }
  const auto& s = ctx.by_mask;
  const VertexSet single[5] = {{path[0]}, {path[1]}, {path[2]}, {path[3]}, {path[4]}};
  ctx.v[0] = unite({&single[0], &s[p5_class_mask("12")]});
  ctx.v[1] = unite({&single[1], &s[p5_class_mask("123")]});
  ctx.v[2] = unite({&single[2], &s[p5_class_mask("24")], &s[p5_class_mask("234")]});
  ctx.v[3] = unite({&single[3], &s[p5_class_mask("345")]});
  ctx.v[4] = unite({&single[4], &s[p5_class_mask("45")]});
  ctx.a_prime = unite({&s[p5_class_mask("12345")], &s[p5_class_mask("135")],
                       &s[p5_class_mask("1235")], &s[p5_class_mask("1345")]});
  ctx.f = s[0];
  ctx.s1 = s[p5_class_mask("1")];
  ctx.s5 = s[p5_class_mask("5")];
  return ctx;
}

std::optional<std::string> verify_p5_context(const WeightedGraph& g, const P5Context& ctx) {
  for (int i : {0, 2, 4}) {
    if (!is_homogeneous(g, ctx.v[i])) {
      return "V" + std::to_string(i + 1) + " = " + to_string(ctx.v[i]) + " is not homogeneous";
    }
  }
  for (Vertex a : ctx.v[1]) {
    for (Vertex b : ctx.v[3]) {
      if (g.adjacent(a, b)) {
        return "V2 is not anticomplete to V4: edge " + std::to_string(a) + "-" + std::to_string(b);
      }
    }
  }
  return std::nullopt;
}

}  // namespace wvc
