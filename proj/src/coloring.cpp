#include "arcdiag/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arcdiag {

namespace {

constexpr Color kUncolored = -1;

int palette_of(const std::vector<Color>& colors) {
  Color top = kUncolored;
  for (Color c : colors) top = std::max(top, c);
  return top + 1;
}

void check_L(int L) {
  if (L < 2 || L % 2 != 0) {
    throw Error(ErrorCode::OddL, "L must be an even integer >= 2, got " + std::to_string(L));
  }
}

// Position of each edge within the rotation at each of its endpoints.
struct RotationIndex {
  std::vector<std::size_t> posAtU;
  std::vector<std::size_t> posAtV;

  RotationIndex(const Graph& g, const RotationSystem& rot)
      : posAtU(g.edge_count()), posAtV(g.edge_count()) {
    if (rot.order().size() != g.vertex_count()) {
      throw Error(ErrorCode::MissingRotation, "rotation does not cover the graph");
    }
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const auto around = rot.around(v);
      if (around.size() != g.degree(v)) {
        throw Error(ErrorCode::MissingRotation, "rotation at '" + g.id(v) + "' is incomplete");
      }
      for (std::size_t i = 0; i < around.size(); ++i) {
        const EdgeIndex e = around[i];
        if (e >= g.edge_count() || !g.edge(e).touches(v)) {
          throw Error(ErrorCode::MissingRotation,
                      "rotation at '" + g.id(v) + "' lists a non-incident edge");
        }
        (g.edge(e).u == v ? posAtU : posAtV)[e] = i;
      }
    }
  }

  std::size_t position(const Graph& g, EdgeIndex e, VertexIndex v) const {
    return g.edge(e).u == v ? posAtU[e] : posAtV[e];
  }
};

// Calls fn(edge) for each edge in the L-window of the edge at `pos` around `around`.
template <typename Fn>
void for_each_in_window(std::span<const EdgeIndex> around, std::size_t pos, int L, Fn&& fn) {
  const std::size_t k = around.size();
  if (k <= 1) return;
  const auto half = static_cast<std::size_t>(L / 2);
  if (k - 1 <= static_cast<std::size_t>(L)) {
    for (std::size_t i = 0; i < k; ++i) {
      if (i != pos) fn(around[i]);
    }
    return;
  }
  for (std::size_t off = 1; off <= half; ++off) {
    fn(around[(pos + k - off) % k]);
    fn(around[(pos + off) % k]);
  }
}

// Smallest color not flagged in `used`, tracked with a generation stamp.
class ColorMarker {
 public:
  void next() { ++stamp_; }
  void mark(Color c) {
    if (c < 0) return;
    if (static_cast<std::size_t>(c) >= seen_.size()) seen_.resize(c + 1, 0);
    seen_[c] = stamp_;
  }
  Color smallest_free() const {
    Color c = 0;
    while (static_cast<std::size_t>(c) < seen_.size() && seen_[c] == stamp_) ++c;
    return c;
  }

 private:
  std::vector<unsigned> seen_;
  unsigned stamp_ = 1;
};

}  // namespace

VertexColoring greedy_vertex_coloring(const Graph& g) {
  VertexColoring out;
  out.color.assign(g.vertex_count(), kUncolored);
  ColorMarker marker;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    marker.next();
    for (EdgeIndex e : g.incident(v)) marker.mark(out.color[g.edge(e).other(v)]);
    out.color[v] = marker.smallest_free();
  }
  out.paletteSize = palette_of(out.color);
  return out;
}

namespace {

// Misra & Gries, "A constructive proof of Vizing's theorem" (1992).
class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g),
        colors_(static_cast<int>(g.max_degree()) + 1),
        color_(g.edge_count(), kUncolored),
        at_(g.vertex_count() * static_cast<std::size_t>(colors_), kNone) {}

  std::vector<Color> run() {
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) color_edge(e);
    return std::move(color_);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t& slot(VertexIndex v, Color c) { return at_[v * colors_ + c]; }
  bool is_free(VertexIndex v, Color c) { return slot(v, c) == kNone; }

  Color free_color(VertexIndex v) {
    for (Color c = 0; c < colors_; ++c) {
      if (is_free(v, c)) return c;
    }
    return kUncolored;  // unreachable: deg(v) <= d < d+1 colors
  }

  void set_color(EdgeIndex e, Color c) {
    const auto& ed = g_.edge(e);
    if (color_[e] != kUncolored) {
      slot(ed.u, color_[e]) = kNone;
      slot(ed.v, color_[e]) = kNone;
    }
    color_[e] = c;
    if (c != kUncolored) {
      slot(ed.u, c) = e;
      slot(ed.v, c) = e;
    }
  }

  EdgeIndex edge_between(VertexIndex x, VertexIndex y) const {
    for (EdgeIndex e : g_.incident(x)) {
      if (g_.edge(e).other(x) == y) return e;
    }
    return kNone;
  }

  std::vector<VertexIndex> maximal_fan(VertexIndex x, VertexIndex y) {
    std::vector<VertexIndex> fan{y};
    std::vector<char> inFan(g_.vertex_count(), 0);
    inFan[y] = 1;
    bool extended = true;
    while (extended) {
      extended = false;
      for (EdgeIndex e : g_.incident(x)) {
        const VertexIndex w = g_.edge(e).other(x);
        if (inFan[w] || color_[e] == kUncolored) continue;
        if (is_free(fan.back(), color_[e])) {
          fan.push_back(w);
          inFan[w] = 1;
          extended = true;
        }
      }
    }
    return fan;
  }

  // Swap c and d along the maximal path that leaves x on color d.
  void invert_path(VertexIndex x, Color c, Color d) {
    std::vector<EdgeIndex> path;
    VertexIndex at = x;
    Color want = d;
    while (!is_free(at, want)) {
      const EdgeIndex e = slot(at, want);
      path.push_back(e);
      at = g_.edge(e).other(at);
      want = want == d ? c : d;
    }
    std::vector<Color> flipped;
    flipped.reserve(path.size());
    for (EdgeIndex e : path) flipped.push_back(color_[e] == c ? d : c);
    for (EdgeIndex e : path) set_color(e, kUncolored);
    for (std::size_t i = 0; i < path.size(); ++i) set_color(path[i], flipped[i]);
  }

  void color_edge(EdgeIndex e) {
    const VertexIndex x = g_.edge(e).u;
    const VertexIndex y = g_.edge(e).v;
    auto fan = maximal_fan(x, y);
    const Color c = free_color(x);
    const Color d = free_color(fan.back());
    if (c != d) invert_path(x, c, d);
    // First w whose prefix fan[0..w] is still a fan with d free on fan[w].
    std::size_t w = 0;
    for (;; ++w) {
      if (w == fan.size()) throw std::logic_error("Misra-Gries: no fan vertex with free color");
      if (w > 0 && !is_free(fan[w - 1], color_[edge_between(x, fan[w])])) {
        throw std::logic_error("Misra-Gries: fan prefix broken by path inversion");
      }
      if (is_free(fan[w], d)) break;
    }
    // Rotate the fan prefix: each edge takes its successor's color.
    for (std::size_t i = 0; i < w; ++i) {
      const EdgeIndex cur = edge_between(x, fan[i]);
      const EdgeIndex nxt = edge_between(x, fan[i + 1]);
      const Color moved = color_[nxt];
      set_color(nxt, kUncolored);
      set_color(cur, moved);
    }
    set_color(edge_between(x, fan[w]), d);
  }

  const Graph& g_;
  int colors_;
  std::vector<Color> color_;
  std::vector<std::size_t> at_;
};

}  // namespace

EdgeColoring edge_coloring_vizing(const Graph& g) {
  EdgeColoring out;
  out.color = MisraGries(g).run();
  out.paletteSize = palette_of(out.color);
  return out;
}

std::vector<EdgeIndex> localized_window(const RotationSystem& rot, VertexIndex v, EdgeIndex e,
                                        int L) {
  check_L(L);
  const auto around = rot.around(v);
  const auto it = std::find(around.begin(), around.end(), e);
  if (it == around.end()) {
    throw Error(ErrorCode::MissingRotation, "edge is not in the rotation at this vertex");
  }
  std::vector<EdgeIndex> out;
  for_each_in_window(around, static_cast<std::size_t>(it - around.begin()), L,
                     [&](EdgeIndex f) { out.push_back(f); });
  return out;
}

EdgeColoring greedy_localized_coloring(const Graph& g, const RotationSystem& rot, int L,
                                       bool requireProper) {
  check_L(L);
  const RotationIndex index(g, rot);
  EdgeColoring out;
  out.color.assign(g.edge_count(), kUncolored);
  ColorMarker marker;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    marker.next();
    const auto mark = [&](EdgeIndex f) { marker.mark(out.color[f]); };
    const auto& ed = g.edge(e);
    if (requireProper) {
      for (EdgeIndex f : g.incident(ed.u)) mark(f);
      for (EdgeIndex f : g.incident(ed.v)) mark(f);
    } else {
      for_each_in_window(rot.around(ed.u), index.posAtU[e], L, mark);
      for_each_in_window(rot.around(ed.v), index.posAtV[e], L, mark);
    }
    out.color[e] = marker.smallest_free();
  }
  out.paletteSize = palette_of(out.color);
  return out;
}

EdgeColoring localized_edge_coloring(const Graph& g, const RotationSystem& rot, int L) {
  auto greedy = greedy_localized_coloring(g, rot, L);
  auto vizing = edge_coloring_vizing(g);
  return vizing.paletteSize < greedy.paletteSize ? vizing : greedy;
}

VerifyResult verify_vertex_coloring(const Graph& g, const VertexColoring& col) {
  VerifyResult r;
  if (col.color.size() != g.vertex_count()) {
    r.ok = false;
    return r;
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (col.color[ed.u] == col.color[ed.v]) {
      r.ok = false;
      r.violations.push_back({ed.u, e, e});
    }
  }
  for (Color c : col.color) {
    if (c < 0 || c >= col.paletteSize) r.ok = false;
  }
  return r;
}

VerifyResult verify_edge_coloring(const Graph& g, const EdgeColoring& col) {
  VerifyResult r;
  if (col.color.size() != g.edge_count()) {
    r.ok = false;
    return r;
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (col.color[inc[i]] == col.color[inc[j]]) {
          r.ok = false;
          r.violations.push_back({v, inc[i], inc[j]});
        }
      }
    }
  }
  for (Color c : col.color) {
    if (c < 0 || c >= col.paletteSize) r.ok = false;
  }
  return r;
}

VerifyResult verify_localized(const Graph& g, const RotationSystem& rot, int L,
                              const EdgeColoring& col) {
  check_L(L);
  const RotationIndex index(g, rot);
  VerifyResult r;
  if (col.color.size() != g.edge_count()) {
    r.ok = false;
    return r;
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (VertexIndex v : {g.edge(e).u, g.edge(e).v}) {
      for_each_in_window(rot.around(v), index.position(g, e, v), L, [&](EdgeIndex f) {
        if (f > e && col.color[f] == col.color[e]) {
          r.ok = false;
          r.violations.push_back({v, e, f});
        }
      });
    }
  }
  for (Color c : col.color) {
    if (c < 0 || c >= col.paletteSize) r.ok = false;
  }
  return r;
}

}  // namespace arcdiag
