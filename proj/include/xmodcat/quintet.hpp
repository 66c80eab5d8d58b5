#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "catgroup.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "xmod.hpp"

namespace xmodcat {

/// A square of the double groupoid of quintets:
///
///          top (g3)
///        +---------+
///  left  |   face  |  right
///  (g4)  |   (η)   |  (g2)
///        +---------+
///         bottom (g1)
///
/// subject to ∂(η) = g1·g2·g3⁻¹·g4⁻¹.
struct Quintet {
  const CrossedModule* xm = nullptr;
  Index left = 0;
  Index top = 0;
  Index right = 0;
  Index bottom = 0;
  Index face = 0;

  bool operator==(const Quintet& o) const {
    return left == o.left && top == o.top && right == o.right && bottom == o.bottom && face == o.face;
  }
};

/// g1·g2·g3⁻¹·g4⁻¹ for the given edges.
inline Index boundary_word(const CrossedModule& xm, Index left, Index top, Index right, Index bottom) {
  const auto& G = xm.G();
  return G.mul(G.mul(bottom, right), G.mul(G.inv(top), G.inv(left)));
}

inline bool boundary_holds(const Quintet& q) {
  return q.xm->d(q.face) == boundary_word(*q.xm, q.left, q.top, q.right, q.bottom);
}

/// Validating constructor. Throws MalformedTable for out-of-range labels and
/// BoundaryViolation (with both sides of the boundary equation) otherwise.
inline Quintet make_square(const CrossedModule& xm, Index left, Index top, Index right, Index bottom, Index face) {
  const Index ng = xm.G().order();
  if (left >= ng || top >= ng || right >= ng || bottom >= ng || face >= xm.H().order())
    throw Error(ErrorKind::MalformedTable, "square label out of range", {left, top, right, bottom, face});
  Quintet q{&xm, left, top, right, bottom, face};
  if (!boundary_holds(q)) {
    const Index lhs = xm.d(face);
    const Index rhs = boundary_word(xm, left, top, right, bottom);
    throw Error(ErrorKind::BoundaryViolation,
                "d(face) = " + xm.G().name(lhs) + " but bottom*right*top^-1*left^-1 = " + xm.G().name(rhs),
                {lhs, rhs});
  }
  return q;
}

/// The unique square with the given left/top/right edges and face.
inline Quintet complete_square(const CrossedModule& xm, Index left, Index top, Index right, Index face) {
  const auto& G = xm.G();
  // ∂η = b r t⁻¹ l⁻¹  ⇒  b = ∂η l t r⁻¹
  return {&xm, left, top, right, G.mul(G.mul(xm.d(face), left), G.mul(top, G.inv(right))), face};
}

/// Identity for horizontal composition along the vertical edge g.
inline Quintet horizontal_identity(const CrossedModule& xm, Index g) {
  return {&xm, g, xm.G().identity(), g, xm.G().identity(), xm.H().identity()};
}

/// Identity for vertical composition along the horizontal edge g.
inline Quintet vertical_identity(const CrossedModule& xm, Index g) {
  return {&xm, xm.G().identity(), g, xm.G().identity(), g, xm.H().identity()};
}

/// a placed left of b. Face η₁·((g4 g3 g2⁻¹) ▷ η₂).
inline Quintet compose_h(const Quintet& a, const Quintet& b) {
  if (a.right != b.left)
    throw Error(ErrorKind::NotAdjacent, "right edge of the left square differs from left edge of the right square",
                {a.right, b.left});
  const auto& xm = *a.xm;
  const auto& G = xm.G();
  const Index whisker = G.mul(G.mul(a.left, a.top), G.inv(a.right));
  return {a.xm, a.left, G.mul(a.top, b.top), b.right, G.mul(a.bottom, b.bottom),
          xm.H().mul(a.face, xm.act(whisker, b.face))};
}

/// The second expression for the horizontal face, (g1 ▷ η₂)·η₁.
inline Index compose_h_face_alt(const Quintet& a, const Quintet& b) {
  const auto& xm = *a.xm;
  return xm.H().mul(xm.act(a.bottom, b.face), a.face);
}

/// upper stacked on lower. Face η₂·(g5 ▷ η₁) with g5 the lower left edge.
inline Quintet compose_v(const Quintet& upper, const Quintet& lower) {
  if (upper.bottom != lower.top)
    throw Error(ErrorKind::NotAdjacent, "bottom edge of the upper square differs from top edge of the lower square",
                {upper.bottom, lower.top});
  const auto& xm = *upper.xm;
  const auto& G = xm.G();
  return {upper.xm, G.mul(lower.left, upper.left), upper.top, G.mul(lower.right, upper.right), lower.bottom,
          xm.H().mul(lower.face, xm.act(lower.left, upper.face))};
}

enum class Axis { Horizontal, Vertical };

inline Quintet invert(const Quintet& q, Axis axis) {
  const auto& xm = *q.xm;
  const auto& G = xm.G();
  const auto& H = xm.H();
  if (axis == Axis::Horizontal)
    return {q.xm, q.right, G.inv(q.top), q.left, G.inv(q.bottom), xm.act(G.inv(q.bottom), H.inv(q.face))};
  return {q.xm, G.inv(q.left), q.bottom, G.inv(q.right), q.top, xm.act(G.inv(q.left), H.inv(q.face))};
}

// ---------------------------------------------------------------------------
// Rectangular arrays

struct QuintetGrid {
  Index rows = 0;
  Index cols = 0;
  std::vector<Quintet> cells;  // row-major

  const Quintet& at(Index i, Index j) const { return cells[static_cast<std::size_t>(i) * cols + j]; }
  Quintet& at(Index i, Index j) { return cells[static_cast<std::size_t>(i) * cols + j]; }

  bool operator==(const QuintetGrid&) const = default;
};

/// Throws BoundaryViolation for a bad cell and AdjacencyViolation naming the
/// first cell (i, j) whose right or bottom neighbour does not match.
inline void check_grid(const QuintetGrid& g) {
  if (g.rows == 0 || g.cols == 0 || g.cells.size() != static_cast<std::size_t>(g.rows) * g.cols)
    throw Error(ErrorKind::MalformedTable, "grid shape does not match its cell count");
  for (Index i = 0; i < g.rows; ++i)
    for (Index j = 0; j < g.cols; ++j) {
      if (!boundary_holds(g.at(i, j)))
        throw Error(ErrorKind::BoundaryViolation, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                                      ") violates the boundary law", {i, j});
      if (j + 1 < g.cols && g.at(i, j).right != g.at(i, j + 1).left)
        throw Error(ErrorKind::AdjacencyViolation,
                    "cell (" + std::to_string(i) + "," + std::to_string(j) + ") right edge does not match cell (" +
                        std::to_string(i) + "," + std::to_string(j + 1) + ")",
                    {i, j});
      if (i + 1 < g.rows && g.at(i, j).bottom != g.at(i + 1, j).top)
        throw Error(ErrorKind::AdjacencyViolation,
                    "cell (" + std::to_string(i) + "," + std::to_string(j) + ") bottom edge does not match cell (" +
                        std::to_string(i + 1) + "," + std::to_string(j) + ")",
                    {i, j});
    }
}

enum class FoldOrder { RowsFirst, ColumnsFirst };

/// Canonical evaluation folds each row left to right, then stacks the row
/// results top to bottom. ColumnsFirst is the transposed order.
inline Quintet evaluate_grid(const QuintetGrid& g, FoldOrder order = FoldOrder::RowsFirst) {
  check_grid(g);
  if (order == FoldOrder::RowsFirst) {
    Quintet acc{};
    for (Index i = 0; i < g.rows; ++i) {
      Quintet row = g.at(i, 0);
      for (Index j = 1; j < g.cols; ++j) row = compose_h(row, g.at(i, j));
      acc = i == 0 ? row : compose_v(acc, row);
    }
    return acc;
  }
  Quintet acc{};
  for (Index j = 0; j < g.cols; ++j) {
    Quintet col = g.at(0, j);
    for (Index i = 1; i < g.rows; ++i) col = compose_v(col, g.at(i, j));
    acc = j == 0 ? col : compose_h(acc, col);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Law suite for D(G)

namespace detail {

struct SquareSpace {
  const CrossedModule& xm;
  std::uint64_t ng;
  std::uint64_t nh;

  explicit SquareSpace(const CrossedModule& x) : xm(x), ng(x.G().order()), nh(x.H().order()) {}

  std::uint64_t squares() const { return ng * ng * ng * nh; }
  /// Squares with a fixed left (or top) edge: two free edges and a face.
  std::uint64_t with_one_edge() const { return ng * ng * nh; }
  /// Squares with fixed left and top edges.
  std::uint64_t with_two_edges() const { return ng * nh; }

  Quintet square(std::uint64_t k) const {
    const Index face = static_cast<Index>(k % nh);
    k /= nh;
    const Index right = static_cast<Index>(k % ng);
    k /= ng;
    const Index top = static_cast<Index>(k % ng);
    return complete_square(xm, static_cast<Index>(k / ng), top, right, face);
  }
  Quintet with_left(Index left, std::uint64_t k) const {
    const Index face = static_cast<Index>(k % nh);
    k /= nh;
    return complete_square(xm, left, static_cast<Index>(k / ng), static_cast<Index>(k % ng), face);
  }
  /// Square with a given top edge: free left, right and face.
  Quintet with_top(Index top, std::uint64_t k) const {
    const Index face = static_cast<Index>(k % nh);
    k /= nh;
    return complete_square(xm, static_cast<Index>(k / ng), top, static_cast<Index>(k % ng), face);
  }
  Quintet with_left_top(Index left, Index top, std::uint64_t k) const {
    return complete_square(xm, left, top, static_cast<Index>(k / nh), static_cast<Index>(k % nh));
  }
};

inline std::vector<long long> labels(const Quintet& q) { return {q.left, q.top, q.right, q.bottom, q.face}; }

}  // namespace detail

/// Checks the D(G) laws for one crossed module: interchange on 2×2 arrays,
/// agreement of the two horizontal face formulas, inverses in both axes,
/// associativity of 1×3 and 3×1 arrays, closure of the boundary law, and the
/// embedding of 2-morphisms (identity vertical edges) into squares.
inline Report verify_quintet_laws(const CrossedModule& xm, const VerifyOptions& opt = {}) {
  const detail::SquareSpace sp(xm);
  const auto& H = xm.H();
  Report out(opt.cap);

  // Per-square laws: inverses, double inverse.
  out.merge(parallel_check(sp.squares(), opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
    for (std::uint64_t k = b; k < e; ++k) {
      const Quintet q = sp.square(k);
      const Quintet hi = invert(q, Axis::Horizontal);
      const Quintet vi = invert(q, Axis::Vertical);
      const Quintet ch = compose_h(q, hi);
      const Quintet cv = compose_v(q, vi);
      const Index e = xm.G().identity();
      r.expect(boundary_holds(hi) && boundary_holds(vi), "quintet.inverse_boundary", detail::labels(q));
      r.expect(ch.face == H.identity() && ch.top == e && ch.bottom == e && ch.left == q.left && ch.right == q.left,
               "quintet.inverse_h", detail::labels(q));
      r.expect(cv.face == H.identity() && cv.left == e && cv.right == e && cv.top == q.top && cv.bottom == q.top,
               "quintet.inverse_v", detail::labels(q));
      r.expect(invert(hi, Axis::Horizontal) == q && invert(vi, Axis::Vertical) == q, "quintet.double_inverse",
               detail::labels(q));
    }
  }));

  // Adjacent pairs: face formulas, boundary closure.
  const std::uint64_t pairs = sp.squares() * sp.with_one_edge();
  const bool pairs_all = opt.exhaustive_for(pairs);
  out.merge(parallel_check(pairs_all ? pairs : opt.samples, opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
    for (std::uint64_t k = b; k < e; ++k) {
      Quintet a, c, u, l;
      if (pairs_all) {
        a = sp.square(k / sp.with_one_edge());
        c = sp.with_left(a.right, k % sp.with_one_edge());
        u = a;
        l = sp.with_top(a.bottom, k % sp.with_one_edge());
      } else {
        SampleRng rng(opt.seed, k);
        a = sp.square(rng.below(sp.squares()));
        c = sp.with_left(a.right, rng.below(sp.with_one_edge()));
        u = a;
        l = sp.with_top(a.bottom, rng.below(sp.with_one_edge()));
      }
      const Quintet h = compose_h(a, c);
      const Quintet v = compose_v(u, l);
      r.expect(h.face == compose_h_face_alt(a, c), "quintet.h_face_formulas", {a.left, a.top, a.right, a.bottom,
                                                                               a.face, c.top, c.right, c.face});
      r.expect(boundary_holds(h), "quintet.boundary_closure_h", detail::labels(h));
      r.expect(boundary_holds(v), "quintet.boundary_closure_v", detail::labels(v));
    }
  }));

  // 2×2 interchange.
  const std::uint64_t blocks = sp.squares() * sp.with_one_edge() * sp.with_one_edge() * sp.with_two_edges();
  const bool blocks_all = opt.exhaustive_for(blocks);
  out.merge(parallel_check(blocks_all ? blocks : opt.samples, opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
    for (std::uint64_t k = b; k < e; ++k) {
      std::uint64_t ia, ib, ic, id;
      if (blocks_all) {
        std::uint64_t t = k;
        id = t % sp.with_two_edges();
        t /= sp.with_two_edges();
        ic = t % sp.with_one_edge();
        t /= sp.with_one_edge();
        ib = t % sp.with_one_edge();
        ia = t / sp.with_one_edge();
      } else {
        SampleRng rng(opt.seed ^ 0x2a2a, k);
        ia = rng.below(sp.squares());
        ib = rng.below(sp.with_one_edge());
        ic = rng.below(sp.with_one_edge());
        id = rng.below(sp.with_two_edges());
      }
      const Quintet A = sp.square(ia);
      const Quintet B = sp.with_left(A.right, ib);
      const Quintet C = sp.with_top(A.bottom, ic);
      const Quintet D = sp.with_left_top(C.right, B.bottom, id);
      QuintetGrid grid{2, 2, {A, B, C, D}};
      const Quintet rows = evaluate_grid(grid, FoldOrder::RowsFirst);
      const Quintet cols = evaluate_grid(grid, FoldOrder::ColumnsFirst);
      auto w = detail::labels(A);
      for (const auto* q : {&B, &C, &D}) {
        auto l = detail::labels(*q);
        w.insert(w.end(), l.begin(), l.end());
      }
      r.expect(rows == cols, "quintet.interchange", std::move(w));
    }
  }));

  // 1×3 and 3×1 associativity.
  const std::uint64_t triples = sp.squares() * sp.with_one_edge() * sp.with_one_edge();
  const bool triples_all = opt.exhaustive_for(triples);
  out.merge(parallel_check(triples_all ? triples : opt.samples, opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
    for (std::uint64_t k = b; k < e; ++k) {
      std::uint64_t i0, i1, i2;
      if (triples_all) {
        i2 = k % sp.with_one_edge();
        i1 = (k / sp.with_one_edge()) % sp.with_one_edge();
        i0 = k / sp.with_one_edge() / sp.with_one_edge();
      } else {
        SampleRng rng(opt.seed ^ 0x3b3b, k);
        i0 = rng.below(sp.squares());
        i1 = rng.below(sp.with_one_edge());
        i2 = rng.below(sp.with_one_edge());
      }
      const Quintet a = sp.square(i0);
      const Quintet b2 = sp.with_left(a.right, i1);
      const Quintet c = sp.with_left(b2.right, i2);
      r.expect(compose_h(compose_h(a, b2), c) == compose_h(a, compose_h(b2, c)), "quintet.assoc_h",
               {static_cast<long long>(i0), static_cast<long long>(i1), static_cast<long long>(i2)});
      const Quintet d = sp.with_top(a.bottom, i1);
      const Quintet f = sp.with_top(d.bottom, i2);
      r.expect(compose_v(compose_v(a, d), f) == compose_v(a, compose_v(d, f)), "quintet.assoc_v",
               {static_cast<long long>(i0), static_cast<long long>(i1), static_cast<long long>(i2)});
    }
  }));

  // Squares with identity vertical edges are 2-morphisms (top, face):
  // compose_h matches the tensor product, compose_v matches composition.
  {
    const Index e = xm.G().identity();
    for (Index g1 = 0; g1 < xm.G().order(); ++g1)
      for (Index h1 = 0; h1 < H.order(); ++h1)
        for (Index g2 = 0; g2 < xm.G().order(); ++g2)
          for (Index h2 = 0; h2 < H.order(); ++h2) {
            const Quintet a = complete_square(xm, e, g1, e, h1);
            const Quintet b = complete_square(xm, e, g2, e, h2);
            const Quintet h = compose_h(a, b);
            const Mor2G t = tensor(Mor2G{&xm, g1, h1}, Mor2G{&xm, g2, h2});
            out.expect(h.left == e && h.right == e && h.top == t.g && h.face == t.eta, "quintet.embedding_tensor",
                       {g1, h1, g2, h2});
            // b stacked under a requires b.top = a.bottom.
            const Quintet below = complete_square(xm, e, a.bottom, e, h2);
            const Quintet v = compose_v(a, below);
            const Mor2G c = compose(Mor2G{&xm, a.bottom, h2}, Mor2G{&xm, g1, h1});
            out.expect(v.left == e && v.right == e && v.top == c.g && v.face == c.eta, "quintet.embedding_compose",
                       {g1, h1, h2});
          }
  }
  return out;
}

}  // namespace xmodcat
