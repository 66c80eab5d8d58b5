#include <gtest/gtest.h>

#include "support.hpp"

using namespace xmodcat;

namespace {

struct Q : ::testing::Test {
  const CrossedModule x1 = xm1();
  const CrossedModule x2 = xm2();
  const CrossedModule x3 = xm3();
  const CrossedModule x4 = xm4();
  std::vector<const CrossedModule*> all() const { return {&x1, &x2, &x3, &x4}; }
};

std::vector<Quintet> every_square(const CrossedModule& xm) {
  std::vector<Quintet> out;
  const Index n = xm.G().order();
  for (Index l = 0; l < n; ++l)
    for (Index t = 0; t < n; ++t)
      for (Index r = 0; r < n; ++r)
        for (Index b = 0; b < n; ++b)
          for (Index e = 0; e < xm.H().order(); ++e) {
            const Quintet q{&xm, l, t, r, b, e};
            if (boundary_holds(q)) out.push_back(q);
          }
  return out;
}

// Boundary law written out for S3 with independent permutation arithmetic.
bool s3_boundary(const Quintet& q) {
  using namespace oracle;
  return q.face == s3_mul(s3_mul(q.bottom, q.right), s3_mul(s3_inv(q.top), s3_inv(q.left)));
}

// Composites for XM2, where the action is conjugation, in permutation terms.
Quintet oracle_h(const Quintet& a, const Quintet& b) {
  using namespace oracle;
  const Index w = s3_mul(s3_mul(a.left, a.top), s3_inv(a.right));
  return {a.xm, a.left, s3_mul(a.top, b.top), b.right, s3_mul(a.bottom, b.bottom), s3_mul(a.face, s3_conj(w, b.face))};
}

Quintet oracle_v(const Quintet& u, const Quintet& l) {
  using namespace oracle;
  return {u.xm, s3_mul(l.left, u.left), u.top, s3_mul(l.right, u.right), l.bottom,
          s3_mul(l.face, s3_conj(l.left, u.face))};
}

}  // namespace

TEST_F(Q, MakeSquareExamples) {
  EXPECT_NO_THROW(make_square(x1, 1, 0, 1, 0, 1));
  for (const auto* xm : all()) {
    const Quintet id = make_square(*xm, 0, 0, 0, 0, xm->H().identity());
    EXPECT_TRUE(boundary_holds(id));
  }
  try {
    make_square(x4, 0, 0, 0, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundaryViolation);
    EXPECT_EQ(e.witness(), (std::vector<long long>{0, 1}));  // ∂(0) and the edge word
  }
  try {
    make_square(x1, 2, 0, 0, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedTable);
  }
}

TEST_F(Q, CompleteSquareSolvesForTheBottomEdge) {
  for (const auto* xm : all())
    for (const auto& q : every_square(*xm)) EXPECT_EQ(complete_square(*xm, q.left, q.top, q.right, q.face), q);
}

TEST_F(Q, ComposeHorizontalExample) {
  const Quintet a = make_square(x1, 1, 0, 1, 0, 1);
  const Quintet b = make_square(x1, 1, 0, 1, 0, 2);
  const Quintet ab = compose_h(a, b);
  EXPECT_EQ(ab, make_square(x1, 1, 0, 1, 0, 0));
  EXPECT_EQ(compose_h_face_alt(a, b), 0u);
  EXPECT_EQ(compose_h(a, horizontal_identity(x1, 1)), a);
  EXPECT_EQ(compose_h(horizontal_identity(x1, 1), a), a);
}

TEST_F(Q, ComposeVerticalExample) {
  const Quintet top = make_square(x1, 1, 0, 1, 0, 1);
  const Quintet bottom = make_square(x1, 1, 0, 1, 0, 2);
  EXPECT_EQ(compose_v(top, bottom), make_square(x1, 0, 0, 0, 0, 1));
  EXPECT_EQ(compose_v(top, vertical_identity(x1, 0)), top);
  EXPECT_EQ(compose_v(vertical_identity(x1, 0), top), top);
}

TEST_F(Q, NonabelianVerticalInstance) {
  using namespace oracle;
  const Quintet upper = complete_square(x2, k12, k23, k13, k123);
  const Quintet lower = complete_square(x2, k132, upper.bottom, k12, k13);
  ASSERT_TRUE(s3_boundary(upper));
  ASSERT_TRUE(s3_boundary(lower));
  const Quintet v = compose_v(upper, lower);
  EXPECT_EQ(v, oracle_v(upper, lower));
  EXPECT_TRUE(s3_boundary(v));
}

TEST_F(Q, AdjacencyIsChecked) {
  const Quintet a = make_square(x1, 1, 0, 1, 0, 1);
  const Quintet id0 = horizontal_identity(x1, 0);
  try {
    compose_h(a, id0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdjacent);
  }
  EXPECT_THROW(compose_v(a, make_square(x1, 0, 1, 0, 1, 0)), Error);
}

TEST_F(Q, InverseExamples) {
  for (const auto* xm : all()) {
    const Quintet id = horizontal_identity(*xm, xm->G().identity());
    EXPECT_EQ(invert(id, Axis::Horizontal), id);
    EXPECT_EQ(invert(id, Axis::Vertical), id);
  }
  EXPECT_EQ(invert(make_square(x1, 1, 0, 1, 0, 1), Axis::Horizontal), make_square(x1, 1, 0, 1, 0, 2));
  EXPECT_EQ(compose_h(make_square(x1, 1, 0, 1, 0, 1), make_square(x1, 1, 0, 1, 0, 2)).face, 0u);
}

TEST_F(Q, InversesComposeToIdentities) {
  for (const auto* xm : all()) {
    const auto& G = xm->G();
    for (const auto& q : every_square(*xm)) {
      const Quintet h = invert(q, Axis::Horizontal);
      const Quintet v = invert(q, Axis::Vertical);
      ASSERT_TRUE(boundary_holds(h));
      ASSERT_TRUE(boundary_holds(v));
      const Quintet qh = compose_h(q, h);
      EXPECT_EQ(qh.face, xm->H().identity());
      EXPECT_EQ(qh.top, G.identity());
      EXPECT_EQ(qh.bottom, G.identity());
      const Quintet qv = compose_v(q, v);
      EXPECT_EQ(qv.face, xm->H().identity());
      EXPECT_EQ(qv.left, G.identity());
      EXPECT_EQ(qv.right, G.identity());
      EXPECT_EQ(invert(h, Axis::Horizontal), q);
      EXPECT_EQ(invert(v, Axis::Vertical), q);
    }
  }
}

TEST_F(Q, BothHorizontalFaceFormulasAgree) {
  for (const auto* xm : all()) {
    const auto sq = every_square(*xm);
    for (const auto& a : sq)
      for (const auto& b : sq) {
        if (a.right != b.left) continue;
        // (g₁ ▷ η₂)·η₁ written with the raw tables
        const Index alt = xm->H().mul(xm->act(a.bottom, b.face), a.face);
        EXPECT_EQ(compose_h(a, b).face, alt);
        EXPECT_EQ(compose_h_face_alt(a, b), alt);
      }
  }
}

TEST_F(Q, CompositesSatisfyTheBoundaryLaw) {
  for (const auto* xm : all()) {
    const auto sq = every_square(*xm);
    for (const auto& a : sq)
      for (const auto& b : sq) {
        if (a.right == b.left) {
          EXPECT_TRUE(boundary_holds(compose_h(a, b)));
        }
        if (a.bottom == b.top) {
          EXPECT_TRUE(boundary_holds(compose_v(a, b)));
        }
      }
  }
}

TEST_F(Q, InterchangeOnEveryTwoByTwoGridOfXM1AndXM3) {
  for (const auto* xm : {&x1, &x3}) {
    const auto sq = every_square(*xm);
    std::uint64_t grids = 0;
    for (const auto& a : sq)
      for (const auto& b : sq) {
        if (a.right != b.left) continue;
        for (const auto& c : sq) {
          if (a.bottom != c.top) continue;
          for (const auto& d : sq) {
            if (c.right != d.left || b.bottom != d.top) continue;
            const QuintetGrid g{2, 2, {a, b, c, d}};
            ASSERT_EQ(evaluate_grid(g), evaluate_grid(g, FoldOrder::ColumnsFirst));
            ++grids;
          }
        }
      }
    // The library suite enumerates the same set.
    const Report r = verify_quintet_laws(*xm, {VerifyOptions::Mode::Exhaustive});
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.tally().at("quintet.interchange").checks, grids) << xm->name();
  }
}

TEST_F(Q, AssociativityOfRowsAndColumns) {
  const auto sq = every_square(x2);
  SampleRng rng(3, 0);
  for (int n = 0; n < 2000; ++n) {
    const Quintet a = sq[rng.below(sq.size())];
    const Quintet b = complete_square(x2, a.right, static_cast<Index>(rng.below(6)), static_cast<Index>(rng.below(6)),
                                      static_cast<Index>(rng.below(6)));
    const Quintet c = complete_square(x2, b.right, static_cast<Index>(rng.below(6)), static_cast<Index>(rng.below(6)),
                                      static_cast<Index>(rng.below(6)));
    EXPECT_EQ(compose_h(compose_h(a, b), c), compose_h(a, compose_h(b, c)));
    EXPECT_EQ(evaluate_grid({1, 3, {a, b, c}}), compose_h(compose_h(a, b), c));
    const Quintet d = sq[rng.below(sq.size())];
    std::vector<Quintet> below;
    for (const auto& s : sq)
      if (s.top == d.bottom) below.push_back(s);
    const Quintet e = below[rng.below(below.size())];
    std::vector<Quintet> below2;
    for (const auto& s : sq)
      if (s.top == e.bottom) below2.push_back(s);
    const Quintet f = below2[rng.below(below2.size())];
    EXPECT_EQ(compose_v(compose_v(d, e), f), compose_v(d, compose_v(e, f)));
  }
}

TEST_F(Q, IdentityVerticalEdgesEmbedTheCategoricalGroup) {
  for (const auto* xm : all()) {
    const Index e = xm->G().identity();
    auto square_of = [&](const Mor2G& m) { return make_square(*xm, e, m.g, e, m.target(), m.eta); };
    for (Index g1 = 0; g1 < xm->G().order(); ++g1)
      for (Index h1 = 0; h1 < xm->H().order(); ++h1)
        for (Index g2 = 0; g2 < xm->G().order(); ++g2)
          for (Index h2 = 0; h2 < xm->H().order(); ++h2) {
            const Mor2G m{xm, g1, h1}, n{xm, g2, h2};
            // side by side: the tensor product
            EXPECT_EQ(compose_h(square_of(m), square_of(n)), square_of(tensor(m, n)));
            // stacked, when the ends meet: composition
            if (n.source() == m.target()) {
              EXPECT_EQ(compose_v(square_of(m), square_of(n)), square_of(compose(n, m)));
            }
          }
  }
}

TEST_F(Q, GridEvaluationExamples) {
  const Quintet a = make_square(x1, 1, 0, 1, 0, 1);
  EXPECT_EQ(evaluate_grid({1, 1, {a}}), a);
  const Quintet b = make_square(x1, 1, 0, 1, 0, 2);
  const QuintetGrid g{2, 2, {a, b, b, a}};
  EXPECT_EQ(evaluate_grid(g), evaluate_grid(g, FoldOrder::ColumnsFirst));
  EXPECT_EQ(evaluate_grid(g), compose_v(compose_h(a, b), compose_h(b, a)));
  EXPECT_EQ(evaluate_grid(g, FoldOrder::ColumnsFirst), compose_h(compose_v(a, b), compose_v(b, a)));
}

TEST_F(Q, ThreeByTwoGridOverS3) {
  using namespace oracle;
  const Index v[3][3] = {{k12, k123, kE}, {k13, k23, k132}, {k123, k123, k12}};
  const Index f[3][2] = {{k23, k132}, {kE, k13}, {k123, k12}};
  Index top[2] = {k132, k23};
  QuintetGrid g{3, 2, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) {
      g.cells.push_back(complete_square(x2, v[i][j], top[j], v[i][j + 1], f[i][j]));
      ASSERT_TRUE(s3_boundary(g.cells.back()));
      top[j] = g.cells.back().bottom;
    }
  const Quintet rows = evaluate_grid(g);
  EXPECT_EQ(rows, evaluate_grid(g, FoldOrder::ColumnsFirst));
  Quintet expect{};
  for (int i = 0; i < 3; ++i) {
    const Quintet row = oracle_h(g.at(i, 0), g.at(i, 1));
    expect = i == 0 ? row : oracle_v(expect, row);
  }
  EXPECT_EQ(rows, expect);
  EXPECT_TRUE(s3_boundary(rows));
}

TEST_F(Q, BadGridsNameTheCell) {
  const Quintet a = make_square(x1, 1, 0, 1, 0, 1);
  const Quintet id = horizontal_identity(x1, 0);
  try {
    evaluate_grid({1, 2, {a, id}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AdjacencyViolation);
    EXPECT_EQ(e.witness(), (std::vector<long long>{0, 0}));
  }
  try {
    evaluate_grid({2, 1, {a, make_square(x1, 0, 1, 0, 1, 0)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AdjacencyViolation);
  }
  EXPECT_THROW(evaluate_grid({2, 2, {a}}), Error);
}

TEST_F(Q, LawSuitePassesOnEveryFixture) {
  for (const auto* xm : all()) {
    const Report r = verify_quintet_laws(*xm);
    EXPECT_TRUE(r.ok()) << xm->name();
  }
}

TEST_F(Q, LawSuiteIsDeterministicUnderSampling) {
  VerifyOptions opt{VerifyOptions::Mode::Sampled, 5000, 11};
  EXPECT_EQ(verify_quintet_laws(x2, opt), verify_quintet_laws(x2, opt));
}
