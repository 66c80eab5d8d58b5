#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace xmodcat;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Format;
}

}  // namespace

TEST(GroupFromTable, CyclicFourIsAGroup) {
  const auto g = group_from_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, 0);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inv(1), 3u);
  EXPECT_EQ(g.inv(2), 2u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(GroupFromTable, IdempotentNonIdentityIsRejected) {
  try {
    group_from_table({{0, 1}, {1, 1}}, 0);
    FAIL() << "accepted a table without inverses";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingInverse);
    EXPECT_EQ(e.witness(), std::vector<long long>{1});
  }
}

TEST(GroupFromTable, SymmetricGroupMatchesPermutationComposition) {
  const auto s3 = symmetric_group(3);
  ASSERT_EQ(s3.order(), 6u);
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) EXPECT_EQ(s3.mul(a, b), oracle::s3_mul(a, b)) << a << "," << b;
  const std::vector<std::string> names{"e", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"};
  EXPECT_EQ(s3.names(), names);
  EXPECT_FALSE(s3.is_abelian());
}

TEST(GroupFromTable, LoopOfOrderFiveIsNotAssociative) {
  // A Latin square with identity 0 in which every element is its own
  // inverse; no group of order 5 has that property.
  const std::vector<std::vector<Index>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    group_from_table(t, 0);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.kind(), ErrorKind::NonAssociative);
    ASSERT_EQ(e.witness().size(), 3u);
    const auto a = e.witness()[0], b = e.witness()[1], c = e.witness()[2];
    EXPECT_NE(t[t[a][b]][c], t[a][t[b][c]]);
  }
}

TEST(GroupFromTable, ShapeAndIdentityErrors) {
  EXPECT_EQ(kind_of([] { group_from_table({}, 0); }), ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { group_from_table({{0, 1}, {1}}, 0); }), ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { group_from_table({{0, 2}, {1, 0}}, 0); }), ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { group_from_table({{0, 1}, {1, 0}}, 1); }), ErrorKind::NoIdentity);
  EXPECT_EQ(kind_of([] { group_from_table({{0, 1}, {1, 0}}, 0, {"a", "a"}); }), ErrorKind::MalformedTable);
}

TEST(GroupFromTable, NamesResolve) {
  const auto s3 = symmetric_group(3);
  EXPECT_EQ(s3.find("(1 2 3)"), oracle::k123);
  EXPECT_EQ(s3.find("(9 9)"), kNone);
  EXPECT_EQ(cyclic_group(3).find("2"), 2u);
  EXPECT_EQ(cyclic_group(3).name(2), "2");
}

TEST(GroupLaws, EverySmallGroupIsAssociativeWithUniqueInverses) {
  for (const auto& [name, g] : small_groups()) {
    const Index n = g.order();
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))) << name;
      int inverses = 0;
      for (Index b = 0; b < n; ++b) inverses += g.mul(a, b) == g.identity() && g.mul(b, a) == g.identity();
      EXPECT_EQ(inverses, 1) << name << " element " << a;
      EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
    }
  }
}

TEST(GroupLaws, DirectProductOrdersAndIdentity) {
  const auto k4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(k4.order(), 4u);
  for (Index a = 0; a < 4; ++a) EXPECT_EQ(k4.mul(a, a), k4.identity());
  EXPECT_EQ(k4.name(3), "(1,1)");
}

TEST(Homomorphism, ConstantIdentityMapIsValid) {
  const auto z4 = cyclic_group(4);
  const auto s3 = symmetric_group(3);
  EXPECT_TRUE(validate_homomorphism({&z4, &s3, {0, 0, 0, 0}}).ok());
}

TEST(Homomorphism, IdentityMapIsValid) {
  const auto z4 = cyclic_group(4);
  EXPECT_TRUE(validate_homomorphism({&z4, &z4, {0, 1, 2, 3}}).ok());
}

TEST(Homomorphism, AffineShiftFailsAtZeroZero) {
  const auto z4 = cyclic_group(4);
  const Report r = validate_homomorphism({&z4, &z4, {1, 2, 3, 0}});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations().front().law, "hom.multiplicative");
  EXPECT_EQ(r.violations().front().witness, (std::vector<long long>{0, 0}));
}

TEST(Homomorphism, ReportListsEveryFailingPair) {
  const auto z4 = cyclic_group(4);
  const std::vector<Index> map{1, 2, 3, 0};
  const Report r = validate_homomorphism({&z4, &z4, map}, 1000);
  std::size_t expected = 0;
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) expected += map[(a + b) % 4] != (map[a] + map[b]) % 4;
  EXPECT_EQ(r.total(), expected);
}

TEST(Homomorphism, WrongLengthIsAShapeViolation) {
  const auto z4 = cyclic_group(4);
  EXPECT_TRUE(validate_homomorphism({&z4, &z4, {0, 1}}).mentions("hom.shape"));
}

TEST(AutomorphismAction, TrivialActionIsValid) {
  const auto s3 = symmetric_group(3);
  const auto z4 = cyclic_group(4);
  EXPECT_TRUE(validate_automorphism_action(trivial_action(s3, z4)).ok());
}

TEST(AutomorphismAction, InversionOfZ2OnZ3IsValid) {
  const auto z2 = cyclic_group(2);
  const auto z3 = cyclic_group(3);
  const Report r = validate_automorphism_action({&z2, &z3, {0, 1, 2, 0, 2, 1}});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.tally().at("action.automorphism").checks, 2u * 3 * 3);
  EXPECT_EQ(r.tally().at("action.composition").checks, 2u * 2 * 3);
}

TEST(AutomorphismAction, ShiftOnZ4IsNotAnAutomorphism) {
  const auto z2 = cyclic_group(2);
  const auto z4 = cyclic_group(4);
  const Report r = validate_automorphism_action({&z2, &z4, {0, 1, 2, 3, 1, 2, 3, 0}});
  ASSERT_TRUE(r.mentions("action.automorphism"));
  const Violation* v = r.first("action.automorphism");
  EXPECT_EQ(v->witness, (std::vector<long long>{1, 0, 0}));  // g = 1, h = 0
}

TEST(ConjugationAction, AbelianGroupActsTrivially) {
  const auto z4 = cyclic_group(4);
  const auto c = conjugation_action(z4);
  EXPECT_EQ(c.table, trivial_action(z4, z4).table);
}

TEST(ConjugationAction, S3Example) {
  const auto s3 = symmetric_group(3);
  const auto c = conjugation_action(s3);
  EXPECT_EQ(c(oracle::k12, oracle::k123), oracle::k132);
  for (Index g = 0; g < 6; ++g)
    for (Index h = 0; h < 6; ++h) EXPECT_EQ(c(g, h), oracle::s3_conj(g, h));
  EXPECT_TRUE(validate_automorphism_action(c).ok());
}

TEST(ConjugationAction, IdentityActsAsIdentity) {
  for (const auto& [name, g] : small_groups()) {
    const auto c = conjugation_action(g);
    for (Index h = 0; h < g.order(); ++h) EXPECT_EQ(c(g.identity(), h), h) << name;
  }
}

TEST(ConjugationAction, TrivialExactlyForAbelianGroups) {
  for (const auto& [name, g] : small_groups())
    EXPECT_EQ(conjugation_action(g).table == trivial_action(g, g).table, g.is_abelian()) << name;
  for (const auto& xm : fixture_catalog())
    EXPECT_EQ(conjugation_action(xm.G()).table == trivial_action(xm.G(), xm.G()).table, xm.G().is_abelian());
}

TEST(Validators, AreDeterministic) {
  const auto z2 = cyclic_group(2);
  const auto z4 = cyclic_group(4);
  const GroupAction bad{&z2, &z4, {0, 1, 2, 3, 1, 2, 3, 0}};
  EXPECT_EQ(validate_automorphism_action(bad), validate_automorphism_action(bad));
  EXPECT_EQ(validate_homomorphism({&z4, &z4, {1, 2, 3, 0}}), validate_homomorphism({&z4, &z4, {1, 2, 3, 0}}));
}

TEST(Report, CapBoundsStoredViolationsButNotTheCount) {
  Report r(2);
  for (int i = 0; i < 5; ++i) r.add("law", {i});
  EXPECT_EQ(r.total(), 5u);
  EXPECT_EQ(r.violations().size(), 2u);
  EXPECT_EQ(r.tally().at("law").failures, 5u);
}
