#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include <dmspec/dmspec.hpp>

#include "catalog_groups.hpp"
#include "oracles.hpp"

using namespace dmspec;

namespace {

Subgroup class_rep_of_order(SubgroupLattice const &lat, std::size_t order)
{
  for (auto const &c : lat.classes())
    if (c.order == order)
      return c.representative;
  throw std::runtime_error("no class of that order");
}

oracle::Bits bits_of(Subgroup const &h)
{
  oracle::Bits b(h.group().order(), false);
  for (auto x : h.members())
    b[x] = true;
  return b;
}

} // namespace

TEST(Permutation, ComposesRightToLeft)
{
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  auto ab = a * b;
  for (Permutation::Point x = 0; x < 3; ++x)
    EXPECT_EQ(ab[x], a[b[x]]);
  EXPECT_EQ(ab.to_cycle_string(), "(0 1 2)");
  EXPECT_TRUE((ab * ab.inverse()).is_identity());
}

TEST(Permutation, RejectsNonBijections)
{
  EXPECT_THROW(Permutation(std::vector<Permutation::Point>{0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation(std::vector<Permutation::Point>{0, 3}), InvalidArgument);
}

TEST(Catalog, Orders)
{
  std::vector<std::pair<std::string, std::size_t>> const cases{
    {"C1", 1},   {"C3", 3},      {"C12", 12},     {"D4", 4},    {"D8", 8},
    {"D24", 24}, {"Dih(4)", 8},  {"Dih(2)", 4},   {"Q8", 8},    {"S3", 6},
    {"S4", 24},  {"A4", 12},     {"A5", 60},      {"C2xC3", 6}, {"C2xC2xC2", 8},
    {"perm:(0 1 2),(0 1)", 6},   {"perm:(0 1 2 3 4),(1 2 4 3)", 20}};
  for (auto const &[desc, order] : cases)
    EXPECT_EQ(build_group(desc)->order(), order) << desc;
  EXPECT_EQ(build_group("C2xC4")->name(), "C2xC4");
}

TEST(Catalog, TrivialGroupSkipsIdentityGenerators)
{
  auto g = build_group("C1");
  EXPECT_EQ(g->order(), 1u);
  EXPECT_TRUE(g->prime_divisors().empty());
}

TEST(Catalog, ParseErrors)
{
  for (auto desc : {"", "X3", "C0", "D7", "D2", "Cx", "perm:(0 0)", "perm:(0 1", "C2xx", "Dih(0)"})
    EXPECT_THROW(build_group(desc), ParseError) << desc;
}

TEST(Catalog, CapExceeded)
{
  EXPECT_THROW(build_group("S7"), CapExceeded);
  EXPECT_THROW(build_group("C100", 50), CapExceeded);
  try {
    build_group("perm:(0 1 2 3 4 5 6),(0 1)", 100);
    FAIL() << "expected CapExceeded";
  } catch (CapExceeded const &e) {
    EXPECT_EQ(e.cap(), 100u);
    EXPECT_GT(e.partial_order(), 100u);
  }
}

TEST(PermGroup, TablesMatchPermutationArithmetic)
{
  for (auto desc : {"S4", "Q8", "C3xS3", "D10"}) {
    auto g = build_group(desc);
    EXPECT_TRUE(g->element(g->identity()).is_identity());
    for (PermGroup::Index a = 0; a < g->order(); ++a) {
      EXPECT_EQ(g->element(g->inv(a)), g->element(a).inverse());
      for (PermGroup::Index b = 0; b < g->order(); ++b)
        ASSERT_EQ(g->element(g->mul(a, b)), g->element(a) * g->element(b)) << desc;
    }
  }
}

TEST(PermGroup, Invariants)
{
  EXPECT_TRUE(build_group("C2xC4")->is_abelian());
  EXPECT_FALSE(build_group("Q8")->is_abelian());
  EXPECT_EQ(build_group("C2xC4")->exponent(), 4u);
  EXPECT_EQ(build_group("S4")->exponent(), 12u);
  EXPECT_EQ(build_group("D12")->prime_divisors(), (std::vector<unsigned>{2, 3}));
}

TEST(Subgroups, KnownCounts)
{
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> const cases{
    {"C1", 1, 1}, {"C6", 4, 4}, {"S3", 6, 4},  {"D8", 10, 8},        {"Q8", 6, 6},
    {"A4", 10, 5}, {"S4", 30, 11}, {"C2xC2xC2", 16, 16}, {"A5", 59, 9}};
  for (auto const &[desc, subs, classes] : cases) {
    auto lat = SubgroupLattice::build(build_group(desc));
    EXPECT_EQ(lat->subgroups().size(), subs) << desc;
    EXPECT_EQ(lat->class_count(), classes) << desc;
  }
}

TEST(Subgroups, MatchBruteForceOracle)
{
  for (auto const &e : testing_catalog::groups()) {
    auto g = build_group(e.descriptor);
    auto lat = SubgroupLattice::build(g);
    auto expected = oracle::brute_force_subgroups(*g);
    std::set<oracle::Bits> got;
    for (auto const &h : lat->subgroups())
      got.insert(bits_of(h));
    EXPECT_EQ(got, expected) << e.name;
    EXPECT_EQ(lat->class_count(), oracle::brute_force_class_count(*g)) << e.name;
  }
}

TEST(Subgroups, ClassesPartitionSubgroups)
{
  auto lat = SubgroupLattice::build(build_group("S4"));
  std::size_t total = 0;
  for (auto const &c : lat->classes()) {
    total += c.class_size;
    EXPECT_EQ(c.members.size(), c.class_size);
    for (auto s : c.members)
      EXPECT_EQ(lat->class_of_subgroup(s), c.index);
  }
  EXPECT_EQ(total, lat->subgroups().size());
}

TEST(Subgroups, Labels)
{
  auto labels = [](std::string const &desc) {
    std::vector<std::string> out;
    for (auto const &c : SubgroupLattice::build(build_group(desc))->classes())
      out.push_back(c.label);
    return out;
  };
  EXPECT_EQ(labels("D8"),
            (std::vector<std::string>{"1", "C2_1", "C2_2", "C2_3", "V4_1", "V4_2", "C4", "D8"}));
  EXPECT_EQ(labels("S3"), (std::vector<std::string>{"1", "C2", "C3", "S3"}));
  EXPECT_EQ(labels("Q8"), (std::vector<std::string>{"1", "C2", "C4_1", "C4_2", "C4_3", "Q8"}));
  auto s4 = labels("S4");
  for (auto want : {"S4", "A4", "D8", "S3", "C4", "C3"})
    EXPECT_NE(std::find(s4.begin(), s4.end(), want), s4.end()) << want;
}

TEST(Subgroups, CentralC2OfD8IsTheNormalOne)
{
  auto lat = SubgroupLattice::build(build_group("D8"));
  auto c = *lat->class_by_label("C2_3");
  EXPECT_TRUE(lat->cls(c).is_normal());
  EXPECT_FALSE(lat->cls(*lat->class_by_label("C2_1")).is_normal());
}

TEST(Subgroups, LargeGroupsWarn)
{
  std::ostringstream warnings;
  SubgroupLattice::build(build_group("C257"), &warnings);
  EXPECT_FALSE(warnings.str().empty());
  std::ostringstream quiet;
  SubgroupLattice::build(build_group("S4"), &quiet);
  EXPECT_TRUE(quiet.str().empty());
}

TEST(Residual, Examples)
{
  auto d8 = build_group("D8");
  EXPECT_EQ(o_p_residual(Subgroup::whole(d8), 2).order(), 1u);
  auto s3 = SubgroupLattice::build(build_group("S3"));
  auto whole = Subgroup::whole(s3->group());
  EXPECT_EQ(o_p_residual(whole, 2).order(), 3u);
  EXPECT_EQ(o_p_residual(whole, 3), whole);
  EXPECT_EQ(o_p_residual(whole, 5), whole);
  EXPECT_THROW(o_p_residual(whole, 4), InvalidArgument);
}

TEST(Residual, MatchesSearchForSmallestNormalPQuotient)
{
  for (auto const &e : testing_catalog::up_to(24)) {
    auto lat = SubgroupLattice::build(build_group(e.descriptor));
    auto const &g = *lat->group();
    auto subs = oracle::brute_force_subgroups(g);
    for (auto const &h : lat->subgroups())
      for (unsigned p : {2u, 3u, 5u}) {
        auto r = o_p_residual(h, p);
        EXPECT_EQ(bits_of(r), oracle::residual_by_search(g, subs, bits_of(h), p)) << e.name;
        EXPECT_TRUE(r.is_normal_in(h));
        EXPECT_TRUE(is_power_of(h.order() / r.order(), p));
        EXPECT_EQ(o_p_residual(r, p), r);
      }
  }
}

TEST(PSubnormal, Examples)
{
  auto lat = SubgroupLattice::build(build_group("S3"));
  auto whole = Subgroup::whole(lat->group());
  auto c2 = class_rep_of_order(*lat, 2);
  auto c3 = class_rep_of_order(*lat, 3);
  EXPECT_TRUE(is_p_subnormal(c3, whole, 2));
  EXPECT_FALSE(is_p_subnormal(c2, whole, 3));
  EXPECT_TRUE(is_p_subnormal(whole, whole, 7));
  EXPECT_FALSE(is_p_subnormal(c3, whole, 7));
  EXPECT_THROW(is_p_subnormal(c3, c2, 2), InvalidArgument);
  EXPECT_THROW(is_p_subnormal(c2, whole, 6), InvalidArgument);
}

TEST(PSubnormal, AgreesWithTowerSearch)
{
  for (auto desc : {"S4", "D12", "A4", "C3xS3"}) {
    auto lat = SubgroupLattice::build(build_group(desc));
    auto const &g = *lat->group();
    for (auto const &h : lat->subgroups())
      for (auto const &k : lat->subgroups()) {
        if (!k.is_subgroup_of(h))
          continue;
        for (unsigned p : {2u, 3u, 5u})
          EXPECT_EQ(is_p_subnormal(k, h, p), oracle::tower_p_subnormal(g, bits_of(k), bits_of(h), p))
            << desc;
      }
  }
}

TEST(PSubnormal, Transitive)
{
  auto lat = SubgroupLattice::build(build_group("S4"));
  auto const &subs = lat->subgroups();
  for (unsigned p : {2u, 3u})
    for (auto const &h : subs)
      for (auto const &l : subs) {
        if (!l.is_subgroup_of(h) || !is_p_subnormal(l, h, p))
          continue;
        for (auto const &k : subs)
          if (k.is_subgroup_of(l) && is_p_subnormal(k, l, p))
            EXPECT_TRUE(is_p_subnormal(k, h, p));
      }
}

TEST(PSubnormal, ConjugateClassVersion)
{
  auto lat = SubgroupLattice::build(build_group("S3"));
  auto c2 = *lat->class_by_label("C2");
  auto s3 = *lat->class_by_label("S3");
  auto one = *lat->class_by_label("1");
  auto c3 = *lat->class_by_label("C3");
  EXPECT_FALSE(is_conjugate_p_subnormal(lat->cls(c2), lat->cls(s3), 3, *lat));
  EXPECT_TRUE(is_conjugate_p_subnormal(lat->cls(one), lat->cls(c2), 2, *lat));
  EXPECT_TRUE(is_conjugate_p_subnormal(lat->cls(c3), lat->cls(s3), 2, *lat));
  auto other = SubgroupLattice::build(build_group("S3"));
  EXPECT_THROW(is_conjugate_p_subnormal(other->cls(c2), lat->cls(s3), 3, *lat), InvalidArgument);
}

TEST(Quotient, Examples)
{
  auto s3 = SubgroupLattice::build(build_group("S3"));
  auto whole = Subgroup::whole(s3->group());
  EXPECT_EQ(quotient(s3->group(), whole).quotient()->order(), 1u);
  EXPECT_EQ(quotient(s3->group(), class_rep_of_order(*s3, 3)).quotient()->order(), 2u);
  EXPECT_THROW(quotient(s3->group(), class_rep_of_order(*s3, 2)), InvalidArgument);

  auto d8 = SubgroupLattice::build(build_group("D8"));
  auto centre = d8->cls(*d8->class_by_label("C2_3")).representative;
  auto q = quotient(d8->group(), centre).quotient();
  EXPECT_EQ(q->order(), 4u);
  EXPECT_EQ(q->exponent(), 2u);
}

TEST(Quotient, ProjectionIsHomomorphismAndCorrespondenceIsBijective)
{
  for (auto const &e : testing_catalog::up_to(24)) {
    auto lat = SubgroupLattice::build(build_group(e.descriptor));
    auto const &g = *lat->group();
    for (auto const &n : lat->subgroups()) {
      if (!n.is_normal())
        continue;
      auto qp = quotient(lat->group(), n);
      auto const &q = *qp.quotient();
      ASSERT_EQ(q.order() * n.order(), g.order()) << e.name;
      for (PermGroup::Index a = 0; a < g.order(); ++a)
        for (PermGroup::Index b = 0; b < g.order(); ++b)
          ASSERT_EQ(qp.project(g.mul(a, b)), q.mul(qp.project(a), qp.project(b))) << e.name;

      auto corr = qp.subgroup_correspondence();
      std::set<oracle::Bits> preimages;
      for (auto const &[kq, k] : corr) {
        EXPECT_TRUE(n.is_subgroup_of(k));
        EXPECT_EQ(qp.image(k), kq);
        preimages.insert(bits_of(k));
        for (auto const &[lq, l] : corr)
          EXPECT_EQ(kq.is_subgroup_of(lq), k.is_subgroup_of(l));
      }
      std::size_t above_n = 0;
      for (auto const &k : lat->subgroups())
        above_n += n.is_subgroup_of(k) ? 1 : 0;
      EXPECT_EQ(preimages.size(), corr.size());
      EXPECT_EQ(preimages.size(), above_n) << e.name;
    }
  }
}
