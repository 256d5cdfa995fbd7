#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <thread>

#include <dmspec/dmspec.hpp>

using namespace dmspec;

namespace {

std::vector<FigureDocument> sample_documents()
{
  auto lat = SubgroupLattice::build(build_group("S3"));
  auto d8 = SubgroupLattice::build(build_group("D8"));
  auto bs = build_burnside(build_spectrum(lat));
  return {spectrum_figure(build_spectrum(lat)),
          spectrum_figure(build_local_spectrum(d8, 2)),
          burnside_figure(bs),
          burnside_figure(bs, "compare", true),
          ideals_figure(enumerate_admissible_local(build_spectrum(lat), 3), true),
          ideals_figure(enumerate_admissible_local(build_spectrum(d8), 2), false),
          subgroups_figure(*d8)};
}

std::set<Edge> as_set(std::vector<Edge> const &v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Hasse, ChainAndDiamond)
{
  auto chain = [](std::size_t a, std::size_t b) { return a <= b; };
  EXPECT_EQ(hasse_edges(3, chain), (std::vector<Edge>{{0, 1}, {1, 2}}));
  // 0 < 1, 0 < 2, 1 < 3, 2 < 3
  std::set<Edge> rel{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}};
  auto le = [&](std::size_t a, std::size_t b) { return a == b || rel.count({a, b}); };
  EXPECT_EQ(as_set(hasse_edges(4, le)), (std::set<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST(Figure, HasseRecoversRelation)
{
  for (auto const &doc : sample_documents()) {
    EXPECT_EQ(as_set(transitive_closure(doc.points.size(), doc.hasse)), as_set(doc.specialization))
      << doc.target;
    for (auto e : doc.hasse)
      EXPECT_TRUE(as_set(doc.specialization).count(e));
  }
}

TEST(Figure, JsonRoundTripIsByteIdentical)
{
  for (auto const &doc : sample_documents()) {
    auto text = to_json_string(doc);
    auto back = figure_from_json_string(text);
    EXPECT_EQ(back, doc) << doc.target;
    EXPECT_EQ(to_json_string(back), text) << doc.target;
  }
}

TEST(Figure, JsonShape)
{
  auto j = to_json(spectrum_figure(build_spectrum(build_group("C1"))));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["group"]["order"], 1);
  ASSERT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(j["points"][0]["slot"], "0");
  EXPECT_EQ(j["points"][1]["slot"], "q*");
  EXPECT_FALSE(j.contains("gluing"));
  EXPECT_FALSE(j.contains("local"));
}

TEST(Figure, RejectsBadJson)
{
  EXPECT_THROW(figure_from_json_string("{"), ParseError);
  EXPECT_THROW(figure_from_json_string("{\"schema\": 2}"), ParseError);
  EXPECT_THROW(figure_from_json_string("{\"schema\": 1}"), ParseError);
}

TEST(Figure, DotEdgesAreTheHasseReduction)
{
  for (auto const &doc : sample_documents()) {
    if (doc.target == "subgroups")
      continue;
    auto dot = to_dot(doc);
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    EXPECT_EQ(dot.back(), '\n');
    std::string prefix = doc.gluing ? "s" : "n";
    std::regex edge("  +" + prefix + "(\\d+) -> " + prefix + "(\\d+);");
    std::set<Edge> edges;
    for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it)
      edges.insert({std::stoul((*it)[1]), std::stoul((*it)[2])});
    EXPECT_EQ(edges, as_set(doc.hasse)) << doc.target;
    std::regex node(prefix + "\\d+ \\[label=\"(P\\([^\"]+\\))\"");
    std::size_t nodes = std::distance(std::sregex_iterator(dot.begin(), dot.end(), node),
                                      std::sregex_iterator());
    EXPECT_EQ(nodes, doc.points.size());
    std::size_t open = std::count(dot.begin(), dot.end(), '{');
    EXPECT_EQ(open, static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '}')));
  }
}

TEST(Figure, DotColorFlag)
{
  auto doc = spectrum_figure(build_spectrum(build_group("S3")));
  EXPECT_NE(to_dot(doc, true).find("color="), std::string::npos);
  EXPECT_EQ(to_dot(doc, false).find("color="), std::string::npos);
}

TEST(Figure, DotQuotientCluster)
{
  auto bs = build_burnside(build_local_spectrum(build_group("S3"), 3));
  auto dot = to_dot(burnside_figure(bs, "compare"));
  EXPECT_NE(dot.find("cluster_quotient"), std::string::npos);
  std::regex rho("s\\d+ -> b\\d+ \\[style=dashed");
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), rho), std::sregex_iterator()),
            8);
}

TEST(Figure, AsciiD8TwoLocal)
{
  auto text = to_ascii(spectrum_figure(build_local_spectrum(build_group("D8"), 2)));
  std::istringstream in(text);
  std::string header, row0, row2;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row2);
  EXPECT_EQ(row0.rfind("(0)", 0), 0u);
  EXPECT_EQ(row2.rfind("(2)", 0), 0u);
  std::regex tok("P\\(([^,]+),(\\d)\\)");
  auto labels = [&](std::string const &row, std::string const &slot) {
    std::multiset<std::string> out;
    for (std::sregex_iterator it(row.begin(), row.end(), tok), end; it != end; ++it) {
      EXPECT_EQ((*it)[2], slot);
      out.insert((*it)[1]);
    }
    return out;
  };
  std::multiset<std::string> want{"1", "C2_1", "C2_2", "C2_3", "V4_1", "V4_2", "C4", "D8"};
  EXPECT_EQ(labels(row0, "0"), want);
  EXPECT_EQ(labels(row2, "2"), want);
  // 8 vertical edges plus 11 covering relations of the 2-local lattice
  std::regex arrow("\\n  P\\([^)]+\\) -> P\\(");
  EXPECT_EQ(std::distance(std::sregex_iterator(text.begin(), text.end(), arrow), std::sregex_iterator()),
            19);
}

TEST(Figure, AsciiCompareShowsGluingAndChromatic)
{
  auto bs = build_burnside(build_local_spectrum(build_group("S3"), 3));
  auto text = to_ascii(burnside_figure(bs, "compare", true));
  EXPECT_NE(text.find("rho[P(1,3)]{1,C3}"), std::string::npos);
  EXPECT_NE(text.find("glued fibers: 1 of 7 points"), std::string::npos);
  EXPECT_NE(text.find("P(C2,3) |-> P(C2,3,inf)"), std::string::npos);
}

TEST(Figure, DeterministicAcrossThreads)
{
  auto render = [] {
    auto bs = build_burnside(build_spectrum(build_group("S4")));
    return to_json_string(burnside_figure(bs, "compare", true));
  };
  auto reference = render();
  std::vector<std::string> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] { results[i] = render(); });
  for (auto &t : threads)
    t.join();
  for (auto const &r : results)
    EXPECT_EQ(r, reference);
}
