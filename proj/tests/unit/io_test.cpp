#include <gtest/gtest.h>

#include <sstream>

#include <distk/generators.hpp>
#include <distk/io.hpp>
#include <distk/serialize.hpp>

using namespace distk;

TEST(EdgeList, RoundTrip) {
  for (const Graph& g : {path_graph(1), cycle_graph(7), grid_graph(3, 4), random_connected_graph(20, 6, 3)}) {
    std::stringstream ss;
    write_edge_list(ss, g, "test");
    Graph back = read_edge_list(ss);
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_EQ(back.edges(), g.edges());
  }
}

TEST(EdgeList, ParseErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in, "x.el");
  };
  EXPECT_NO_THROW(parse("c hi\n\np 2 1\ne 0 1\n"));
  EXPECT_THROW(parse("e 0 1\n"), ParseError);
  EXPECT_THROW(parse("p 2 1\ne 0 2\n"), ParseError);
  EXPECT_THROW(parse("p 2 2\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse("p 2 1\ne 0 1 5\n"), ParseError);
  EXPECT_THROW(parse("p 2 1\nq 0 1\n"), ParseError);
  EXPECT_THROW(parse("p 2 1\np 2 1\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse("p 2 1\ne 1 1\n"), ParseError);
  EXPECT_THROW(parse("p 3 2\ne 0 1\ne 1 0\n"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  try {
    parse("p 2 1\ne 0 9\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("x.el:2"), std::string::npos);
  }
}

TEST(EdgeList, MultigraphModeKeepsLoops) {
  std::istringstream in("p 2 3\ne 0 0\ne 0 1\ne 0 1\n");
  Graph g = read_edge_list(in, "m", Graph::Mode::kMulti);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.is_multigraph());
}

TEST(VertexSetFile, RoundTripAndErrors) {
  VertexSet s{9, 2, 4};
  std::stringstream ss;
  write_vertex_set(ss, s);
  EXPECT_EQ(read_vertex_set(ss), s);
  std::istringstream dup("3\n\nc note\n3\n1\n");
  EXPECT_EQ(read_vertex_set(dup), (VertexSet{1, 3}));
  std::istringstream bad("1\nx\n");
  EXPECT_THROW(read_vertex_set(bad), ParseError);
  std::istringstream neg("-1\n");
  EXPECT_THROW(read_vertex_set(neg), ParseError);
  std::istringstream two("1 2\n");
  EXPECT_THROW(read_vertex_set(two), ParseError);
}

TEST(SideCar, RoundTrip) {
  SideCar entries{{"x", 4}, {"origin", 0}, {"origin", 1}};
  std::stringstream ss;
  write_side_car(ss, entries);
  EXPECT_EQ(read_side_car(ss), entries);
  std::istringstream bad("x\n");
  EXPECT_THROW(read_side_car(bad), ParseError);
}

TEST(Json, CertificateAndOutcomeRoundTrip) {
  IrrelevanceCertificate cert{{0, 16}, {0}, {1, 2, 3}, 2, 1};
  EXPECT_EQ(certificate_from_json(to_json(cert)), cert);

  KernelOutcome out;
  out.tag = KernelOutcome::Tag::kKernel;
  out.y = {1, 2, 3, 7};
  out.b = {1, 7};
  out.removal_log.push_back({5, cert});
  Json j = to_json(out);
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["tag"], "KERNEL");
  KernelOutcome back = kernel_outcome_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.tag, out.tag);
  EXPECT_EQ(back.y, out.y);
  EXPECT_EQ(back.b, out.b);
  ASSERT_EQ(back.removal_log.size(), 1u);
  EXPECT_EQ(back.removal_log[0].removed, 5);
  EXPECT_EQ(back.removal_log[0].certificate, cert);

  j["schema"] = 99;
  EXPECT_THROW(kernel_outcome_from_json(j), std::invalid_argument);
  EXPECT_THROW(vertex_set_from_json(Json::parse("[1, -2]")), std::invalid_argument);
}

TEST(Json, DualityReportFields) {
  auto rep = duality_report(cycle_graph(4), VertexSet::range(4), 1, true);
  Json j = to_json(rep);
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["lp_value"], "4/3");
  EXPECT_EQ(j["order"].size(), 4u);
}
