#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystalfold/json_io.hpp"

using namespace crystalfold;
using nlohmann::json;

TEST_CASE("quiver round trip, orientation included") {
  for (const Quiver& q : {path_quiver(5), d4_quiver(), path_quiver(1)}) {
    json j = quiver_to_json(q);
    CHECK(j.at("schema") == kSchemaTag);
    Quiver back = quiver_from_json(j);
    CHECK(back.vertex_names() == q.vertex_names());
    REQUIRE(back.edge_count() == q.edge_count());
    for (int h = 0; h < q.arrow_count(); ++h) CHECK(back.in_omega(h) == q.in_omega(h));
    CHECK(quiver_to_json(back).dump() == j.dump());
  }
  // Parallel edges survive.
  Quiver kron({"1", "2"}, {{0, 1}, {0, 1}});
  Quiver back = quiver_from_json(quiver_to_json(kron));
  CHECK(back.edge_count() == 2);
}

TEST_CASE("automorphism round trip") {
  Quiver q = path_quiver(5);
  Automorphism a = flip_automorphism(q);
  Automorphism back = automorphism_from_json(q, automorphism_to_json(q, a));
  CHECK(back.vertex_map == a.vertex_map);
  CHECK(back.edge_map == a.edge_map);
}

TEST_CASE("cartan round trip") {
  Quiver a5 = path_quiver(5);
  FoldedDatum fd = fold(a5, flip_automorphism(a5));
  for (const CartanDatum& cd : {cartan_type('G', 2), cartan_type('B', 4), fd.cartan}) {
    json j = cartan_to_json(cd);
    CartanDatum back = cartan_from_json(j);
    CHECK(back.nodes == cd.nodes);
    CHECK(back.a == cd.a);
    CHECK(back.d == cd.d);
    CHECK(cartan_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("crystal graph round trip") {
  Quiver a3 = path_quiver(3);
  FoldedDatum fd = fold(a3, flip_automorphism(a3));
  CrystalGraph g = generate_blambda(fd.cartan, Weight::fundamental(2, 1));
  json j = crystal_to_json(g);
  CrystalGraph back = crystal_from_json(j);
  CHECK(back.size() == g.size());
  CHECK(back.highest == g.highest);
  CHECK(back.complete == g.complete);
  REQUIRE(back.lambda.has_value());
  CHECK(*back.lambda == *g.lambda);
  CHECK(crystal_to_json(back).dump() == j.dump());
  CHECK(isomorphic(back, g).has_value());

  CrystalGraph binf = generate_binfinity(cartan_type('A', 2), 3);
  json j2 = crystal_to_json(binf);
  CHECK(crystal_to_json(crystal_from_json(j2)).dump() == j2.dump());
}

TEST_CASE("folded crystal JSON carries the folding block") {
  Quiver a3 = path_quiver(3);
  Automorphism flip = flip_automorphism(a3);
  FoldedDatum fd = fold(a3, flip);
  CrystalGraph src = generate_blambda(cartan_from_quiver(a3), Weight::fundamental(3, 1));
  InducedAutomorphism ia = induced_automorphism(src, a3, flip);
  FoldedCrystal fc = folded_crystal(src, fd, FoldMode::highest_weight);
  json j = folded_to_json(fc, fd, "blambda(A3, spin)", &src, &ia);
  CHECK(j.at("folding").at("orbits") == json::parse(R"([["1","3"],["2"]])"));
  CHECK(j.at("folding").at("source_graph_ref") == "blambda(A3, spin)");
  // sigma covers the whole source graph and fixes every folded element.
  CHECK(j.at("folding").at("sigma").size() == src.size());
  for (int v = 0; v < fc.graph.size(); ++v) {
    const std::string& id = fc.graph.verts[v].id;
    CHECK(j.at("folding").at("sigma").at(id) == id);
  }
  // The folded part still parses as a plain crystal graph.
  CrystalGraph back = crystal_from_json(j);
  CHECK(back.size() == 4);
}

TEST_CASE("representation round trip keeps exact rationals") {
  NakajimaPoint p = rep_from_young(YoungDiagram::from_parts(2, {2, 1}));
  p.rep.x[0] = p.rep.x[0].scaled(Rational(3, 7));
  json j = point_to_json(p);
  NakajimaPoint back = point_from_json(p.rep.quiver, j);
  CHECK(back.rep.dims == p.rep.dims);
  for (int h = 0; h < p.rep.quiver.arrow_count(); ++h)
    CHECK(back.rep.x[h] == p.rep.x[h]);
  for (int v = 0; v < 3; ++v) CHECK(back.t[v] == p.t[v]);
  CHECK(point_to_json(back).dump() == j.dump());
}

TEST_CASE("spin matrices JSON") {
  json j = spin_matrices_to_json(chevalley_matrices(2));
  CHECK(j.at("schema") == kSchemaTag);
  CHECK(j.at("n") == 2);
  CHECK(j.at("basis") == json::parse(R"(["","1","2,1","2,2"])"));
  CHECK(j.at("E").size() == 2);
  CHECK(j.at("E")[0].size() == 4);
}

TEST_CASE("DOT output is stable and labeled by node names") {
  CrystalGraph g = generate_blambda(cartan_type('A', 2), Weight::fundamental(2, 0));
  std::string d1 = crystal_to_dot(g);
  CHECK(d1 == crystal_to_dot(g));
  CHECK(d1.find("digraph") == 0);
  CHECK(d1.find("label=\"1\"") != std::string::npos);
  CHECK(d1.find("label=\"2\"") != std::string::npos);
}

TEST_CASE("malformed artifacts are rejected") {
  CHECK_THROWS_AS(quiver_from_json(json{{"vertices", {"1"}}}), std::invalid_argument);
  json j = quiver_to_json(path_quiver(2));
  j["edges"].push_back({"1", "9"});
  CHECK_THROWS_AS(quiver_from_json(j), std::invalid_argument);
  json c = cartan_to_json(cartan_type('A', 2));
  c["matrix"][0][1] = 5;
  CHECK_THROWS_AS(cartan_from_json(c), std::invalid_argument);
}
