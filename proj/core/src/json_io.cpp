#include "crystalfold/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace crystalfold {

using nlohmann::json;

namespace {

void expect_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchemaTag)
    throw std::invalid_argument("artifact is missing the schema tag " +
                                std::string(kSchemaTag));
}

json coeffs_to_json(const Coeffs& c) {
  json a = json::array();
  for (long long v : c) a.push_back(v);
  return a;
}

Coeffs coeffs_from_json(const json& j) {
  Coeffs c;
  for (const auto& v : j) c.push_back(v.get<long long>());
  return c;
}

json weight_to_json(const Weight& w) {
  return json{{"base", coeffs_to_json(w.base)}, {"drop", coeffs_to_json(w.drop)}};
}

Weight weight_from_json(const json& j) {
  return Weight{coeffs_from_json(j.at("base")), coeffs_from_json(j.at("drop"))};
}

}  // namespace

json quiver_to_json(const Quiver& q) {
  json j;
  j["schema"] = kSchemaTag;
  j["vertices"] = q.vertex_names();
  json edges = json::array();
  for (int e = 0; e < q.edge_count(); ++e)
    edges.push_back({q.vertex_name(q.edge(e).a), q.vertex_name(q.edge(e).b)});
  j["edges"] = edges;
  json omega = json::array();
  for (int e = 0; e < q.edge_count(); ++e) {
    int h = q.in_omega(2 * e) ? 2 * e : 2 * e + 1;
    Arrow a = q.arrow(h);
    omega.push_back({q.vertex_name(a.out), q.vertex_name(a.inc)});
  }
  j["orientation"] = omega;
  return j;
}

Quiver quiver_from_json(const json& j) {
  expect_schema(j);
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  Quiver probe(names, {});
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    int a = probe.vertex_index(e.at(0).get<std::string>());
    int b = probe.vertex_index(e.at(1).get<std::string>());
    if (a < 0 || b < 0) throw std::invalid_argument("quiver json: unknown vertex in edge");
    edges.push_back({a, b});
  }
  Quiver q(names, edges);
  if (j.contains("orientation")) {
    const auto& om = j.at("orientation");
    if (om.size() != edges.size())
      throw std::invalid_argument("quiver json: orientation must list every edge once");
    std::vector<int> arrows(edges.size(), -1);
    std::vector<char> used(edges.size(), 0);
    for (const auto& o : om) {
      int u = q.vertex_index(o.at(0).get<std::string>());
      int v = q.vertex_index(o.at(1).get<std::string>());
      bool found = false;
      for (int e = 0; e < q.edge_count() && !found; ++e) {
        if (used[e]) continue;
        if ((q.edge(e).a == u && q.edge(e).b == v)) {
          arrows[e] = 2 * e;
          used[e] = 1;
          found = true;
        } else if (q.edge(e).a == v && q.edge(e).b == u) {
          arrows[e] = 2 * e + 1;
          used[e] = 1;
          found = true;
        }
      }
      if (!found)
        throw std::invalid_argument("quiver json: orientation entry matches no edge");
    }
    q.set_omega(arrows);
  }
  return q;
}

json automorphism_to_json(const Quiver& q, const Automorphism& a) {
  json map = json::object();
  for (int v = 0; v < q.vertex_count(); ++v)
    map[q.vertex_name(v)] = q.vertex_name(a.vertex_map[v]);
  return json{{"schema", kSchemaTag}, {"vertex_map", map}};
}

Automorphism automorphism_from_json(const Quiver& q, const json& j) {
  expect_schema(j);
  std::vector<int> vmap(q.vertex_count(), -1);
  for (const auto& [from, to] : j.at("vertex_map").items()) {
    int u = q.vertex_index(from);
    int v = q.vertex_index(to.get<std::string>());
    if (u < 0 || v < 0) throw std::invalid_argument("automorphism json: unknown vertex");
    vmap[u] = v;
  }
  for (int v : vmap)
    if (v < 0) throw std::invalid_argument("automorphism json: vertex map incomplete");
  return Automorphism::from_vertex_map(q, vmap);
}

json cartan_to_json(const CartanDatum& cd) {
  json j;
  j["schema"] = kSchemaTag;
  j["nodes"] = cd.nodes;
  json mat = json::array();
  for (const Coeffs& row : cd.a) mat.push_back(coeffs_to_json(row));
  j["matrix"] = mat;
  j["symmetrizer"] = coeffs_to_json(cd.d);
  return j;
}

CartanDatum cartan_from_json(const json& j) {
  expect_schema(j);
  CartanDatum cd;
  cd.nodes = j.at("nodes").get<std::vector<std::string>>();
  for (const auto& row : j.at("matrix")) cd.a.push_back(coeffs_from_json(row));
  cd.d = coeffs_from_json(j.at("symmetrizer"));
  cd.validate();
  return cd;
}

namespace {

json tables_to_json(const CartanDatum& cd, const std::vector<long long>& t) {
  json out = json::object();
  for (int i = 0; i < cd.rank(); ++i) out[cd.nodes[i]] = t[i];
  return out;
}

std::vector<long long> tables_from_json(const CartanDatum& cd, const json& j) {
  std::vector<long long> t(cd.rank());
  for (int i = 0; i < cd.rank(); ++i) t[i] = j.at(cd.nodes[i]).get<long long>();
  return t;
}

}  // namespace

json crystal_to_json(const CrystalGraph& g) {
  json j;
  j["schema"] = kSchemaTag;
  j["cartan"] = cartan_to_json(g.cartan);
  j["highest"] = g.size() ? g.verts[g.highest].id : "";
  if (g.lambda) j["lambda"] = weight_to_json(*g.lambda);
  j["complete"] = g.complete;
  json verts = json::array();
  for (const CrystalVertex& v : g.verts) {
    verts.push_back(json{{"id", v.id},
                         {"wt", weight_to_json(v.wt)},
                         {"eps", tables_to_json(g.cartan, v.eps)},
                         {"phi", tables_to_json(g.cartan, v.phi)}});
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (const CrystalEdge& e : g.edges)
    edges.push_back(json{{"src", g.verts[e.src].id},
                         {"node", g.cartan.nodes[e.node]},
                         {"dst", g.verts[e.dst].id}});
  j["edges"] = edges;
  return j;
}

CrystalGraph crystal_from_json(const json& j) {
  expect_schema(j);
  CrystalGraph g;
  g.cartan = cartan_from_json(j.at("cartan"));
  if (j.contains("lambda")) g.lambda = weight_from_json(j.at("lambda"));
  g.complete = j.value("complete", false);
  for (const auto& v : j.at("vertices")) {
    CrystalVertex cv;
    cv.id = v.at("id").get<std::string>();
    cv.wt = weight_from_json(v.at("wt"));
    cv.eps = tables_from_json(g.cartan, v.at("eps"));
    cv.phi = tables_from_json(g.cartan, v.at("phi"));
    g.add_vertex(std::move(cv));
  }
  std::string top = j.at("highest").get<std::string>();
  g.highest = g.find(top);
  if (g.size() > 0 && g.highest < 0)
    throw std::invalid_argument("crystal json: highest id not among vertices");
  for (const auto& e : j.at("edges")) {
    int src = g.find(e.at("src").get<std::string>());
    int dst = g.find(e.at("dst").get<std::string>());
    int node = -1;
    for (int i = 0; i < g.cartan.rank(); ++i)
      if (g.cartan.nodes[i] == e.at("node").get<std::string>()) node = i;
    if (src < 0 || dst < 0 || node < 0)
      throw std::invalid_argument("crystal json: bad edge");
    g.add_edge(src, node, dst);
  }
  return g;
}

json folded_to_json(const FoldedCrystal& fc, const FoldedDatum& fd,
                    const std::string& source_ref, const CrystalGraph* source,
                    const InducedAutomorphism* ia) {
  json j = crystal_to_json(fc.graph);
  json folding;
  json orbits = json::array();
  for (const auto& orb : fd.orbits) {
    json o = json::array();
    for (int v : orb) o.push_back(fd.source.vertex_name(v));
    orbits.push_back(o);
  }
  folding["orbits"] = orbits;
  folding["source_graph_ref"] = source_ref;
  if (source && ia) {
    // The full induced automorphism; its restriction to the folded elements
    // is the identity, which is the fixed-point statement in serialized form.
    json sigma = json::object();
    for (int v = 0; v < source->size(); ++v)
      sigma[source->verts[v].id] = source->verts[ia->sigma[v]].id;
    folding["sigma"] = sigma;
  }
  j["folding"] = folding;
  return j;
}

json point_to_json(const NakajimaPoint& p) {
  const Quiver& q = p.rep.quiver;
  json j;
  j["schema"] = kSchemaTag;
  json dims = json::object();
  for (int v = 0; v < q.vertex_count(); ++v) dims[q.vertex_name(v)] = p.rep.dims[v];
  j["dims"] = dims;
  json maps = json::array();
  for (int h = 0; h < q.arrow_count(); ++h) {
    if (p.rep.x[h].is_zero()) continue;
    Arrow a = q.arrow(h);
    json rows = json::array();
    for (int r = 0; r < p.rep.x[h].rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < p.rep.x[h].cols(); ++c)
        row.push_back(rational_to_string(p.rep.x[h].at(r, c)));
      rows.push_back(row);
    }
    maps.push_back(json{{"edge", {q.vertex_name(a.out), q.vertex_name(a.inc)}},
                        {"matrix", rows}});
  }
  j["maps"] = maps;
  json t = json::object();
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (p.t[v].rows() == 0 || p.t[v].is_zero()) continue;
    json rows = json::array();
    for (int r = 0; r < p.t[v].rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < p.t[v].cols(); ++c)
        row.push_back(rational_to_string(p.t[v].at(r, c)));
      rows.push_back(row);
    }
    t[q.vertex_name(v)] = rows;
  }
  j["t"] = t;
  json wd = json::object();
  for (int v = 0; v < q.vertex_count(); ++v)
    if (p.wdims[v]) wd[q.vertex_name(v)] = p.wdims[v];
  j["wdims"] = wd;
  return j;
}

NakajimaPoint point_from_json(const Quiver& q, const json& j) {
  expect_schema(j);
  std::vector<int> dims(q.vertex_count(), 0);
  for (const auto& [name, d] : j.at("dims").items()) {
    int v = q.vertex_index(name);
    if (v < 0) throw std::invalid_argument("rep json: unknown vertex " + name);
    dims[v] = d.get<int>();
  }
  NakajimaPoint p;
  p.rep = QuiverRep::zero(q, dims);
  for (const auto& m : j.at("maps")) {
    int out = q.vertex_index(m.at("edge").at(0).get<std::string>());
    int inc = q.vertex_index(m.at("edge").at(1).get<std::string>());
    int arrow = -1;
    for (int h = 0; h < q.arrow_count(); ++h) {
      Arrow a = q.arrow(h);
      if (a.out == out && a.inc == inc && p.rep.x[h].is_zero()) {
        arrow = h;
        break;
      }
    }
    if (arrow < 0) throw std::invalid_argument("rep json: no free arrow for map");
    const auto& rows = m.at("matrix");
    if (int(rows.size()) != dims[inc])
      throw std::invalid_argument("rep json: matrix row count mismatch");
    for (int r = 0; r < int(rows.size()); ++r) {
      if (int(rows[r].size()) != dims[out])
        throw std::invalid_argument("rep json: matrix column count mismatch");
      for (int c = 0; c < int(rows[r].size()); ++c)
        p.rep.x[arrow].at(r, c) = rational_from_string(rows[r][c].get<std::string>());
    }
  }
  p.wdims.assign(q.vertex_count(), 0);
  if (j.contains("wdims"))
    for (const auto& [name, d] : j.at("wdims").items())
      p.wdims[q.vertex_index(name)] = d.get<int>();
  for (int v = 0; v < q.vertex_count(); ++v)
    p.t.emplace_back(p.wdims[v], dims[v]);
  if (j.contains("t"))
    for (const auto& [name, rows] : j.at("t").items()) {
      int v = q.vertex_index(name);
      if (v < 0) throw std::invalid_argument("rep json: unknown vertex in t");
      if (p.wdims[v] == 0) p.wdims[v] = int(rows.size());
      p.t[v] = QMat(int(rows.size()), dims[v]);
      for (int r = 0; r < int(rows.size()); ++r)
        for (int c = 0; c < dims[v]; ++c)
          p.t[v].at(r, c) = rational_from_string(rows[r][c].get<std::string>());
    }
  p.validate();
  return p;
}

json spin_matrices_to_json(const SpinMatrices& sm) {
  json j;
  j["schema"] = kSchemaTag;
  j["n"] = sm.n;
  json basis = json::array();
  for (const YoungDiagram& y : self_conjugate_set(sm.n)) basis.push_back(y.str());
  j["basis"] = basis;
  auto mats = [](const std::vector<IMat>& ms) {
    json out = json::array();
    for (const IMat& m : ms) {
      json rows = json::array();
      for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
      }
      out.push_back(rows);
    }
    return out;
  };
  j["E"] = mats(sm.E);
  j["F"] = mats(sm.F);
  j["H"] = mats(sm.H);
  return j;
}

std::string crystal_to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  rankdir=TB;\n";
  for (int v = 0; v < g.size(); ++v) {
    const Weight& w = g.verts[v].wt;
    out << "  v" << v << " [label=\"(";
    for (size_t i = 0; i < w.base.size(); ++i) out << (i ? "," : "") << w.base[i];
    out << ")-(";
    for (size_t i = 0; i < w.drop.size(); ++i) out << (i ? "," : "") << w.drop[i];
    out << ")\"];\n";
  }
  std::vector<CrystalEdge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end(), [](const CrystalEdge& a, const CrystalEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.node != b.node) return a.node < b.node;
    return a.dst < b.dst;
  });
  for (const CrystalEdge& e : sorted)
    out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << g.cartan.nodes[e.node]
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace crystalfold
