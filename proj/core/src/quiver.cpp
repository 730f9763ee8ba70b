#include "crystalfold/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crystalfold {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : names_(std::move(vertices)), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.b < 0 || e.a >= vertex_count() || e.b >= vertex_count())
      throw std::invalid_argument("quiver: edge endpoint out of range");
    if (e.a == e.b)
      throw std::invalid_argument("quiver: vertex loop at " + names_[e.a]);
  }
  std::map<std::string, int> seen;
  for (int v = 0; v < vertex_count(); ++v)
    if (!seen.emplace(names_[v], v).second)
      throw std::invalid_argument("quiver: duplicate vertex name " + names_[v]);
  set_default_omega();
}

int Quiver::vertex_index(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return -1;
}

void Quiver::set_omega(const std::vector<int>& arrows) {
  if (int(arrows.size()) != edge_count())
    throw std::invalid_argument("orientation: need one arrow per edge");
  omega_.assign(arrow_count(), 0);
  for (int e = 0; e < edge_count(); ++e) {
    int h = arrows[e];
    if (h / 2 != e) throw std::invalid_argument("orientation: arrow/edge mismatch");
    omega_[h] = 1;
  }
}

void Quiver::set_default_omega() {
  omega_.assign(arrow_count(), 0);
  for (int e = 0; e < edge_count(); ++e) omega_[2 * e] = 1;
}

int Quiver::edge_multiplicity(int u, int v) const {
  int n = 0;
  for (const Edge& e : edges_)
    if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) ++n;
  return n;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> r;
  for (int h = 0; h < arrow_count(); ++h)
    if (arrow(h).inc == v) r.push_back(h);
  return r;
}

std::vector<int> Quiver::arrows_out_of(int v) const {
  std::vector<int> r;
  for (int h = 0; h < arrow_count(); ++h)
    if (arrow(h).out == v) r.push_back(h);
  return r;
}

bool Quiver::is_path() const {
  int n = vertex_count();
  if (edge_count() != n - 1) return false;
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  int ones = 0;
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 2) return false;
    if (deg[v] == 1) ++ones;
  }
  // Connectivity: n-1 edges, max degree 2, two endpoints forces a path.
  if (n == 1) return edge_count() == 0;
  if (ones != 2) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : edges_) {
      int w = -1;
      if (e.a == v) w = e.b;
      if (e.b == v) w = e.a;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Automorphism Automorphism::from_vertex_map(const Quiver& q, std::vector<int> vmap) {
  int n = q.vertex_count();
  if (int(vmap.size()) != n)
    throw std::invalid_argument("automorphism: vertex map has wrong size");
  std::vector<char> hit(n, 0);
  for (int v : vmap) {
    if (v < 0 || v >= n || hit[v])
      throw std::invalid_argument("automorphism: vertex map is not a permutation");
    hit[v] = 1;
  }

  // Group parallel edges by unordered endpoint pair and match copies in order.
  auto key = [](int u, int v) { return std::pair<int, int>(std::min(u, v), std::max(u, v)); };
  std::map<std::pair<int, int>, std::vector<int>> buckets;
  for (int e = 0; e < q.edge_count(); ++e)
    buckets[key(q.edge(e).a, q.edge(e).b)].push_back(e);

  std::vector<int> emap(q.edge_count(), -1);
  std::map<std::pair<int, int>, int> used;
  for (int e = 0; e < q.edge_count(); ++e) {
    auto k = key(vmap[q.edge(e).a], vmap[q.edge(e).b]);
    auto it = buckets.find(k);
    int idx = used[k]++;
    if (it == buckets.end() || idx >= int(it->second.size()))
      throw std::invalid_argument("automorphism: vertex map does not preserve edges");
    emap[e] = it->second[idx];
  }
  return Automorphism{std::move(vmap), std::move(emap)};
}

int Automorphism::inverse_vertex(int v) const {
  for (int u = 0; u < int(vertex_map.size()); ++u)
    if (vertex_map[u] == v) return u;
  throw std::logic_error("automorphism: broken permutation");
}

int Automorphism::apply_arrow(const Quiver& q, int h) const {
  Arrow a = q.arrow(h);
  int e2 = edge_map[a.edge];
  const Edge& img = q.edge(e2);
  int out2 = vertex_map[a.out];
  if (img.a == out2) return 2 * e2;
  if (img.b == out2) return 2 * e2 + 1;
  throw std::logic_error("automorphism: edge map incompatible with vertex map");
}

int Automorphism::inverse_arrow(const Quiver& q, int h) const {
  for (int g = 0; g < q.arrow_count(); ++g)
    if (apply_arrow(q, g) == h) return g;
  throw std::logic_error("automorphism: broken arrow permutation");
}

bool Automorphism::is_identity() const {
  for (int v = 0; v < int(vertex_map.size()); ++v)
    if (vertex_map[v] != v) return false;
  return true;
}

static int perm_order(const std::vector<int>& p) {
  int ord = 1;
  std::vector<char> seen(p.size(), 0);
  for (int v = 0; v < int(p.size()); ++v) {
    if (seen[v]) continue;
    int len = 0, u = v;
    while (!seen[u]) {
      seen[u] = 1;
      u = p[u];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

int Automorphism::order() const {
  return std::lcm(perm_order(vertex_map), edge_map.empty() ? 1 : perm_order(edge_map));
}

std::vector<std::vector<int>> Automorphism::vertex_orbits() const {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(vertex_map.size(), 0);
  for (int v = 0; v < int(vertex_map.size()); ++v) {
    if (seen[v]) continue;
    std::vector<int> orb;
    int u = v;
    while (!seen[u]) {
      seen[u] = 1;
      orb.push_back(u);
      u = vertex_map[u];
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  // Smallest member of each orbit is its first element; orbits discovered in
  // increasing order of that member already.
  return orbits;
}

bool Automorphism::preserves_orientation(const Quiver& q) const {
  for (int h = 0; h < q.arrow_count(); ++h)
    if (q.in_omega(h) != q.in_omega(apply_arrow(q, h))) return false;
  return true;
}

Quiver path_quiver(int m) {
  if (m < 1) throw std::invalid_argument("path quiver needs at least one vertex");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
  Quiver q(std::move(names), std::move(edges));
  // Orient edges toward the middle vertex; for odd m this is flip-compatible.
  int mid = (m - 1) / 2;  // 0-based middle (left middle for even m)
  std::vector<int> omega;
  for (int e = 0; e + 1 < m; ++e)
    omega.push_back(e < mid ? 2 * e : 2 * e + 1);  // e: {e, e+1}
  if (m > 1) q.set_omega(omega);
  return q;
}

Quiver d4_quiver() {
  std::vector<std::string> names{"1", "2", "3", "4"};
  std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 3}};  // 1-2, 2-3, 2-4
  Quiver q(std::move(names), std::move(edges));
  // Leaves point into the center.
  q.set_omega({2 * 0, 2 * 1 + 1, 2 * 2 + 1});
  return q;
}

Automorphism flip_automorphism(const Quiver& path) {
  int m = path.vertex_count();
  std::vector<int> vmap(m);
  for (int v = 0; v < m; ++v) vmap[v] = m - 1 - v;
  return Automorphism::from_vertex_map(path, vmap);
}

Automorphism triality_automorphism(const Quiver& d4) {
  // (1 3 4) fixing the center 2; indices 0,2,3 cycle, 1 fixed.
  return Automorphism::from_vertex_map(d4, {2, 1, 3, 0});
}

Automorphism identity_automorphism(const Quiver& q) {
  std::vector<int> vmap(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) vmap[v] = v;
  return Automorphism::from_vertex_map(q, vmap);
}

}  // namespace crystalfold
