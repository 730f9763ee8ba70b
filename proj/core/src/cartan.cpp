#include "crystalfold/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "crystalfold/rational.hpp"

namespace crystalfold {

Weight Weight::fundamental(int rank, int node) {
  Weight w = zero(rank);
  w.base[node] = 1;
  return w;
}

Weight Weight::minus_alpha(int rank, int node) {
  Weight w = zero(rank);
  w.drop[node] = 1;
  return w;
}

long long Weight::height() const {
  long long h = 0;
  for (long long v : drop) h += v;
  return h;
}

void CartanDatum::validate() const {
  int n = rank();
  if (int(a.size()) != n || int(d.size()) != n)
    throw std::invalid_argument("cartan: shape mismatch");
  for (int i = 0; i < n; ++i) {
    if (int(a[i].size()) != n) throw std::invalid_argument("cartan: ragged matrix");
    if (d[i] <= 0) throw std::invalid_argument("cartan: symmetrizer must be positive");
    if (a[i][i] != 2) throw std::invalid_argument("cartan: diagonal entry != 2");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("cartan: positive off-diagonal");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("cartan: zero pattern not symmetric");
      if (m(i, j) != d[j] * a[j][i])
        throw std::invalid_argument("cartan: D*C not symmetric");
    }
}

long long CartanDatum::pairing(int i, const Weight& w) const {
  long long v = w.base[i];
  for (int j = 0; j < rank(); ++j) v -= a[i][j] * w.drop[j];
  return v;
}

long long CartanDatum::pairing_root(int i, const Coeffs& beta) const {
  long long v = 0;
  for (int j = 0; j < rank(); ++j) v += a[i][j] * beta[j];
  return v;
}

long long CartanDatum::form(const Coeffs& x, const Coeffs& y) const {
  long long v = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) v += x[i] * m(i, j) * y[j];
  return v;
}

bool CartanDatum::is_dominant(const Weight& w) const {
  for (int i = 0; i < rank(); ++i)
    if (pairing(i, w) < 0) return false;
  return true;
}

bool CartanDatum::finite_type() const {
  // Sylvester: all leading principal minors of the symmetric M positive.
  int n = rank();
  std::vector<std::vector<BigInt>> mm(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mm[i][j] = big(m(i, j));
  // Bareiss elimination; pivots give the minor ratios.
  BigInt prev(1);
  for (int k = 0; k < n; ++k) {
    if (mm[k][k] <= 0) return false;  // minor_k / minor_{k-1} must be > 0
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = mm[k][k] * mm[i][j] - mm[i][k] * mm[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        mm[i][j] = t;
      }
      mm[i][k] = 0;
    }
    prev = mm[k][k];
  }
  return true;
}

CartanDatum cartan_from_quiver(const Quiver& q) {
  int n = q.vertex_count();
  CartanDatum cd;
  cd.nodes = q.vertex_names();
  cd.a.assign(n, Coeffs(n, 0));
  cd.d.assign(n, 1);
  for (int i = 0; i < n; ++i) cd.a[i][i] = 2;
  for (int e = 0; e < q.edge_count(); ++e) {
    const Edge& ed = q.edge(e);
    cd.a[ed.a][ed.b] -= 1;
    cd.a[ed.b][ed.a] -= 1;
  }
  cd.validate();
  return cd;
}

CartanDatum cartan_type(char family, int rank) {
  auto chain = [&](int n) {
    CartanDatum cd;
    for (int i = 1; i <= n; ++i) cd.nodes.push_back(std::to_string(i));
    cd.a.assign(n, Coeffs(n, 0));
    cd.d.assign(n, 1);
    for (int i = 0; i < n; ++i) cd.a[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) cd.a[i][i + 1] = cd.a[i + 1][i] = -1;
    return cd;
  };
  switch (family) {
    case 'A': {
      if (rank < 1) break;
      return chain(rank);
    }
    case 'B': {  // last node short
      if (rank < 2) break;
      CartanDatum cd = chain(rank);
      cd.a[rank - 1][rank - 2] = -2;
      for (int i = 0; i < rank - 1; ++i) cd.d[i] = 2;
      cd.validate();
      return cd;
    }
    case 'C': {  // last node long
      if (rank < 2) break;
      CartanDatum cd = chain(rank);
      cd.a[rank - 2][rank - 1] = -2;
      cd.d[rank - 1] = 2;
      cd.validate();
      return cd;
    }
    case 'D': {
      if (rank < 4) break;
      CartanDatum cd = chain(rank);
      // Detach n from the chain end and hang it off node n-2.
      cd.a[rank - 2][rank - 1] = cd.a[rank - 1][rank - 2] = 0;
      cd.a[rank - 3][rank - 1] = cd.a[rank - 1][rank - 3] = -1;
      cd.validate();
      return cd;
    }
    case 'E': {
      if (rank < 6 || rank > 8) break;
      CartanDatum cd = chain(rank);
      // Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...; realize
      // as a chain 1..n-1 plus node n attached to node 3.
      cd.a[rank - 2][rank - 1] = cd.a[rank - 1][rank - 2] = 0;
      cd.a[2][rank - 1] = cd.a[rank - 1][2] = -1;
      cd.validate();
      return cd;
    }
    case 'F': {
      if (rank != 4) break;
      CartanDatum cd = chain(4);
      cd.a[2][1] = -2;  // double edge 2=>3, nodes 3,4 short
      cd.d = {2, 2, 1, 1};
      cd.validate();
      return cd;
    }
    case 'G': {
      if (rank != 2) break;
      CartanDatum cd = chain(2);
      cd.a[1][0] = -3;  // first node long (d=3), second short
      cd.d = {3, 1};
      cd.validate();
      return cd;
    }
    default:
      throw std::invalid_argument(std::string("unknown type family ") + family);
  }
  throw std::invalid_argument(std::string("no type ") + family + std::to_string(rank));
}

namespace {

// Backtracking search for a simultaneous row/column permutation carrying
// (a1, d1) to (a2, d2). Rank is tiny throughout this library.
bool perm_search(const CartanDatum& x, const CartanDatum& y, std::vector<int>& img,
                 std::vector<char>& used, int i) {
  int n = x.rank();
  if (i == n) return true;
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    if (x.d[i] != y.d[j]) continue;
    bool okp = true;
    for (int k = 0; k < i && okp; ++k) {
      if (x.a[i][k] != y.a[j][img[k]] || x.a[k][i] != y.a[img[k]][j]) okp = false;
    }
    if (!okp) continue;
    img[i] = j;
    used[j] = 1;
    if (perm_search(x, y, img, used, i + 1)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

bool cartan_equivalent(const CartanDatum& x, const CartanDatum& y) {
  if (x.rank() != y.rank()) return false;
  std::vector<int> img(x.rank(), -1);
  std::vector<char> used(x.rank(), 0);
  return perm_search(x, y, img, used, 0);
}

std::optional<std::string> CartanDatum::classify() const {
  if (!finite_type()) return std::nullopt;
  int n = rank();
  // Split into connected components of the Dynkin graph.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && a[v][w] != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> names;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) vs.push_back(v);
    CartanDatum sub;
    for (int v : vs) sub.nodes.push_back(nodes[v]);
    sub.a.assign(vs.size(), Coeffs(vs.size(), 0));
    for (size_t i = 0; i < vs.size(); ++i) {
      sub.d.push_back(d[vs[i]]);
      for (size_t j = 0; j < vs.size(); ++j) sub.a[i][j] = a[vs[i]][vs[j]];
    }
    // The symmetrizer of an abstract datum is only canonical up to scale per
    // component; normalize so the minimum is comparable with the references.
    long long g = 0;
    for (long long dv : sub.d) g = std::gcd(g, dv);
    for (long long& dv : sub.d) dv /= g;

    int r = int(vs.size());
    std::string found;
    const char families[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    for (char f : families) {
      CartanDatum ref;
      try {
        ref = cartan_type(f, r);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (cartan_equivalent(sub, ref)) {
        found = std::string(1, f) + std::to_string(r);
        break;
      }
    }
    if (found.empty()) return std::nullopt;
    names.push_back(found);
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += "+";
    out += names[i];
  }
  return out;
}

}  // namespace crystalfold
