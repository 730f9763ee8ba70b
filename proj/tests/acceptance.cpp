// Acceptance suite: runs every agreed correctness criterion end to end and
// prints one pass/fail line each. Exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "crystalfold/folding.hpp"
#include "crystalfold/json_io.hpp"
#include "crystalfold/roots.hpp"
#include "crystalfold/spin.hpp"

using namespace crystalfold;

namespace {

struct Criterion {
  std::string name;
  double budget_s;
  std::function<bool(std::string&)> body;
};

FoldedDatum fold_a(int m) {
  Quiver q = path_quiver(m);
  return fold(q, flip_automorphism(q));
}

bool counts_match_kostant(const CartanDatum& cd, long long height,
                          std::string& why) {
  CrystalGraph g = generate_binfinity(cd, height);
  auto ch = character(g);
  auto roots = positive_roots(cd);
  // Walk the full height-bounded box of drops.
  std::vector<Coeffs> box{Coeffs(cd.rank(), 0)};
  for (int i = 0; i < cd.rank(); ++i) {
    std::vector<Coeffs> grown;
    for (const Coeffs& c : box) {
      long long used = 0;
      for (int p = 0; p < i; ++p) used += c[p];
      for (long long v = 0; used + v <= height; ++v) {
        Coeffs c2 = c;
        c2[i] = v;
        grown.push_back(c2);
      }
    }
    box = std::move(grown);
  }
  for (const Coeffs& beta : box) {
    Weight w{Coeffs(cd.rank(), 0), beta};
    long long got = ch.count(w) ? ch.at(w) : 0;
    if (got != kostant_count(cd, roots, beta)) {
      why = "count mismatch in " + cd.classify().value_or("?");
      return false;
    }
  }
  return true;
}

struct FoldCase {
  std::string name;
  Quiver q;
  Automorphism a;
  Weight w;  // source highest weight
  long long dim;
};

std::vector<FoldCase> fold_cases() {
  std::vector<FoldCase> cases;
  {
    Quiver q = path_quiver(3);
    cases.push_back({"A3->B2 spin", q, flip_automorphism(q),
                     Weight::fundamental(3, 1), 4});
  }
  {
    Quiver q = path_quiver(5);
    cases.push_back({"A5->B3 spin", q, flip_automorphism(q),
                     Weight::fundamental(5, 2), 8});
  }
  {
    Quiver q = d4_quiver();
    cases.push_back({"D4->G2 adjoint", q, triality_automorphism(q),
                     Weight::fundamental(4, 1), 7});
  }
  return cases;
}

}  // namespace

int main() {
  std::vector<CrystalGraph> generated_graphs;  // re-verified in criterion 9

  std::vector<Criterion> criteria;

  criteria.push_back({"1. folding: A3->B2, A5->B3, A(2n-1)->Bn (n<=6), D4 triality->G2",
                      1.0, [&](std::string& why) {
    FoldedDatum b2 = fold_a(3);
    if (b2.cartan.a != std::vector<Coeffs>{{2, -1}, {-2, 2}}) {
      why = "A3 fold matrix";
      return false;
    }
    FoldedDatum b3 = fold_a(5);
    if (b3.cartan.a != std::vector<Coeffs>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}) {
      why = "A5 fold matrix";
      return false;
    }
    for (int n = 2; n <= 6; ++n) {
      FoldedDatum bn = fold_a(2 * n - 1);
      // Exact matrix: tridiagonal, all -1 except c_{n,n-1} = -2.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          long long want = i == j ? 2
                           : (j == i + 1 || j == i - 1)
                               ? ((i == n - 1 && j == n - 2) ? -2 : -1)
                               : 0;
          if (bn.cartan.c(i, j) != want) {
            why = "A" + std::to_string(2 * n - 1) + " fold matrix";
            return false;
          }
        }
      if (bn.cartan.classify() != "B" + std::to_string(n)) {
        why = "classification";
        return false;
      }
    }
    Quiver d4 = d4_quiver();
    FoldedDatum g2 = fold(d4, triality_automorphism(d4));
    if (g2.cartan.a != std::vector<Coeffs>{{2, -1}, {-3, 2}} ||
        g2.cartan.classify() != "G2") {
      why = "D4 fold";
      return false;
    }
    return true;
  }});

  criteria.push_back({"2. B(infinity) counts = Kostant counts (height <= 6)",
                      30.0, [&](std::string& why) {
    for (const CartanDatum& cd :
         {cartan_type('A', 2), cartan_type('A', 3), fold_a(3).cartan,
          fold_a(5).cartan,
          fold(d4_quiver(), triality_automorphism(d4_quiver())).cartan}) {
      if (!counts_match_kostant(cd, 6, why)) return false;
      generated_graphs.push_back(generate_binfinity(cd, 6));
    }
    // The folded infinity crystals agree with the oracle as well.
    for (auto& [m, name] : std::vector<std::pair<int, std::string>>{{3, "B2"}, {5, "B3"}}) {
      Quiver q = path_quiver(m);
      FoldedDatum fd = fold_a(m);
      long long maxd = 2;
      CrystalGraph src = generate_binfinity(cartan_from_quiver(q), 6 + maxd);
      FoldedCrystal fc = folded_crystal(src, fd, FoldMode::infinity);
      if (!verify_folded_is_target(fc, fd, FoldMode::infinity, nullptr, 6 + maxd).ok()) {
        why = "folded counts " + name;
        return false;
      }
      generated_graphs.push_back(fc.graph);
    }
    Quiver d4 = d4_quiver();
    FoldedDatum g2 = fold(d4, triality_automorphism(d4));
    CrystalGraph src = generate_binfinity(cartan_from_quiver(d4), 6 + 3);
    FoldedCrystal fc = folded_crystal(src, g2, FoldMode::infinity);
    if (!verify_folded_is_target(fc, g2, FoldMode::infinity, nullptr, 6 + 3).ok()) {
      why = "folded counts G2";
      return false;
    }
    generated_graphs.push_back(fc.graph);
    return true;
  }});

  criteria.push_back({"3. B(lambda) characters = Freudenthal, dims 3,6,4,8,7,28",
                      30.0, [&](std::string& why) {
    std::vector<std::tuple<CartanDatum, Weight, long long>> cases;
    cases.push_back({cartan_type('A', 2), Weight::fundamental(2, 0), 3});
    cases.push_back({cartan_type('A', 3), Weight::fundamental(3, 1), 6});
    cases.push_back({fold_a(3).cartan, Weight::fundamental(2, 1), 4});
    cases.push_back({fold_a(5).cartan, Weight::fundamental(3, 2), 8});
    cases.push_back({fold(d4_quiver(), triality_automorphism(d4_quiver())).cartan,
                     Weight::fundamental(2, 1), 7});
    cases.push_back({cartan_type('D', 4), Weight::fundamental(4, 1), 28});
    for (const auto& [cd, lam, dim] : cases) {
      CrystalGraph g = generate_blambda(cd, lam);
      if (g.size() != dim) {
        why = "dimension " + std::to_string(g.size()) + " != " + std::to_string(dim);
        return false;
      }
      if (weyl_dim(cd, lam) != big(dim)) {
        why = "weyl_dim";
        return false;
      }
      auto table = freudenthal(cd, lam);
      auto ch = character(g);
      if (ch.size() != table.size()) {
        why = "support size";
        return false;
      }
      for (const auto& [beta, mult] : table)
        if (!ch.count(Weight{lam.base, beta}) || ch.at(Weight{lam.base, beta}) != mult) {
          why = "multiplicity";
          return false;
        }
      generated_graphs.push_back(g);
    }
    return true;
  }});

  criteria.push_back({"4. sigma-fixed set = orbit-generated set", 60.0,
                      [&](std::string& why) {
    for (const FoldCase& c : fold_cases()) {
      FoldedDatum fd = fold(c.q, c.a);
      CrystalGraph src = generate_blambda(cartan_from_quiver(c.q), c.w);
      InducedAutomorphism ia = induced_automorphism(src, c.q, c.a);
      FoldedCrystal fc = folded_crystal(src, fd, FoldMode::highest_weight);
      if (!check_fixed_equals_generated(src, ia, fc, FoldMode::highest_weight).ok()) {
        why = c.name;
        return false;
      }
    }
    // Infinity truncations at depth 6.
    for (const FoldCase& c : fold_cases()) {
      FoldedDatum fd = fold(c.q, c.a);
      long long maxd = 1;
      for (long long dv : fd.cartan.d) maxd = std::max(maxd, dv);
      CrystalGraph src = generate_binfinity(cartan_from_quiver(c.q), 6 + maxd);
      InducedAutomorphism ia = induced_automorphism(src, c.q, c.a);
      FoldedCrystal fc = folded_crystal(src, fd, FoldMode::infinity);
      if (!check_fixed_equals_generated(src, ia, fc, FoldMode::infinity, 6).ok()) {
        why = c.name + " (infinity)";
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"5. folded crystal isomorphic to the direct target", 30.0,
                      [&](std::string& why) {
    for (const FoldCase& c : fold_cases()) {
      FoldedDatum fd = fold(c.q, c.a);
      CrystalGraph src = generate_blambda(cartan_from_quiver(c.q), c.w);
      FoldedCrystal fc = folded_crystal(src, fd, FoldMode::highest_weight);
      Weight lam{fd.fold_vector(c.w.base), Coeffs(fd.orbit_count(), 0)};
      CrystalGraph direct = generate_blambda(fd.cartan, lam);
      auto iso = isomorphic(fc.graph, direct);
      if (!iso) {
        why = c.name;
        return false;
      }
      // label-preserving bijection
      std::vector<char> hit(direct.size(), 0);
      for (int v = 0; v < fc.graph.size(); ++v) {
        if (hit[(*iso)[v]]) {
          why = "not a bijection";
          return false;
        }
        hit[(*iso)[v]] = 1;
      }
      generated_graphs.push_back(fc.graph);
      generated_graphs.push_back(direct);
    }
    return true;
  }});

  criteria.push_back({"6. spin crystal: 2^n elements (n<=8), axioms, both isomorphisms (n<=5)",
                      60.0, [&](std::string& why) {
    for (int n = 1; n <= 8; ++n) {
      CrystalGraph spin = build_spin_crystal(n);
      if (spin.size() != (1 << n)) {
        why = "size at n=" + std::to_string(n);
        return false;
      }
      // The 2^n count is cross-checked against the Weyl dimension formula.
      CartanDatum bn = (n == 1) ? cartan_type('A', 1) : cartan_type('B', n);
      if (weyl_dim(bn, Weight::fundamental(n, n - 1)) != big(1LL << n)) {
        why = "weyl_dim at n=" + std::to_string(n);
        return false;
      }
      if (!verify_axioms(spin).ok()) {
        why = "axioms at n=" + std::to_string(n);
        return false;
      }
      if (n <= 4) generated_graphs.push_back(spin);
    }
    for (int n = 1; n <= 5; ++n) {
      CrystalGraph spin = build_spin_crystal(n);
      CartanDatum bn = (n == 1) ? cartan_type('A', 1) : cartan_type('B', n);
      CrystalGraph direct = generate_blambda(bn, Weight::fundamental(n, n - 1));
      if (!isomorphic(spin, direct)) {
        why = "direct iso at n=" + std::to_string(n);
        return false;
      }
      if (n >= 2) {
        Quiver q = path_quiver(2 * n - 1);
        FoldedDatum fd = fold_a(2 * n - 1);
        CrystalGraph src = generate_blambda(cartan_from_quiver(q),
                                            Weight::fundamental(2 * n - 1, n - 1));
        FoldedCrystal fc = folded_crystal(src, fd, FoldMode::highest_weight);
        if (!isomorphic(spin, fc.graph)) {
          why = "folded iso at n=" + std::to_string(n);
          return false;
        }
      }
    }
    return true;
  }});

  criteria.push_back({"7. Chevalley relations exact for n <= 5", 10.0,
                      [&](std::string& why) {
    for (int n = 1; n <= 5; ++n) {
      CartanDatum bn = (n == 1) ? cartan_type('A', 1) : cartan_type('B', n);
      Report rep = verify_relations(chevalley_matrices(n), bn);
      if (!rep.ok()) {
        why = "n=" + std::to_string(n) + ": " + rep.violations.front();
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"8. geometric grounding: all diagrams, n <= 4, exhaustive", 60.0,
                      [&](std::string& why) {
    for (int n = 1; n <= 4; ++n) {
      Quiver q = path_quiver(2 * n - 1);
      Automorphism flip = flip_automorphism(q);
      for (const YoungDiagram& y : all_diagrams(n)) {
        NakajimaPoint p = rep_from_young(y);
        if (!moment_check_all(p.rep) || !nilpotency_check(p.rep) ||
            !stability_check(p)) {
          why = "checkers at " + y.str();
          return false;
        }
        for (int k = 1; k <= 2 * n - 1; ++k)
          if (epsilon_geom(p, k - 1) != young_eps(y, k)) {
            why = "epsilon at " + y.str();
            return false;
          }
        NakajimaPoint img = apply_Fa(p, flip);
        if (!reps_isomorphic(img.rep, rep_from_young(conjugate(y)).rep)) {
          why = "conjugation at " + y.str();
          return false;
        }
      }
    }
    return true;
  }});

  criteria.push_back({"9. axiom suite green on every generated graph; corruption flagged",
                      60.0, [&](std::string& why) {
    for (const CrystalGraph& g : generated_graphs)
      if (!verify_axioms(g).ok()) {
        why = "clean graph flagged";
        return false;
      }
    CrystalGraph bad = generate_blambda(cartan_type('A', 2), Weight::fundamental(2, 0));
    bad.verts[bad.highest].phi[1] += 1;
    if (verify_axioms(bad).ok()) {
      why = "corrupted phi not flagged";
      return false;
    }
    return true;
  }});

  criteria.push_back({"10. determinism: verify pipeline output is byte-identical",
                      60.0, [&](std::string& why) {
    auto once = [] {
      std::ostringstream out, err;
      cli::run({"verify", "--fold", "A5:B3", "--weight", "spin"}, out, err);
      cli::run({"generate", "--type", "B3", "--weight", "0,0,1"}, out, err);
      cli::run({"fold-crystal", "--quiver", "D4", "--auto", "triality", "--weight",
                "center"},
               out, err);
      cli::run({"spin", "--n", "4", "--matrices"}, out, err);
      return out.str();
    };
    std::string first = once();
    if (first != once()) {
      why = "outputs differ between runs";
      return false;
    }
    return true;
  }});

  int failures = 0;
  for (Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && elapsed > c.budget_s) {
      ok = false;
      why = "time budget exceeded";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << elapsed << "s";
    if (!ok && !why.empty()) line << "; " << why;
    line << ")";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
