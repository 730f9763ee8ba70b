#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crystalfold/fold.hpp"
#include "crystalfold/folding.hpp"
#include "crystalfold/json_io.hpp"
#include "crystalfold/roots.hpp"
#include "crystalfold/spin.hpp"

namespace crystalfold::cli {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

/// "A5", "D4" or a quiver JSON path.
Quiver resolve_quiver(const std::string& spec) {
  if (spec.size() >= 2 && (spec[0] == 'A' || spec[0] == 'a') &&
      isdigit((unsigned char)spec[1]))
    return path_quiver(std::stoi(spec.substr(1)));
  if (spec == "D4" || spec == "d4") return d4_quiver();
  return quiver_from_json(read_json_file(spec));
}

/// "identity" | "flip" | "triality" | "1:3,2:2,3:1" | automorphism JSON path.
Automorphism resolve_automorphism(const Quiver& q, const std::string& spec) {
  if (spec == "identity" || spec.empty()) return identity_automorphism(q);
  if (spec == "flip") return flip_automorphism(q);
  if (spec == "triality") return triality_automorphism(q);
  if (spec.find(':') != std::string::npos) {
    std::vector<int> vmap(q.vertex_count(), -1);
    std::stringstream ss(spec);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      auto colon = pair.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("bad automorphism entry: " + pair);
      int u = q.vertex_index(pair.substr(0, colon));
      int v = q.vertex_index(pair.substr(colon + 1));
      if (u < 0 || v < 0) throw std::invalid_argument("unknown vertex in " + pair);
      vmap[u] = v;
    }
    for (int v : vmap)
      if (v < 0) throw std::invalid_argument("automorphism map is incomplete");
    return Automorphism::from_vertex_map(q, vmap);
  }
  return automorphism_from_json(q, read_json_file(spec));
}

/// "B3", "A2", ... or a cartan JSON path.
CartanDatum resolve_cartan(const std::string& spec) {
  if (spec.size() >= 2 && isalpha((unsigned char)spec[0]) &&
      isdigit((unsigned char)spec[1]))
    return cartan_type(toupper(spec[0]), std::stoi(spec.substr(1)));
  return cartan_from_json(read_json_file(spec));
}

/// "0,1" in omega coordinates, or "spin": the fundamental weight at the
/// automorphism-fixed vertex (middle of an odd path, center of D4; for a
/// plain Cartan datum, its last node).
Weight resolve_weight(const std::string& spec, int rank, int spin_node) {
  if (spec == "spin" || spec == "center") {
    if (spin_node < 0) throw std::invalid_argument("no spin node for this input");
    return Weight::fundamental(rank, spin_node);
  }
  Coeffs base;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) base.push_back(std::stoll(tok));
  if (int(base.size()) != rank)
    throw std::invalid_argument("weight needs " + std::to_string(rank) + " entries");
  for (long long v : base)
    if (v < 0) throw std::invalid_argument("weight must be nonnegative");
  return Weight{base, Coeffs(rank, 0)};
}

int fixed_vertex(const Quiver& q, const Automorphism& a) {
  int found = -1;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (a.vertex_map[v] == v) {
      if (found >= 0) return -1;  // not unique
      found = v;
    }
  return found;
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& stdout_stream) {
  if (out_path.empty() || out_path == "-") {
    stdout_stream << text;
    return;
  }
  std::string path = out_path;
  const char* dir = std::getenv("CRYSTALFOLD_OUT_DIR");
  if (dir && *dir && out_path.find('/') == std::string::npos)
    path = std::string(dir) + "/" + out_path;
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

std::string render_table(const CrystalGraph& g) {
  std::ostringstream out;
  out << "vertices: " << g.size() << "  edges: " << g.edges.size() << "\n";
  for (int v = 0; v < g.size(); ++v) {
    const CrystalVertex& cv = g.verts[v];
    out << (v == g.highest ? "* " : "  ") << (cv.id.empty() ? "(top)" : cv.id) << "  wt=(";
    for (size_t i = 0; i < cv.wt.base.size(); ++i) out << (i ? "," : "") << cv.wt.base[i];
    out << ")-(";
    for (size_t i = 0; i < cv.wt.drop.size(); ++i) out << (i ? "," : "") << cv.wt.drop[i];
    out << ")  eps=";
    for (size_t i = 0; i < cv.eps.size(); ++i) out << (i ? "," : "") << cv.eps[i];
    out << "  phi=";
    for (size_t i = 0; i < cv.phi.size(); ++i) out << (i ? "," : "") << cv.phi[i];
    out << "\n";
  }
  return out.str();
}

std::string emit_graph(const CrystalGraph& g, const std::string& mode) {
  if (mode == "dot") return crystal_to_dot(g);
  if (mode == "table") return render_table(g);
  return crystal_to_json(g).dump(2) + "\n";
}

// One [ok]/[FAIL] line per check; returns pass/fail.
struct Checker {
  std::ostream& out;
  bool all_ok = true;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << "\n";
    all_ok = all_ok && ok;
  }
  void check(const std::string& name, const Report& rep) {
    check(name, rep.ok(), rep.ok() ? "" : rep.violations.front() + " (+" +
                                 std::to_string(rep.violations.size() - 1) + " more)");
  }
};

int cmd_verify_fold(const std::string& fold_spec, const std::string& weight_spec,
                    bool infinity, long long depth, std::ostream& out) {
  auto colon = fold_spec.find(':');
  std::string src_name = colon == std::string::npos ? fold_spec : fold_spec.substr(0, colon);
  Quiver q = resolve_quiver(src_name);
  Automorphism a = (src_name == "D4" || src_name == "d4") ? triality_automorphism(q)
                                                          : flip_automorphism(q);
  FoldedDatum fd = fold(q, a);
  Checker ck{out};
  if (colon != std::string::npos) {
    std::string want = fold_spec.substr(colon + 1);
    auto got = fd.cartan.classify();
    ck.check("folded type is " + want, got && *got == want,
             "classified as " + got.value_or("unknown"));
  }

  CartanDatum src_cd = cartan_from_quiver(q);
  if (infinity) {
    if (depth < 0) throw std::invalid_argument("--infinity needs --depth");
    long long maxd = 1;
    for (long long dv : fd.cartan.d) maxd = std::max(maxd, dv);
    CrystalGraph source = generate_binfinity(src_cd, depth + maxd);
    InducedAutomorphism ia = induced_automorphism(source, q, a);
    FoldedCrystal fc = folded_crystal(source, fd, FoldMode::infinity);
    ck.check("crystal axioms (folded)", verify_axioms(fc.graph));
    ck.check("fixed set = generated set (source height <= " + std::to_string(depth) + ")",
             check_fixed_equals_generated(source, ia, fc, FoldMode::infinity, depth));
    ck.check("per-weight counts = Kostant counts",
             verify_folded_is_target(fc, fd, FoldMode::infinity, nullptr, depth + maxd));
  } else {
    Weight w = resolve_weight(weight_spec, q.vertex_count(), fixed_vertex(q, a));
    CrystalGraph source = generate_blambda(src_cd, w);
    InducedAutomorphism ia = induced_automorphism(source, q, a);
    FoldedCrystal fc = folded_crystal(source, fd, FoldMode::highest_weight);
    Weight lam{fd.fold_vector(w.base), Coeffs(fd.orbit_count(), 0)};
    ck.check("crystal axioms (folded)", verify_axioms(fc.graph));
    ck.check("fixed set = generated set",
             check_fixed_equals_generated(source, ia, fc, FoldMode::highest_weight));
    ck.check("folded crystal = direct target crystal",
             verify_folded_is_target(fc, fd, FoldMode::highest_weight, &lam));
    // Character against the Freudenthal oracle.
    auto table = freudenthal(fd.cartan, lam);
    auto ch = character(fc.graph);
    bool char_ok = true;
    long long total = 0;
    for (const auto& [beta, mult] : table) {
      Weight key{lam.base, beta};
      long long got = ch.count(key) ? ch.at(key) : 0;
      if (got != mult) char_ok = false;
      total += mult;
    }
    char_ok = char_ok && total == fc.graph.size();
    ck.check("character = Freudenthal table (dim " + std::to_string(total) + ")", char_ok);
    ck.check("total = Weyl dimension",
             weyl_dim(fd.cartan, lam) == big(fc.graph.size()));
    // Spin shorthand: also cross the Young-diagram model when it applies.
    if ((weight_spec == "spin" || weight_spec == "center") && q.is_path()) {
      int n = fd.orbit_count();
      CrystalGraph spin = build_spin_crystal(n);
      ck.check("spin crystal on self-conjugate diagrams matches",
               bool(isomorphic(spin, fc.graph)));
      ck.check("Chevalley relations on the spin matrices",
               verify_relations(chevalley_matrices(n),
                                n == 1 ? cartan_type('A', 1) : cartan_type('B', n)));
    }
  }
  return ck.all_ok ? 0 : 1;
}

int cmd_verify_spin(int n, std::ostream& out) {
  Checker ck{out};
  CrystalGraph spin = build_spin_crystal(n);
  ck.check("crystal axioms", verify_axioms(spin));
  ck.check("2^n elements", spin.size() == (1 << n),
           std::to_string(spin.size()) + " elements");
  CartanDatum bn = (n == 1) ? cartan_type('A', 1) : cartan_type('B', n);
  CrystalGraph direct = generate_blambda(bn, Weight::fundamental(n, n - 1));
  ck.check("isomorphic to the generated spin crystal", bool(isomorphic(spin, direct)));
  ck.check("Chevalley relations", verify_relations(chevalley_matrices(n), bn));
  if (n >= 2) {
    Quiver q = path_quiver(2 * n - 1);
    FoldedDatum fd = fold(q, flip_automorphism(q));
    CrystalGraph source =
        generate_blambda(cartan_from_quiver(q), Weight::fundamental(2 * n - 1, n - 1));
    FoldedCrystal fc = folded_crystal(source, fd, FoldMode::highest_weight);
    ck.check("isomorphic to the folded A crystal", bool(isomorphic(spin, fc.graph)));
  }
  if (n <= 4) {
    bool geom_ok = true;
    std::string detail;
    for (const YoungDiagram& y : all_diagrams(n)) {
      NakajimaPoint p = rep_from_young(y);
      if (!moment_check_all(p.rep) || !nilpotency_check(p.rep) || !stability_check(p)) {
        geom_ok = false;
        detail = "checkers fail at " + y.str();
        break;
      }
      for (int k = 1; k <= 2 * n - 1; ++k)
        if (epsilon_geom(p, k - 1) != young_eps(y, k)) {
          geom_ok = false;
          detail = "eps mismatch at " + y.str();
        }
      NakajimaPoint img = apply_Fa(p, flip_automorphism(p.rep.quiver));
      if (!reps_isomorphic(img.rep, rep_from_young(conjugate(y)).rep)) {
        geom_ok = false;
        detail = "F(a) image differs from the conjugate at " + y.str();
      }
    }
    ck.check("geometric representatives (all diagrams in the box)", geom_ok, detail);
  }
  return ck.all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crystal folding along admissible quiver automorphisms"};
  app.require_subcommand(1);

  std::string quiver_spec, auto_spec = "identity", type_spec, weight_spec, fold_spec;
  std::string emit = "json", out_path;
  long long depth = -1;
  bool infinity = false, matrices = false;
  int spin_n = 2;
  std::string against = "direct";

  auto* c_fold = app.add_subcommand("fold", "fold a quiver along an automorphism");
  c_fold->add_option("--quiver", quiver_spec, "A<n>, D4 or quiver JSON path")->required();
  c_fold->add_option("--auto", auto_spec, "identity|flip|triality|map|JSON path");
  c_fold->add_option("--out", out_path, "output file (- for stdout)");

  auto* c_gen = app.add_subcommand("generate", "generate B(lambda) or a B(infinity) truncation");
  c_gen->add_option("--type", type_spec, "A2, B3, G2, ... or cartan JSON path")->required();
  c_gen->add_option("--weight", weight_spec, "omega coordinates, e.g. 0,1 (or spin)");
  c_gen->add_flag("--infinity", infinity, "generate a B(infinity) truncation");
  c_gen->add_option("--depth", depth, "height bound");
  c_gen->add_option("--emit", emit, "json|dot|table");
  c_gen->add_option("--out", out_path, "output file (- for stdout)");

  auto* c_fc = app.add_subcommand("fold-crystal", "fold a source crystal along an automorphism");
  c_fc->add_option("--quiver", quiver_spec, "A<n>, D4 or quiver JSON path")->required();
  c_fc->add_option("--auto", auto_spec, "identity|flip|triality|map|JSON path");
  c_fc->add_option("--weight", weight_spec, "source highest weight (or spin)");
  c_fc->add_flag("--infinity", infinity, "fold a B(infinity) truncation");
  c_fc->add_option("--depth", depth, "source height bound (infinity mode)");
  c_fc->add_option("--emit", emit, "json|dot|table");
  c_fc->add_option("--out", out_path, "output file (- for stdout)");

  auto* c_spin = app.add_subcommand("spin", "spin crystal on self-conjugate Young diagrams");
  c_spin->add_option("--n", spin_n, "box size")->required();
  c_spin->add_flag("--matrices", matrices, "emit the Chevalley matrices instead");
  c_spin->add_option("--emit", emit, "json|dot|table");
  c_spin->add_option("--out", out_path, "output file (- for stdout)");

  auto* c_verify = app.add_subcommand("verify", "run the full verification chain");
  c_verify->add_option("--fold", fold_spec, "source or source:target, e.g. A5:B3");
  c_verify->add_option("--weight", weight_spec, "highest weight (or spin)");
  c_verify->add_flag("--infinity", infinity, "verify a B(infinity) truncation");
  c_verify->add_option("--depth", depth, "source height bound (infinity mode)");
  c_verify->add_option("--against", against, "direct (default)");
  c_verify->add_option("--spin", spin_n, "verify the spin construction for this n");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (c_fold->parsed()) {
      Quiver q = resolve_quiver(quiver_spec);
      Automorphism a = resolve_automorphism(q, auto_spec);
      FoldedDatum fd = fold(q, a);
      write_output(cartan_to_json(fd.cartan).dump(2) + "\n", out_path, out);
      return 0;
    }
    if (c_gen->parsed()) {
      CartanDatum cd = resolve_cartan(type_spec);
      CrystalGraph g;
      if (infinity) {
        if (depth < 0) throw std::invalid_argument("--infinity needs --depth");
        g = generate_binfinity(cd, depth);
      } else {
        Weight w = resolve_weight(weight_spec, cd.rank(), cd.rank() - 1);
        g = depth >= 0 ? generate_blambda(cd, w, depth) : generate_blambda(cd, w);
      }
      write_output(emit_graph(g, emit), out_path, out);
      return 0;
    }
    if (c_fc->parsed()) {
      Quiver q = resolve_quiver(quiver_spec);
      Automorphism a = resolve_automorphism(q, auto_spec);
      FoldedDatum fd = fold(q, a);
      CartanDatum src_cd = cartan_from_quiver(q);
      CrystalGraph source;
      FoldMode mode;
      std::string ref;
      if (infinity) {
        if (depth < 0) throw std::invalid_argument("--infinity needs --depth");
        source = generate_binfinity(src_cd, depth);
        mode = FoldMode::infinity;
        ref = "binfinity(" + quiver_spec + ", depth " + std::to_string(depth) + ")";
      } else {
        Weight w = resolve_weight(weight_spec, q.vertex_count(), fixed_vertex(q, a));
        source = generate_blambda(src_cd, w);
        mode = FoldMode::highest_weight;
        ref = "blambda(" + quiver_spec + ", " + weight_spec + ")";
      }
      InducedAutomorphism ia = induced_automorphism(source, q, a);
      FoldedCrystal fc = folded_crystal(source, fd, mode);
      if (emit == "json")
        write_output(folded_to_json(fc, fd, ref, &source, &ia).dump(2) + "\n", out_path, out);
      else
        write_output(emit_graph(fc.graph, emit), out_path, out);
      return 0;
    }
    if (c_spin->parsed()) {
      if (matrices) {
        write_output(spin_matrices_to_json(chevalley_matrices(spin_n)).dump(2) + "\n",
                     out_path, out);
      } else {
        write_output(emit_graph(build_spin_crystal(spin_n), emit), out_path, out);
      }
      return 0;
    }
    if (c_verify->parsed()) {
      if (!fold_spec.empty())
        return cmd_verify_fold(fold_spec, weight_spec, infinity, depth, out);
      return cmd_verify_spin(spin_n, out);
    }
  } catch (const std::invalid_argument& e) {
    err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace crystalfold::cli
