#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "thinpoly/io.hpp"
#include "thinpoly/thinpoly.hpp"

using namespace thinpoly;

namespace {

Json read_json(const std::string& path) {
  try {
    if (path.empty() || path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

struct CommonOpts {
  std::string in, out;
  int width_bound = 3;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_width = false) {
  cmd->add_option("--in", o.in, "input file (default: stdin)");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  if (with_width) cmd->add_option("--width-bound", o.width_bound, "coordinate bound for width directions")->default_val(3);
}

Json config_echo(const std::string& command, const CommonOpts& o) {
  Json c;
  c["command"] = command;
  c["in"] = o.in.empty() ? "stdin" : o.in;
  c["out"] = o.out.empty() ? "stdout" : o.out;
  return c;
}

Json ehrhart_json(const EhrhartData& e) {
  Json j;
  j["dilate_counts"] = int_vector_to_json(e.dilate_counts);
  j["hstar"] = poly_to_json(e.hstar);
  j["degree"] = e.degree;
  j["codegree"] = e.codegree;
  j["volume"] = int_to_json(e.volume);
  return j;
}

Json lstar_json(const LocalHStarReport& r) {
  Json j;
  j["lstar"] = poly_to_json(r.lstar);
  j["thin"] = r.thin;
  j["trivially_thin"] = r.trivially_thin;
  j["degree"] = r.degree;
  j["subdegree"] = r.subdegree;
  j["interior_points"] = int_to_json(r.interior_points);
  return j;
}

Json width_json(const WidthResult& w) {
  Json j;
  j["width"] = int_to_json(w.width);
  j["direction"] = int_vector_to_json(w.direction);
  j["bound"] = w.bound;
  return j;
}

Json gorenstein_json(const LatticePolytope& p, const GorensteinData& g) {
  Json j;
  j["gorenstein"] = g.gorenstein;
  if (!g.gorenstein) return j;
  j["codegree"] = g.codegree;
  j["center"] = int_vector_to_json(g.center);
  if (p.dim() > 0) {
    LatticePolytope dual = gorenstein_dual(p);
    j["dual_vertices"] = vertices_to_json(dual);
    DualLstarComparison cmp = dual_lstar_check(p);
    j["dual_lstar"] = poly_to_json(cmp.dual_lstar);
    j["dual_thin_match"] = cmp.thin_match;
    j["dual_degree_match"] = cmp.degree_match;
    SubdegreeLawVerdict law = subdegree_law_check(p);
    j["subdegree_law_ok"] = law.ok;
    StructureTheoremVerdict thm = structure_theorem_check(p);
    j["structure_theorem_consistent"] = thm.consistent;
    j["g_thin"] = is_g_thin(p);
    if (p.is_simplex()) j["simplex_pyramid_law_ok"] = gorenstein_simplex_check(p);
  }
  return j;
}

Json classify3d_json(const LatticePolytope& p) {
  Classification3D c = classify_thin_3d(p);
  Json j;
  switch (c.verdict) {
    case ThinClass3D::NotThin: j["verdict"] = "not-thin"; break;
    case ThinClass3D::PyramidOverPolygon: j["verdict"] = "pyramid-over-polygon"; break;
    case ThinClass3D::LawrencePrism: j["verdict"] = "lawrence-prism"; break;
  }
  j["interior_p"] = int_to_json(c.interior_p);
  j["interior_2p"] = int_to_json(c.interior_2p);
  j["facet_interior_sum"] = int_to_json(c.facet_interior_sum);
  j["lstar_3d"] = poly_to_json(local_hstar_3d(p));
  if (c.verdict == ThinClass3D::PyramidOverPolygon) j["apex"] = c.pyramid.apex;
  if (c.prism) {
    j["prism_heights"] = Json::array();
    for (const Int& k : c.prism->heights) j["prism_heights"].push_back(int_to_json(k));
  }
  InteriorInequality ineq = interior_inequality_check(p);
  j["interior_inequality_holds"] = ineq.holds;
  return j;
}

// --------------------------------------------------------------------------
// Built-in golden reference table

class ExampleRegistry {
 public:
  const LatticePolytope& get(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(name, make(name)).first->second;
  }

 private:
  static LatticePolytope cube(int d, int lo, int hi) {
    std::vector<IntVector> pts;
    for (int m = 0; m < (1 << d); ++m) {
      IntVector v(d);
      for (int j = 0; j < d; ++j) v[j] = (m >> j & 1) ? hi : lo;
      pts.push_back(std::move(v));
    }
    return LatticePolytope::build(std::move(pts));
  }
  static LatticePolytope make(const std::string& name) {
    if (name == "nonspanning-4d-simplex")
      return LatticePolytope::build({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 2, 4, 0}, {2, 1, 0, 4}});
    if (name == "gap-5d-simplex")
      return LatticePolytope::build(
          {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 1, 2, 0}, {5, 3, 3, 2, 6}});
    if (name == "small-lead-5d-simplex")
      return LatticePolytope::build(
          {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, 1, 2, 0, 0}, {3, 5, 6, 8, 0}, {1, 1, 0, 0, 2}});
    if (name == "cayley-tetrahedron")
      return LatticePolytope::build({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 1}});
    if (name == "unit-cube") return cube(3, 0, 1);
    if (name == "pm-cube") return cube(3, -1, 1);
    if (name == "octahedron")
      return LatticePolytope::build({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    if (name == "reflexive-triangle") return LatticePolytope::build({{1, 0}, {0, 1}, {-1, -1}});
    if (name == "double-triangle") return LatticePolytope::build({{0, 0}, {2, 0}, {0, 2}});
    if (name == "pm-segment") return LatticePolytope::build({{-1}, {1}});
    if (name == "thin-5d-join") {
      ExampleRegistry tmp;
      return free_join(tmp.get("reflexive-triangle"), tmp.get("double-triangle"));
    }
    if (name == "flat-4d-join") {
      ExampleRegistry tmp;
      return free_join(tmp.get("pm-segment"), tmp.get("double-triangle"));
    }
    throw std::invalid_argument("unknown example: " + name);
  }
  std::map<std::string, LatticePolytope> cache_;
};

struct GoldenRow {
  std::string name;
  Json expected;
  std::function<Json(ExampleRegistry&)> actual;
};

std::vector<GoldenRow> golden_table() {
  auto hstar_of = [](const std::string& ex) {
    return [ex](ExampleRegistry& reg) { return poly_to_json(hstar_polynomial(reg.get(ex))); };
  };
  auto lstar_of = [](const std::string& ex) {
    return [ex](ExampleRegistry& reg) { return poly_to_json(local_hstar_polynomial(reg.get(ex))); };
  };
  auto width_of = [](const std::string& ex) {
    return [ex](ExampleRegistry& reg) { return int_to_json(lattice_width(reg.get(ex)).width); };
  };
  auto quotient_of = [](const std::string& ex) {
    return [ex](ExampleRegistry& reg) { return int_vector_to_json(quotient_group(reg.get(ex)).invariant_factors); };
  };
  std::vector<GoldenRow> rows;
  auto add = [&](const std::string& name, Json expected, std::function<Json(ExampleRegistry&)> fn) {
    rows.push_back({name, std::move(expected), std::move(fn)});
  };
  add("nonspanning-4d-simplex.hstar", Json::array({1, 3, 11, 1}), hstar_of("nonspanning-4d-simplex"));
  add("nonspanning-4d-simplex.lstar", Json::array(), lstar_of("nonspanning-4d-simplex"));
  add("nonspanning-4d-simplex.width", 2, width_of("nonspanning-4d-simplex"));
  add("nonspanning-4d-simplex.spanning_index", 2,
      [](ExampleRegistry& reg) { return int_to_json(spanning_data(reg.get("nonspanning-4d-simplex")).index); });
  add("nonspanning-4d-simplex.quotient", Json::array({1, 1, 1, 4, 4}), quotient_of("nonspanning-4d-simplex"));
  add("gap-5d-simplex.hstar", Json::array({1, 1, 4, 5, 1}), hstar_of("gap-5d-simplex"));
  add("gap-5d-simplex.lstar", Json::array({0, 0, 0, 4}), lstar_of("gap-5d-simplex"));
  add("small-lead-5d-simplex.hstar", Json::array({1, 5, 19, 7}), hstar_of("small-lead-5d-simplex"));
  add("small-lead-5d-simplex.lstar", Json::array({0, 0, 0, 1}), lstar_of("small-lead-5d-simplex"));
  add("pm-cube.hstar", Json::array({1, 23, 23, 1}), hstar_of("pm-cube"));
  add("pm-cube.lstar", Json::array({0, 1, 17, 1}), lstar_of("pm-cube"));
  add("pm-cube.dual_lstar", Json::array({0, 1, 3, 1}), [](ExampleRegistry& reg) {
    return poly_to_json(dual_lstar_check(reg.get("pm-cube")).dual_lstar);
  });
  add("cayley-tetrahedron.hstar", Json::array({1, 0, 1}), hstar_of("cayley-tetrahedron"));
  add("cayley-tetrahedron.lstar", Json::array({0, 0, 1}), lstar_of("cayley-tetrahedron"));
  add("cayley-tetrahedron.width", 1, width_of("cayley-tetrahedron"));
  add("cayley-tetrahedron.gorenstein_codegree", 2, [](ExampleRegistry& reg) {
    return Json(gorenstein_data(reg.get("cayley-tetrahedron")).codegree);
  });
  add("unit-cube.hstar", Json::array({1, 4, 1}), hstar_of("unit-cube"));
  add("unit-cube.lstar", Json::array({0, 0, 1}), lstar_of("unit-cube"));
  add("unit-cube.newton", -1,
      [](ExampleRegistry& reg) { return int_to_json(newton_number(reg.get("unit-cube")).value); });
  add("unit-cube.toric_h", Json::array({1, 5, 5, 1}), [](ExampleRegistry& reg) {
    return poly_to_json(toric_fgh_of_polytope(reg.get("unit-cube")).h);
  });
  add("unit-cube.toric_g", Json::array({1, 4}), [](ExampleRegistry& reg) {
    return poly_to_json(toric_fgh_of_polytope(reg.get("unit-cube")).g);
  });
  add("octahedron.toric_h", Json::array({1, 3, 3, 1}), [](ExampleRegistry& reg) {
    return poly_to_json(toric_fgh_of_polytope(reg.get("octahedron")).h);
  });
  add("reflexive-triangle.lstar", Json::array({0, 1, 1}), lstar_of("reflexive-triangle"));
  add("double-triangle.hstar", Json::array({1, 3}), hstar_of("double-triangle"));
  add("double-triangle.width", 2, width_of("double-triangle"));
  add("double-triangle.quotient", Json::array({1, 2, 2}), quotient_of("double-triangle"));
  add("pm-segment.lstar", Json::array({0, 1}), lstar_of("pm-segment"));
  add("thin-5d-join.hstar", Json::array({1, 4, 4, 3}), hstar_of("thin-5d-join"));
  add("thin-5d-join.lstar", Json::array(), lstar_of("thin-5d-join"));
  add("thin-5d-join.trivially_thin", false,
      [](ExampleRegistry& reg) { return Json(is_trivially_thin(reg.get("thin-5d-join"))); });
  add("flat-4d-join.hstar", Json::array({1, 4, 3}), hstar_of("flat-4d-join"));
  add("flat-4d-join.lstar", Json::array(), lstar_of("flat-4d-join"));
  return rows;
}

int run_verify_paper(const std::string& golden_path, const std::string& out_path) {
  std::vector<GoldenRow> rows = golden_table();
  if (!golden_path.empty()) {
    Json overrides = read_json(golden_path);
    if (!overrides.is_object()) throw std::invalid_argument("golden file must be a JSON object of row overrides");
    for (auto& [key, value] : overrides.items()) {
      bool found = false;
      for (GoldenRow& row : rows)
        if (row.name == key) {
          row.expected = value;
          found = true;
        }
      if (!found) throw std::invalid_argument("golden file names unknown row: " + key);
    }
  }
  std::ofstream file;
  std::ostream& os = open_out(file, out_path);
  ExampleRegistry reg;
  int mismatches = 0;
  for (const GoldenRow& row : rows) {
    Json got = row.actual(reg);
    if (got == row.expected) {
      os << "ok   " << row.name << " = " << got.dump() << "\n";
    } else {
      ++mismatches;
      os << "FAIL " << row.name << ": expected " << row.expected.dump() << ", got " << got.dump() << "\n";
    }
  }
  os << "verify-paper: " << (rows.size() - mismatches) << "/" << rows.size() << " rows match\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ehrhart invariants, local h*, and thinness of lattice polytopes"};
  app.require_subcommand(1);

  CommonOpts inv_o, hstar_o, lstar_o, gpoly_o, gor_o, dual_o, cls_o, width_o;
  auto* c_inv = app.add_subcommand("invariants", "all invariants of one polytope");
  add_common(c_inv, inv_o, true);
  auto* c_hstar = app.add_subcommand("hstar", "Ehrhart h* data");
  add_common(c_hstar, hstar_o);
  auto* c_lstar = app.add_subcommand("lstar", "local h* report");
  add_common(c_lstar, lstar_o);
  auto* c_gpoly = app.add_subcommand("gpoly", "toric f/g/h of the boundary face poset");
  add_common(c_gpoly, gpoly_o);
  auto* c_gor = app.add_subcommand("gorenstein", "Gorenstein recognition and duality checks");
  add_common(c_gor, gor_o);
  auto* c_dual = app.add_subcommand("dual", "vertices of the Gorenstein dual");
  add_common(c_dual, dual_o);
  auto* c_cls = app.add_subcommand("classify3d", "thinness classification in dimension three");
  add_common(c_cls, cls_o);
  auto* c_width = app.add_subcommand("width", "lattice width and a minimizing direction");
  add_common(c_width, width_o, true);

  CommonOpts enum_o;
  int enum_dim = 3;
  long long enum_maxvol = 4, enum_minvol = 1;
  int enum_jobs = 1;
  bool enum_dedup = false;
  auto* c_enum = app.add_subcommand("enumerate", "Hermite-normal-form simplex enumeration as JSONL");
  c_enum->add_option("--dim", enum_dim, "simplex dimension")->required();
  c_enum->add_option("--max-vol", enum_maxvol, "largest normalized volume")->required();
  c_enum->add_option("--min-vol", enum_minvol, "smallest normalized volume")->default_val(1);
  c_enum->add_option("--jobs", enum_jobs, "worker threads")->default_val(1);
  c_enum->add_flag("--dedup-iso", enum_dedup, "keep one record per unimodular class");
  c_enum->add_option("--out", enum_o.out, "output file (default: stdout)");

  CommonOpts scan_o;
  auto* c_scan = app.add_subcommand("scan-q1", "resolve thin records against the known constructions");
  c_scan->add_option("--in", scan_o.in, "JSONL records from enumerate (default: stdin)");
  c_scan->add_option("--out", scan_o.out, "output file (default: stdout)");

  std::string golden_path, verify_out;
  auto* c_verify = app.add_subcommand("verify-paper", "check the built-in golden reference table");
  c_verify->add_option("--golden", golden_path, "JSON object overriding expected row values");
  c_verify->add_option("--out", verify_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);

    if (*c_verify) return run_verify_paper(golden_path, verify_out);

    if (*c_enum) {
      std::ofstream file;
      std::ostream& os = open_out(file, enum_o.out);
      std::set<IntVector> seen;
      enumerate_simplices(
          enum_dim, Int(enum_maxvol),
          [&](EnumRecord&& r) {
            if (enum_dedup && !seen.insert(simplex_canonical_form(polytope_from_hnf(r.hnf))).second) return;
            os << record_to_json(r).dump() << "\n";
          },
          enum_jobs, Int(enum_minvol));
      return 0;
    }

    if (*c_scan) {
      std::vector<EnumRecord> records;
      auto parse_lines = [&](std::istream& is) {
        std::string line;
        while (std::getline(is, line)) {
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          try {
            records.push_back(record_from_json(Json::parse(line)));
          } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed record line: ") + e.what());
          }
        }
      };
      if (scan_o.in.empty() || scan_o.in == "-") {
        parse_lines(std::cin);
      } else {
        std::ifstream in(scan_o.in);
        if (!in) throw std::invalid_argument("cannot open input file: " + scan_o.in);
        parse_lines(in);
      }
      Question1Report rep = question1_scan(records);
      Json j;
      j["config"] = config_echo("scan-q1", scan_o);
      j["total"] = rep.total;
      j["thin"] = rep.thin;
      j["resolutions"] = Json(rep.resolution_counts);
      j["unresolved_count"] = rep.unresolved.size();
      j["unresolved"] = Json::array();
      for (const EnumRecord& r : rep.unresolved) j["unresolved"].push_back(record_to_json(r));
      write_json(j, scan_o.out);
      return rep.unresolved.empty() ? 0 : 1;
    }

    // remaining subcommands read one polytope
    CommonOpts* o = nullptr;
    std::string name;
    if (*c_inv) { o = &inv_o; name = "invariants"; }
    else if (*c_hstar) { o = &hstar_o; name = "hstar"; }
    else if (*c_lstar) { o = &lstar_o; name = "lstar"; }
    else if (*c_gpoly) { o = &gpoly_o; name = "gpoly"; }
    else if (*c_gor) { o = &gor_o; name = "gorenstein"; }
    else if (*c_dual) { o = &dual_o; name = "dual"; }
    else if (*c_cls) { o = &cls_o; name = "classify3d"; }
    else { o = &width_o; name = "width"; }

    LatticePolytope p = polytope_from_json(read_json(o->in));
    Json out;
    out["config"] = config_echo(name, *o);
    out["dim"] = p.dim();
    out["vertices"] = vertices_to_json(p);

    if (name == "hstar") {
      out["ehrhart"] = ehrhart_json(ehrhart_data(p));
    } else if (name == "lstar") {
      out["local"] = lstar_json(local_hstar(p));
    } else if (name == "gpoly") {
      ToricFGH fgh = toric_fgh_of_polytope(p);
      out["f"] = poly_to_json(fgh.f);
      out["g"] = poly_to_json(fgh.g);
      out["h"] = poly_to_json(fgh.h);
    } else if (name == "gorenstein") {
      out["gorenstein"] = gorenstein_json(p, gorenstein_data(p));
    } else if (name == "dual") {
      LatticePolytope dual = gorenstein_dual(p);
      out["dual_vertices"] = vertices_to_json(dual);
      out["dual_hstar"] = poly_to_json(hstar_polynomial(dual));
    } else if (name == "classify3d") {
      out["classification"] = classify3d_json(p);
    } else if (name == "width") {
      out["width"] = width_json(lattice_width(p, o->width_bound));
    } else {  // invariants
      out["config"]["width_bound"] = o->width_bound;
      EhrhartData e = ehrhart_data(p);
      out["ehrhart"] = ehrhart_json(e);
      out["local"] = lstar_json(local_hstar(p));
      out["width"] = width_json(lattice_width(p, o->width_bound));
      PyramidResult pyr = lattice_pyramid_witness(p);
      out["pyramid"] = pyr.pyramid;
      if (pyr.pyramid) out["pyramid_apex"] = pyr.apex;
      SpanningData sd = spanning_data(p);
      out["spanning"] = sd.spanning;
      out["spanning_index"] = int_to_json(sd.index);
      out["cayley"] = is_cayley(p, o->width_bound).cayley;
      JoinScan joins = scan_joins(p);
      out["join_pairs"] = joins.joins.size();
      out["cayley_join_pairs"] = joins.cayley_joins.size();
      out["gorenstein_join_pairs"] = joins.gorenstein_joins.size();
      out["gorenstein"] = gorenstein_json(p, gorenstein_data(p));
      ToricFGH fgh = toric_fgh_of_polytope(p);
      out["toric_g"] = poly_to_json(fgh.g);
      out["toric_h"] = poly_to_json(fgh.h);
      NewtonNumberResult nn = newton_number(p);
      out["newton_number"] = int_to_json(nn.value);
      out["newton_is_simplex"] = nn.simplex;
      if (p.is_simplex() && p.dim() >= 1) {
        QuotientGroup q = quotient_group(p);
        out["quotient_invariant_factors"] = int_vector_to_json(q.invariant_factors);
        out["quotient_cyclic"] = q.cyclic;
        out["box_polynomial"] = poly_to_json(box_polynomial(p));
      }
      if (p.dim() == 3) out["classify3d"] = classify3d_json(p);
    }
    write_json(out, o->out);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  }
}
