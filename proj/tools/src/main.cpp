#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrap/cubes.hpp"
#include "hrap/ends.hpp"
#include "hrap/faces.hpp"
#include "hrap/golden.hpp"
#include "hrap/halfspace.hpp"
#include "hrap/polytope.hpp"
#include "hrap/symmetry.hpp"
#include "report.hpp"

namespace {

using hrap::cli::RunReport;
using nlohmann::ordered_json;

struct Context {
  hrap::PolytopeSpec p;
  std::string input_digest;
  bool is_builtin = true;
  int threads = 0;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("HRAP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
      throw std::invalid_argument(
          "HRAP_THREADS must be a positive integer, got \"" +
          std::string(env) + "\"");
    return static_cast<int>(v);
  }
  return 0;
}

Context load_context(const std::string& input_path, int threads_flag) {
  Context ctx;
  std::string text;
  if (input_path.empty()) {
    ctx.p = hrap::build_polytope_P();
    text = hrap::polytope_to_json_text(ctx.p);
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in)
      throw std::invalid_argument("cannot open input file: " + input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    ctx.p = hrap::polytope_from_json_text(text);
    ctx.is_builtin = false;
  }
  ctx.input_digest = hrap::cli::fnv1a64_digest(text);
  ctx.threads = resolve_threads(threads_flag);
  return ctx;
}

int facet_index(const hrap::PolytopeSpec& p, const std::string& label) {
  for (size_t i = 0; i < p.facets.size(); ++i)
    if (p.facets[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown facet label \"" + label + "\"");
}

std::string pair_label(const hrap::PolytopeSpec& p, int i, int j) {
  return "(" + p.facets[static_cast<size_t>(i)].label + ", " +
         p.facets[static_cast<size_t>(j)].label + ")";
}

ordered_json labels_of(const hrap::PolytopeSpec& p,
                       const std::vector<int>& idx) {
  ordered_json arr = ordered_json::array();
  for (int i : idx) arr.push_back(p.facets[static_cast<size_t>(i)].label);
  return arr;
}

// Gram off-diagonal histogram keyed by exact value, ascending.
std::map<hrap::Exact, long long> gram_histogram(const hrap::PolytopeSpec& p) {
  std::map<hrap::Exact, long long> hist;
  const auto g = hrap::gram_matrix(p);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) ++hist[g[i][j]];
  return hist;
}

void gram_checks(RunReport& rep, const Context& ctx) {
  const std::map<hrap::Exact, long long> hist = gram_histogram(ctx.p);
  bool allowed = true;
  std::string offender;
  std::map<std::string, long long> by_name;
  for (const auto& [value, count] : hist) {
    by_name[value.str()] = count;
    bool found = false;
    for (const auto& [gv, gc] : hrap::golden::kGramHistogram)
      if (value == hrap::Exact(gv)) found = true;
    if (!found && offender.empty()) {
      allowed = false;
      offender = value.str();
    }
  }
  rep.add("off-diagonal Gram values lie in {0,-1,-2,-3,-4,-5}", allowed,
          allowed ? "" : "found " + offender);
  bool all_present = true;
  bool counts_match = true;
  for (const auto& [gv, gc] : hrap::golden::kGramHistogram) {
    const auto it = hist.find(hrap::Exact(gv));
    if (it == hist.end()) {
      all_present = false;
      counts_match = false;
    } else if (it->second != gc) {
      counts_match = false;
    }
  }
  rep.add("all six values occur", all_present);
  if (ctx.is_builtin)
    rep.add("multiplicities match the frozen histogram", counts_match);

  ordered_json jh;
  for (const auto& [value, count] : hist) jh[value.str()] = count;
  rep.data["pair_count"] =
      static_cast<long long>(ctx.p.facets.size() * (ctx.p.facets.size() - 1) /
                             2);
  rep.data["histogram"] = std::move(jh);
}

void right_angled_checks(RunReport& rep, const Context& ctx) {
  const hrap::RightAngledCheck chk = hrap::is_right_angled(ctx.p);
  std::string detail;
  if (!chk.right_angled)
    detail = "facets " +
             pair_label(ctx.p, chk.counterexample->first,
                        chk.counterexample->second) +
             " intersect with inner product " + chk.counterexample_inner.str();
  rep.add("every intersecting pair is orthogonal", chk.right_angled, detail);
  rep.data["right_angled"] = chk.right_angled;
  if (!chk.right_angled) {
    rep.data["counterexample"] = ordered_json{
        {"facets",
         ordered_json{
             ctx.p.facets[static_cast<size_t>(chk.counterexample->first)]
                 .label,
             ctx.p.facets[static_cast<size_t>(chk.counterexample->second)]
                 .label}},
        {"inner", chk.counterexample_inner.str()}};
  }
}

void cube_rule_checks(RunReport& rep, const Context& ctx) {
  const hrap::CubeCorrespondence c = hrap::verify_cube_correspondence(ctx.p);
  rep.add("cube rules predict every mutual position",
          c.mismatches.empty(),
          std::to_string(c.mismatches.size()) + " mismatches over " +
              std::to_string(c.pairs) + " pairs");
  rep.data["pair_count"] = c.pairs;
  rep.data["mismatch_count"] = static_cast<long long>(c.mismatches.size());
  ordered_json arr = ordered_json::array();
  for (size_t k = 0; k < c.mismatches.size() && k < 16; ++k) {
    const auto& m = c.mismatches[k];
    arr.push_back(ordered_json{
        {"facets", ordered_json{ctx.p.facets[static_cast<size_t>(m.i)].label,
                                ctx.p.facets[static_cast<size_t>(m.j)].label}},
        {"predicted", hrap::position_name(m.predicted)},
        {"actual", hrap::position_name(m.actual)}});
  }
  if (!arr.empty()) rep.data["mismatches"] = std::move(arr);
}

void ridge_query(RunReport& rep, const Context& ctx,
                 const std::string& facet) {
  if (!facet.empty()) {
    const int idx = facet_index(ctx.p, facet);
    const int count = hrap::ridge_count(ctx.p, idx);
    rep.add("ridge count computed", true,
            facet + " meets " + std::to_string(count) + " facets");
    rep.data["facet"] = facet;
    rep.data["ridge_count"] = count;
    return;
  }
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < ctx.p.facets.size(); ++i)
    arr.push_back(ordered_json{
        {"facet", ctx.p.facets[i].label},
        {"count", hrap::ridge_count(ctx.p, static_cast<int>(i))}});
  rep.add("ridge counts computed", true,
          std::to_string(ctx.p.facets.size()) + " facets");
  rep.data["ridge_counts"] = std::move(arr);
}

ordered_json vertex_json(const hrap::PolytopeSpec& p,
                         const hrap::VertexRay& v) {
  ordered_json dir = ordered_json::array();
  for (const hrap::Exact& c : v.direction) dir.push_back(c.str());
  return ordered_json{
      {"direction", std::move(dir)},
      {"kind", v.kind == hrap::VertexRay::Kind::Ideal ? "ideal" : "finite"},
      {"incident", labels_of(p, v.incident_facets)}};
}

void vertex_checks(RunReport& rep, const Context& ctx) {
  const std::vector<hrap::VertexRay> rays =
      hrap::enumerate_vertices(ctx.p, ctx.threads);
  long long finite = 0, ideal = 0;
  for (const hrap::VertexRay& v : rays)
    (v.kind == hrap::VertexRay::Kind::Ideal ? ideal : finite)++;
  rep.add("vertex enumeration completed", true,
          std::to_string(finite) + " finite + " + std::to_string(ideal) +
              " ideal");
  if (ctx.is_builtin) {
    rep.add("counts match the frozen census",
            finite == hrap::golden::kFiniteVertexCount &&
                ideal == hrap::golden::kIdealVertexCount,
            "expected " + std::to_string(hrap::golden::kFiniteVertexCount) +
                " + " + std::to_string(hrap::golden::kIdealVertexCount));
  }
  rep.data["finite_count"] = finite;
  rep.data["ideal_count"] = ideal;
  ordered_json arr = ordered_json::array();
  for (const hrap::VertexRay& v : rays) arr.push_back(vertex_json(ctx.p, v));
  rep.data["vertices"] = std::move(arr);
}

void volume_checks(RunReport& rep, const Context& ctx) {
  hrap::VolumeCertificate cert;
  try {
    cert = hrap::finite_volume_certificate(ctx.p, ctx.threads);
  } catch (const std::runtime_error& e) {
    rep.add("certificate methods agree", false, e.what());
    return;
  }
  rep.add("edge ray oracle", cert.method_ray_oracle);
  rep.add("subdiagram criterion", cert.method_combinatorial);
  rep.add("finite volume certified", cert.finite_volume);
  if (ctx.is_builtin)
    rep.add("counts match the frozen census",
            cert.finite_vertex_count == hrap::golden::kFiniteVertexCount &&
                cert.ideal_vertex_count == hrap::golden::kIdealVertexCount);
  rep.data["finite_volume"] = cert.finite_volume;
  rep.data["method_ray_oracle"] = cert.method_ray_oracle;
  rep.data["method_combinatorial"] = cert.method_combinatorial;
  rep.data["finite_vertex_count"] = cert.finite_vertex_count;
  rep.data["ideal_vertex_count"] = cert.ideal_vertex_count;
  ordered_json fails = ordered_json::array();
  for (const std::string& f : cert.failures) fails.push_back(f);
  rep.data["failures"] = std::move(fails);
}

void symmetry_query(RunReport& rep, const Context& ctx) {
  const hrap::SymmetryGroup g = hrap::automorphisms(ctx.p);
  rep.add("automorphism search completed", true,
          "order " + std::to_string(g.order) + ", " +
              std::to_string(g.generators.size()) + " generators");
  if (ctx.is_builtin)
    rep.add("order matches the frozen value",
            g.order == hrap::golden::kSymmetryOrder);
  const std::vector<std::vector<int>> parts =
      hrap::orbits(g, static_cast<int>(ctx.p.facets.size()));
  rep.data["order"] = g.order;
  rep.data["generator_count"] = static_cast<long long>(g.generators.size());
  ordered_json orbs = ordered_json::array();
  for (const std::vector<int>& o : parts) orbs.push_back(labels_of(ctx.p, o));
  rep.data["orbit_count"] = static_cast<long long>(parts.size());
  rep.data["orbits"] = std::move(orbs);
  try {
    const hrap::CubeActionSummary s = hrap::phi_star_over(g, ctx.p);
    rep.data["cube_action"] = ordered_json{
        {"kernel_order", static_cast<long long>(s.kernel.size())},
        {"image_order", s.image_order}};
  } catch (const std::invalid_argument&) {
    // Polytopes without the cube structure simply omit this block.
  }
}

void family_action_checks(RunReport& rep, const Context& ctx) {
  const hrap::SymmetryGroup g = hrap::automorphisms(ctx.p);
  const hrap::FamilyActionReport fam = hrap::family_action_report(g, ctx.p);
  rep.add("wall and edge families preserved setwise",
          fam.walls_closed && fam.edges_closed,
          fam.violations.empty() ? "" : fam.violations.front());
  rep.add("family swaps are wholesale", fam.swaps_wholesale);

  long long realized = 0;
  std::string realize_error;
  for (const hrap::FacetPermutation& e : g.elements) {
    try {
      hrap::realize_matrix(e, ctx.p);
      ++realized;
    } catch (const std::exception& ex) {
      if (realize_error.empty()) realize_error = ex.what();
    }
  }
  rep.add("every element realizes as an exact form-preserving matrix",
          realized == g.order,
          std::to_string(realized) + " of " + std::to_string(g.order) +
              (realize_error.empty() ? "" : "; " + realize_error));

  const hrap::CubeActionSummary cube = hrap::phi_star_over(g, ctx.p);
  const long long kernel = static_cast<long long>(cube.kernel.size());
  rep.add("kernel size times image order equals group order",
          kernel * cube.image_order == g.order);
  if (ctx.is_builtin) {
    rep.add("group order matches the frozen value",
            g.order == hrap::golden::kSymmetryOrder);
    rep.add("cube-action kernel has exactly 2 elements",
            kernel == hrap::golden::kCubeActionKernelOrder);
    rep.add("cube-action image has order 384",
            cube.image_order == hrap::golden::kCubeActionImageOrder);
  }
  rep.data["order"] = g.order;
  rep.data["kernel_order"] = kernel;
  rep.data["image_order"] = cube.image_order;
  rep.data["wall_swap_count"] = fam.wall_swap_count;
  ordered_json v = ordered_json::array();
  for (const std::string& s : fam.violations) v.push_back(s);
  rep.data["violations"] = std::move(v);
}

void census_checks(RunReport& rep, const Context& ctx,
                   hrap::DisjointMode mode) {
  const hrap::SymmetryGroup g = hrap::automorphisms(ctx.p);
  const std::vector<hrap::FacetSelection> sets =
      hrap::maximal_disjoint_sets(ctx.p, mode);
  const hrap::Census census = hrap::classify_census(ctx.p, mode, g);

  const std::vector<std::vector<bool>> adj =
      hrap::disjointness_graph(ctx.p, mode);
  bool all_valid = true;
  bool all_maximal = true;
  for (const hrap::FacetSelection& f : sets) {
    for (size_t a = 0; a < f.removed.size() && all_valid; ++a)
      for (size_t b = a + 1; b < f.removed.size(); ++b)
        if (!adj[static_cast<size_t>(f.removed[a])]
                [static_cast<size_t>(f.removed[b])]) {
          all_valid = false;
          break;
        }
    for (size_t c = 0; c < adj.size() && all_maximal; ++c) {
      if (std::find(f.removed.begin(), f.removed.end(), static_cast<int>(c)) !=
          f.removed.end())
        continue;
      bool extends = true;
      for (int m : f.removed)
        if (!adj[c][static_cast<size_t>(m)]) {
          extends = false;
          break;
        }
      if (extends) {
        all_maximal = false;
        break;
      }
    }
  }
  rep.add("every maximal set is pairwise disjoint under its mode", all_valid);
  rep.add("every maximal set is inclusion-maximal", all_maximal);

  if (ctx.is_builtin) {
    const bool strict = mode == hrap::DisjointMode::Strict;
    const long long want_sets = strict
                                    ? hrap::golden::kStrictMaximalSetCount
                                    : hrap::golden::kWeakMaximalSetCount;
    const long long want_orbits = strict ? hrap::golden::kStrictOrbitCount
                                         : hrap::golden::kWeakOrbitCount;
    rep.add("maximal set count matches the frozen census",
            census.set_count == want_sets,
            "found " + std::to_string(census.set_count) + ", expected " +
                std::to_string(want_sets));
    rep.add("orbit count matches the frozen census",
            static_cast<long long>(census.orbits.size()) == want_orbits,
            "found " + std::to_string(census.orbits.size()) + ", expected " +
                std::to_string(want_orbits));

    // Compare orbit representatives with sizes, order-insensitively.
    std::multiset<std::pair<std::vector<std::string>, long long>> got, want;
    for (const hrap::CensusOrbit& o : census.orbits) {
      std::vector<std::string> labels;
      for (int i : o.representative)
        labels.push_back(ctx.p.facets[static_cast<size_t>(i)].label);
      got.emplace(std::move(labels), o.size);
    }
    for (const auto& [labels, size] :
         strict ? hrap::golden::strict_census_orbits()
                : hrap::golden::weak_census_orbits()) {
      std::vector<std::string> sorted_rep = labels;
      want.emplace(std::move(sorted_rep), size);
    }
    // Golden representatives are stored in facet-index order already; the
    // computed ones are too, so compare the multisets directly.
    rep.add("orbit representatives match the frozen census", got == want);
  }

  rep.data["mode"] = hrap::disjoint_mode_name(mode);
  rep.data["maximal_set_count"] = census.set_count;
  rep.data["orbit_count"] = static_cast<long long>(census.orbits.size());
  ordered_json orbs = ordered_json::array();
  for (const hrap::CensusOrbit& o : census.orbits)
    orbs.push_back(ordered_json{
        {"representative", labels_of(ctx.p, o.representative)},
        {"size", o.size}});
  rep.data["orbits"] = std::move(orbs);
}

void audit_checks(RunReport& rep, const Context& ctx,
                  const std::vector<std::string>& remove,
                  hrap::DisjointMode mode) {
  hrap::FacetSelection sel;
  sel.mode = mode;
  for (const std::string& label : remove)
    sel.removed.push_back(facet_index(ctx.p, label));
  std::sort(sel.removed.begin(), sel.removed.end());

  const hrap::DeterminationReport audit =
      hrap::determination_audit(ctx.p, sel);
  long long undetermined = 0;
  for (const hrap::DeterminationRecord& r : audit.records)
    if (!r.locally_determined) ++undetermined;
  rep.add("selection is pairwise disjoint under its mode",
          audit.selection_pairwise_disjoint);
  rep.add("every remaining facet is locally determined",
          audit.all_determined,
          audit.all_determined
              ? std::to_string(audit.records.size()) + " facets"
              : std::to_string(undetermined) + " undetermined");

  rep.data["mode"] = hrap::disjoint_mode_name(mode);
  rep.data["removed"] = labels_of(ctx.p, audit.selection.removed);
  rep.data["selection_pairwise_disjoint"] =
      audit.selection_pairwise_disjoint;
  rep.data["all_determined"] = audit.all_determined;
  ordered_json recs = ordered_json::array();
  for (const hrap::DeterminationRecord& r : audit.records)
    recs.push_back(ordered_json{
        {"facet", ctx.p.facets[static_cast<size_t>(r.facet)].label},
        {"fixed_neighbors_used", labels_of(ctx.p, r.fixed_neighbors_used)},
        {"constraint_rank", r.constraint_rank},
        {"locally_determined", r.locally_determined},
        {"used_tangency", r.used_tangency}});
  rep.data["records"] = std::move(recs);
}

void footprint_checks(RunReport& rep, const Context& ctx) {
  const hrap::StandardConfigurationReport conf =
      hrap::verify_standard_configuration(ctx.p);
  rep.add("all footprints match the expected catalog", conf.all_match,
          conf.mismatches.empty() ? "" : conf.mismatches.front());
  if (ctx.is_builtin)
    rep.add("8 planes and 40 spheres",
            conf.plane_count == hrap::golden::kFootprintPlaneCount &&
                conf.sphere_count == hrap::golden::kFootprintSphereCount);

  // Tangency for parallel pairs, orthogonality for right-angled ones.
  double worst = 0;
  std::string worst_pair;
  for (size_t i = 0; i < ctx.p.facets.size(); ++i)
    for (size_t j = i + 1; j < ctx.p.facets.size(); ++j) {
      const hrap::MutualPosition pos =
          hrap::mutual_position(ctx.p.facets[i], ctx.p.facets[j]);
      bool tangent;
      if (pos.kind == hrap::PositionKind::Parallel)
        tangent = true;
      else if (pos.kind == hrap::PositionKind::Intersecting &&
               pos.inner.is_zero())
        tangent = false;
      else
        continue;
      const double res = hrap::footprint_pair_residual(
          conf.entries[i].wall, conf.entries[j].wall, tangent);
      if (res > worst) {
        worst = res;
        worst_pair = pair_label(ctx.p, static_cast<int>(i),
                                static_cast<int>(j));
      }
    }
  {
    std::ostringstream detail;
    detail << "max " << worst;
    if (!worst_pair.empty()) detail << " at " << worst_pair;
    rep.add("tangency and orthogonality residuals below 1e-9",
            worst < 1e-9, detail.str());
  }

  rep.data["plane_count"] = conf.plane_count;
  rep.data["sphere_count"] = conf.sphere_count;
  ordered_json catalog = ordered_json::array();
  for (const hrap::FootprintEntry& e : conf.entries) {
    ordered_json row;
    row["facet"] = e.label;
    if (const hrap::PlaneWall* w = std::get_if<hrap::PlaneWall>(&e.wall)) {
      row["kind"] = "plane";
      row["normal"] = hrap::to_floats(w->normal);
      row["offset"] = w->offset.to_double();
    } else {
      const hrap::SphereWall& s = std::get<hrap::SphereWall>(e.wall);
      row["kind"] = "sphere";
      row["center"] = hrap::to_floats(s.center);
      row["radius"] = s.radius.to_double();
    }
    row["matches_expected"] = e.matches_expected;
    catalog.push_back(std::move(row));
  }
  rep.data["catalog"] = std::move(catalog);
}

void ridge_target_checks(RunReport& rep, const Context& ctx) {
  bool walls_ok = true, edges_ok = true;
  int wall_seen = -1, edge_seen = -1;
  for (size_t i = 0; i < ctx.p.facets.size(); ++i) {
    const int count = hrap::ridge_count(ctx.p, static_cast<int>(i));
    const hrap::Family fam = ctx.p.facets[i].family;
    if (fam == hrap::Family::TypeI || fam == hrap::Family::TypeII) {
      wall_seen = count;
      if (count != hrap::golden::kRidgeTargetWall) walls_ok = false;
    } else if (fam == hrap::Family::TypeIII) {
      edge_seen = count;
      if (count != hrap::golden::kRidgeTargetEdge) edges_ok = false;
    }
  }
  rep.add("every wall facet has " +
              std::to_string(hrap::golden::kRidgeTargetWall) + " ridges",
          walls_ok, "computed " + std::to_string(wall_seen));
  rep.add("every edge facet has " +
              std::to_string(hrap::golden::kRidgeTargetEdge) + " ridges",
          edges_ok, "computed " + std::to_string(edge_seen));
}

void verify_all_checks(RunReport& rep, const Context& ctx) {
  gram_checks(rep, ctx);
  right_angled_checks(rep, ctx);
  {
    const hrap::CoxeterPresentation pres =
        hrap::coxeter_presentation(ctx.p);
    rep.add("commuting pair count matches",
            static_cast<long long>(pres.commuting_pairs.size()) ==
                hrap::golden::kCommutingPairCount,
            std::to_string(pres.commuting_pairs.size()) + " pairs");
  }
  cube_rule_checks(rep, ctx);
  ridge_target_checks(rep, ctx);
  family_action_checks(rep, ctx);
  {
    const hrap::SymmetryGroup g = hrap::automorphisms(ctx.p);
    const std::vector<std::vector<int>> parts =
        hrap::orbits(g, static_cast<int>(ctx.p.facets.size()));
    std::vector<long long> sizes;
    for (const std::vector<int>& o : parts)
      sizes.push_back(static_cast<long long>(o.size()));
    std::sort(sizes.begin(), sizes.end());
    rep.add("facet orbit sizes are 16 and 32",
            sizes == std::vector<long long>{16, 32});
  }
  volume_checks(rep, ctx);
  {
    const std::vector<hrap::VertexRay> rays =
        hrap::enumerate_vertices(ctx.p, ctx.threads);
    bool pole_found = false;
    bool links_ok = true;
    hrap::Vec pole(static_cast<size_t>(ctx.p.d + 1), hrap::Exact(0));
    pole[static_cast<size_t>(ctx.p.d - 1)] = hrap::Exact(1);
    pole[static_cast<size_t>(ctx.p.d)] = hrap::Exact(1);
    for (const hrap::VertexRay& v : rays) {
      if (v.kind != hrap::VertexRay::Kind::Ideal) continue;
      if (!hrap::ideal_vertex_box_link(ctx.p, v)) links_ok = false;
      if (v.direction == pole && v.incident_facets.size() == 8)
        pole_found = true;
    }
    rep.add("pole ideal vertex present with 8 incident wall facets",
            pole_found);
    rep.add("every ideal vertex link is a box of 4 tangent pairs", links_ok);
    const std::vector<long long> fv = hrap::f_vector(ctx.p, ctx.threads);
    std::string fv_text = "(";
    for (size_t k = 0; k < fv.size(); ++k)
      fv_text += (k ? ", " : "") + std::to_string(fv[k]);
    fv_text += ")";
    rep.add("f-vector matches (122, 624, 800, 344, 48)",
            fv.size() == hrap::golden::kFVector.size() &&
                std::equal(fv.begin(), fv.end(),
                           hrap::golden::kFVector.begin()),
            fv_text);
  }
  footprint_checks(rep, ctx);
  census_checks(rep, ctx, hrap::DisjointMode::Strict);
  census_checks(rep, ctx, hrap::DisjointMode::Weak);
  {
    // The audit across every strict-mode maximal set.
    const std::vector<hrap::FacetSelection> sets =
        hrap::maximal_disjoint_sets(ctx.p, hrap::DisjointMode::Strict);
    bool all_ok = true;
    bool ranks_ok = true;
    std::string first_failure;
    for (const hrap::FacetSelection& f : sets) {
      const hrap::DeterminationReport audit =
          hrap::determination_audit(ctx.p, f);
      if (!audit.all_determined) {
        all_ok = false;
        if (first_failure.empty())
          first_failure =
              "selection " + labels_of(ctx.p, f.removed).dump() +
              " leaves a facet undetermined";
      }
      for (const hrap::DeterminationRecord& r : audit.records) {
        bool seen = false;
        for (int rank : hrap::golden::kAuditRanksSeen)
          if (r.constraint_rank == rank) seen = true;
        if (!seen) ranks_ok = false;
      }
    }
    rep.add(
        "every strict maximal set leaves all remaining facets determined",
        all_ok, first_failure);
    rep.add("audit constraint ranks are 5 or 6", ranks_ok);
  }
  // Drop the bulky per-command payloads; verify-all is the check table.
  rep.data = ordered_json::object();
}

// gen-p writes the polytope itself, not a report.
int run_gen_p(const std::string& json_path) {
  const std::string text =
      hrap::polytope_to_json_text(hrap::build_polytope_P());
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out)
      throw std::invalid_argument("cannot write file: " + json_path);
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verifier for a right-angled hyperbolic 5-polytope with 48 "
      "facets"};
  app.require_subcommand(1);

  std::string input_path, json_path, facet_label, mode_name = "strict";
  std::vector<std::string> remove_labels;
  int threads_flag = 0;

  auto add_common = [&](CLI::App* cmd, bool takes_input = true) {
    if (takes_input)
      cmd->add_option("--input", input_path,
                      "polytope JSON file (default: built-in)");
    cmd->add_option("--json", json_path, "write the JSON report here");
    cmd->add_option("--threads", threads_flag,
                    "worker threads (default: HRAP_THREADS or hardware)");
    return cmd;
  };

  CLI::App* gen_p = app.add_subcommand(
      "gen-p", "emit the built-in 48-facet polytope as JSON");
  gen_p->add_option("--json", json_path, "write the polytope JSON here");

  add_common(app.add_subcommand("gram", "off-diagonal Gram spectrum"));
  add_common(app.add_subcommand("check-right-angled",
                                "verify all dihedral angles are right"));
  add_common(app.add_subcommand(
      "verify-lemma32",
      "verify cube-diagram rules predict every mutual position"));
  CLI::App* ridges = add_common(
      app.add_subcommand("ridges", "count facets meeting a given facet"));
  ridges->add_option("--facet", facet_label, "facet label (default: all)");
  add_common(app.add_subcommand("vertices",
                                "enumerate finite and ideal vertices"));
  add_common(app.add_subcommand("finite-volume",
                                "two-method finite-volume certificate"));
  add_common(app.add_subcommand("symmetries",
                                "automorphism group, orbits, cube action"));
  add_common(app.add_subcommand(
      "verify-lemma33", "verify family preservation and the cube action"));
  CLI::App* ends = add_common(app.add_subcommand(
      "ends", "census of maximal pairwise-disjoint facet sets"));
  ends->add_option("--mode", mode_name, "strict or weak (default strict)");
  CLI::App* audit = add_common(app.add_subcommand(
      "audit", "determination audit for a removed-facet selection"));
  audit->add_option("--remove", remove_labels,
                    "facet labels to remove (repeatable)");
  audit->add_option("--mode", mode_name, "strict or weak (default strict)");
  add_common(app.add_subcommand("footprints",
                                "upper half-space wall catalog"));
  add_common(app.add_subcommand("verify-all", "run the full check suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "gen-p") return run_gen_p(json_path);

    const Context ctx = load_context(input_path, threads_flag);
    RunReport rep;
    rep.command = name;
    rep.input_digest = ctx.input_digest;

    if (name == "gram")
      gram_checks(rep, ctx);
    else if (name == "check-right-angled")
      right_angled_checks(rep, ctx);
    else if (name == "verify-lemma32")
      cube_rule_checks(rep, ctx);
    else if (name == "ridges")
      ridge_query(rep, ctx, facet_label);
    else if (name == "vertices")
      vertex_checks(rep, ctx);
    else if (name == "finite-volume")
      volume_checks(rep, ctx);
    else if (name == "symmetries")
      symmetry_query(rep, ctx);
    else if (name == "verify-lemma33")
      family_action_checks(rep, ctx);
    else if (name == "ends")
      census_checks(rep, ctx, hrap::disjoint_mode_from_name(mode_name));
    else if (name == "audit")
      audit_checks(rep, ctx, remove_labels,
                   hrap::disjoint_mode_from_name(mode_name));
    else if (name == "footprints")
      footprint_checks(rep, ctx);
    else if (name == "verify-all")
      verify_all_checks(rep, ctx);

    rep.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out)
        throw std::invalid_argument("cannot write file: " + json_path);
      out << hrap::cli::report_to_json_text(rep);
    }
    std::cout << hrap::cli::report_to_text(rep);
    return rep.pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
