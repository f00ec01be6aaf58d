#include "hrap/ends.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hrap/linalg.hpp"

namespace hrap {

const char* disjoint_mode_name(DisjointMode mode) {
  return mode == DisjointMode::Strict ? "strict" : "weak";
}

DisjointMode disjoint_mode_from_name(const std::string& name) {
  if (name == "strict") return DisjointMode::Strict;
  if (name == "weak") return DisjointMode::Weak;
  throw std::invalid_argument("unknown disjointness mode \"" + name +
                              "\" (want strict or weak)");
}

namespace {

void check_indices(const PolytopeSpec& p, const std::vector<int>& removed,
                   const char* who) {
  const int n = static_cast<int>(p.facets.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int i : removed) {
    if (i < 0 || i >= n)
      throw std::invalid_argument(std::string(who) + ": facet index " +
                                  std::to_string(i) + " out of range");
    if (seen[static_cast<size_t>(i)])
      throw std::invalid_argument(std::string(who) + ": facet index " +
                                  std::to_string(i) + " listed twice");
    seen[static_cast<size_t>(i)] = 1;
  }
}

bool pair_disjoint(const PolytopeSpec& p, int i, int j, DisjointMode mode) {
  const PositionKind k =
      mutual_position(p.facets[static_cast<size_t>(i)],
                      p.facets[static_cast<size_t>(j)])
          .kind;
  return k == PositionKind::Ultraparallel ||
         (mode == DisjointMode::Weak && k == PositionKind::Parallel);
}

}  // namespace

bool selection_valid(const PolytopeSpec& p, const FacetSelection& f) {
  check_indices(p, f.removed, "selection_valid");
  for (size_t a = 0; a < f.removed.size(); ++a)
    for (size_t b = a + 1; b < f.removed.size(); ++b)
      if (!pair_disjoint(p, f.removed[a], f.removed[b], f.mode)) return false;
  return true;
}

std::vector<std::vector<bool>> disjointness_graph(const PolytopeSpec& p,
                                                  DisjointMode mode) {
  const int n = static_cast<int>(p.facets.size());
  std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n),
                                                       false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pair_disjoint(p, i, j, mode))
        adj[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
  return adj;
}

namespace {

// Bron-Kerbosch with the max-degree pivot. cand and excl stay sorted.
void expand(const std::vector<std::vector<bool>>& adj, std::vector<int>& cur,
            std::vector<int> cand, std::vector<int> excl,
            std::vector<std::vector<int>>& out) {
  if (cand.empty() && excl.empty()) {
    out.push_back(cur);
    return;
  }
  int pivot = -1;
  size_t best = 0;
  for (const std::vector<int>* side : {&cand, &excl})
    for (int u : *side) {
      size_t deg = 0;
      for (int v : cand)
        if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) ++deg;
      if (pivot == -1 || deg > best) {
        pivot = u;
        best = deg;
      }
    }
  const std::vector<int> branches = [&] {
    std::vector<int> b;
    for (int v : cand)
      if (!adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)])
        b.push_back(v);
    return b;
  }();
  for (int v : branches) {
    std::vector<int> sub_cand, sub_excl;
    for (int w : cand)
      if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)])
        sub_cand.push_back(w);
    for (int w : excl)
      if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)])
        sub_excl.push_back(w);
    cur.push_back(v);
    expand(adj, cur, std::move(sub_cand), std::move(sub_excl), out);
    cur.pop_back();
    cand.erase(std::find(cand.begin(), cand.end(), v));
    const auto pos = std::lower_bound(excl.begin(), excl.end(), v);
    excl.insert(pos, v);
  }
}

}  // namespace

std::vector<FacetSelection> maximal_disjoint_sets(const PolytopeSpec& p,
                                                  DisjointMode mode) {
  const std::vector<std::vector<bool>> adj = disjointness_graph(p, mode);
  const int n = static_cast<int>(p.facets.size());
  std::vector<int> cand(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cand[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> cliques;
  std::vector<int> cur;
  expand(adj, cur, std::move(cand), {}, cliques);
  for (std::vector<int>& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  std::vector<FacetSelection> out;
  out.reserve(cliques.size());
  for (std::vector<int>& c : cliques)
    out.push_back({std::move(c), mode});
  return out;
}

Census classify_census(const PolytopeSpec& p, DisjointMode mode,
                       const SymmetryGroup& g) {
  const std::vector<FacetSelection> sets = maximal_disjoint_sets(p, mode);
  Census census;
  census.mode = mode;
  census.set_count = static_cast<long long>(sets.size());
  std::map<std::vector<int>, long long> buckets;
  std::vector<int> image;
  for (const FacetSelection& f : sets) {
    std::vector<int> key = f.removed;
    for (const FacetPermutation& e : g.elements) {
      image.clear();
      for (int i : f.removed)
        image.push_back(e.mapping[static_cast<size_t>(i)]);
      std::sort(image.begin(), image.end());
      if (image < key) key = image;
    }
    ++buckets[key];
  }
  for (auto& [rep, size] : buckets)
    census.orbits.push_back({rep, size});
  return census;
}

EndsPresentation ends_presentation(const PolytopeSpec& p,
                                   const FacetSelection& f) {
  if (!selection_valid(p, f))
    throw std::invalid_argument(
        "ends_presentation: selection is not pairwise disjoint under its "
        "mode");
  const int n = static_cast<int>(p.facets.size());
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int i : f.removed) removed[static_cast<size_t>(i)] = 1;

  EndsPresentation out;
  std::vector<int> kept;
  for (int i = 0; i < n; ++i) {
    if (removed[static_cast<size_t>(i)]) {
      out.boundary.push_back(p.facets[static_cast<size_t>(i)].label);
    } else {
      kept.push_back(i);
      out.presentation.generators.push_back(
          p.facets[static_cast<size_t>(i)].label);
    }
  }
  for (size_t a = 0; a < kept.size(); ++a)
    for (size_t b = a + 1; b < kept.size(); ++b)
      if (lorentz_inner(p.facets[static_cast<size_t>(kept[a])].vector,
                        p.facets[static_cast<size_t>(kept[b])].vector)
              .is_zero())
        out.presentation.commuting_pairs.emplace_back(static_cast<int>(a),
                                                      static_cast<int>(b));
  return out;
}

DeterminationReport determination_audit(const PolytopeSpec& p,
                                        const FacetSelection& f) {
  check_indices(p, f.removed, "determination_audit");
  DeterminationReport rep;
  rep.selection = f;
  rep.selection.removed = f.removed;
  std::sort(rep.selection.removed.begin(), rep.selection.removed.end());
  rep.selection_pairwise_disjoint = selection_valid(p, rep.selection);

  const int n = static_cast<int>(p.facets.size());
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int i : f.removed) removed[static_cast<size_t>(i)] = 1;
  auto is_wall = [&](int i) {
    const Family fam = p.facets[static_cast<size_t>(i)].family;
    return fam == Family::TypeI || fam == Family::TypeII;
  };

  std::vector<int> anchors;  // the fixed wall block
  for (int i = 0; i < n; ++i)
    if (is_wall(i) && !removed[static_cast<size_t>(i)]) anchors.push_back(i);

  std::vector<int> targets;
  for (int i = 0; i < n; ++i)
    if (is_wall(i) && !removed[static_cast<size_t>(i)]) targets.push_back(i);
  for (int i = 0; i < n; ++i)
    if (!is_wall(i) && !removed[static_cast<size_t>(i)]) targets.push_back(i);

  rep.all_determined = true;
  for (int t : targets) {
    DeterminationRecord rec;
    rec.facet = t;
    std::vector<Vec> rows;
    std::vector<int> tangent;
    for (int a : anchors) {
      if (a == t) continue;
      const Exact g = lorentz_inner(p.facets[static_cast<size_t>(t)].vector,
                                    p.facets[static_cast<size_t>(a)].vector);
      if (g.is_zero()) {
        rows.push_back(p.facets[static_cast<size_t>(a)].vector);
        rec.fixed_neighbors_used.push_back(a);
      } else if ((g.abs() - Exact(1)).sign() == 0) {
        tangent.push_back(a);
      }
    }
    rec.constraint_rank = rank_of(rows);
    if (rec.constraint_rank < p.d && !tangent.empty()) {
      rec.used_tangency = true;
      for (int a : tangent) {
        rows.push_back(p.facets[static_cast<size_t>(a)].vector);
        rec.fixed_neighbors_used.push_back(a);
      }
      rec.constraint_rank = rank_of(rows);
    }
    rec.locally_determined = rec.constraint_rank >= p.d;
    if (!rec.locally_determined) rep.all_determined = false;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace hrap
