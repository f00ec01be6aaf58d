#include "hrap/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hrap {

bool FacetPermutation::is_identity() const {
  for (size_t i = 0; i < mapping.size(); ++i)
    if (mapping[i] != static_cast<int>(i)) return false;
  return true;
}

FacetPermutation compose(const FacetPermutation& a,
                         const FacetPermutation& b) {
  if (a.mapping.size() != b.mapping.size())
    throw std::invalid_argument("compose: size mismatch");
  FacetPermutation out;
  out.mapping.resize(a.mapping.size());
  for (size_t i = 0; i < b.mapping.size(); ++i)
    out.mapping[i] = a.mapping[static_cast<size_t>(b.mapping[i])];
  out.order = perm_order(out.mapping);
  return out;
}

FacetPermutation inverse_perm(const FacetPermutation& a) {
  FacetPermutation out;
  out.mapping.resize(a.mapping.size());
  for (size_t i = 0; i < a.mapping.size(); ++i)
    out.mapping[static_cast<size_t>(a.mapping[i])] = static_cast<int>(i);
  out.order = a.order;
  return out;
}

int perm_order(const std::vector<int>& mapping) {
  const size_t n = mapping.size();
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(mapping[j])) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

namespace {

// Gram entries mapped to small ids so the search compares ints, not Exact.
struct GramTable {
  int n = 0;
  std::vector<int> id;  // n*n
  int at(int i, int j) const {
    return id[static_cast<size_t>(i * n + j)];
  }
};

GramTable gram_ids(const PolytopeSpec& p) {
  const std::vector<std::vector<Exact>> g = gram_matrix(p);
  GramTable t;
  t.n = static_cast<int>(g.size());
  t.id.resize(static_cast<size_t>(t.n) * static_cast<size_t>(t.n));
  std::map<Exact, int> codes;
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      const auto [it, fresh] = codes.emplace(
          g[static_cast<size_t>(i)][static_cast<size_t>(j)],
          static_cast<int>(codes.size()));
      t.id[static_cast<size_t>(i * t.n + j)] = it->second;
      (void)fresh;
    }
  return t;
}

void search(const GramTable& g, std::vector<int>& image,
            std::vector<char>& used, int depth,
            const std::vector<std::vector<int>>& candidates,
            std::vector<FacetPermutation>& out) {
  if (depth == g.n) {
    FacetPermutation e;
    e.mapping = image;
    e.order = perm_order(image);
    out.push_back(std::move(e));
    return;
  }
  for (int c : candidates[static_cast<size_t>(depth)]) {
    if (used[static_cast<size_t>(c)]) continue;
    bool ok = true;
    for (int j = 0; j < depth; ++j)
      if (g.at(image[static_cast<size_t>(j)], c) != g.at(j, depth)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    image[static_cast<size_t>(depth)] = c;
    used[static_cast<size_t>(c)] = 1;
    search(g, image, used, depth + 1, candidates, out);
    used[static_cast<size_t>(c)] = 0;
  }
}

}  // namespace

SymmetryGroup automorphisms(const PolytopeSpec& p) {
  const int n = static_cast<int>(p.facets.size());
  {
    std::vector<Vec> normals;
    normals.reserve(static_cast<size_t>(n));
    for (const FacetNormal& f : p.facets) normals.push_back(f.vector);
    if (rank_of(normals) != p.d + 1)
      throw std::invalid_argument(
          "automorphisms: facet normals do not span the ambient space");
  }
  const GramTable g = gram_ids(p);

  // A vertex can only map to one with the same multiset of incident weights.
  std::vector<std::multiset<int>> row_sig(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) row_sig[static_cast<size_t>(i)].insert(g.at(i, j));
  std::vector<std::vector<int>> candidates(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c)
      if (row_sig[static_cast<size_t>(i)] == row_sig[static_cast<size_t>(c)])
        candidates[static_cast<size_t>(i)].push_back(c);

  SymmetryGroup grp;
  std::vector<int> image(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  search(g, image, used, 0, candidates, grp.elements);
  grp.order = static_cast<long long>(grp.elements.size());

  // Greedy generating set: walk the element list, adding anything outside
  // the subgroup generated so far.
  std::set<std::vector<int>> closed;
  FacetPermutation ident;
  ident.mapping.resize(static_cast<size_t>(n));
  std::iota(ident.mapping.begin(), ident.mapping.end(), 0);
  closed.insert(ident.mapping);
  auto close_over = [&](const std::vector<FacetPermutation>& gens) {
    std::vector<std::vector<int>> fresh(closed.begin(), closed.end());
    while (!fresh.empty()) {
      std::vector<std::vector<int>> next;
      for (const std::vector<int>& m : fresh)
        for (const FacetPermutation& e : gens) {
          FacetPermutation t;
          t.mapping = m;
          const std::vector<int> prod = compose(e, t).mapping;
          if (closed.insert(prod).second) next.push_back(prod);
        }
      fresh = std::move(next);
    }
  };
  for (const FacetPermutation& e : grp.elements) {
    if (closed.count(e.mapping)) continue;
    grp.generators.push_back(e);
    close_over(grp.generators);
  }
  return grp;
}

Mat realize_matrix(const FacetPermutation& sigma, const PolytopeSpec& p) {
  const int n = static_cast<int>(p.facets.size());
  const int dim = p.d + 1;
  if (static_cast<int>(sigma.mapping.size()) != n)
    throw std::invalid_argument("realize_matrix: permutation size mismatch");

  // Pick a basis of normals greedily by rank growth.
  std::vector<int> basis;
  std::vector<Vec> picked;
  for (int i = 0; i < n && static_cast<int>(basis.size()) < dim; ++i) {
    picked.push_back(p.facets[static_cast<size_t>(i)].vector);
    if (rank_of(picked) == static_cast<int>(picked.size()))
      basis.push_back(i);
    else
      picked.pop_back();
  }
  if (static_cast<int>(basis.size()) != dim)
    throw std::invalid_argument(
        "realize_matrix: facet normals do not span the ambient space");

  Mat b(dim), c(dim);
  for (int col = 0; col < dim; ++col) {
    const int i = basis[static_cast<size_t>(col)];
    const Vec& from = p.facets[static_cast<size_t>(i)].vector;
    const Vec& to =
        p.facets[static_cast<size_t>(sigma.mapping[static_cast<size_t>(i)])]
            .vector;
    for (int r = 0; r < dim; ++r) {
      b.at(r, col) = from[static_cast<size_t>(r)];
      c.at(r, col) = to[static_cast<size_t>(r)];
    }
  }
  const std::optional<Mat> b_inv = b.inverse();
  if (!b_inv)
    throw std::runtime_error("realize_matrix: singular basis matrix");
  const Mat a = c * *b_inv;

  for (int i = 0; i < n; ++i) {
    const Vec got = a.apply(p.facets[static_cast<size_t>(i)].vector);
    const Vec& want =
        p.facets[static_cast<size_t>(sigma.mapping[static_cast<size_t>(i)])]
            .vector;
    if (got != want)
      throw std::runtime_error(
          "realize_matrix: permutation is not Gram-preserving (no linear "
          "realization maps facet " +
          p.facets[static_cast<size_t>(i)].label + " correctly)");
  }
  const Mat j = lorentz_form(p.d);
  if (!(a * j * a.transpose() == j))
    throw std::runtime_error(
        "realize_matrix: realization does not preserve the bilinear form");
  return a;
}

FamilyActionReport family_action_report(const SymmetryGroup& g,
                                        const PolytopeSpec& p) {
  FamilyActionReport rep;
  rep.walls_closed = true;
  rep.edges_closed = true;
  rep.swaps_wholesale = true;
  auto fam = [&](int i) { return p.facets[static_cast<size_t>(i)].family; };
  auto is_wall = [&](int i) {
    return fam(i) == Family::TypeI || fam(i) == Family::TypeII;
  };
  for (const FacetPermutation& e : g.elements) {
    ++rep.elements_checked;
    bool moved_i_to_ii = false;
    bool all_i_to_ii = true;
    bool all_ii_to_i = true;
    for (size_t i = 0; i < e.mapping.size(); ++i) {
      const int img = e.mapping[i];
      if (is_wall(static_cast<int>(i)) != is_wall(img) ||
          (fam(static_cast<int>(i)) == Family::TypeIII) !=
              (fam(img) == Family::TypeIII)) {
        (is_wall(static_cast<int>(i)) ? rep.walls_closed : rep.edges_closed) =
            false;
        if (rep.violations.size() < 16)
          rep.violations.push_back(
              "element maps " + p.facets[i].label + " (family " +
              std::string(family_name(fam(static_cast<int>(i)))) + ") to " +
              p.facets[static_cast<size_t>(img)].label + " (family " +
              std::string(family_name(fam(img))) + ")");
        continue;
      }
      if (fam(static_cast<int>(i)) == Family::TypeI) {
        if (fam(img) == Family::TypeII)
          moved_i_to_ii = true;
        else
          all_i_to_ii = false;
      } else if (fam(static_cast<int>(i)) == Family::TypeII &&
                 fam(img) != Family::TypeI) {
        all_ii_to_i = false;
      }
    }
    if (moved_i_to_ii) {
      if (all_i_to_ii && all_ii_to_i) {
        ++rep.wall_swap_count;
      } else {
        rep.swaps_wholesale = false;
        if (rep.violations.size() < 16)
          rep.violations.push_back(
              "element mixes TypeI and TypeII without swapping them "
              "wholesale");
      }
    }
  }
  return rep;
}

namespace {

// Cube facet index for a wall facet: axis-major, positive sign first, so the
// built-in layout gives cube k for facets k and k+8.
int cube_index_of(const FacetNormal& f) {
  const CubeFace face = phi(f);
  if (face.dim() != 3)
    throw std::invalid_argument("phi_star: facet " + f.label +
                                " does not cover a cube of the diagram");
  for (int a = 0; a < 4; ++a)
    if (face.sign[static_cast<size_t>(a)] != 0)
      return 2 * a + (face.sign[static_cast<size_t>(a)] > 0 ? 0 : 1);
  throw std::logic_error("phi_star: empty cube face");
}

}  // namespace

std::vector<int> phi_star(const FacetPermutation& sigma,
                          const PolytopeSpec& p) {
  const int n = static_cast<int>(p.facets.size());
  if (static_cast<int>(sigma.mapping.size()) != n)
    throw std::invalid_argument("phi_star: permutation size mismatch");
  std::vector<std::vector<int>> preimages(8);
  for (int i = 0; i < n; ++i) {
    const Family f = p.facets[static_cast<size_t>(i)].family;
    if (f == Family::TypeI || f == Family::TypeII)
      preimages[static_cast<size_t>(
                    cube_index_of(p.facets[static_cast<size_t>(i)]))]
          .push_back(i);
  }
  std::vector<int> out(8, -1);
  for (int cube = 0; cube < 8; ++cube) {
    if (preimages[static_cast<size_t>(cube)].empty())
      throw std::invalid_argument("phi_star: cube " + std::to_string(cube) +
                                  " has no wall facet over it");
    for (int i : preimages[static_cast<size_t>(cube)]) {
      const FacetNormal& img =
          p.facets[static_cast<size_t>(sigma.mapping[static_cast<size_t>(i)])];
      if (img.family != Family::TypeI && img.family != Family::TypeII)
        throw std::invalid_argument(
            "phi_star: permutation is not family-coherent (wall facet " +
            p.facets[static_cast<size_t>(i)].label + " maps to " + img.label +
            ")");
      const int target = cube_index_of(img);
      if (out[static_cast<size_t>(cube)] == -1)
        out[static_cast<size_t>(cube)] = target;
      else if (out[static_cast<size_t>(cube)] != target)
        throw std::invalid_argument(
            "phi_star: wall facets over cube " + std::to_string(cube) +
            " map over different cubes, action is not well defined");
    }
  }
  return out;
}

CubeActionSummary phi_star_over(const SymmetryGroup& g,
                                const PolytopeSpec& p) {
  CubeActionSummary out;
  std::set<std::vector<int>> images;
  std::vector<int> ident(8);
  std::iota(ident.begin(), ident.end(), 0);
  for (const FacetPermutation& e : g.elements) {
    const std::vector<int> act = phi_star(e, p);
    images.insert(act);
    if (act == ident) out.kernel.push_back(e);
  }
  out.image_order = static_cast<long long>(images.size());
  return out;
}

std::vector<std::vector<int>> orbits(const SymmetryGroup& g,
                                     int facet_count) {
  std::vector<int> owner(static_cast<size_t>(facet_count), -1);
  std::vector<std::vector<int>> out;
  const std::vector<FacetPermutation>& gens =
      g.generators.empty() ? g.elements : g.generators;
  for (int s = 0; s < facet_count; ++s) {
    if (owner[static_cast<size_t>(s)] != -1) continue;
    std::vector<int> orbit{s};
    owner[static_cast<size_t>(s)] = static_cast<int>(out.size());
    for (size_t k = 0; k < orbit.size(); ++k)
      for (const FacetPermutation& e : gens) {
        const int img = e.mapping[static_cast<size_t>(orbit[k])];
        if (owner[static_cast<size_t>(img)] == -1) {
          owner[static_cast<size_t>(img)] = static_cast<int>(out.size());
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace hrap
