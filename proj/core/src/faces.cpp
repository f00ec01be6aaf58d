#include "hrap/faces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace hrap {

namespace {

void require_right_angled(const PolytopeSpec& p, const char* who) {
  const RightAngledCheck chk = is_right_angled(p);
  if (!chk.right_angled)
    throw std::invalid_argument(
        std::string(who) + ": polytope is not right-angled (facets \"" +
        p.facets[static_cast<size_t>(chk.counterexample->first)].label +
        "\", \"" +
        p.facets[static_cast<size_t>(chk.counterexample->second)].label +
        "\")");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Gram signs reduced to the trichotomy: 0 orthogonal, 1 tangent (|g| = 1),
// 2 ultraparallel, 3 intersecting at a nonzero angle.
enum : char { kOrth = 0, kPar = 1, kUltra = 2, kSkew = 3 };

std::vector<std::vector<char>> pair_classes(const PolytopeSpec& p) {
  const size_t n = p.facets.size();
  std::vector<std::vector<char>> cls(n, std::vector<char>(n, kOrth));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const Exact g =
          lorentz_inner(p.facets[i].vector, p.facets[j].vector);
      char c;
      if (g.is_zero())
        c = kOrth;
      else {
        const int cmp = (g.abs() - Exact(1)).sign();
        c = cmp == 0 ? kPar : (cmp > 0 ? kUltra : kSkew);
      }
      cls[i][j] = cls[j][i] = c;
    }
  return cls;
}

// Scales to coprime integer coefficients with positive last coordinate.
Vec canonical_ray(Vec ray) {
  if (ray.back().sign() < 0)
    for (Exact& x : ray) x = -x;
  Int l(1);
  for (const Exact& x : ray) {
    l = lcm(l, denominator(x.rat()));
    l = lcm(l, denominator(x.root2()));
  }
  Int g(0);
  std::vector<std::pair<Int, Int>> parts;
  parts.reserve(ray.size());
  for (const Exact& x : ray) {
    Int a = numerator(x.rat()) * (l / denominator(x.rat()));
    Int b = numerator(x.root2()) * (l / denominator(x.root2()));
    g = gcd(g, a);
    g = gcd(g, b);
    parts.emplace_back(std::move(a), std::move(b));
  }
  if (g.is_zero()) g = 1;
  Vec out;
  out.reserve(ray.size());
  for (auto& [a, b] : parts) out.emplace_back(Rat(a / g), Rat(b / g));
  return out;
}

struct RayData {
  VertexRay::Kind kind;
  std::vector<int> incident;
};

// Checks a candidate kernel ray against every half-space and records it.
void consider_ray(const PolytopeSpec& p, const Vec& kernel_ray,
                  std::map<Vec, RayData>& found) {
  const Exact norm = lorentz_inner(kernel_ray, kernel_ray);
  const int cls = norm.sign();
  if (cls > 0) return;  // space-like
  Vec ray = canonical_ray(kernel_ray);
  if (found.count(ray)) return;
  std::vector<int> incident;
  for (size_t j = 0; j < p.facets.size(); ++j) {
    const int s = lorentz_inner(ray, p.facets[j].vector).sign();
    if (s > 0) return;  // outside this half-space
    if (s == 0) incident.push_back(static_cast<int>(j));
  }
  found.emplace(std::move(ray),
                RayData{cls < 0 ? VertexRay::Kind::Finite
                                : VertexRay::Kind::Ideal,
                        std::move(incident)});
}

void search_subsets(const PolytopeSpec& p,
                    const std::vector<std::vector<char>>& cls, int first,
                    std::map<Vec, RayData>& found) {
  const int n = static_cast<int>(p.facets.size());
  const int d = p.d;
  std::vector<int> chosen{first};
  std::vector<std::vector<int>> cand_stack;
  {
    std::vector<int> cand;
    for (int j = first + 1; j < n; ++j)
      if (cls[static_cast<size_t>(first)][static_cast<size_t>(j)] != kUltra)
        cand.push_back(j);
    cand_stack.push_back(std::move(cand));
  }
  std::vector<Vec> normals;

  // Depth-first over ascending index subsets whose pairs all avoid the
  // ultraparallel class.
  struct Frame {
    size_t next = 0;
  };
  std::vector<Frame> frames{{}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    const std::vector<int>& cand = cand_stack.back();
    if (static_cast<int>(chosen.size()) == d) {
      normals.clear();
      for (int idx : chosen)
        normals.push_back(p.facets[static_cast<size_t>(idx)].vector);
      const std::vector<Vec> kernel = solve_kernel(normals);
      if (kernel.size() == 1) consider_ray(p, kernel[0], found);
      frames.pop_back();
      cand_stack.pop_back();
      chosen.pop_back();
      continue;
    }
    if (f.next >= cand.size()) {
      frames.pop_back();
      cand_stack.pop_back();
      chosen.pop_back();
      continue;
    }
    const int pick = cand[f.next++];
    std::vector<int> narrowed;
    for (size_t k = f.next; k < cand.size(); ++k) {
      const int j = cand[k];
      if (cls[static_cast<size_t>(pick)][static_cast<size_t>(j)] != kUltra)
        narrowed.push_back(j);
    }
    chosen.push_back(pick);
    cand_stack.push_back(std::move(narrowed));
    frames.push_back({});
  }
}

}  // namespace

std::vector<VertexRay> enumerate_vertices(const PolytopeSpec& p, int threads) {
  require_right_angled(p, "enumerate_vertices");
  const int n = static_cast<int>(p.facets.size());
  if (n < p.d) return {};
  const std::vector<std::vector<char>> cls = pair_classes(p);

  const int workers = std::min(resolve_threads(threads), std::max(1, n));
  std::vector<std::map<Vec, RayData>> partial(static_cast<size_t>(workers));
  auto run = [&](int w) {
    for (int first = w; first < n; first += workers)
      search_subsets(p, cls, first, partial[static_cast<size_t>(w)]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (std::thread& t : pool) t.join();
  }

  std::map<Vec, RayData> merged;
  for (auto& part : partial)
    for (auto& [ray, data] : part) merged.emplace(ray, std::move(data));

  std::vector<VertexRay> out;
  out.reserve(merged.size());
  for (auto& [ray, data] : merged)
    out.push_back({ray, data.kind, std::move(data.incident)});
  return out;
}

int ridge_count(const PolytopeSpec& p, int facet_index) {
  if (facet_index < 0 || facet_index >= static_cast<int>(p.facets.size()))
    throw std::out_of_range("ridge_count: facet index out of range");
  require_right_angled(p, "ridge_count");
  int count = 0;
  for (size_t j = 0; j < p.facets.size(); ++j) {
    if (static_cast<int>(j) == facet_index) continue;
    if (mutual_position(p.facets[static_cast<size_t>(facet_index)],
                        p.facets[j])
            .kind == PositionKind::Intersecting)
      ++count;
  }
  return count;
}

namespace {

std::string label_list(const PolytopeSpec& p, const std::vector<int>& idx) {
  std::string s = "{";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += p.facets[static_cast<size_t>(idx[i])].label;
  }
  return s + "}";
}

// Ray-oracle method: collect the pairwise-orthogonal (d-1)-subsets of each
// vertex's incident set (orthonormal normals, hence rank d-1: genuine edge
// directions) and demand each lies in exactly two vertices.
bool edges_have_two_ends(const PolytopeSpec& p,
                         const std::vector<VertexRay>& rays,
                         const std::vector<std::vector<char>>& cls,
                         std::vector<std::string>& failures) {
  std::map<std::vector<int>, int> edge_count;
  std::vector<int> cur;
  for (const VertexRay& v : rays) {
    const std::vector<int>& inc = v.incident_facets;
    const std::function<void(size_t)> grow = [&](size_t start) {
      if (static_cast<int>(cur.size()) == p.d - 1) {
        ++edge_count[cur];
        return;
      }
      for (size_t k = start; k < inc.size(); ++k) {
        bool ok = true;
        for (int c : cur)
          if (cls[static_cast<size_t>(c)][static_cast<size_t>(inc[k])] !=
              kOrth) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(inc[k]);
        grow(k + 1);
        cur.pop_back();
      }
    };
    grow(0);
  }
  bool ok = true;
  for (const auto& [edge, cnt] : edge_count)
    if (cnt != 2) {
      ok = false;
      if (failures.size() < 32)
        failures.push_back("edge " + label_list(p, edge) + " lies in " +
                           std::to_string(cnt) + " vertices");
    }
  return ok && !rays.empty();
}

}  // namespace

VolumeCertificate finite_volume_certificate(const PolytopeSpec& p,
                                            int threads) {
  require_right_angled(p, "finite_volume_certificate");
  VolumeCertificate cert;
  const std::vector<std::vector<char>> cls = pair_classes(p);
  const std::vector<VertexRay> rays = enumerate_vertices(p, threads);
  for (const VertexRay& v : rays)
    (v.kind == VertexRay::Kind::Ideal ? cert.ideal_vertex_count
                                      : cert.finite_vertex_count)++;

  cert.method_ray_oracle = edges_have_two_ends(p, rays, cls, cert.failures);
  if (rays.empty())
    cert.failures.push_back("no finite or ideal vertices found");

  // Combinatorial method, independent of the enumeration above.
  const int n = static_cast<int>(p.facets.size());
  std::vector<std::vector<int>> orth(static_cast<size_t>(n));
  std::vector<std::vector<int>> par(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cls[static_cast<size_t>(i)][static_cast<size_t>(j)] == kOrth)
        orth[static_cast<size_t>(i)].push_back(j);
      else if (cls[static_cast<size_t>(i)][static_cast<size_t>(j)] == kPar)
        par[static_cast<size_t>(i)].push_back(j);
    }
  auto is_orth = [&](int a, int b) {
    return cls[static_cast<size_t>(a)][static_cast<size_t>(b)] == kOrth;
  };

  std::vector<std::vector<int>> small_cliques;
  {
    std::vector<int> cur;
    // ascending DFS for all (d-1)-cliques of the orthogonality graph
    std::function<void(int)> grow = [&](int start) {
      if (static_cast<int>(cur.size()) == p.d - 1) {
        small_cliques.push_back(cur);
        return;
      }
      for (int v = start; v < n; ++v) {
        bool ok = true;
        for (int c : cur)
          if (!is_orth(c, v)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(v);
        grow(v + 1);
        cur.pop_back();
      }
    };
    grow(0);
  }

  bool all_two = true;
  for (const std::vector<int>& e : small_cliques) {
    int ext = 0;
    for (int v = 0; v < n; ++v) {
      if (std::find(e.begin(), e.end(), v) != e.end()) continue;
      bool ok = true;
      for (int c : e)
        if (!is_orth(c, v)) {
          ok = false;
          break;
        }
      if (ok) ++ext;
    }
    // parabolic completions: one tangent partner per member, partners
    // pairwise orthogonal
    std::vector<std::vector<int>> cands;
    for (int m : e) {
      std::vector<int> c;
      for (int q : par[static_cast<size_t>(m)]) {
        bool ok = true;
        for (int other : e)
          if (other != m && !is_orth(q, other)) {
            ok = false;
            break;
          }
        if (ok) c.push_back(q);
      }
      cands.push_back(std::move(c));
    }
    std::vector<int> picked;
    std::function<int(size_t)> assign = [&](size_t level) -> int {
      if (level == cands.size()) return 1;
      int total = 0;
      for (int q : cands[level]) {
        bool ok = true;
        for (int c : picked)
          if (!is_orth(c, q)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        picked.push_back(q);
        total += assign(level + 1);
        picked.pop_back();
      }
      return total;
    };
    ext += assign(0);
    if (ext != 2) {
      all_two = false;
      if (cert.failures.size() < 32)
        cert.failures.push_back("diagram " + label_list(p, e) + " has " +
                                std::to_string(ext) +
                                " vertex extensions (want 2)");
    }
  }
  cert.method_combinatorial = !small_cliques.empty() && all_two;
  if (small_cliques.empty())
    cert.failures.push_back("no elliptic subdiagram of rank d-1 exists");

  if (cert.method_combinatorial != cert.method_ray_oracle) {
    std::string msg =
        "finite-volume methods disagree: ray oracle says " +
        std::string(cert.method_ray_oracle ? "finite" : "infinite") +
        ", subdiagram criterion says " +
        std::string(cert.method_combinatorial ? "finite" : "infinite");
    for (const std::string& f : cert.failures) msg += "; " + f;
    throw std::runtime_error(msg);
  }
  cert.finite_volume = cert.method_ray_oracle && cert.method_combinatorial;
  return cert;
}

std::vector<long long> f_vector(const PolytopeSpec& p, int threads) {
  const VolumeCertificate cert = finite_volume_certificate(p, threads);
  if (!cert.finite_volume)
    throw std::invalid_argument("f_vector: polytope has infinite volume");
  const std::vector<VertexRay> rays = enumerate_vertices(p, threads);

  std::set<std::vector<int>> faces;
  for (const VertexRay& v : rays) faces.insert(v.incident_facets);
  // closure under pairwise intersection; every member is the facet set of an
  // actual face (the facets containing some nonempty set of vertices)
  std::vector<std::vector<int>> fresh(faces.begin(), faces.end());
  while (!fresh.empty()) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& a : fresh)
      for (const std::vector<int>& b : faces) {
        std::vector<int> meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(meet));
        if (meet.empty() || faces.count(meet)) continue;
        next.push_back(meet);
      }
    for (std::vector<int>& m : next) faces.insert(std::move(m));
    fresh = std::move(next);
  }

  std::vector<long long> counts(static_cast<size_t>(p.d), 0);
  std::vector<Vec> normals;
  for (const std::vector<int>& face : faces) {
    normals.clear();
    for (int idx : face)
      normals.push_back(p.facets[static_cast<size_t>(idx)].vector);
    const int k = p.d - rank_of(normals);
    if (k >= 0 && k < p.d) ++counts[static_cast<size_t>(k)];
  }
  return counts;
}

bool ideal_vertex_box_link(const PolytopeSpec& p, const VertexRay& v) {
  if (v.kind != VertexRay::Kind::Ideal) return false;
  const int m = static_cast<int>(v.incident_facets.size());
  if (m != 2 * (p.d - 1)) return false;
  int pairs = 0;
  for (int a = 0; a < m; ++a) {
    int partners = 0;
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const Exact g = lorentz_inner(
          p.facets[static_cast<size_t>(v.incident_facets[static_cast<size_t>(a)])]
              .vector,
          p.facets[static_cast<size_t>(v.incident_facets[static_cast<size_t>(b)])]
              .vector);
      if (g.is_zero()) continue;
      if ((g.abs() - Exact(1)).sign() == 0)
        ++partners;
      else
        return false;  // ultraparallel or skew pair inside the link
    }
    if (partners != 1) return false;
    ++pairs;
  }
  return pairs == m;  // every member found exactly one tangent partner
}

}  // namespace hrap
