#include "hrap/polytope.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <json.hpp>

namespace hrap {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::TypeI: return "I";
    case Family::TypeII: return "II";
    case Family::TypeIII: return "III";
    default: return "Other";
  }
}

Family family_from_name(std::string_view name) {
  if (name == "I") return Family::TypeI;
  if (name == "II") return Family::TypeII;
  if (name == "III") return Family::TypeIII;
  if (name == "Other") return Family::Other;
  throw std::invalid_argument("unknown facet family \"" + std::string(name) +
                              "\"");
}

FacetNormal make_facet(std::string label, Family family, Vec vector) {
  FacetNormal f;
  f.label = std::move(label);
  f.family = family;
  f.a_projection.assign(vector.begin(), vector.end() - 2);
  f.vector = std::move(vector);
  return f;
}

void validate_polytope(const PolytopeSpec& p) {
  if (p.d < 2) throw std::invalid_argument("polytope dimension must be >= 2");
  for (size_t i = 0; i < p.facets.size(); ++i) {
    const FacetNormal& f = p.facets[i];
    if (static_cast<int>(f.vector.size()) != p.d + 1)
      throw std::invalid_argument("facet \"" + f.label +
                                  "\": vector length != d+1");
    if (lorentz_inner(f.vector, f.vector) != Exact(1))
      throw std::invalid_argument("facet \"" + f.label +
                                  "\": normal is not unit space-like");
    for (size_t j = 0; j < i; ++j)
      if (p.facets[j].vector == f.vector)
        throw std::invalid_argument("facets \"" + p.facets[j].label +
                                    "\" and \"" + f.label +
                                    "\" share a normal vector");
  }
}

PolytopeSpec build_polytope_P() {
  PolytopeSpec p;
  p.d = 5;
  const std::array<char, 4> axes{'X', 'Y', 'Z', 'W'};

  auto wall = [&](int axis, int sign, Family fam) {
    Vec v(6, Exact(0));
    v[static_cast<size_t>(axis)] = Exact(sign);
    if (fam == Family::TypeI) {
      v[4] = Exact(1);
      v[5] = Exact(1);
    } else {
      v[4] = exact(-1, 2);
      v[5] = exact(1, 2);
    }
    std::string label = fam == Family::TypeII ? "S_" : "";
    label += axes[static_cast<size_t>(axis)];
    label += sign > 0 ? '+' : '-';
    return make_facet(std::move(label), fam, std::move(v));
  };
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) p.facets.push_back(wall(axis, sign, Family::TypeI));
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) p.facets.push_back(wall(axis, sign, Family::TypeII));

  std::vector<std::array<int, 4>> tris;
  for (int zero = 0; zero < 4; ++zero)
    for (int mask = 0; mask < 8; ++mask) {
      std::array<int, 4> a{};
      int bit = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == zero) continue;
        a[static_cast<size_t>(j)] = (mask >> bit) & 1 ? 1 : -1;
        ++bit;
      }
      tris.push_back(a);
    }
  std::sort(tris.begin(), tris.end(),
            [](const auto& a, const auto& b) { return a > b; });
  for (const auto& a : tris) {
    Vec v(6);
    for (int j = 0; j < 4; ++j) v[static_cast<size_t>(j)] = Exact(a[static_cast<size_t>(j)]);
    v[4] = exact(1, 2);
    v[5] = exact(3, 2);
    std::string label = "S(";
    for (int j = 0; j < 4; ++j) {
      if (j) label += ',';
      label += std::to_string(a[static_cast<size_t>(j)]);
    }
    label += ')';
    p.facets.push_back(make_facet(std::move(label), Family::TypeIII, std::move(v)));
  }
  return p;
}

std::string_view position_name(PositionKind k) {
  switch (k) {
    case PositionKind::Intersecting: return "intersecting";
    case PositionKind::Parallel: return "parallel";
    default: return "ultraparallel";
  }
}

MutualPosition mutual_position(const FacetNormal& f, const FacetNormal& g) {
  if (f.vector == g.vector)
    throw std::invalid_argument("mutual_position: identical normals (\"" +
                                f.label + "\", \"" + g.label + "\")");
  MutualPosition out;
  out.inner = lorentz_inner(f.vector, g.vector);
  const int c = (out.inner.abs() - Exact(1)).sign();
  if (c < 0) {
    out.kind = PositionKind::Intersecting;
    out.cos_angle = -out.inner;
  } else {
    out.kind = c == 0 ? PositionKind::Parallel : PositionKind::Ultraparallel;
  }
  return out;
}

std::vector<std::vector<Exact>> gram_matrix(const PolytopeSpec& p) {
  const size_t n = p.facets.size();
  std::vector<std::vector<Exact>> g(n, std::vector<Exact>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      g[i][j] = lorentz_inner(p.facets[i].vector, p.facets[j].vector);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

RightAngledCheck is_right_angled(const PolytopeSpec& p) {
  RightAngledCheck out{true, std::nullopt, Exact(0)};
  const size_t n = p.facets.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const Exact inner =
          lorentz_inner(p.facets[i].vector, p.facets[j].vector);
      if (inner.is_zero()) continue;
      if ((inner.abs() - Exact(1)).sign() < 0) {
        out.right_angled = false;
        out.counterexample = {static_cast<int>(i), static_cast<int>(j)};
        out.counterexample_inner = inner;
        return out;
      }
    }
  return out;
}

CoxeterPresentation coxeter_presentation(const PolytopeSpec& p) {
  const RightAngledCheck chk = is_right_angled(p);
  if (!chk.right_angled)
    throw std::invalid_argument(
        "coxeter_presentation: polytope is not right-angled (facets \"" +
        p.facets[static_cast<size_t>(chk.counterexample->first)].label +
        "\", \"" +
        p.facets[static_cast<size_t>(chk.counterexample->second)].label +
        "\")");
  CoxeterPresentation out;
  for (const FacetNormal& f : p.facets) out.generators.push_back(f.label);
  const size_t n = p.facets.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (lorentz_inner(p.facets[i].vector, p.facets[j].vector).is_zero())
        out.commuting_pairs.emplace_back(static_cast<int>(i),
                                         static_cast<int>(j));
  return out;
}

std::string polytope_to_json_text(const PolytopeSpec& p) {
  nlohmann::ordered_json j;
  j["dimension"] = p.d;
  j["facets"] = nlohmann::ordered_json::array();
  for (const FacetNormal& f : p.facets) {
    nlohmann::ordered_json jf;
    jf["label"] = f.label;
    jf["family"] = family_name(f.family);
    nlohmann::ordered_json vec = nlohmann::ordered_json::array();
    for (const Exact& x : f.vector) vec.push_back(x.str());
    jf["vector"] = std::move(vec);
    j["facets"].push_back(std::move(jf));
  }
  return j.dump(2) + "\n";
}

PolytopeSpec polytope_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("polytope JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dimension") || !j.contains("facets"))
    throw std::invalid_argument(
        "polytope JSON: expected an object with \"dimension\" and \"facets\"");
  PolytopeSpec p;
  if (!j["dimension"].is_number_integer())
    throw std::invalid_argument("polytope JSON: \"dimension\" must be an integer");
  p.d = j["dimension"].get<int>();
  if (!j["facets"].is_array())
    throw std::invalid_argument("polytope JSON: \"facets\" must be an array");
  for (const auto& jf : j["facets"]) {
    if (!jf.is_object() || !jf.contains("vector") || !jf["vector"].is_array())
      throw std::invalid_argument("polytope JSON: facet without a vector");
    Vec v;
    for (const auto& coord : jf["vector"]) {
      if (coord.is_string())
        v.push_back(Exact::parse(coord.get<std::string>()));
      else if (coord.is_number_integer())
        v.push_back(Exact(Rat(coord.get<long long>())));
      else
        throw std::invalid_argument(
            "polytope JSON: vector entries must be exact-scalar strings");
    }
    if (v.size() < 2)
      throw std::invalid_argument("polytope JSON: vector too short");
    std::string label = jf.value("label", "F" + std::to_string(p.facets.size()));
    Family fam = family_from_name(jf.value("family", "Other"));
    p.facets.push_back(make_facet(std::move(label), fam, std::move(v)));
  }
  validate_polytope(p);
  return p;
}

}  // namespace hrap
