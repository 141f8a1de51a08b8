#include "gwps3/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "gwps3/errors.hpp"
#include "gwps3/lattice.hpp"

namespace gwps3 {

namespace {

using Vec3 = std::array<std::int64_t, 3>;

std::int64_t content(const Vec3& v) {
  return gcd64(gcd64(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::int64_t det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace

bool Ray::is_primitive() const { return content(v) == 1; }

std::string Ray::to_string() const {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
  return os.str();
}

Fan wps_fan(const WeightedSpace& w) {
  if (w.coord_count() != 4) throw DimensionError("expected 4 weights");
  const auto& a = w.weights();
  Fan fan;
  fan.rays.resize(4);
  const bool divisible = a[1] % a[0] == 0 && a[2] % a[0] == 0 && a[3] % a[0] == 0;
  if (divisible) {
    fan.rays[0] = Ray{{-a[1] / a[0], -a[2] / a[0], -a[3] / a[0]}};
    fan.rays[1] = Ray{{1, 0, 0}};
    fan.rays[2] = Ray{{0, 1, 0}};
    fan.rays[3] = Ray{{0, 0, 1}};
  } else {
    std::vector<Int> av;
    for (auto x : a) av.emplace_back(static_cast<long>(x));
    const IntMat u = unimodular_clearing(av);  // rows 1..3 annihilate a
    for (int j = 0; j < 4; ++j) {
      Vec3 v{};
      for (int i = 0; i < 3; ++i) {
        const Int& e = u[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)];
        if (!e.fits_slong_p()) throw ConsistencyError("ray entry overflow");
        v[static_cast<std::size_t>(i)] = e.get_si();
      }
      fan.rays[static_cast<std::size_t>(j)] = Ray{v};
    }
  }
  for (int i = 0; i < 3; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < 4; ++j)
      s += a[static_cast<std::size_t>(j)] * fan.rays[static_cast<std::size_t>(j)].v[static_cast<std::size_t>(i)];
    if (s != 0) throw ConsistencyError("fan rays do not annihilate the weights");
  }
  for (const auto& r : fan.rays)
    if (!r.is_primitive()) throw ConsistencyError("non-primitive fan ray for " + w.label());
  fan.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return fan;
}

BlowupResult weighted_blowup(const Fan& fan, const std::vector<int>& cone,
                             const std::vector<std::int64_t>& coeffs) {
  if (cone.empty() || cone.size() != coeffs.size())
    throw DomainError("cone and coefficient lists must match and be nonempty");
  std::vector<int> face = cone;
  std::sort(face.begin(), face.end());
  if (std::adjacent_find(face.begin(), face.end()) != face.end())
    throw DomainError("repeated ray index in cone");
  for (auto i : face)
    if (i < 0 || static_cast<std::size_t>(i) >= fan.rays.size())
      throw DomainError("ray index out of range");
  for (auto c : coeffs)
    if (c < 1) throw DomainError("blow-up coefficients must be positive");
  const bool is_face = std::any_of(
      fan.max_cones.begin(), fan.max_cones.end(), [&](const std::vector<int>& mc) {
        return std::includes(mc.begin(), mc.end(), face.begin(), face.end());
      });
  if (!is_face) throw DomainError("index set is not a face of the fan");

  Vec3 u{0, 0, 0};
  for (std::size_t k = 0; k < face.size(); ++k) {
    // coefficients follow the sorted index order
    const Vec3& r = fan.rays[static_cast<std::size_t>(face[k])].v;
    for (int i = 0; i < 3; ++i) u[static_cast<std::size_t>(i)] += coeffs[k] * r[static_cast<std::size_t>(i)];
  }
  if (is_zero(u)) throw DomainError("zero subdivision ray");
  const std::int64_t m = content(u);
  Ray nr{{u[0] / m, u[1] / m, u[2] / m}};
  for (const auto& r : fan.rays)
    if (r == nr) throw DomainError("degenerate subdivision: ray " + nr.to_string() + " already in fan");

  BlowupResult out;
  out.new_ray = nr;
  out.multiplicity = m;
  out.fan.rays = fan.rays;
  out.fan.rays.push_back(nr);
  out.new_ray_index = static_cast<int>(out.fan.rays.size()) - 1;
  for (const auto& mc : fan.max_cones) {
    const bool contains = std::includes(mc.begin(), mc.end(), face.begin(), face.end());
    if (!contains) {
      out.fan.max_cones.push_back(mc);
      continue;
    }
    for (auto drop : face) {
      std::vector<int> nc;
      for (auto i : mc)
        if (i != drop) nc.push_back(i);
      nc.push_back(out.new_ray_index);
      std::sort(nc.begin(), nc.end());
      out.fan.max_cones.push_back(nc);
    }
  }
  std::sort(out.fan.max_cones.begin(), out.fan.max_cones.end());
  return out;
}

bool fans_set_equal(const Fan& a, const Fan& b) {
  if (a.rays.size() != b.rays.size() || a.max_cones.size() != b.max_cones.size())
    return false;
  auto canon = [](const Fan& f) {
    std::vector<std::vector<Vec3>> cones;
    for (const auto& mc : f.max_cones) {
      std::vector<Vec3> c;
      for (auto i : mc) c.push_back(f.rays[static_cast<std::size_t>(i)].v);
      std::sort(c.begin(), c.end());
      cones.push_back(c);
    }
    std::sort(cones.begin(), cones.end());
    std::vector<Vec3> rays;
    for (const auto& r : f.rays) rays.push_back(r.v);
    std::sort(rays.begin(), rays.end());
    return std::make_pair(rays, cones);
  };
  return canon(a) == canon(b);
}

namespace {

// Inward facet normals of a simplicial 3-cone; row k vanishes on every
// generator except the k-th, on which it is positive.
std::array<Vec3, 3> facet_normals(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  const std::int64_t d = det3(r0, r1, r2);
  if (d == 0) throw ConsistencyError("degenerate maximal cone");
  std::array<Vec3, 3> n = {cross(r1, r2), cross(r2, r0), cross(r0, r1)};
  if (d < 0)
    for (auto& v : n)
      for (auto& x : v) x = -x;
  return n;
}

bool in_cone(const std::array<Vec3, 3>& normals, const Vec3& x) {
  for (const auto& n : normals)
    if (dot(n, x) < 0) return false;
  return true;
}

// x in cone(span of the rays indexed by `common`), exactly.
bool in_common_face(const Fan& fan, const std::vector<int>& common, const Vec3& x) {
  if (is_zero(x)) return true;
  if (common.empty()) return false;
  if (common.size() == 1) {
    const Vec3& r = fan.rays[static_cast<std::size_t>(common[0])].v;
    return is_zero(cross(x, r)) && dot(x, r) > 0;
  }
  if (common.size() >= 3) return true;  // intersection inside a full max cone
  const Vec3& r0 = fan.rays[static_cast<std::size_t>(common[0])].v;
  const Vec3& r1 = fan.rays[static_cast<std::size_t>(common[1])].v;
  const Vec3 nrm = cross(r0, r1);
  if (dot(nrm, x) != 0) return false;  // not even in the spanning plane
  // x = alpha r0 + beta r1; compare signs via 2x2 minors on a suitable pair
  // of coordinates.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const std::int64_t den = r0[static_cast<std::size_t>(i)] * r1[static_cast<std::size_t>(j)] -
                               r0[static_cast<std::size_t>(j)] * r1[static_cast<std::size_t>(i)];
      if (den == 0) continue;
      const std::int64_t na = x[static_cast<std::size_t>(i)] * r1[static_cast<std::size_t>(j)] -
                              x[static_cast<std::size_t>(j)] * r1[static_cast<std::size_t>(i)];
      const std::int64_t nb = r0[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)] -
                              r0[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(i)];
      // alpha = na/den, beta = nb/den
      if (den > 0) return na >= 0 && nb >= 0;
      return na <= 0 && nb <= 0;
    }
  return false;
}

}  // namespace

void validate_fan(const Fan& fan) {
  for (const auto& r : fan.rays) {
    if (is_zero(r.v)) throw ConsistencyError("zero ray");
    if (!r.is_primitive()) throw ConsistencyError("non-primitive ray " + r.to_string());
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    for (std::size_t j = i + 1; j < fan.rays.size(); ++j)
      if (fan.rays[i] == fan.rays[j])
        throw ConsistencyError("duplicate ray " + fan.rays[i].to_string());

  std::vector<std::array<Vec3, 3>> normals;
  for (const auto& mc : fan.max_cones) {
    if (mc.size() != 3) throw ConsistencyError("maximal cone is not 3-dimensional");
    for (auto i : mc)
      if (i < 0 || static_cast<std::size_t>(i) >= fan.rays.size())
        throw ConsistencyError("cone ray index out of range");
    if (!std::is_sorted(mc.begin(), mc.end()))
      throw ConsistencyError("cone indices not sorted");
    normals.push_back(facet_normals(fan.rays[static_cast<std::size_t>(mc[0])].v,
                                    fan.rays[static_cast<std::size_t>(mc[1])].v,
                                    fan.rays[static_cast<std::size_t>(mc[2])].v));
  }

  // Pairwise: the intersection of two maximal cones must be the cone on
  // their common rays. Extreme rays of the intersection are either rays of
  // one cone lying in the other, or facet-plane pairwise intersections.
  for (std::size_t p = 0; p < fan.max_cones.size(); ++p) {
    for (std::size_t q = p + 1; q < fan.max_cones.size(); ++q) {
      const auto& cp = fan.max_cones[p];
      const auto& cq = fan.max_cones[q];
      if (cp == cq) throw ConsistencyError("duplicate maximal cone");
      std::vector<int> common;
      std::set_intersection(cp.begin(), cp.end(), cq.begin(), cq.end(),
                            std::back_inserter(common));
      std::vector<Vec3> candidates;
      for (auto i : cp) candidates.push_back(fan.rays[static_cast<std::size_t>(i)].v);
      for (auto i : cq) candidates.push_back(fan.rays[static_cast<std::size_t>(i)].v);
      for (const auto& n1 : normals[p])
        for (const auto& n2 : normals[q]) {
          Vec3 d = cross(n1, n2);
          if (is_zero(d)) continue;
          candidates.push_back(d);
          candidates.push_back({-d[0], -d[1], -d[2]});
        }
      for (const auto& x : candidates) {
        if (!in_cone(normals[p], x) || !in_cone(normals[q], x)) continue;
        if (!in_common_face(fan, common, x))
          throw ConsistencyError("maximal cones " + std::to_string(p) + " and " +
                                 std::to_string(q) + " do not meet in a common face");
      }
    }
  }
}

GradedCoords::GradedCoords(std::vector<std::string> n,
                           std::vector<std::vector<std::int64_t>> g)
    : names(std::move(n)), grading(std::move(g)) {
  if (names.empty()) throw DomainError("graded coordinates need names");
  if (grading.empty() || grading.size() > 2)
    throw DomainError("grading must have 1 or 2 rows");
  for (const auto& row : grading)
    if (row.size() != names.size())
      throw DomainError("grading row length does not match coordinates");
}

GradedCoords GradedCoords::simple(std::vector<std::string> names,
                                  std::vector<std::int64_t> weights) {
  std::vector<std::vector<std::int64_t>> g{std::move(weights)};
  return GradedCoords(std::move(names), std::move(g));
}

MonomialMap::MonomialMap(GradedCoords source, WeightedSpace target,
                         std::vector<ExpVec> exponents)
    : source_(std::move(source)), target_(std::move(target)), exponents_(std::move(exponents)) {
  if (exponents_.size() != target_.coord_count())
    throw DimensionError("one source monomial per target coordinate required");
  const std::size_t k = source_.rows();
  std::vector<std::vector<std::int64_t>> deg(exponents_.size(), std::vector<std::int64_t>(k, 0));
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j].size() != source_.size())
      throw DimensionError("exponent column length does not match source");
    for (auto e : exponents_[j])
      if (e < 0) throw DomainError("negative exponent in monomial map");
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < source_.size(); ++i)
        deg[j][r] += exponents_[j][i] * source_.grading[r][i];
  }
  // deg[j] must equal w_j * c for a single rational k-vector c.
  const std::int64_t w0 = target_.weight(0);
  for (std::size_t r = 0; r < k; ++r)
    pattern_.push_back(make_rat(Int(static_cast<long>(deg[0][r])), Int(static_cast<long>(w0))));
  for (std::size_t j = 0; j < exponents_.size(); ++j)
    for (std::size_t r = 0; r < k; ++r)
      if (Int(static_cast<long>(deg[j][r])) * w0 !=
          Int(static_cast<long>(deg[0][r])) * target_.weight(j))
        throw HomogeneityError("monomial map coordinate " + std::to_string(j) +
                               " breaks the common degree pattern");
}

MonomialMap MonomialMap::identity(const GradedCoords& coords, const WeightedSpace& target) {
  if (coords.size() != target.coord_count())
    throw DimensionError("identity needs matching coordinate counts");
  std::vector<ExpVec> cols;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    ExpVec e(coords.size(), 0);
    e[j] = 1;
    cols.push_back(e);
  }
  return MonomialMap(coords, target, cols);
}

std::string MonomialMap::coordinate_text(std::size_t j) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (exponents_[j][i] == 0) continue;
    if (any) os << " ";
    any = true;
    os << source_.names[i];
    if (exponents_[j][i] != 1) os << "^" << exponents_[j][i];
  }
  if (!any) os << "1";
  return os.str();
}

std::string MonomialMap::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (j) os << " : ";
    os << coordinate_text(j);
  }
  os << "]";
  return os.str();
}

MonomialMap compose(const MonomialMap& g, const MonomialMap& f) {
  if (g.source().rows() != 1)
    throw CompositionError("outer map must have a single-row source grading");
  if (g.source().grading[0] != f.target().weights())
    throw CompositionError("target of inner map does not match source of outer map");
  if (g.source().size() != f.target().coord_count())
    throw CompositionError("coordinate counts do not match");
  std::vector<ExpVec> cols;
  for (std::size_t j = 0; j < g.target().coord_count(); ++j) {
    ExpVec col(f.source().size(), 0);
    for (std::size_t i = 0; i < g.source().size(); ++i) {
      const std::int64_t k = g.exponents()[j][i];
      if (k == 0) continue;
      for (std::size_t s = 0; s < f.source().size(); ++s)
        col[s] += k * f.exponents()[i][s];
    }
    cols.push_back(col);
  }
  return MonomialMap(f.source(), g.target(), cols);
}

std::optional<std::vector<Rat>> equal_mod_scaling(const MonomialMap& f,
                                                  const MonomialMap& g) {
  if (f.source() != g.source() || f.target() != g.target())
    throw DomainError("equal_mod_scaling needs matching source and target");
  const std::size_t n = f.source().size();
  const std::size_t m = f.target().coord_count();
  std::vector<std::vector<std::int64_t>> d(m, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      d[j][i] = f.exponents()[j][i] - g.exponents()[j][i];
  const std::int64_t w0 = f.target().weight(0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (Int(static_cast<long>(d[j][i])) * w0 !=
          Int(static_cast<long>(d[0][i])) * f.target().weight(j))
        return std::nullopt;
  std::vector<Rat> c;
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(make_rat(Int(static_cast<long>(d[0][i])), Int(static_cast<long>(w0))));
  return c;
}

SparsePoly pullback(const MonomialMap& f, const SparsePoly& p) {
  if (f.source().rows() != 1)
    throw DomainError("pullback implemented for single-row source gradings");
  if (p.coords().weights != f.target().weights())
    throw DomainError("polynomial weights do not match the map target");
  if (!p.is_zero() && !p.homogeneous_degree())
    throw HomogeneityError("pullback input must be weighted-homogeneous");
  CoordSystem src(f.source().names, f.source().grading[0]);
  SparsePoly out(src);
  for (const auto& [e, c] : p.terms()) {
    ExpVec t(src.size(), 0);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      for (std::size_t i = 0; i < src.size(); ++i)
        t[i] += e[j] * f.exponents()[j][i];
    }
    out = out + SparsePoly::term(src, t, c);
  }
  return out;
}

std::vector<std::string> coordinate_indeterminacy_points(const MonomialMap& f) {
  if (f.source().rows() != 1)
    throw DomainError("indeterminacy points reported for single-row gradings");
  std::vector<std::string> out;
  for (std::size_t c = 0; c < f.source().size(); ++c) {
    bool has_pure_power = false;
    for (const auto& col : f.exponents()) {
      bool pure = col[c] > 0;
      for (std::size_t i = 0; pure && i < col.size(); ++i)
        if (i != c && col[i] != 0) pure = false;
      if (pure) {
        has_pure_power = true;
        break;
      }
    }
    if (!has_pure_power) out.push_back(f.source().names[c]);
  }
  return out;
}

std::string fan_to_json(const Fan& fan) {
  nlohmann::json j;
  j["rays"] = nlohmann::json::array();
  for (const auto& r : fan.rays) j["rays"].push_back({r.v[0], r.v[1], r.v[2]});
  j["cones"] = fan.max_cones;
  return j.dump(2) + "\n";
}

Fan fan_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Fan fan;
  for (const auto& r : j.at("rays"))
    fan.rays.push_back(Ray{{r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>(),
                            r.at(2).get<std::int64_t>()}});
  for (const auto& c : j.at("cones"))
    fan.max_cones.push_back(c.get<std::vector<int>>());
  return fan;
}

std::string map_to_json(const MonomialMap& f) {
  nlohmann::json j;
  j["source_names"] = f.source().names;
  j["source_grading"] = f.source().grading;
  j["target_weights"] = f.target().weights();
  j["exponents"] = f.exponents();
  nlohmann::json coords = nlohmann::json::array();
  for (std::size_t k = 0; k < f.target().coord_count(); ++k)
    coords.push_back(f.coordinate_text(k));
  j["coordinates"] = coords;
  return j.dump(2) + "\n";
}

MonomialMap map_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GradedCoords src(j.at("source_names").get<std::vector<std::string>>(),
                   j.at("source_grading").get<std::vector<std::vector<std::int64_t>>>());
  WeightedSpace tgt(j.at("target_weights").get<std::vector<std::int64_t>>());
  std::vector<ExpVec> cols = j.at("exponents").get<std::vector<ExpVec>>();
  return MonomialMap(src, tgt, cols);
}

}  // namespace gwps3
