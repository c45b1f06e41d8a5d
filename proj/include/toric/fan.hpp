#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

// Rational polyhedral fans over Z^n given by primitive rays and full-dimensional
// maximal cones (as ray index sets).

#include <toric/linalg.hpp>
#include <toric/lp.hpp>
#include <toric/polyhedra.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace toric {

class FanError : public ToricError {
 public:
  using ToricError::ToricError;
};

using RaySet = std::vector<std::size_t>;  ///< sorted ascending

inline std::string format_ray_set(const RaySet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

/// A facet of a maximal cone: inward normal and the cone's rays lying on it.
struct ConeFacet {
  LatticeVector normal;
  RaySet rays;
};

class Fan {
 public:
  Fan() = default;

  /// Structural checks only (dimensions, index ranges, nonzero rays). Each
  /// cone's index set is sorted and the cone list is sorted lexicographically.
  /// Geometric validity is reported by validate().
  Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<RaySet> max_cones)
      : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (dim_ == 0) throw FanError("fan: lattice dimension must be positive");
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (rays_[i].dim() != dim_) throw FanError("fan: ray " + std::to_string(i) + " has wrong dimension");
      if (rays_[i].is_zero()) throw FanError("fan: ray " + std::to_string(i) + " is zero");
    }
    for (auto& c : max_cones_) {
      if (c.empty()) throw FanError("fan: empty maximal cone");
      std::sort(c.begin(), c.end());
      if (std::adjacent_find(c.begin(), c.end()) != c.end())
        throw FanError("fan: repeated ray index in cone " + format_ray_set(c));
      if (c.back() >= rays_.size())
        throw FanError("fan: ray index " + std::to_string(c.back()) + " out of range");
    }
    std::sort(max_cones_.begin(), max_cones_.end());
    facets_.reserve(max_cones_.size());
    for (const auto& c : max_cones_) {
      HCone h = dual_description(VCone(dim_, cone_rays_of(c)));
      std::vector<ConeFacet> fs;
      for (const auto& a : h.inequalities()) {
        RaySet on;
        for (std::size_t i : c)
          if (dot(a, rays_[i]) == 0) on.push_back(i);
        fs.push_back({a, std::move(on)});
      }
      std::sort(fs.begin(), fs.end(), [](const ConeFacet& x, const ConeFacet& y) { return x.rays < y.rays; });
      hcones_.push_back(std::move(h));
      facets_.push_back(std::move(fs));
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
  std::size_t n_rays() const { return rays_.size(); }
  const std::vector<RaySet>& max_cones() const { return max_cones_; }
  const RaySet& max_cone(std::size_t k) const { return max_cones_.at(k); }
  std::size_t n_max_cones() const { return max_cones_.size(); }

  std::vector<LatticeVector> cone_rays(std::size_t k) const { return cone_rays_of(max_cones_.at(k)); }
  VCone vcone(std::size_t k) const { return VCone(dim_, cone_rays(k)); }
  /// Inequality description of maximal cone k (computed at construction).
  const HCone& hcone(std::size_t k) const { return hcones_.at(k); }
  const std::vector<ConeFacet>& facets(std::size_t k) const { return facets_.at(k); }

  bool is_simplicial_cone(std::size_t k) const { return max_cones_.at(k).size() == dim_; }

  std::optional<std::size_t> find_ray(const LatticeVector& v) const {
    auto it = std::find(rays_.begin(), rays_.end(), v);
    if (it == rays_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - rays_.begin());
  }

  std::optional<std::size_t> find_cone(RaySet s) const {
    std::sort(s.begin(), s.end());
    auto it = std::lower_bound(max_cones_.begin(), max_cones_.end(), s);
    if (it == max_cones_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - max_cones_.begin());
  }

  /// Indices of maximal cones containing x.
  std::vector<std::size_t> cones_containing(const RationalVector& x) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < max_cones_.size(); ++k)
      if (contains_point(hcones_[k], x)) out.push_back(k);
    return out;
  }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
  }
  friend bool operator!=(const Fan& a, const Fan& b) { return !(a == b); }

 private:
  std::vector<LatticeVector> cone_rays_of(const RaySet& c) const {
    std::vector<LatticeVector> out;
    out.reserve(c.size());
    for (std::size_t i : c) out.push_back(rays_[i]);
    return out;
  }

  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<RaySet> max_cones_;
  std::vector<HCone> hcones_;
  std::vector<std::vector<ConeFacet>> facets_;
};

/// A codimension-one cone shared by two maximal cones.
struct Wall {
  std::size_t cone_a = 0;
  std::size_t cone_b = 0;
  RaySet wall_rays;
  std::optional<std::size_t> opposite_a;  ///< ray of cone_a off the wall, when cone_a is simplicial
  std::optional<std::size_t> opposite_b;
};

struct FanReport {
  bool valid = false;
  bool complete = false;
  bool smooth = false;
  bool simplicial = false;
  std::size_t n_rays = 0;
  std::size_t n_max_cones = 0;
  std::size_t n_walls = 0;
  std::vector<std::string> failures;
};

namespace detail {

inline bool subset(const RaySet& a, const RaySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Separation test: two pointed cones meet in the common face spanned by
/// their shared rays T iff some u vanishes on T, is positive on the other
/// rays of the first cone and negative on the other rays of the second.
inline bool meet_in_common_face(const Fan& f, const RaySet& a, const RaySet& b) {
  const std::size_t dim = f.dim();
  LinearProgram lp(dim);
  for (std::size_t j = 0; j < dim; ++j) lp.free_var[j] = true;
  auto add = [&](std::size_t i, Sense sense, int rhs) {
    lp.add(to_rational(f.ray(i)), sense, Rational(rhs));
  };
  for (std::size_t i : a) {
    if (std::binary_search(b.begin(), b.end(), i)) add(i, Sense::Equal, 0);
    else add(i, Sense::GreaterEq, 1);
  }
  for (std::size_t i : b)
    if (!std::binary_search(a.begin(), a.end(), i)) add(i, Sense::LessEq, -1);
  return find_feasible_point(std::move(lp)).has_value();
}

}  // namespace detail

/// Checks ray primitivity and distinctness, pointed full-dimensional cones
/// whose listed rays are all extreme, non-containment of index sets, and the
/// face-to-face condition. Fills `valid`, the counts and `failures`.
inline FanReport validate(const Fan& f) {
  FanReport rep;
  rep.n_rays = f.n_rays();
  rep.n_max_cones = f.n_max_cones();
  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };

  for (std::size_t i = 0; i < f.n_rays(); ++i) {
    if (!f.ray(i).is_primitive()) {
      std::ostringstream os;
      os << "ray " << i << " " << f.ray(i) << " is not primitive";
      fail(os.str());
    }
    for (std::size_t j = 0; j < i; ++j)
      if (f.ray(i) == f.ray(j)) {
        std::ostringstream os;
        os << "rays " << j << " and " << i << " are equal " << f.ray(i);
        fail(os.str());
      }
  }

  bool cones_ok = true;
  for (std::size_t k = 0; k < f.n_max_cones(); ++k) {
    const auto& c = f.max_cone(k);
    const std::string name = "cone " + format_ray_set(c);
    if (rank(f.cone_rays(k), f.dim()) != f.dim()) {
      fail(name + " is not full-dimensional");
      cones_ok = false;
      continue;
    }
    if (rank(f.hcone(k).inequalities(), f.dim()) != f.dim()) {
      fail(name + " is not pointed");
      cones_ok = false;
      continue;
    }
    // Each listed ray must be extreme: it lies on at least dim-1 facets whose
    // normals span a hyperplane.
    for (std::size_t i : c) {
      std::vector<LatticeVector> tight;
      for (const auto& fc : f.facets(k))
        if (std::binary_search(fc.rays.begin(), fc.rays.end(), i)) tight.push_back(fc.normal);
      if (rank(tight, f.dim()) + 1 != f.dim()) {
        fail(name + ": ray " + std::to_string(i) + " is not an extreme ray of the cone");
        cones_ok = false;
      }
    }
  }

  for (std::size_t a = 0; a < f.n_max_cones(); ++a)
    for (std::size_t b = 0; b < f.n_max_cones(); ++b)
      if (a != b && detail::subset(f.max_cone(a), f.max_cone(b)))
        fail("cone " + format_ray_set(f.max_cone(a)) + " is contained in cone " +
             format_ray_set(f.max_cone(b)));

  if (cones_ok) {
    for (std::size_t a = 0; a < f.n_max_cones(); ++a)
      for (std::size_t b = a + 1; b < f.n_max_cones(); ++b)
        if (!detail::meet_in_common_face(f, f.max_cone(a), f.max_cone(b)))
          fail("cones " + format_ray_set(f.max_cone(a)) + " and " + format_ray_set(f.max_cone(b)) +
               " do not meet in a common face");
  }
  rep.valid = rep.failures.empty();
  return rep;
}

namespace detail {

/// facet ray set -> maximal cones having it as a facet
inline std::map<RaySet, std::vector<std::size_t>> facet_incidence(const Fan& f) {
  std::map<RaySet, std::vector<std::size_t>> inc;
  for (std::size_t k = 0; k < f.n_max_cones(); ++k)
    for (const auto& fc : f.facets(k)) inc[fc.rays].push_back(k);
  return inc;
}

}  // namespace detail

/// Complete iff valid and every facet of every maximal cone is shared by
/// exactly two maximal cones.
inline bool is_complete(const Fan& f) {
  if (f.n_max_cones() == 0 || !validate(f).valid) return false;
  for (const auto& [rays, cones] : detail::facet_incidence(f))
    if (cones.size() != 2) return false;
  return true;
}

struct SmoothnessReport {
  bool smooth = false;
  bool simplicial = false;
  /// |det| of each maximal cone's ray matrix; nullopt for non-simplicial cones.
  std::vector<std::optional<Integer>> determinants;
};

inline SmoothnessReport smoothness(const Fan& f) {
  SmoothnessReport rep;
  rep.smooth = true;
  rep.simplicial = true;
  for (std::size_t k = 0; k < f.n_max_cones(); ++k) {
    if (!f.is_simplicial_cone(k)) {
      rep.determinants.push_back(std::nullopt);
      rep.smooth = rep.simplicial = false;
      continue;
    }
    Integer d = abs_value(det(IntMatrix::from_rows(f.cone_rays(k), f.dim())));
    if (d != 1) rep.smooth = false;
    rep.determinants.push_back(d);
  }
  return rep;
}

/// Every maximal cone simplicial and unimodular.
inline bool is_smooth(const Fan& f) { return smoothness(f).smooth; }

/// All walls of a complete fan, sorted by (cone_a, cone_b, wall_rays).
/// Throws FanError naming the first facet not shared by exactly two cones.
inline std::vector<Wall> walls(const Fan& f) {
  std::vector<Wall> out;
  for (const auto& [rays, cones] : detail::facet_incidence(f)) {
    if (cones.size() != 2)
      throw FanError("facet " + format_ray_set(rays) + " lies in " + std::to_string(cones.size()) +
                     " maximal cone(s); the fan is not complete");
    Wall w;
    w.cone_a = cones[0];
    w.cone_b = cones[1];
    w.wall_rays = rays;
    auto opposite = [&](std::size_t k) -> std::optional<std::size_t> {
      if (!f.is_simplicial_cone(k)) return std::nullopt;
      for (std::size_t i : f.max_cone(k))
        if (!std::binary_search(rays.begin(), rays.end(), i)) return i;
      return std::nullopt;
    };
    w.opposite_a = opposite(w.cone_a);
    w.opposite_b = opposite(w.cone_b);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Wall& x, const Wall& y) {
    return std::tie(x.cone_a, x.cone_b, x.wall_rays) < std::tie(y.cone_a, y.cone_b, y.wall_rays);
  });
  return out;
}

/// Validity, completeness, smoothness and wall count in one report.
inline FanReport check_fan(const Fan& f) {
  FanReport rep = validate(f);
  auto smooth = smoothness(f);
  rep.simplicial = smooth.simplicial;
  rep.smooth = smooth.smooth;
  for (std::size_t k = 0; k < f.n_max_cones(); ++k) {
    const std::string name = "cone " + format_ray_set(f.max_cone(k));
    if (!smooth.determinants[k]) rep.failures.push_back(name + " is not simplicial");
    else if (*smooth.determinants[k] != 1)
      rep.failures.push_back(name + " is not unimodular (|det| = " + smooth.determinants[k]->str() + ")");
  }
  if (rep.valid) {
    rep.complete = f.n_max_cones() > 0;
    for (const auto& [rays, cones] : detail::facet_incidence(f)) {
      if (cones.size() == 2) {
        ++rep.n_walls;
      } else {
        rep.complete = false;
        rep.failures.push_back("facet " + format_ray_set(rays) + " lies in " + std::to_string(cones.size()) +
                               " maximal cone(s)");
      }
    }
    if (!rep.complete) rep.n_walls = 0;
  } else {
    rep.failures.push_back("completeness not checked: fan is invalid");
  }
  return rep;
}

/// Star subdivision at a new primitive ray v in the support of f. Cones
/// containing v are replaced by cone(F, v) for each facet F of the cone not
/// containing v; v is appended as the last ray.
inline Fan stellar_subdivide(const Fan& f, const LatticeVector& v) {
  if (v.dim() != f.dim()) throw FanError("stellar_subdivide: ray has wrong dimension");
  if (!v.is_primitive()) throw FanError("stellar_subdivide: ray is not primitive");
  if (f.find_ray(v)) throw FanError("stellar_subdivide: ray is already a ray of the fan");
  auto containing = f.cones_containing(to_rational(v));
  if (containing.empty()) throw FanError("stellar_subdivide: ray lies outside the support of the fan");

  const std::size_t new_index = f.n_rays();
  std::vector<RaySet> cones;
  for (std::size_t k = 0; k < f.n_max_cones(); ++k) {
    if (!std::binary_search(containing.begin(), containing.end(), k)) {
      cones.push_back(f.max_cone(k));
      continue;
    }
    for (const auto& fc : f.facets(k)) {
      if (dot(fc.normal, v) == 0) continue;
      RaySet c = fc.rays;
      c.push_back(new_index);
      cones.push_back(std::move(c));
    }
  }
  auto rays = f.rays();
  rays.push_back(v);
  return Fan(f.dim(), std::move(rays), std::move(cones));
}

// ---------------------------------------------------------------------------
// Builtin fans

/// The fourteen rays v1..v14 of the threefold construction, in order.
inline const std::array<LatticeVector, 14>& threefold_rays() {
  static const std::array<LatticeVector, 14> rays = {
      LatticeVector{1, 1, 1},   LatticeVector{-1, 1, 1},  LatticeVector{-1, -1, 1}, LatticeVector{1, -1, 1},
      LatticeVector{1, 0, -1},  LatticeVector{0, 1, -1},  LatticeVector{-1, 0, -1}, LatticeVector{0, -1, -1},
      LatticeVector{0, 0, -1},  LatticeVector{0, 0, 1},   LatticeVector{1, 0, 1},   LatticeVector{0, 1, 1},
      LatticeVector{-1, 0, 1},  LatticeVector{0, -1, 1},
  };
  return rays;
}

namespace detail {

/// Converts 1-based index lists to 0-based ray sets.
inline std::vector<RaySet> one_based(std::initializer_list<std::initializer_list<std::size_t>> cones) {
  std::vector<RaySet> out;
  for (const auto& c : cones) {
    RaySet s;
    for (std::size_t i : c) s.push_back(i - 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

inline Fan sigma_fan() {
  const auto& v = threefold_rays();
  return Fan(3, std::vector<LatticeVector>(v.begin(), v.begin() + 8),
             detail::one_based({{1, 2, 3, 4}, {5, 6, 7, 8},
                                {1, 2, 5}, {2, 3, 6}, {3, 4, 7}, {4, 1, 8},
                                {2, 5, 6}, {3, 6, 7}, {4, 7, 8}, {1, 8, 5}}));
}

/// The refined fan, written out explicitly.
inline Fan delta_fan_literal() {
  const auto& v = threefold_rays();
  return Fan(3, std::vector<LatticeVector>(v.begin(), v.end()),
             detail::one_based({{2, 5, 6},   {3, 6, 7},   {4, 7, 8},   {1, 5, 8},
                                {5, 6, 9},   {6, 7, 9},   {7, 8, 9},   {5, 8, 9},
                                {1, 10, 11}, {4, 10, 11}, {1, 8, 11},  {4, 8, 11},
                                {1, 10, 12}, {2, 10, 12}, {1, 5, 12},  {2, 5, 12},
                                {2, 10, 13}, {3, 10, 13}, {2, 6, 13},  {3, 6, 13},
                                {3, 10, 14}, {4, 10, 14}, {3, 7, 14},  {4, 7, 14}}));
}

/// sigma subdivided successively at v9, v10, ..., v14.
inline Fan delta_fan_constructed() {
  Fan f = sigma_fan();
  const auto& v = threefold_rays();
  for (std::size_t i = 8; i < 14; ++i) f = stellar_subdivide(f, v[i]);
  return f;
}

inline Fan projective_space_fan(std::size_t n) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  LatticeVector last(n);
  for (std::size_t i = 0; i < n; ++i) last[i] = -1;
  rays.push_back(std::move(last));
  std::vector<RaySet> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    RaySet c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

/// Rays e1, -e1, e2, -e2, e3, -e3; one cone per octant.
inline Fan p1xp1xp1_fan() {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      LatticeVector e(3);
      e[i] = s;
      rays.push_back(std::move(e));
    }
  std::vector<RaySet> cones;
  for (std::size_t a : {0, 1})
    for (std::size_t b : {2, 3})
      for (std::size_t c : {4, 5}) cones.push_back({a, b, c});
  return Fan(3, std::move(rays), std::move(cones));
}

/// Cones over the faces of the cube [-1,1]^3 with the vertex (1,1,1) moved to (1,2,3).
inline Fan fulton_cube_fan() {
  std::vector<LatticeVector> rays;
  for (int x : {1, -1})
    for (int y : {1, -1})
      for (int z : {1, -1}) rays.push_back(LatticeVector{x, y, z});
  rays[0] = LatticeVector{1, 2, 3};
  std::vector<RaySet> cones;
  for (std::size_t axis = 0; axis < 3; ++axis)
    for (int s : {1, -1}) {
      RaySet c;
      for (std::size_t i = 0; i < 8; ++i) {
        // Cube vertex i has coordinate sign bits (x,y,z) = bits 2,1,0 (0 => +1).
        int coord = ((i >> (2 - axis)) & 1) ? -1 : 1;
        if (coord == s) c.push_back(i);
      }
      cones.push_back(std::move(c));
    }
  return Fan(3, std::move(rays), std::move(cones));
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"sigma", "delta", "fulton_cube", "p1",
                                                 "p2",    "p3",    "p1xp1xp1"};
  return names;
}

inline Fan builtin(const std::string& name) {
  if (name == "sigma") return sigma_fan();
  if (name == "delta") {
    Fan built = delta_fan_constructed();
    if (built != delta_fan_literal()) throw FanError("builtin delta: construction disagrees with the literal fan");
    return built;
  }
  if (name == "fulton_cube") return fulton_cube_fan();
  if (name == "p1") return projective_space_fan(1);
  if (name == "p2") return projective_space_fan(2);
  if (name == "p3") return projective_space_fan(3);
  if (name == "p1xp1xp1") return p1xp1xp1_fan();
  throw FanError("unknown builtin fan '" + name + "'");
}

}  // namespace toric

#endif  // TORIC_FAN_HPP
