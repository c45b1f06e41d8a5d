#ifndef TORIC_POLYHEDRA_HPP
#define TORIC_POLYHEDRA_HPP

// Exact rational polyhedral cones and polyhedra. Conversion between the
// generator (V) and inequality (H) descriptions uses the double description
// method with combinatorial adjacency, after implicit equalities have been
// split off by a single linear program.

#include <toric/linalg.hpp>
#include <toric/lp.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace toric {

/// cone(generators) + span(lineality).
class VCone {
 public:
  VCone() = default;
  /// Generators are made primitive; zero generators are rejected.
  VCone(std::size_t dim, std::vector<LatticeVector> generators,
        std::vector<LatticeVector> lineality = {})
      : dim_(dim), lineality_(std::move(lineality)) {
    for (auto& g : generators) {
      if (g.dim() != dim) throw ToricError("VCone: generator dimension mismatch");
      if (g.is_zero()) throw ToricError("VCone: zero generator");
      auto p = make_primitive(g);
      if (std::find(generators_.begin(), generators_.end(), p) == generators_.end())
        generators_.push_back(std::move(p));
    }
    for (const auto& l : lineality_)
      if (l.dim() != dim) throw ToricError("VCone: lineality dimension mismatch");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }
  const std::vector<LatticeVector>& lineality() const { return lineality_; }
  bool is_pointed() const { return lineality_.empty(); }

  friend bool operator==(const VCone& a, const VCone& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_ && a.lineality_ == b.lineality_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> lineality_;
};

/// {x : <a,x> >= 0 for a in inequalities, <e,x> = 0 for e in equations}.
class HCone {
 public:
  HCone() = default;
  HCone(std::size_t dim, std::vector<LatticeVector> inequalities,
        std::vector<LatticeVector> equations = {})
      : dim_(dim), inequalities_(std::move(inequalities)), equations_(std::move(equations)) {
    for (const auto& a : inequalities_)
      if (a.dim() != dim) throw ToricError("HCone: inequality dimension mismatch");
    for (const auto& e : equations_)
      if (e.dim() != dim) throw ToricError("HCone: equation dimension mismatch");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& inequalities() const { return inequalities_; }
  const std::vector<LatticeVector>& equations() const { return equations_; }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> inequalities_;
  std::vector<LatticeVector> equations_;
};

namespace detail {

inline LatticeVector apply_basis(const std::vector<LatticeVector>& basis, const LatticeVector& y,
                                 std::size_t dim) {
  LatticeVector x(dim);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (y[k] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) x[j] += y[k] * basis[k][j];
  }
  return x;
}

/// Pulls a functional on Z^dim back to the coordinates of the given basis.
inline LatticeVector pull_back(const std::vector<LatticeVector>& basis, const LatticeVector& a) {
  LatticeVector out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out[k] = dot(basis[k], a);
  return out;
}

/// Indices of inequalities that vanish on the whole cone {x : A x >= 0}.
inline std::vector<bool> implicit_equalities(const std::vector<LatticeVector>& ineqs, std::size_t dim) {
  const std::size_t k = ineqs.size();
  // maximize sum t  s.t.  <a_i,x> - t_i >= 0,  t_i <= 1,  x free, t >= 0
  LinearProgram lp(dim + k);
  for (std::size_t j = 0; j < dim; ++j) lp.free_var[j] = true;
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector row(dim + k, Rational(0));
    for (std::size_t j = 0; j < dim; ++j) row[j] = ineqs[i][j];
    row[dim + i] = -1;
    lp.add(std::move(row), Sense::GreaterEq, 0);
    RationalVector bound(dim + k, Rational(0));
    bound[dim + i] = 1;
    lp.add(std::move(bound), Sense::LessEq, 1);
    lp.objective[dim + i] = 1;
  }
  auto r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) throw ToricError("implicit_equalities: LP failed");
  std::vector<bool> implicit(k);
  for (std::size_t i = 0; i < k; ++i) implicit[i] = (r.x[dim + i] == 0);
  return implicit;
}

struct DdRay {
  LatticeVector v;
  boost::dynamic_bitset<> zeros;  // processed inequalities that vanish on v
};

/// Double description of a cone that is full-dimensional in Z^dim.
/// Returns (extreme rays, lineality basis).
inline std::pair<std::vector<LatticeVector>, std::vector<LatticeVector>> double_description(
    const std::vector<LatticeVector>& ineqs, std::size_t dim) {
  const std::size_t k = ineqs.size();
  std::vector<LatticeVector> lin = integer_kernel_basis(std::vector<LatticeVector>{}, dim);
  std::vector<DdRay> rays;

  for (std::size_t step = 0; step < k; ++step) {
    const LatticeVector& a = ineqs[step];
    auto lit = std::find_if(lin.begin(), lin.end(), [&](const LatticeVector& l) { return dot(a, l) != 0; });
    if (lit != lin.end()) {
      LatticeVector ell = *lit;
      lin.erase(lit);
      Integer s = dot(a, ell);
      if (s < 0) {
        ell = -ell;
        s = -s;
      }
      for (auto& l : lin) {
        Integer t = dot(a, l);
        if (t != 0) l = make_primitive(s * l - t * ell);
      }
      for (auto& r : rays) {
        Integer t = dot(a, r.v);
        if (t != 0) r.v = make_primitive(s * r.v - t * ell);
        r.zeros.set(step);
      }
      DdRay fresh{ell, boost::dynamic_bitset<>(k)};
      for (std::size_t p = 0; p < step; ++p) fresh.zeros.set(p);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DdRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zeros.set(step);
      continue;
    }
    const std::size_t pointed_dim = dim - lin.size();
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      DdRay r = rays[i];
      if (val[i] == 0) r.zeros.set(step);
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        LatticeVector combo = make_primitive(val[p] * rays[q].v - val[q] * rays[p].v);
        common.set(step);
        next.push_back({std::move(combo), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<LatticeVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return {std::move(out), std::move(lin)};
}

inline std::vector<LatticeVector> dedupe_primitive(const std::vector<LatticeVector>& vs) {
  std::vector<LatticeVector> out;
  for (const auto& v : vs) {
    if (v.is_zero()) continue;
    out.push_back(make_primitive(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Generators and lineality of an H-cone. Output is canonical: the lineality
/// basis is the saturated Hermite basis of the lineality space, generators
/// are extreme rays projected orthogonally to the lineality space, made
/// primitive and sorted lexicographically.
inline VCone primal_description(const HCone& h) {
  const std::size_t n = h.dim();
  // Coordinates of the subspace cut out by the equations.
  std::vector<LatticeVector> basis = integer_kernel_basis(h.equations(), n);
  auto to_sub = [&](const std::vector<LatticeVector>& b, const std::vector<LatticeVector>& fs) {
    std::vector<LatticeVector> out;
    for (const auto& f : fs) out.push_back(detail::pull_back(b, f));
    return detail::dedupe_primitive(out);
  };
  std::vector<LatticeVector> ineqs = to_sub(basis, h.inequalities());

  if (!ineqs.empty() && !basis.empty()) {
    auto implicit = detail::implicit_equalities(ineqs, basis.size());
    std::vector<LatticeVector> eqs, rest;
    for (std::size_t i = 0; i < ineqs.size(); ++i) (implicit[i] ? eqs : rest).push_back(ineqs[i]);
    if (!eqs.empty()) {
      auto inner = integer_kernel_basis(eqs, basis.size());
      std::vector<LatticeVector> composed;
      for (const auto& y : inner) composed.push_back(detail::apply_basis(basis, y, n));
      basis = std::move(composed);
      std::vector<LatticeVector> pulled;
      for (const auto& a : rest) {
        LatticeVector in_inner(inner.size());
        for (std::size_t k = 0; k < inner.size(); ++k) in_inner[k] = dot(inner[k], a);
        pulled.push_back(std::move(in_inner));
      }
      ineqs = detail::dedupe_primitive(pulled);
    } else {
      ineqs = std::move(rest);
    }
  }

  if (basis.empty()) return VCone(n, {}, {});
  auto [rays_sub, lin_sub] = detail::double_description(ineqs, basis.size());

  std::vector<LatticeVector> lin;
  for (const auto& y : lin_sub) lin.push_back(detail::apply_basis(basis, y, n));
  lin = saturated_span_basis(lin, n);
  std::vector<LatticeVector> gens;
  for (const auto& y : rays_sub) {
    LatticeVector g = reduce_modulo_span(detail::apply_basis(basis, y, n), lin);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  gens = detail::dedupe_primitive(gens);
  return VCone(n, std::move(gens), std::move(lin));
}

/// Irredundant inequality description of a V-cone.
inline HCone dual_description(const VCone& c) {
  // Facet normals are the extreme rays of the dual cone.
  VCone dual = primal_description(HCone(c.dim(), c.generators(), c.lineality()));
  return HCone(c.dim(), dual.generators(), dual.lineality());
}

/// primal_description(dual_description(c)); idempotent.
inline VCone roundtrip_normalize(const VCone& c) { return primal_description(dual_description(c)); }

/// A cone carrying both descriptions, the dual computed eagerly.
struct Cone {
  VCone v;
  HCone h;
  explicit Cone(VCone gens) : v(std::move(gens)), h(dual_description(v)) {}
};

inline bool contains_point(const HCone& h, const RationalVector& x) {
  if (x.size() != h.dim()) throw ToricError("contains_point: dimension mismatch");
  for (const auto& a : h.inequalities())
    if (dot(a, x) < 0) return false;
  for (const auto& e : h.equations())
    if (dot(e, x) != 0) return false;
  return true;
}

/// Membership by exact feasibility of x = sum lambda_i g_i + sum mu_j l_j, lambda >= 0.
inline bool contains_point(const VCone& c, const RationalVector& x) {
  if (x.size() != c.dim()) throw ToricError("contains_point: dimension mismatch");
  const std::size_t ng = c.generators().size();
  const std::size_t nl = c.lineality().size();
  LinearProgram lp(ng + nl);
  for (std::size_t j = ng; j < ng + nl; ++j) lp.free_var[j] = true;
  for (std::size_t row = 0; row < c.dim(); ++row) {
    RationalVector coeffs(ng + nl);
    for (std::size_t j = 0; j < ng; ++j) coeffs[j] = c.generators()[j][row];
    for (std::size_t j = 0; j < nl; ++j) coeffs[ng + j] = c.lineality()[j][row];
    lp.add(std::move(coeffs), Sense::Equal, x[row]);
  }
  return find_feasible_point(std::move(lp)).has_value();
}

inline bool contains_point(const Cone& c, const RationalVector& x) { return contains_point(c.h, x); }

inline bool contains_point(const VCone& c, const LatticeVector& x) { return contains_point(c, to_rational(x)); }
inline bool contains_point(const HCone& c, const LatticeVector& x) { return contains_point(c, to_rational(x)); }

inline HCone intersect(const HCone& a, const HCone& b) {
  if (a.dim() != b.dim()) throw ToricError("intersect: dimension mismatch");
  auto ineqs = a.inequalities();
  ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
  auto eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return HCone(a.dim(), std::move(ineqs), std::move(eqs));
}

inline VCone intersect(const VCone& a, const VCone& b) {
  return primal_description(intersect(dual_description(a), dual_description(b)));
}

/// Dimension of the linear span of a V-cone.
inline std::size_t cone_dimension(const VCone& c) {
  auto all = c.generators();
  all.insert(all.end(), c.lineality().begin(), c.lineality().end());
  return rank(all, c.dim());
}

namespace detail {

inline bool subset_of(const VCone& f, const HCone& c) {
  for (const auto& g : f.generators())
    if (!contains_point(c, g)) return false;
  for (const auto& l : f.lineality())
    if (!contains_point(c, l) || !contains_point(c, -l)) return false;
  return true;
}

}  // namespace detail

/// True iff f is a face of c, i.e. f = c ∩ {<a,x> = 0} for an inequality valid on c.
inline bool is_face(const VCone& f, const VCone& c) {
  if (f.dim() != c.dim()) throw ToricError("is_face: dimension mismatch");
  HCone hc = dual_description(c);
  if (!detail::subset_of(f, hc)) return false;
  // Smallest face of c containing f: intersect with every facet hyperplane
  // that contains f.
  std::vector<LatticeVector> tight;
  for (const auto& a : hc.inequalities()) {
    bool all_zero = true;
    for (const auto& g : f.generators()) all_zero = all_zero && dot(a, g) == 0;
    for (const auto& l : f.lineality()) all_zero = all_zero && dot(a, l) == 0;
    if (all_zero) tight.push_back(a);
  }
  auto eqs = hc.equations();
  eqs.insert(eqs.end(), tight.begin(), tight.end());
  VCone smallest = primal_description(HCone(c.dim(), hc.inequalities(), std::move(eqs)));
  return detail::subset_of(smallest, dual_description(f));
}

/// True iff nonnegative combinations of the vectors fill the ambient space.
inline bool positively_spans(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) throw ToricError("positively_spans: empty vector list");
  const std::size_t dim = vectors.front().dim();
  std::vector<LatticeVector> nonzero;
  for (const auto& v : vectors)
    if (!v.is_zero()) nonzero.push_back(v);
  HCone h = dual_description(VCone(dim, nonzero));
  return h.inequalities().empty() && h.equations().empty();
}

/// One inequality <normal, x> >= offset.
struct AffineInequality {
  LatticeVector normal;
  Rational offset;
};

class Polytope {
 public:
  Polytope() = default;
  Polytope(std::size_t dim, std::vector<AffineInequality> inequalities)
      : dim_(dim), inequalities_(std::move(inequalities)) {
    for (const auto& a : inequalities_)
      if (a.normal.dim() != dim) throw ToricError("Polytope: inequality dimension mismatch");
  }
  std::size_t dim() const { return dim_; }
  const std::vector<AffineInequality>& inequalities() const { return inequalities_; }
  const std::optional<std::vector<RationalVector>>& cached_vertices() const { return vertices_; }
  void cache_vertices(std::vector<RationalVector> v) { vertices_ = std::move(v); }

  bool contains(const RationalVector& x) const {
    for (const auto& a : inequalities_)
      if (dot(a.normal, x) < a.offset) return false;
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<AffineInequality> inequalities_;
  std::optional<std::vector<RationalVector>> vertices_;
};

struct PolytopeSolution {
  bool empty = true;
  bool bounded = true;
  int dimension = -1;                           ///< affine dimension, -1 if empty
  std::vector<RationalVector> vertices;         ///< minimal-face points, lexicographic order
  std::vector<LatticeVector> recession_rays;    ///< nonempty only if unbounded
  std::vector<LatticeVector> recession_lineality;
};

/// Solves a polyhedron by homogenizing to the cone {(x,t) : <a,x> - c t >= 0, t >= 0}.
inline PolytopeSolution polytope_solve(const Polytope& p) {
  const std::size_t n = p.dim();
  std::vector<LatticeVector> ineqs;
  for (const auto& a : p.inequalities()) {
    Integer den = denominator_of(a.offset);
    LatticeVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = a.normal[j] * den;
    row[n] = -numerator_of(a.offset);
    if (!row.is_zero()) ineqs.push_back(std::move(row));
  }
  LatticeVector t_axis(n + 1);
  t_axis[n] = 1;
  ineqs.push_back(t_axis);
  VCone hom = primal_description(HCone(n + 1, ineqs));

  PolytopeSolution sol;
  for (const auto& g : hom.generators()) {
    if (g[n] > 0) {
      RationalVector v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = Rational(g[j], g[n]);
      sol.vertices.push_back(std::move(v));
    } else {
      LatticeVector r(std::vector<Integer>(g.begin(), g.end() - 1));
      sol.recession_rays.push_back(std::move(r));
    }
  }
  if (sol.vertices.empty()) {
    sol.recession_rays.clear();
    return sol;
  }
  for (const auto& l : hom.lineality())
    sol.recession_lineality.push_back(LatticeVector(std::vector<Integer>(l.begin(), l.end() - 1)));
  sol.empty = false;
  sol.bounded = sol.recession_rays.empty() && sol.recession_lineality.empty();
  sol.dimension = static_cast<int>(cone_dimension(hom)) - 1;
  std::sort(sol.vertices.begin(), sol.vertices.end());
  return sol;
}

}  // namespace toric

#endif  // TORIC_POLYHEDRA_HPP
