#ifndef TORIC_DIVISOR_HPP
#define TORIC_DIVISOR_HPP

// Torus-invariant divisors on the toric variety of a complete fan.
//
// Sign convention: the support function of D = sum d_i D_i is given on each
// maximal cone s by a covector m_s with <m_s, v_i> = -d_i for the rays v_i of
// s. D is nef iff <m_s, v_j> >= -d_j for every maximal cone s and every ray
// v_j. Principal divisors are div(m) = (<m, v_i>)_i, with m_s = -m on every
// cone. Under this convention a relation v_e = sum c_k v_k over a simplicial
// cone yields the inequality d_e - sum c_k d_k >= 0 for nef D.

#include <toric/fan.hpp>
#include <toric/linalg.hpp>
#include <toric/polyhedra.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace toric {

/// Integer coefficients d_i over the rays of a fan, in ray order.
class TDivisor {
 public:
  TDivisor() = default;
  explicit TDivisor(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
  TDivisor(std::initializer_list<long long> values) {
    for (long long v : values) coeffs_.emplace_back(v);
  }
  static TDivisor zero(std::size_t n) { return TDivisor(std::vector<Integer>(n, Integer(0))); }

  std::size_t size() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x == 0; });
  }
  bool is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x >= 0; });
  }

  friend TDivisor operator+(const TDivisor& a, const TDivisor& b) {
    TDivisor out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
  }
  friend bool operator==(const TDivisor& a, const TDivisor& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// Per maximal cone covector m_s of the support function.
struct CartierData {
  std::vector<RationalVector> m;
};

/// Witness that a divisor is not Cartier.
struct NotCartier {
  std::size_t cone = 0;
  std::string reason;
};

using CartierResult = std::variant<CartierData, NotCartier>;

class NotCartierError : public ToricError {
 public:
  explicit NotCartierError(NotCartier w)
      : ToricError("divisor is not Cartier at maximal cone " + std::to_string(w.cone) + ": " + w.reason),
        witness(std::move(w)) {}
  NotCartier witness;
};

namespace detail {

inline void check_divisor_size(const Fan& f, const TDivisor& d) {
  if (d.size() != f.n_rays())
    throw ToricError("divisor has " + std::to_string(d.size()) + " coefficients but the fan has " +
                     std::to_string(f.n_rays()) + " rays");
}

}  // namespace detail

/// Solves <m_s, v_i> = -d_i on every maximal cone. Fails when an overdetermined
/// (non-simplicial) system is inconsistent or a solution is not integral.
inline CartierResult cartier_data(const Fan& f, const TDivisor& d) {
  detail::check_divisor_size(f, d);
  CartierData data;
  for (std::size_t k = 0; k < f.n_max_cones(); ++k) {
    const auto& cone = f.max_cone(k);
    RationalMatrix a = to_rational(IntMatrix::from_rows(f.cone_rays(k), f.dim()));
    RationalVector b;
    for (std::size_t i : cone) b.push_back(Rational(-d[i]));
    auto m = solve_exact(a, b);
    if (!m) return NotCartier{k, "no linear functional matches the coefficients on cone " + format_ray_set(cone)};
    for (const auto& x : *m)
      if (!is_integral(x))
        return NotCartier{k, "the linear functional on cone " + format_ray_set(cone) + " is not integral"};
    data.m.push_back(std::move(*m));
  }
  return data;
}

inline bool is_cartier(const Fan& f, const TDivisor& d) {
  return std::holds_alternative<CartierData>(cartier_data(f, d));
}

inline CartierData require_cartier(const Fan& f, const TDivisor& d) {
  auto r = cartier_data(f, d);
  if (auto* w = std::get_if<NotCartier>(&r)) throw NotCartierError(*w);
  return std::get<CartierData>(std::move(r));
}

enum class NefMode { Local, Global };

/// Global: <m_s, v_j> >= -d_j for all maximal cones s and all rays j.
/// Local: the same test only across walls, against the rays of the
/// neighbouring cone that are off the wall. Throws NotCartierError.
inline bool is_nef(const Fan& f, const TDivisor& d, NefMode mode = NefMode::Local) {
  CartierData cd = require_cartier(f, d);
  auto ok = [&](std::size_t k, std::size_t j) { return dot(cd.m[k], f.ray(j)) >= -d[j]; };
  if (mode == NefMode::Global) {
    for (std::size_t k = 0; k < f.n_max_cones(); ++k)
      for (std::size_t j = 0; j < f.n_rays(); ++j)
        if (!ok(k, j)) return false;
    return true;
  }
  for (const auto& w : walls(f)) {
    for (std::size_t j : f.max_cone(w.cone_b)) {
      if (std::binary_search(w.wall_rays.begin(), w.wall_rays.end(), j)) continue;
      if (!ok(w.cone_a, j)) return false;
    }
  }
  return true;
}

/// Coefficients c with v = sum_k c_k * ray(cone[k]); the cone must be
/// simplicial and full-dimensional.
inline RationalVector express_in_cone_basis(const Fan& f, const RaySet& cone, const LatticeVector& v) {
  if (cone.size() != f.dim()) throw ToricError("cone " + format_ray_set(cone) + " is not simplicial");
  std::vector<LatticeVector> cols;
  for (std::size_t i : cone) cols.push_back(f.ray(i));
  RationalMatrix a = to_rational(IntMatrix::from_columns(cols, f.dim()));
  if (rank(a) != f.dim()) throw ToricError("cone " + format_ray_set(cone) + " is degenerate");
  return *solve_exact(a, to_rational(v));
}

/// One functional per wall (aligned with walls(f)): the convexity condition
/// across the wall, scaled to a primitive integer vector. Requires every
/// maximal cone to be simplicial.
inline std::vector<LatticeVector> wall_inequalities(const Fan& f) {
  for (std::size_t k = 0; k < f.n_max_cones(); ++k)
    if (!f.is_simplicial_cone(k))
      throw ToricError("wall_inequalities: cone " + format_ray_set(f.max_cone(k)) +
                       " is not simplicial; use picard_group or the certificate route");
  std::vector<LatticeVector> out;
  for (const auto& w : walls(f)) {
    const auto& cone = f.max_cone(w.cone_a);
    const std::size_t u = *w.opposite_b;
    RationalVector c = express_in_cone_basis(f, cone, f.ray(u));
    RationalVector functional(f.n_rays(), Rational(0));
    functional[u] += 1;
    for (std::size_t k = 0; k < cone.size(); ++k) functional[cone[k]] -= c[k];
    out.push_back(primitive_multiple(functional));
  }
  return out;
}

/// div(m) = (<m, v_i>)_i.
inline TDivisor principal_divisor(const Fan& f, const LatticeVector& m) {
  if (m.dim() != f.dim()) throw ToricError("principal_divisor: covector has wrong dimension");
  std::vector<Integer> d;
  d.reserve(f.n_rays());
  for (const auto& v : f.rays()) d.push_back(dot(m, v));
  return TDivisor(std::move(d));
}

/// Basis of the principal divisor lattice image of M in Z^rays.
inline std::vector<LatticeVector> principal_basis(const Fan& f) {
  std::vector<LatticeVector> out;
  for (std::size_t j = 0; j < f.dim(); ++j) {
    LatticeVector e(f.dim());
    e[j] = 1;
    out.push_back(LatticeVector(principal_divisor(f, e).coeffs()));
  }
  return out;
}

struct NefConeResult {
  HCone cone;                               ///< wall inequalities in divisor space
  std::vector<LatticeVector> lineality;     ///< saturated basis of the principal space
  std::vector<LatticeVector> extreme_classes;
  bool trivial = false;

  std::size_t lineality_dim() const { return lineality.size(); }
};

/// The nef cone of a complete simplicial fan in divisor space. Extreme ray
/// classes are reported by the representative vanishing on the rays of the
/// first maximal cone.
inline NefConeResult nef_cone(const Fan& f) {
  NefConeResult res;
  res.cone = HCone(f.n_rays(), wall_inequalities(f));
  VCone primal = primal_description(res.cone);
  res.lineality = saturated_span_basis(principal_basis(f), f.n_rays());
  if (primal.lineality() != res.lineality)
    throw ToricError("nef_cone: lineality of the wall cone differs from the principal divisors");

  const RaySet& base = f.max_cone(0);
  for (const auto& g : primal.generators()) {
    // Subtract the principal divisor agreeing with g on the base cone.
    RationalMatrix a = to_rational(IntMatrix::from_rows(f.cone_rays(0), f.dim()));
    RationalVector b;
    for (std::size_t i : base) b.push_back(Rational(g[i]));
    RationalVector m = *solve_exact(a, b);
    RationalVector rep(f.n_rays());
    for (std::size_t j = 0; j < f.n_rays(); ++j) rep[j] = Rational(g[j]) - dot(m, f.ray(j));
    if (std::all_of(rep.begin(), rep.end(), [](const Rational& q) { return q == 0; })) continue;
    res.extreme_classes.push_back(primitive_multiple(rep));
  }
  std::sort(res.extreme_classes.begin(), res.extreme_classes.end());
  res.trivial = res.extreme_classes.empty();
  return res;
}

struct AbelianGroupSummary {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1, each dividing the next

  friend bool operator==(const AbelianGroupSummary& a, const AbelianGroupSummary& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

namespace detail {

/// Z^cols / (row span of relations).
inline AbelianGroupSummary cokernel_summary(const IntMatrix& relations, std::size_t cols) {
  AbelianGroupSummary s;
  if (relations.rows() == 0) {
    s.rank = cols;
    return s;
  }
  auto snf = smith_normal_form(relations);
  std::size_t nonzero = 0;
  for (const auto& e : snf.elementary_divisors) {
    if (e == 0) continue;
    ++nonzero;
    if (e > 1) s.torsion.push_back(e);
  }
  s.rank = cols - nonzero;
  return s;
}

}  // namespace detail

/// Cl = Z^rays / image of M.
inline AbelianGroupSummary class_group(const Fan& f) {
  return detail::cokernel_summary(IntMatrix::from_rows(principal_basis(f), f.n_rays()), f.n_rays());
}

/// Cartier divisors modulo principal divisors. Cartier divisors are the
/// integer solutions (d, m_1, ..., m_k) of <m_s, v_i> + d_i = 0 for i in s.
inline AbelianGroupSummary picard_group(const Fan& f) {
  const std::size_t n = f.n_rays();
  const std::size_t dim = f.dim();
  const std::size_t vars = n + f.n_max_cones() * dim;
  std::vector<LatticeVector> eqs;
  for (std::size_t k = 0; k < f.n_max_cones(); ++k)
    for (std::size_t i : f.max_cone(k)) {
      LatticeVector row(vars);
      row[i] = 1;
      for (std::size_t j = 0; j < dim; ++j) row[n + k * dim + j] = f.ray(i)[j];
      eqs.push_back(std::move(row));
    }
  std::vector<LatticeVector> cartier = integer_kernel_basis(eqs, vars);
  if (cartier.empty()) return {};

  // Coordinates of each principal divisor in the Cartier basis.
  RationalMatrix basis = to_rational(IntMatrix::from_columns(cartier, vars));
  IntMatrix relations(dim, cartier.size());
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector p(vars, Rational(0));
    for (std::size_t i = 0; i < n; ++i) p[i] = f.ray(i)[j];
    for (std::size_t k = 0; k < f.n_max_cones(); ++k) p[n + k * dim + j] = -1;
    auto c = solve_exact(basis, p);
    if (!c) throw ToricError("picard_group: principal divisor outside the Cartier lattice");
    for (std::size_t t = 0; t < cartier.size(); ++t) {
      if (!is_integral((*c)[t])) throw ToricError("picard_group: Cartier basis is not saturated");
      relations(j, t) = numerator_of((*c)[t]);
    }
  }
  return detail::cokernel_summary(relations, cartier.size());
}

/// P_D = {m : <m, v_i> >= -d_i for all i}.
inline Polytope sections_polytope(const Fan& f, const TDivisor& d) {
  detail::check_divisor_size(f, d);
  std::vector<AffineInequality> ineqs;
  for (std::size_t i = 0; i < f.n_rays(); ++i) ineqs.push_back({f.ray(i), Rational(-d[i])});
  return Polytope(f.dim(), std::move(ineqs));
}

struct EffectiveRepresentative {
  TDivisor divisor;  ///< D + div(m), all coefficients >= 0
  LatticeVector m;
};

/// For nef D, the linearly equivalent effective divisor D + div(m) where m is
/// the covector of the first maximal cone (a lattice point of P_D). Only
/// complete fans are accepted: the existence of such m relies on global
/// generation, which needs completeness.
inline EffectiveRepresentative effective_representative(const Fan& f, const TDivisor& d) {
  if (!is_complete(f)) throw ToricError("effective_representative: fan is not complete");
  if (!is_nef(f, d, NefMode::Global))
    throw ToricError("effective_representative: divisor is not nef");
  CartierData cd = require_cartier(f, d);
  std::vector<Integer> m;
  for (const auto& q : cd.m.front()) m.push_back(numerator_of(q));
  LatticeVector mv(std::move(m));
  TDivisor out = d + principal_divisor(f, mv);
  if (!out.is_effective()) throw ToricError("effective_representative: nef divisor without effective representative");
  return {std::move(out), std::move(mv)};
}

}  // namespace toric

#endif  // TORIC_DIVISOR_HPP
