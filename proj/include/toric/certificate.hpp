#ifndef TORIC_CERTIFICATE_HPP
#define TORIC_CERTIFICATE_HPP

// Machine-checkable proof that a complete fan in R^3 containing the four
// protected cones has no nontrivial nef line bundles.
//
// For each protected pair (cone <a,b,c>, external ray e) the relation
// v_e = alpha v_a + beta v_b + gamma v_c gives the nef inequality
// d_e - alpha d_a - beta d_b - gamma d_c >= 0. Nonnegative multipliers whose
// weighted sum has only nonpositive coefficients, negative on a set S, force
// d_i = 0 on S for effective nef D. If {v_i : i in S} positively spans, the
// sections polytope {m : <m, v_i> >= 0, i in S} is the origin, so every m_s
// is zero and D = 0.

#include <toric/divisor.hpp>
#include <toric/fan.hpp>
#include <toric/lp.hpp>
#include <toric/polyhedra.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace toric {

/// A maximal cone (rays listed in relation order) and a ray outside it.
struct ProtectedPair {
  std::size_t cone_index = 0;
  std::array<std::size_t, 3> cone_rays{};
  std::size_t external_ray = 0;
};

struct ProtectedConfiguration {
  std::array<std::size_t, 8> ray_index{};  ///< fan index of v1..v8
  std::array<ProtectedPair, 4> pairs;
};

struct RelationWitness {
  std::vector<std::size_t> cone_rays;
  std::size_t external_ray = 0;
  RationalVector coefficients;  ///< v_e = sum coefficients[k] * v_{cone_rays[k]}
  RationalVector functional;    ///< over all rays: e_e - sum coefficients[k] e_{cone_rays[k]}
};

struct SummationWitness {
  RationalVector multipliers;  ///< nonnegative, primitive integral
  RationalVector combined;     ///< sum of multipliers[k] * functional_k
  RaySet zero_forced;          ///< {i : combined[i] < 0}
};

struct Conclusion {
  bool sections_polytope_is_origin = false;  ///< {m : <m, v_i> >= 0, i in S} = {0}
  bool every_ray_in_a_max_cone = false;      ///< all m_s = 0 then forces every d_i = 0
  bool trivial = false;
};

struct TrivialityCertificate {
  std::size_t n_rays = 0;
  ProtectedConfiguration configuration;
  std::vector<RelationWitness> witnesses;
  SummationWitness summation;
  bool positively_spanning = false;
  Conclusion conclusion;
};

struct CertificateFailure {
  std::string step;
  std::string reason;
};

using CertifyResult = std::variant<TrivialityCertificate, CertificateFailure>;

namespace detail {

// 1-based indices into threefold_rays(): cone rays in relation order, then the external ray.
struct ProtectedSpec {
  std::array<std::size_t, 3> cone;
  std::size_t external;
};
inline constexpr std::array<ProtectedSpec, 4> kProtected = {{
    {{2, 5, 6}, 1},
    {{3, 6, 7}, 2},
    {{4, 7, 8}, 3},
    {{1, 8, 5}, 4},
}};

}  // namespace detail

/// Locates v1..v8 by exact coordinates and the four protected cones among the
/// maximal cones of a three-dimensional fan.
inline std::optional<ProtectedConfiguration> find_protected_cones(const Fan& f) {
  if (f.dim() != 3) return std::nullopt;
  ProtectedConfiguration config;
  for (std::size_t i = 0; i < 8; ++i) {
    auto idx = f.find_ray(threefold_rays()[i]);
    if (!idx) return std::nullopt;
    config.ray_index[i] = *idx;
  }
  for (std::size_t p = 0; p < 4; ++p) {
    const auto& spec = detail::kProtected[p];
    ProtectedPair pair;
    RaySet s;
    for (std::size_t k = 0; k < 3; ++k) {
      pair.cone_rays[k] = config.ray_index[spec.cone[k] - 1];
      s.push_back(pair.cone_rays[k]);
    }
    auto cone = f.find_cone(s);
    if (!cone) return std::nullopt;
    pair.cone_index = *cone;
    pair.external_ray = config.ray_index[spec.external - 1];
    config.pairs[p] = pair;
  }
  return config;
}

/// Expresses an external ray in the basis of a simplicial full-dimensional
/// cone (rays in the given order) and assembles the nef inequality.
inline RelationWitness derive_relation(const Fan& f, const std::vector<std::size_t>& cone_rays,
                                       std::size_t external_ray) {
  if (cone_rays.size() != f.dim()) throw ToricError("derive_relation: cone is not simplicial");
  if (std::find(cone_rays.begin(), cone_rays.end(), external_ray) != cone_rays.end())
    throw ToricError("derive_relation: external ray belongs to the cone");
  std::vector<LatticeVector> cols;
  for (std::size_t i : cone_rays) cols.push_back(f.ray(i));
  RationalMatrix a = to_rational(IntMatrix::from_columns(cols, f.dim()));
  if (rank(a) != f.dim()) throw ToricError("derive_relation: cone is degenerate");
  RelationWitness w;
  w.cone_rays = cone_rays;
  w.external_ray = external_ray;
  w.coefficients = *solve_exact(a, to_rational(f.ray(external_ray)));
  w.functional.assign(f.n_rays(), Rational(0));
  w.functional[external_ray] += 1;
  for (std::size_t k = 0; k < cone_rays.size(); ++k) w.functional[cone_rays[k]] -= w.coefficients[k];
  return w;
}

/// Searches for multipliers lambda >= 0 such that sum lambda_k F_k has no
/// positive coefficient and negative coefficients on the largest possible
/// set S. Among those, minimizes sum lambda, then lambda_1, lambda_2, ...
/// lexicographically, and scales the result to a primitive integer vector.
inline std::optional<SummationWitness> summation_witness(const std::vector<RelationWitness>& witnesses) {
  if (witnesses.empty()) throw ToricError("summation_witness: no witnesses");
  const std::size_t kw = witnesses.size();
  const std::size_t n = witnesses.front().functional.size();
  for (const auto& w : witnesses)
    if (w.functional.size() != n) throw ToricError("summation_witness: functionals of different lengths");

  auto coefficient_row = [&](std::size_t i) {
    RationalVector row(kw);
    for (std::size_t k = 0; k < kw; ++k) row[k] = witnesses[k].functional[i];
    return row;
  };
  auto base_program = [&]() {
    LinearProgram lp(kw);
    for (std::size_t i = 0; i < n; ++i) lp.add(coefficient_row(i), Sense::LessEq, 0);
    return lp;
  };

  // The negative supports of feasible combinations are closed under union,
  // so the maximal S is found coordinate by coordinate.
  RaySet s;
  for (std::size_t i = 0; i < n; ++i) {
    LinearProgram lp = base_program();
    lp.add(coefficient_row(i), Sense::LessEq, -1);
    if (find_feasible_point(std::move(lp))) s.push_back(i);
  }
  if (s.empty()) return std::nullopt;

  LinearProgram lp = base_program();
  for (std::size_t i : s) lp.add(coefficient_row(i), Sense::LessEq, -1);
  auto minimize = [&](const RationalVector& weights) {
    LinearProgram p = lp;
    for (std::size_t k = 0; k < kw; ++k) p.objective[k] = -weights[k];
    auto r = solve_lp(p);
    if (r.status != LpStatus::Optimal) throw ToricError("summation_witness: LP failed");
    lp.add(weights, Sense::Equal, -r.value);
    return r.x;
  };
  RationalVector lambda = minimize(RationalVector(kw, Rational(1)));
  for (std::size_t k = 0; k < kw; ++k) {
    RationalVector unit(kw, Rational(0));
    unit[k] = 1;
    lambda = minimize(unit);
  }

  LatticeVector scaled = primitive_multiple(lambda);
  SummationWitness out;
  out.multipliers = to_rational(scaled);
  out.combined.assign(n, Rational(0));
  for (std::size_t k = 0; k < kw; ++k)
    for (std::size_t i = 0; i < n; ++i) out.combined[i] += out.multipliers[k] * witnesses[k].functional[i];
  for (std::size_t i = 0; i < n; ++i)
    if (out.combined[i] < 0) out.zero_forced.push_back(i);
  return out;
}

/// Runs the whole argument on a valid complete fan.
inline CertifyResult certify_trivial_nef(const Fan& f) {
  if (!is_complete(f)) return CertificateFailure{"preconditions", "fan is not valid and complete"};
  auto config = find_protected_cones(f);
  if (!config) return CertificateFailure{"find_protected_cones", "no protected cones"};

  TrivialityCertificate cert;
  cert.n_rays = f.n_rays();
  cert.configuration = *config;
  for (const auto& pair : config->pairs)
    cert.witnesses.push_back(
        derive_relation(f, {pair.cone_rays.begin(), pair.cone_rays.end()}, pair.external_ray));

  auto sum = summation_witness(cert.witnesses);
  if (!sum) return CertificateFailure{"summation_witness", "no summation multipliers"};
  cert.summation = *sum;

  std::vector<LatticeVector> forced;
  for (std::size_t i : cert.summation.zero_forced) forced.push_back(f.ray(i));
  cert.positively_spanning = positively_spans(forced);
  if (!cert.positively_spanning)
    return CertificateFailure{"positively_spans", "zero-forced rays do not positively span"};

  std::vector<AffineInequality> ineqs;
  for (const auto& v : forced) ineqs.push_back({v, Rational(0)});
  auto sections = polytope_solve(Polytope(f.dim(), std::move(ineqs)));
  cert.conclusion.sections_polytope_is_origin =
      !sections.empty && sections.bounded && sections.dimension == 0 && sections.vertices.size() == 1 &&
      std::all_of(sections.vertices[0].begin(), sections.vertices[0].end(), [](const Rational& q) { return q == 0; });
  if (!cert.conclusion.sections_polytope_is_origin)
    return CertificateFailure{"sections_polytope", "sections polytope is not the origin"};

  std::vector<bool> covered(f.n_rays(), false);
  for (const auto& c : f.max_cones())
    for (std::size_t i : c) covered[i] = true;
  cert.conclusion.every_ray_in_a_max_cone = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  if (!cert.conclusion.every_ray_in_a_max_cone)
    return CertificateFailure{"conclusion", "some ray lies in no maximal cone"};
  cert.conclusion.trivial = true;
  return cert;
}

struct VerificationResult {
  bool ok = false;
  std::string reason;
};

/// Re-checks every identity of a certificate from scratch. Positive spanning
/// is re-established by linear programming (membership of +-e_j), not by the
/// double description used when issuing.
inline VerificationResult verify_certificate(const Fan& f, const TrivialityCertificate& cert) {
  auto fail = [](std::string why) { return VerificationResult{false, std::move(why)}; };
  const std::size_t n = f.n_rays();
  if (f.dim() != 3) return fail("fan is not three-dimensional");
  if (cert.n_rays != n) return fail("certificate ray count differs from the fan");
  if (cert.witnesses.size() != 4) return fail("expected four relation witnesses");

  // Protected configuration against the literal coordinates.
  for (std::size_t i = 0; i < 8; ++i) {
    std::size_t idx = cert.configuration.ray_index[i];
    if (idx >= n || f.ray(idx) != threefold_rays()[i])
      return fail("ray index for v" + std::to_string(i + 1) + " does not match its coordinates");
  }
  for (std::size_t p = 0; p < 4; ++p) {
    const auto& pair = cert.configuration.pairs[p];
    const auto& spec = detail::kProtected[p];
    for (std::size_t k = 0; k < 3; ++k)
      if (pair.cone_rays[k] != cert.configuration.ray_index[spec.cone[k] - 1])
        return fail("protected pair " + std::to_string(p) + " has the wrong cone rays");
    if (pair.external_ray != cert.configuration.ray_index[spec.external - 1])
      return fail("protected pair " + std::to_string(p) + " has the wrong external ray");
    if (pair.cone_index >= f.n_max_cones()) return fail("protected cone index out of range");
    RaySet s(pair.cone_rays.begin(), pair.cone_rays.end());
    std::sort(s.begin(), s.end());
    if (f.max_cone(pair.cone_index) != s) return fail("protected cone is not a maximal cone of the fan");
    const auto& w = cert.witnesses[p];
    if (w.cone_rays != std::vector<std::size_t>(pair.cone_rays.begin(), pair.cone_rays.end()) ||
        w.external_ray != pair.external_ray)
      return fail("witness " + std::to_string(p) + " does not match its protected pair");
  }

  // Relations and inequality assembly.
  for (std::size_t p = 0; p < 4; ++p) {
    const auto& w = cert.witnesses[p];
    if (w.coefficients.size() != w.cone_rays.size() || w.functional.size() != n)
      return fail("witness " + std::to_string(p) + " is malformed");
    for (std::size_t j = 0; j < 3; ++j) {
      Rational lhs = 0;
      for (std::size_t k = 0; k < w.cone_rays.size(); ++k) lhs += w.coefficients[k] * f.ray(w.cone_rays[k])[j];
      if (lhs != Rational(f.ray(w.external_ray)[j]))
        return fail("relation " + std::to_string(p) + " does not reproduce the external ray");
    }
    RationalVector expected(n, Rational(0));
    expected[w.external_ray] = 1;
    for (std::size_t k = 0; k < w.cone_rays.size(); ++k) expected[w.cone_rays[k]] -= w.coefficients[k];
    if (expected != w.functional) return fail("inequality " + std::to_string(p) + " is not assembled from its relation");
  }

  // Multipliers and the combined inequality.
  const auto& sum = cert.summation;
  if (sum.multipliers.size() != 4 || sum.combined.size() != n) return fail("summation witness is malformed");
  bool any_positive = false;
  for (const auto& l : sum.multipliers) {
    if (l < 0) return fail("negative multiplier");
    any_positive = any_positive || l > 0;
  }
  if (!any_positive) return fail("all multipliers are zero");
  for (std::size_t i = 0; i < n; ++i) {
    Rational c = 0;
    for (std::size_t k = 0; k < 4; ++k) c += sum.multipliers[k] * cert.witnesses[k].functional[i];
    if (c != sum.combined[i]) return fail("combined inequality does not match the multipliers");
    if (c > 0) return fail("combined inequality has a positive coefficient");
  }
  if (sum.zero_forced.empty()) return fail("empty zero-forced set");
  for (std::size_t i : sum.zero_forced)
    if (i >= n || !(sum.combined[i] < 0)) return fail("zero-forced ray without a negative coefficient");

  // Positive spanning: each of +-e_j is a nonnegative combination of the forced rays.
  std::vector<LatticeVector> forced;
  for (std::size_t i : sum.zero_forced) forced.push_back(f.ray(i));
  VCone spanned(3, forced);
  bool spans = true;
  for (std::size_t j = 0; j < 3 && spans; ++j)
    for (int s : {1, -1}) {
      RationalVector e(3, Rational(0));
      e[j] = s;
      if (!contains_point(spanned, e)) {
        spans = false;
        break;
      }
    }
  if (spans != cert.positively_spanning || !spans) return fail("zero-forced rays do not positively span");
  // Positive spanning of the forced rays makes {m : <m, v_i> >= 0, i in S} = {0}.
  if (!cert.conclusion.sections_polytope_is_origin) return fail("sections polytope step not established");

  std::vector<bool> covered(n, false);
  for (const auto& c : f.max_cones())
    for (std::size_t i : c) covered[i] = true;
  bool all_covered = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  if (all_covered != cert.conclusion.every_ray_in_a_max_cone || !all_covered)
    return fail("some ray lies in no maximal cone");
  if (!cert.conclusion.trivial) return fail("certificate does not conclude triviality");
  return {true, ""};
}

/// The certificate route and the nef-cone route agree on triviality.
inline bool cross_check_with_nef_cone(const Fan& f) {
  bool certified = std::holds_alternative<TrivialityCertificate>(certify_trivial_nef(f));
  return certified == nef_cone(f).trivial;
}

}  // namespace toric

#endif  // TORIC_CERTIFICATE_HPP
