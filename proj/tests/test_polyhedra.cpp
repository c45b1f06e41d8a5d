#include "support.hpp"

#include <set>

using namespace toric;
using namespace toric::testing;

namespace {

VCone cone_of(std::initializer_list<std::size_t> idx) {
  std::vector<LatticeVector> gens;
  for (std::size_t i : idx) gens.push_back(v(i));
  return VCone(3, gens);
}

LatticeVector e(std::size_t dim, std::size_t i, long long s = 1) {
  LatticeVector x(dim);
  x[i] = s;
  return x;
}

VCone random_cone(Rng& rng) {
  const std::size_t dim = static_cast<std::size_t>(uniform_int(rng, 2, 4));
  const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
  std::vector<LatticeVector> gens;
  while (gens.size() < n) {
    LatticeVector g = random_lattice_vector(rng, dim, 3);
    if (!g.is_zero()) gens.push_back(g);
  }
  return VCone(dim, gens);
}

bool same_solution_set(const VCone& a, const VCone& b) {
  auto inside = [](const VCone& x, const VCone& y) {
    HCone hy = dual_description(y);
    for (const auto& g : x.generators())
      if (!contains_point(y, g) || !contains_point(hy, g)) return false;
    for (const auto& l : x.lineality())
      if (!contains_point(y, l) || !contains_point(y, -l)) return false;
    return true;
  };
  return inside(a, b) && inside(b, a);
}

// Vertices of a bounded polytope by brute force: solve every dim-subset of
// inequalities at equality and keep the feasible, isolated solutions.
std::vector<RationalVector> brute_force_vertices(const Polytope& p) {
  std::set<RationalVector> out;
  const auto& ineqs = p.inequalities();
  for (const auto& s : subsets(ineqs.size(), p.dim())) {
    RationalMatrix a(p.dim(), p.dim());
    RationalVector b(p.dim());
    for (std::size_t r = 0; r < p.dim(); ++r) {
      for (std::size_t c = 0; c < p.dim(); ++c) a(r, c) = ineqs[s[r]].normal[c];
      b[r] = ineqs[s[r]].offset;
    }
    if (rank(a) != p.dim()) continue;
    auto x = solve_exact(a, b);
    if (x && p.contains(*x)) out.insert(*x);
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST(DualDescription, Octant) {
  HCone h = dual_description(VCone(3, {e(3, 0), e(3, 1), e(3, 2)}));
  EXPECT_EQ(sorted(h.inequalities()), sorted({e(3, 0), e(3, 1), e(3, 2)}));
  EXPECT_TRUE(h.equations().empty());
}

TEST(DualDescription, ConeOverSquareHasFourFacets) {
  VCone c = cone_of({1, 2, 3, 4});
  HCone h = dual_description(c);
  EXPECT_EQ(h.inequalities().size(), 4u);
  EXPECT_EQ(sorted(h.inequalities()), brute_force_facets3(c.generators()));
}

TEST(DualDescription, WholeLine) {
  HCone h = dual_description(VCone(1, {}, {LatticeVector{1}}));
  EXPECT_TRUE(h.inequalities().empty());
  EXPECT_TRUE(h.equations().empty());
}

TEST(DualDescription, LowerDimensionalConeGetsEquations) {
  HCone h = dual_description(VCone(3, {e(3, 0), e(3, 1)}));
  EXPECT_EQ(h.equations().size(), 1u);
  EXPECT_EQ(h.inequalities().size(), 2u);
  EXPECT_TRUE(contains_point(h, rv({2, 3, 0})));
  EXPECT_FALSE(contains_point(h, rv({2, 3, 1})));
}

TEST(DualDescription, MatchesBruteForceFacetsIn3d) {
  Rng rng(property_seed() + 10);
  int checked = 0;
  while (checked < 40) {
    std::vector<LatticeVector> gens;
    for (int i = 0; i < 5; ++i) {
      LatticeVector g = random_lattice_vector(rng, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    VCone c(3, gens);
    HCone h = dual_description(c);
    // The brute-force oracle handles full-dimensional pointed cones only.
    if (!h.equations().empty() || cone_dimension(c) != 3) continue;
    if (positively_spans(c.generators())) continue;
    if (!primal_description(h).lineality().empty()) continue;
    ASSERT_EQ(sorted(h.inequalities()), brute_force_facets3(c.generators()));
    ++checked;
  }
}

TEST(PrimalDescription, Quadrant) {
  VCone c = primal_description(HCone(2, {e(2, 0), e(2, 1)}));
  EXPECT_EQ(c.generators(), (std::vector<LatticeVector>{e(2, 1), e(2, 0)}));
  EXPECT_TRUE(c.lineality().empty());
}

TEST(PrimalDescription, SummedInequalitiesForceOrigin) {
  // The four wall inequalities d_e + 2 d_c - 3 d_a - 4 d_b >= 0 over d_1..d_8.
  const std::size_t n = 8;
  const std::array<std::array<std::size_t, 4>, 4> terms = {{{1, 6, 2, 5}, {2, 7, 3, 6}, {3, 8, 4, 7}, {4, 5, 1, 8}}};
  LatticeVector sum(n);
  for (const auto& t : terms) {
    LatticeVector f(n);
    f[t[0] - 1] += 1;
    f[t[1] - 1] += 2;
    f[t[2] - 1] -= 3;
    f[t[3] - 1] -= 4;
    sum = sum + f;
  }
  EXPECT_EQ(sum, (LatticeVector{-2, -2, -2, -2, -2, -2, -2, -2}));
  std::vector<LatticeVector> ineqs{sum};
  for (std::size_t i = 0; i < n; ++i) ineqs.push_back(e(n, i));
  VCone c = primal_description(HCone(n, ineqs));
  EXPECT_TRUE(c.generators().empty());
  EXPECT_TRUE(c.lineality().empty());
}

TEST(PrimalDescription, NoInequalities) {
  VCone c = primal_description(HCone(2, {}));
  EXPECT_TRUE(c.generators().empty());
  EXPECT_EQ(sorted(c.lineality()), sorted({e(2, 0), e(2, 1)}));
}

TEST(Roundtrip, Examples) {
  EXPECT_EQ(sorted(roundtrip_normalize(cone_of({2, 5, 6})).generators()), sorted({v(2), v(5), v(6)}));
  VCone redundant(2, {e(2, 0), e(2, 1), LatticeVector{1, 1}});
  EXPECT_EQ(sorted(roundtrip_normalize(redundant).generators()), sorted({e(2, 0), e(2, 1)}));
  EXPECT_EQ(sorted(roundtrip_normalize(cone_of({1, 2, 3, 4})).generators()), sorted({v(1), v(2), v(3), v(4)}));
}

TEST(Roundtrip, RandomConesIdempotentAndEqual) {
  Rng rng(property_seed() + 11);
  for (int trial = 0; trial < 50; ++trial) {
    VCone c = random_cone(rng);
    VCone r = roundtrip_normalize(c);
    ASSERT_TRUE(same_solution_set(c, r)) << "trial " << trial;
    ASSERT_EQ(roundtrip_normalize(r), r) << "trial " << trial;
  }
}

TEST(DualDescription, FacetNormalsAreTightOnSpanningSets) {
  Rng rng(property_seed() + 12);
  for (int trial = 0; trial < 50; ++trial) {
    VCone c = random_cone(rng);
    HCone h = dual_description(c);
    VCone r = roundtrip_normalize(c);
    const std::size_t d = cone_dimension(c);
    for (const auto& a : h.inequalities()) {
      std::vector<LatticeVector> tight = r.lineality();
      for (const auto& g : c.generators()) {
        ASSERT_GE(dot(a, g), 0);
        if (dot(a, g) == 0) tight.push_back(g);
      }
      ASSERT_EQ(rank(tight, c.dim()), d - 1);
    }
    for (const auto& eq : h.equations())
      for (const auto& g : c.generators()) ASSERT_EQ(dot(eq, g), 0);
  }
}

TEST(ContainsPoint, Examples) {
  VCone bottom = cone_of({5, 6, 7, 8});
  HCone hb = dual_description(bottom);
  EXPECT_TRUE(contains_point(bottom, rv({0, 0, 0})));
  EXPECT_TRUE(contains_point(hb, rv({0, 0, 0})));
  EXPECT_TRUE(contains_point(bottom, v(9)));
  EXPECT_TRUE(contains_point(hb, v(9)));
  EXPECT_FALSE(contains_point(bottom, v(10)));
  EXPECT_FALSE(contains_point(hb, v(10)));
  EXPECT_THROW(contains_point(bottom, rv({1, 2})), ToricError);
  EXPECT_THROW(contains_point(hb, rv({1, 2})), ToricError);
}

TEST(ContainsPoint, VAndHAgreeOnRandomPoints) {
  Rng rng(property_seed() + 13);
  for (int trial = 0; trial < 30; ++trial) {
    VCone c = random_cone(rng);
    Cone both(c);
    for (int k = 0; k < 20; ++k) {
      RationalVector x = random_rational_point(rng, c.dim(), 4);
      if (k % 4 == 0) {
        // A point inside: a random nonnegative combination.
        x.assign(c.dim(), Rational(0));
        for (const auto& g : c.generators()) {
          Rational w(uniform_int(rng, 0, 5), uniform_int(rng, 1, 3));
          for (std::size_t j = 0; j < c.dim(); ++j) x[j] += w * g[j];
        }
        ASSERT_TRUE(contains_point(c, x));
      }
      ASSERT_EQ(contains_point(c, x), contains_point(both, x));
    }
  }
}

TEST(Intersect, SharedRay) {
  VCone meet = intersect(cone_of({1, 2, 5}), cone_of({2, 3, 6}));
  EXPECT_EQ(meet.generators(), (std::vector<LatticeVector>{v(2)}));
  EXPECT_TRUE(meet.lineality().empty());
}

TEST(Intersect, Idempotent) {
  VCone c = cone_of({1, 2, 3, 4});
  EXPECT_TRUE(same_solution_set(intersect(c, c), c));
}

TEST(Intersect, OppositeHalfLines) {
  VCone meet = intersect(VCone(1, {LatticeVector{1}}), VCone(1, {LatticeVector{-1}}));
  EXPECT_TRUE(meet.generators().empty());
  EXPECT_TRUE(meet.lineality().empty());
}

TEST(IsFace, Examples) {
  VCone square = cone_of({1, 2, 3, 4});
  EXPECT_TRUE(is_face(VCone(3, {}), square));
  EXPECT_TRUE(is_face(VCone(3, {}), cone_of({2, 5, 6})));
  EXPECT_TRUE(is_face(cone_of({1, 2}), square));
  EXPECT_FALSE(is_face(cone_of({1, 3}), square));
  EXPECT_TRUE(is_face(square, square));
  EXPECT_FALSE(is_face(cone_of({1, 5}), square));  // not contained
}

TEST(PositivelySpans, Examples) {
  std::vector<LatticeVector> first8;
  for (std::size_t i = 1; i <= 8; ++i) first8.push_back(v(i));
  EXPECT_TRUE(positively_spans(first8));
  EXPECT_FALSE(positively_spans({e(3, 0), e(3, 1), e(3, 2)}));
  EXPECT_TRUE(positively_spans({LatticeVector{1}, LatticeVector{-1}}));
  EXPECT_FALSE(positively_spans({v(1), v(2), v(3), v(4)}));
  EXPECT_THROW(positively_spans({}), ToricError);
}

TEST(PositivelySpans, AgreesWithBoxedSectionsPolytope) {
  Rng rng(property_seed() + 14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    std::vector<LatticeVector> s;
    while (s.size() < n) {
      LatticeVector g = random_lattice_vector(rng, dim, 2);
      if (!g.is_zero()) s.push_back(g);
    }
    std::vector<AffineInequality> ineqs;
    for (const auto& g : s) ineqs.push_back({g, 0});
    for (std::size_t j = 0; j < dim; ++j) {
      ineqs.push_back({e(dim, j), -1});
      ineqs.push_back({e(dim, j, -1), -1});
    }
    auto sol = polytope_solve(Polytope(dim, ineqs));
    bool origin = !sol.empty && sol.dimension == 0 && sol.vertices == std::vector<RationalVector>{RationalVector(dim)};
    ASSERT_EQ(positively_spans(s), origin) << "trial " << trial;
  }
}

TEST(PolytopeSolve, SectionsOfZeroDivisorOnRefinedFan) {
  std::vector<AffineInequality> ineqs;
  for (std::size_t i = 1; i <= 14; ++i) ineqs.push_back({v(i), 0});
  auto sol = polytope_solve(Polytope(3, ineqs));
  EXPECT_FALSE(sol.empty);
  EXPECT_TRUE(sol.bounded);
  EXPECT_EQ(sol.dimension, 0);
  EXPECT_EQ(sol.vertices, (std::vector<RationalVector>{rv({0, 0, 0})}));
}

TEST(PolytopeSolve, UnitSegment) {
  auto sol = polytope_solve(Polytope(1, {{LatticeVector{1}, 0}, {LatticeVector{-1}, -1}}));
  EXPECT_FALSE(sol.empty);
  EXPECT_EQ(sol.dimension, 1);
  EXPECT_EQ(sol.vertices, (std::vector<RationalVector>{rv({0}), rv({1})}));
}

TEST(PolytopeSolve, Empty) {
  auto sol = polytope_solve(Polytope(1, {{LatticeVector{1}, 1}, {LatticeVector{-1}, 0}}));
  EXPECT_TRUE(sol.empty);
  EXPECT_EQ(sol.dimension, -1);
}

TEST(PolytopeSolve, UnboundedReportsRecession) {
  auto sol = polytope_solve(Polytope(2, {{LatticeVector{1, 0}, 1}, {LatticeVector{0, 1}, 0}, {LatticeVector{0, -1}, -2}}));
  EXPECT_FALSE(sol.empty);
  EXPECT_FALSE(sol.bounded);
  EXPECT_EQ(sol.recession_rays, (std::vector<LatticeVector>{LatticeVector{1, 0}}));
  EXPECT_EQ(sol.dimension, 2);

  auto strip = polytope_solve(Polytope(2, {{LatticeVector{0, 1}, 0}, {LatticeVector{0, -1}, -1}}));
  EXPECT_FALSE(strip.bounded);
  EXPECT_EQ(strip.recession_lineality.size(), 1u);
}

TEST(PolytopeSolve, FractionalVertices) {
  // 2x >= 1, -2x >= -3 : [1/2, 3/2].
  auto sol = polytope_solve(Polytope(1, {{LatticeVector{2}, 1}, {LatticeVector{-2}, -3}}));
  ASSERT_EQ(sol.vertices.size(), 2u);
  EXPECT_EQ(sol.vertices[0][0], Rational(1, 2));
  EXPECT_EQ(sol.vertices[1][0], Rational(3, 2));
}

TEST(PolytopeSolve, VerticesMatchBruteForce) {
  Rng rng(property_seed() + 15);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    std::vector<AffineInequality> ineqs;
    for (std::size_t j = 0; j < dim; ++j) {  // box keeps it bounded
      ineqs.push_back({e(dim, j), -3});
      ineqs.push_back({e(dim, j, -1), -3});
    }
    for (int k = 0; k < 3; ++k) {
      LatticeVector a = random_lattice_vector(rng, dim, 3);
      if (a.is_zero()) continue;
      ineqs.push_back({a, Rational(uniform_int(rng, -4, 2), uniform_int(rng, 1, 3))});
    }
    Polytope p(dim, ineqs);
    auto sol = polytope_solve(p);
    auto expected = brute_force_vertices(p);
    ASSERT_EQ(sol.empty, expected.empty());
    ASSERT_EQ(sol.vertices, expected) << "trial " << trial;
    for (const auto& x : sol.vertices) ASSERT_TRUE(p.contains(x));
  }
}
