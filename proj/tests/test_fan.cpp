#include "support.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

RaySet rs(std::initializer_list<std::size_t> one_based) {
  RaySet s;
  for (std::size_t i : one_based) s.push_back(i - 1);
  std::sort(s.begin(), s.end());
  return s;
}

bool mentions(const FanReport& r, const std::string& needle) {
  for (const auto& f : r.failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

Fan octant() { return Fan(3, {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}}, {{0, 1, 2}}); }

Fan without_cone(const Fan& f, std::size_t k) {
  auto cones = f.max_cones();
  cones.erase(cones.begin() + static_cast<long>(k));
  return Fan(f.dim(), f.rays(), cones);
}

bool covered(const Fan& f, const RationalVector& x) { return !f.cones_containing(x).empty(); }

}  // namespace

TEST(Builtin, SigmaMatchesTheListedFan) {
  Fan s = builtin("sigma");
  ASSERT_EQ(s.n_rays(), 8u);
  for (std::size_t i = 1; i <= 8; ++i) EXPECT_EQ(s.ray(i - 1), v(i));
  EXPECT_EQ(s.n_max_cones(), 10u);
  std::size_t four = 0;
  for (const auto& c : s.max_cones()) four += c.size() == 4;
  EXPECT_EQ(four, 2u);
  for (auto c : {rs({1, 2, 3, 4}), rs({5, 6, 7, 8}), rs({1, 2, 5}), rs({2, 3, 6}), rs({3, 4, 7}), rs({4, 1, 8}),
                 rs({2, 5, 6}), rs({3, 6, 7}), rs({4, 7, 8}), rs({1, 8, 5})})
    EXPECT_TRUE(s.find_cone(c)) << format_ray_set(c);
}

TEST(Builtin, DeltaConstructionMatchesLiteral) {
  Fan built = delta_fan_constructed();
  EXPECT_EQ(built, delta_fan_literal());
  EXPECT_EQ(built.n_rays(), 14u);
  EXPECT_EQ(built.n_max_cones(), 24u);
  for (std::size_t i = 1; i <= 14; ++i) EXPECT_EQ(built.ray(i - 1), v(i));
  EXPECT_EQ(builtin("delta"), built);
}

TEST(Builtin, FultonCube) {
  Fan f = builtin("fulton_cube");
  EXPECT_EQ(f.n_rays(), 8u);
  EXPECT_EQ(f.n_max_cones(), 6u);
  for (const auto& c : f.max_cones()) EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(f.find_ray(LatticeVector{1, 2, 3}));
  EXPECT_FALSE(f.find_ray(LatticeVector{1, 1, 1}));
  EXPECT_TRUE(is_complete(f));
}

TEST(Builtin, UnknownName) { EXPECT_THROW(builtin("p4"), FanError); }

TEST(Builtin, AllValidAndComplete) {
  for (const auto& name : builtin_names()) {
    Fan f = builtin(name);
    auto rep = validate(f);
    EXPECT_TRUE(rep.valid) << name << ": " << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_TRUE(is_complete(f)) << name;
  }
}

TEST(Validate, SigmaIsValid) { EXPECT_TRUE(validate(builtin("sigma")).valid); }

TEST(Validate, OverlappingConesFailFaceToFace) {
  Fan f(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 1}}, {{0, 1}, {1, 2}});
  auto rep = validate(f);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(mentions(rep, "do not meet in a common face"));
}

TEST(Validate, DuplicateRay) {
  Fan f(3, {LatticeVector{1, 1, 1}, LatticeVector{1, 1, 1}, LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}},
        {{0, 2, 3}, {1, 2, 3}});
  auto rep = validate(f);
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(mentions(rep, "are equal"));
}

TEST(Validate, OtherViolations) {
  // Non-primitive ray.
  EXPECT_TRUE(mentions(validate(Fan(2, {LatticeVector{2, 0}, LatticeVector{0, 1}}, {{0, 1}})), "not primitive"));
  // Lower-dimensional maximal cone.
  EXPECT_TRUE(mentions(validate(Fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}, {{0}})), "not full-dimensional"));
  // A listed ray that is not extreme.
  auto rep = validate(Fan(2, {LatticeVector{1, 0}, LatticeVector{1, 1}, LatticeVector{0, 1}}, {{0, 1, 2}}));
  EXPECT_TRUE(mentions(rep, "not an extreme ray"));
  // Non-pointed cone.
  EXPECT_TRUE(mentions(validate(Fan(1, {LatticeVector{1}, LatticeVector{-1}}, {{0, 1}})), "not pointed"));
  // Containment of index sets.
  EXPECT_TRUE(mentions(validate(Fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, 0}}, {{0, 1}, {0, 1, 2}})),
                       "is contained in"));
}

TEST(Fan, StructuralErrors) {
  EXPECT_THROW(Fan(0, {}, {}), FanError);
  EXPECT_THROW(Fan(2, {LatticeVector{1, 0}}, {{0, 1}}), FanError);
  EXPECT_THROW(Fan(2, {LatticeVector{1, 0, 0}}, {{0}}), FanError);
  EXPECT_THROW(Fan(2, {LatticeVector{0, 0}}, {{0}}), FanError);
  EXPECT_THROW(Fan(2, {LatticeVector{1, 0}}, {{0, 0}}), FanError);
}

TEST(Completeness, Examples) {
  EXPECT_TRUE(is_complete(builtin("delta")));
  EXPECT_TRUE(is_complete(builtin("sigma")));
  EXPECT_FALSE(is_complete(octant()));
  EXPECT_FALSE(is_complete(without_cone(builtin("delta"), 5)));
}

TEST(Smoothness, Examples) {
  auto d = smoothness(builtin("delta"));
  EXPECT_TRUE(d.smooth);
  ASSERT_EQ(d.determinants.size(), 24u);
  for (const auto& x : d.determinants) EXPECT_EQ(x, Integer(1));

  Fan sigma = builtin("sigma");
  auto s = smoothness(sigma);
  EXPECT_FALSE(s.smooth);
  EXPECT_FALSE(s.simplicial);
  EXPECT_FALSE(s.determinants[*sigma.find_cone(rs({1, 2, 3, 4}))]);
  EXPECT_FALSE(s.determinants[*sigma.find_cone(rs({5, 6, 7, 8}))]);
  EXPECT_EQ(*s.determinants[*sigma.find_cone(rs({1, 2, 5}))], 2);

  EXPECT_TRUE(is_smooth(builtin("p2")));
  EXPECT_FALSE(is_smooth(builtin("fulton_cube")));
}

TEST(Walls, Counts) {
  EXPECT_EQ(walls(builtin("delta")).size(), 36u);
  EXPECT_EQ(walls(builtin("p1")).size(), 1u);
  EXPECT_EQ(walls(builtin("sigma")).size(), 16u);
  EXPECT_EQ(walls(builtin("p2")).size(), 3u);
  EXPECT_EQ(walls(builtin("p1xp1xp1")).size(), 12u);
}

TEST(Walls, ProjectiveLineWallIsTheOrigin) {
  auto w = walls(builtin("p1"));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_TRUE(w[0].wall_rays.empty());
  EXPECT_EQ(*w[0].opposite_a, 0u);
  EXPECT_EQ(*w[0].opposite_b, 1u);
}

TEST(Walls, IncompleteFanNamesTheFacet) {
  try {
    walls(octant());
    FAIL() << "expected FanError";
  } catch (const FanError& e) {
    EXPECT_NE(std::string(e.what()).find("facet {"), std::string::npos);
  }
}

TEST(Walls, StructureOnBuiltins) {
  for (const auto& name : builtin_names()) {
    Fan f = builtin(name);
    std::map<RaySet, int> seen;
    for (const auto& w : walls(f)) {
      ++seen[w.wall_rays];
      VCone meet = intersect(f.vcone(w.cone_a), f.vcone(w.cone_b));
      std::vector<LatticeVector> wall_gens;
      for (std::size_t i : w.wall_rays) wall_gens.push_back(f.ray(i));
      ASSERT_EQ(sorted(meet.generators()), sorted(wall_gens)) << name;
      ASSERT_EQ(cone_dimension(meet), f.dim() - 1) << name;
      ASSERT_EQ(w.opposite_a.has_value(), f.is_simplicial_cone(w.cone_a));
    }
    for (const auto& [rays, count] : seen) ASSERT_EQ(count, 1) << name;
  }
}

TEST(Stellar, SigmaAtV9) {
  Fan f = stellar_subdivide(builtin("sigma"), v(9));
  EXPECT_EQ(f.n_max_cones(), 13u);
  EXPECT_FALSE(f.find_cone(rs({5, 6, 7, 8})));
  for (auto c : {rs({5, 6, 9}), rs({6, 7, 9}), rs({7, 8, 9}), rs({8, 5, 9})}) EXPECT_TRUE(f.find_cone(c));
  EXPECT_TRUE(validate(f).valid);
  EXPECT_TRUE(is_complete(f));
}

TEST(Stellar, Errors) {
  Fan sigma = builtin("sigma");
  EXPECT_THROW(stellar_subdivide(sigma, v(1)), FanError);
  EXPECT_THROW(stellar_subdivide(sigma, LatticeVector{0, 0, -2}), FanError);
  EXPECT_THROW(stellar_subdivide(sigma, LatticeVector{0, 1}), FanError);
  EXPECT_THROW(stellar_subdivide(octant(), LatticeVector{-1, 0, 0}), FanError);
}

TEST(Stellar, SixStepsReachTheRefinedFan) {
  Fan f = builtin("sigma");
  for (std::size_t i = 9; i <= 14; ++i) f = stellar_subdivide(f, v(i));
  EXPECT_EQ(f.n_rays(), 14u);
  EXPECT_EQ(f.n_max_cones(), 24u);
  EXPECT_EQ(f, delta_fan_literal());
}

TEST(Stellar, SmoothnessAppearsOnlyAtTheEnd) {
  Fan f = builtin("sigma");
  EXPECT_FALSE(is_smooth(f));
  for (std::size_t i = 9; i <= 14; ++i) f = stellar_subdivide(f, v(i));
  EXPECT_TRUE(is_smooth(f));
}

TEST(Stellar, RefinementProperty) {
  Rng rng(property_seed() + 20);
  for (const std::string name : {"sigma", "delta", "p3", "fulton_cube", "p1xp1xp1"}) {
    Fan f = builtin(name);
    for (int step = 0; step < 3; ++step) {
      auto candidates = subdivision_candidates(f, {});
      const auto& face = candidates[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(candidates.size()) - 1))];
      LatticeVector sum(f.dim());
      for (std::size_t i : face) sum = sum + f.ray(i);
      LatticeVector ray = make_primitive(sum);
      Fan g = stellar_subdivide(f, ray);
      const std::size_t r = g.n_rays() - 1;

      auto removed = f.cones_containing(to_rational(ray));
      std::vector<std::size_t> added;
      for (std::size_t k = 0; k < g.n_max_cones(); ++k)
        if (std::binary_search(g.max_cone(k).begin(), g.max_cone(k).end(), r)) added.push_back(k);
      // Facet accounting: one new cone per facet of a removed cone missing the ray.
      std::size_t expected = 0;
      for (std::size_t k : removed)
        for (const auto& fc : f.facets(k)) expected += dot(fc.normal, ray) != 0;
      ASSERT_EQ(added.size(), expected) << name;
      ASSERT_EQ(g.n_max_cones(), f.n_max_cones() - removed.size() + added.size());

      // Mutual containment of sampled points in the two unions.
      for (int s = 0; s < 60; ++s) {
        RationalVector x = random_rational_point(rng, f.dim(), 10);
        bool in_removed = false, in_added = false;
        for (std::size_t k : removed) in_removed = in_removed || contains_point(f.hcone(k), x);
        for (std::size_t k : added) in_added = in_added || contains_point(g.hcone(k), x);
        ASSERT_EQ(in_removed, in_added) << name;
      }
      ASSERT_TRUE(validate(g).valid) << name;
      ASSERT_TRUE(is_complete(g)) << name;
      f = std::move(g);
    }
  }
}

TEST(Completeness, PointLocationCrossCheck) {
  std::vector<std::pair<std::string, Fan>> fans;
  for (const auto& name : builtin_names()) fans.emplace_back(name, builtin(name));
  fans.emplace_back("octant", octant());
  fans.emplace_back("delta minus a cone", without_cone(builtin("delta"), 0));
  fans.emplace_back("sigma minus a cone", without_cone(builtin("sigma"), 1));
  Rng rng(property_seed() + 21);
  for (const auto& [name, f] : fans) {
    bool all = true;
    for (int s = 0; s < 1000; ++s) all = covered(f, random_rational_point(rng, f.dim(), 20)) && all;
    EXPECT_EQ(all, is_complete(f)) << name;
  }
}

TEST(Report, CheckFan) {
  auto d = check_fan(builtin("delta"));
  EXPECT_TRUE(d.valid && d.complete && d.smooth && d.simplicial);
  EXPECT_EQ(d.n_rays, 14u);
  EXPECT_EQ(d.n_max_cones, 24u);
  EXPECT_EQ(d.n_walls, 36u);
  EXPECT_TRUE(d.failures.empty());

  auto s = check_fan(builtin("sigma"));
  EXPECT_TRUE(s.valid && s.complete);
  EXPECT_FALSE(s.smooth);
  EXPECT_FALSE(s.failures.empty());  // failures nonempty iff some flag is false

  auto o = check_fan(octant());
  EXPECT_TRUE(o.valid);
  EXPECT_FALSE(o.complete);
  EXPECT_FALSE(o.failures.empty());
}
