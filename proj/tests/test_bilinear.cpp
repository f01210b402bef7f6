#include "khc/bilinear.hpp"

#include "helpers.hpp"
#include "khc/conv.hpp"
#include "khc/core.hpp"
#include "khc/errors.hpp"
#include "khc/twist.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace khc;
using khc::testing::make_system;

namespace {

const std::vector<std::string> kPoints{"x1", "x2", "x3"};

oracle::GradedJordan observe(const std::vector<FilteredBlock>& blocks) {
  oracle::GradedJordan out;
  for (const FilteredBlock& b : blocks) {
    out.sizes.insert(b.size);
    for (int k = 0; k < b.size; ++k) out.levels.insert(b.top - k);
  }
  return out;
}

// The rank-4 symplectic system of the second pipeline.
HodgeSystem symplectic_v() {
  HodgeSystem l0 =
      make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}});
  HodgeSystem s2 = sym2(mc_hodge(l0));
  return mc_hodge(tensor_line({{{"x3", Angle(1, 2)}}, 0}, s2));
}

}  // namespace

TEST_CASE("block products agree with the matrix oracle") {
  SUBCASE("fixed examples") {
    FilteredBlock b2{Angle(), 2, 1};
    auto prod = block_tensor(b2, b2);
    REQUIRE(prod.size() == 2);
    CHECK(prod[0] == FilteredBlock{Angle(), 3, 2});
    CHECK(prod[1] == FilteredBlock{Angle(), 1, 1});

    auto single = block_tensor({Angle(1, 3), 1, 0}, {Angle(1, 2), 2, 2});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == FilteredBlock{Angle(5, 6), 2, 2});

    auto w = block_wedge2({Angle(), 4, 3});
    REQUIRE(w.size() == 2);
    CHECK(w[0] == FilteredBlock{Angle(), 5, 5});
    CHECK(w[1] == FilteredBlock{Angle(), 1, 3});

    auto s = block_sym2({Angle(1, 2), 2, 1});
    REQUIRE(s.size() == 1);
    CHECK(s[0] == FilteredBlock{Angle(), 3, 2});

    CHECK(block_wedge2({Angle(1, 3), 1, 5}).empty());
  }

  SUBCASE("all size pairs up to five, random angles and tops") {
    khc::testing::RandomPipeline gen(11);
    int cases = 0;
    for (int s1 = 1; s1 <= 5; ++s1)
      for (int s2 = 1; s2 <= 5; ++s2)
        for (int rep = 0; rep < 8; ++rep) {
          int t1 = static_cast<int>(gen.rng()() % 9) - 4;
          int t2 = static_cast<int>(gen.rng()() % 9) - 4;
          Angle a1 = gen.random_angle(), a2 = gen.random_angle();
          auto blocks = block_tensor({a1, s1, t1}, {a2, s2, t2});
          for (const FilteredBlock& b : blocks) CHECK(b.angle == a1 + a2);
          CHECK(observe(blocks) == oracle::tensor_oracle(s1, t1, s2, t2));
          int total = 0;
          for (const FilteredBlock& b : blocks) total += b.size;
          CHECK(total == s1 * s2);
          ++cases;
        }
    CHECK(cases == 200);
  }

  SUBCASE("symmetric and exterior halves partition the self product") {
    khc::testing::RandomPipeline gen(12);
    for (int size = 1; size <= 5; ++size)
      for (int rep = 0; rep < 10; ++rep) {
        int top = static_cast<int>(gen.rng()() % 7) - 3;
        Angle a = gen.random_angle();
        FilteredBlock b{a, size, top};
        CHECK(observe(block_sym2(b)) == oracle::sym2_oracle(size, top));
        CHECK(observe(block_wedge2(b)) == oracle::wedge2_oracle(size, top));

        auto all = block_tensor(b, b);
        auto sym = block_sym2(b);
        auto wedge = block_wedge2(b);
        sym.insert(sym.end(), wedge.begin(), wedge.end());
        std::sort(sym.begin(), sym.end());
        std::sort(all.begin(), all.end());
        CHECK(sym == all);
      }
  }
}

TEST_CASE("level_angle_profile") {
  HodgeSystem v = symplectic_v();
  LevelAngleProfile prof = level_angle_profile(v);
  CHECK(prof.at(0, 0) == Angle());
  CHECK(prof.at(1, 0) == Angle(1, 2));
  CHECK(prof.at(2, 0) == Angle(1, 2));
  CHECK(prof.at(3, 0) == Angle());
  for (int p = 0; p <= 3; ++p) CHECK(prof.at(p, 3) == Angle(1, 2));  // infinity
  for (int p = 0; p <= 3; ++p) CHECK(prof.at(p, 2) == Angle());     // J(4) at x3

  HodgeSystem line = make_line(kPoints, {{"x1", Angle(1, 4)}});
  LevelAngleProfile lp = level_angle_profile(line);
  CHECK(lp.at(0, 0) == Angle(1, 4));
  CHECK(lp.at(0, 1) == Angle());
  CHECK(lp.at(0, 3) == Angle(3, 4));
}

TEST_CASE("symmetric square of the rank-2 unipotent system") {
  HodgeSystem l0 =
      make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}});
  HodgeSystem a = mc_hodge(l0);
  CHECK(a.pairing == Pairing::Skew);
  HodgeSystem s2 = sym2(a);
  CHECK(s2 == make_system(kPoints, {{0, 1, -1}, {1, 1, 0}, {2, 1, 1}},
                          {{"x1", 2, 0, 1, 1, 1}, {"x2", 2, 0, 1, 1, 1}, {"x3", 2, 0, 1, 1, 1}},
                          {{0, 0, 1, 0, 1}, {1, 0, 1, 0, 1}, {2, 0, 1, 0, 1}},
                          Pairing::Symmetric));
}

TEST_CASE("exterior square of the symplectic rank-4 system") {
  HodgeSystem v = symplectic_v();
  HodgeSystem lv = wedge2(v);
  CHECK(lv.rank() == 6);
  CHECK(lv.delta(1) == -2);
  CHECK(lv.delta(2) == -1);
  CHECK(lv.delta(3) == 0);
  CHECK(lv.delta(4) == -1);
  CHECK(lv.delta(5) == 0);
  CHECK(lv.h(3) == 2);

  CHECK_THROWS_AS(wedge2(make_line(kPoints, {{"x1", Angle(1, 2)}})), CalcError);
}

TEST_CASE("reduced exterior square removes the trivial line") {
  HodgeSystem v = symplectic_v();
  HodgeSystem w = wedge2_reduced(v);
  CHECK(w.rank() == 5);
  for (int p = 1; p <= 5; ++p) CHECK(w.h(p) == 1);
  CHECK(w.delta(3) == 0);
  CHECK(w.pairing == Pairing::Symmetric);
  CHECK(w.local_at("x1").at({2, Angle(1, 2), 1}) == 1);
  CHECK(w.local_at("x1").at({5, Angle(1, 2), 1}) == 1);
  CHECK(w.local_at("x3").at({5, Angle(), 3}) == 1);
  for (int p = 1; p <= 5; ++p) CHECK(w.infinity.at({p, Angle(), 0}) == 1);

  SUBCASE("preconditions") {
    HodgeSystem sym_pairing = v;
    sym_pairing.pairing = Pairing::Symmetric;
    CHECK_THROWS_AS(wedge2_reduced(sym_pairing), CalcError);

    HodgeSystem spaced = tate_twist(v, 0);
    // Move the top level: occupied levels 0,1,2,4 have asymmetric spacing.
    spaced.hodge.erase(3);
    spaced.hodge[4] = 1;
    long long d = spaced.degrees.at(3);
    spaced.degrees.erase(3);
    spaced.degrees[4] = d;
    CHECK_THROWS_AS(wedge2_reduced(spaced), CalcError);
  }
}

TEST_CASE("degree solver") {
  SUBCASE("maximally unipotent rank 3") {
    HodgeSystem e = make_system(kPoints, {{0, 1, -1}, {1, 1, 0}, {2, 1, 1}},
                                {{"x1", 2, 0, 1, 1, 1}, {"x2", 2, 0, 1, 1, 1}},
                                {{2, 0, 1, 2, 1}});
    auto solved = solve_degrees_h1vanishing(e.points, e.local, e.infinity, e.hodge, {});
    CHECK(solved == std::map<int, long long>{{0, -1}, {1, 0}, {2, 1}});
  }
  SUBCASE("rank-one line from its known h1") {
    HodgeSystem line =
        make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(5, 6)}, {"x3", Angle(5, 6)}});
    H1Result h1 = h1_hodge(line, H1Variant::Projective);
    std::map<int, int> known(h1.hodge.begin(), h1.hodge.end());
    auto solved = solve_degrees_h1vanishing(line.points, line.local, line.infinity, line.hodge,
                                            known);
    CHECK(solved == line.degrees);
  }
  SUBCASE("solver agrees with the shift rule on pipeline systems") {
    khc::testing::RandomPipeline gen(77);
    int seen = 0;
    for (int i = 0; i < 200; ++i) {
      HodgeSystem s = gen.random_line_system(kPoints);
      for (int step = 0; step < 3; ++step) gen.random_step(s);
      if (!s.multiplicity_free()) continue;
      H1Result h1;
      try {
        h1 = h1_hodge(s, H1Variant::Projective);
      } catch (const CalcError& e) {
        if (e.internal()) throw;
        continue;
      }
      std::map<int, int> known(h1.hodge.begin(), h1.hodge.end());
      CHECK(solve_degrees_h1vanishing(s.points, s.local, s.infinity, s.hodge, known) ==
            s.degrees);
      ++seen;
    }
    CHECK(seen > 60);
  }
  SUBCASE("inconsistent targets are rejected") {
    HodgeSystem e = make_system(kPoints, {{0, 1, -1}, {1, 1, 0}, {2, 1, 1}},
                                {{"x1", 2, 0, 1, 1, 1}, {"x2", 2, 0, 1, 1, 1}},
                                {{2, 0, 1, 2, 1}});
    CHECK_THROWS_AS(solve_degrees_h1vanishing(e.points, e.local, e.infinity, e.hodge, {{1, 1}}),
                    CalcError);
  }
}

TEST_CASE("squares keep the dimension count and the degree identity") {
  khc::testing::RandomPipeline gen(88);
  int seen = 0;
  for (int i = 0; i < 150; ++i) {
    HodgeSystem s = gen.random_line_system(kPoints);
    for (int step = 0; step < 2; ++step) gen.random_step(s);
    if (!s.multiplicity_free() || s.rank() > 5) continue;
    int n = s.rank();
    HodgeSystem sym = sym2(s);
    CHECK(sym.rank() == n * (n + 1) / 2);
    CHECK(khc::testing::residue_identity_holds(sym));
    if (n >= 2) {
      HodgeSystem wedge = wedge2(s);
      CHECK(wedge.rank() == n * (n - 1) / 2);
      CHECK(khc::testing::residue_identity_holds(wedge));
    }
    ++seen;
  }
  CHECK(seen > 50);
}

TEST_CASE("squares refuse degrees on repeated Hodge numbers") {
  HodgeSystem l0 =
      make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(5, 6)}, {"x3", Angle(5, 6)}});
  HodgeSystem m0 = mc_hodge(l0);  // h^0 = 2
  CHECK_THROWS_AS(sym2(m0), CalcError);
  CHECK_THROWS_AS(level_angle_profile(m0), CalcError);
}
