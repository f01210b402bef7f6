#include "khc/core.hpp"

#include "helpers.hpp"
#include "khc/errors.hpp"

#include <doctest.h>

using namespace khc;
using khc::testing::make_system;

namespace {
const std::vector<std::string> kPoints{"x1", "x2", "x3"};
}

TEST_CASE("angles reduce mod one") {
  CHECK(Angle(5, 6).str() == "5/6");
  CHECK(Angle(-13, 6) == Angle(5, 6));
  CHECK(Angle(7, 6) == Angle(1, 6));
  CHECK(Angle(2, 4) == Angle(1, 2));
  CHECK(Angle(1, 3) + Angle(5, 6) == Angle(1, 6));
  CHECK(Angle(1, 3).inverse() == Angle(2, 3));
  CHECK(Angle().inverse() == Angle());
  CHECK(Angle::parse("5/6") == Angle(5, 6));
  CHECK(Angle::parse("0") == Angle());
  CHECK_THROWS_AS(Angle(1, 0), CalcError);
  CHECK_THROWS_AS(Angle::parse("x"), CalcError);
}

TEST_CASE("make_line computes the forced infinity angle and degree") {
  HodgeSystem l0 = make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(5, 6)}, {"x3", Angle(5, 6)}});
  CHECK(l0.rank() == 1);
  CHECK(l0.delta(0) == -3);
  CHECK(l0.infinity.at({0, Angle(5, 6), 0}) == 1);
  CHECK(l0.pairing == Pairing::Unknown);

  HodgeSystem halves =
      make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}});
  CHECK(halves.delta(0) == -2);
  CHECK(halves.infinity.at({0, Angle(1, 2), 0}) == 1);
  CHECK(halves.pairing == Pairing::Symmetric);

  HodgeSystem trivial = make_line({"x1", "x2"}, std::map<std::string, Angle>{});
  CHECK(trivial.rank() == 1);
  CHECK(trivial.delta(0) == 0);
  CHECK(trivial.local_at("x1").empty());
  CHECK(trivial.infinity.at({0, Angle(), 0}) == 1);

  CHECK_THROWS_AS(make_line(kPoints, {{"y9", Angle(1, 2)}}), CalcError);
}

TEST_CASE("recover_nu rebuilds nearby cycles from vanishing cycles") {
  SUBCASE("unipotent data with several block sizes") {
    // J(2) + J(3) + J(2) seen through its minimal extension.
    HodgeBlockData mu(StoreKind::Mu);
    mu.add({3, Angle(), 0}, 1);
    mu.add({4, Angle(), 0}, 1);
    mu.add({4, Angle(), 1}, 1);
    std::map<int, int> h{{2, 2}, {3, 3}, {4, 2}};
    HodgeBlockData nu = recover_nu(mu, h);
    CHECK(nu.at({3, Angle(), 1}) == 1);
    CHECK(nu.at({4, Angle(), 1}) == 1);
    CHECK(nu.at({4, Angle(), 2}) == 1);
    CHECK(nu.entries().size() == 3);  // all nu_{1,0} vanish
    for (int p = 2; p <= 4; ++p) CHECK(nu.level_dim(p) == h.at(p));

    std::multiset<int> sizes;
    for (const auto& [key, mult] : nu.entries())
      for (int i = 0; i < mult; ++i) sizes.insert(key.ell + 1);
    CHECK(sizes == std::multiset<int>{2, 2, 3});
  }

  SUBCASE("empty store gives the full unipotent filler") {
    HodgeBlockData nu = recover_nu(HodgeBlockData(StoreKind::Mu), {{0, 1}});
    CHECK(nu.at({0, Angle(), 0}) == 1);
    CHECK(nu.entries().size() == 1);
  }

  SUBCASE("a lone minus-one block forces trivial fillers at the outer levels") {
    HodgeBlockData mu(StoreKind::Mu);
    mu.add({2, Angle(1, 2), 1}, 1);
    std::map<int, int> h{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    HodgeBlockData nu = recover_nu(mu, h);
    CHECK(nu.at({0, Angle(), 0}) == 1);
    CHECK(nu.at({3, Angle(), 0}) == 1);
    CHECK(nu.at({2, Angle(1, 2), 1}) == 1);
    CHECK(nu.entries().size() == 3);
  }

  SUBCASE("impossible data is rejected") {
    HodgeBlockData mu(StoreKind::Mu);
    mu.add({0, Angle(), 0}, 2);
    CHECK_THROWS_AS(recover_nu(mu, {{0, 1}}), CalcError);
  }
}

TEST_CASE("mu_from_nu shifts the unipotent part down") {
  SUBCASE("large unipotent block") {
    HodgeBlockData nu(StoreKind::Nu);
    nu.add({5, Angle(), 4}, 1);
    HodgeBlockData mu = mu_from_nu(nu);
    CHECK(mu.at({5, Angle(), 3}) == 1);
    CHECK(mu.entries().size() == 1);
  }
  SUBCASE("semisimple unipotent part disappears") {
    HodgeBlockData nu(StoreKind::Nu);
    nu.add({0, Angle(), 0}, 3);
    CHECK(mu_from_nu(nu).empty());
  }
  SUBCASE("other eigenvalues pass through") {
    HodgeBlockData nu(StoreKind::Nu);
    nu.add({2, Angle(1, 3), 0}, 1);
    HodgeBlockData mu = mu_from_nu(nu);
    CHECK(mu.at({2, Angle(1, 3), 0}) == 1);
  }
}

TEST_CASE("round trip between mu and nu stores") {
  khc::testing::RandomPipeline gen(1234);
  int tried = 0;
  for (int i = 0; i < 300; ++i) {
    HodgeSystem s = gen.random_line_system(kPoints);
    for (int step = 0; step < 4; ++step) gen.random_step(s);
    for (const auto& point : s.points) {
      HodgeBlockData nu = recover_nu(s.local_at(point), s.hodge);
      CHECK(mu_from_nu(nu) == s.local_at(point));
      CHECK(recover_nu(mu_from_nu(nu), s.hodge) == nu);
      ++tried;
    }
  }
  CHECK(tried >= 900);
}

TEST_CASE("prim, coprim and level totals") {
  SUBCASE("single block away from eigenvalue one") {
    HodgeBlockData data(StoreKind::Nu);
    data.add({2, Angle(1, 2), 1}, 1);
    PrimCoprimTotal at1 = prim_coprim(data, Angle(1, 2), 1);
    CHECK(at1.prim == 0);
    CHECK(at1.coprim == 1);
    CHECK(at1.total == 1);
    PrimCoprimTotal at2 = prim_coprim(data, Angle(1, 2), 2);
    CHECK(at2.prim == 1);
    CHECK(at2.coprim == 0);
    CHECK(at2.total == 1);
  }
  SUBCASE("empty store") {
    PrimCoprimTotal none = prim_coprim(HodgeBlockData(StoreKind::Nu), Angle(), 0);
    CHECK(none.prim == 0);
    CHECK(none.coprim == 0);
    CHECK(none.total == 0);
  }
  SUBCASE("recovered unipotent data sums back to h") {
    HodgeBlockData mu(StoreKind::Mu);
    mu.add({3, Angle(), 0}, 1);
    mu.add({4, Angle(), 0}, 1);
    mu.add({4, Angle(), 1}, 1);
    HodgeBlockData nu = recover_nu(mu, {{2, 2}, {3, 3}, {4, 2}});
    CHECK(prim_coprim(nu, Angle(), 3).total == 3);
  }
}

TEST_CASE("tate twist relabels every level") {
  HodgeSystem l0 = make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(5, 6)}, {"x3", Angle(5, 6)}});
  CHECK(tate_twist(l0, 0) == l0);
  HodgeSystem up = tate_twist(l0, 1);
  CHECK(up.h(1) == 1);
  CHECK(up.delta(1) == -3);
  CHECK(up.local_at("x1").at({1, Angle(1, 2), 0}) == 1);
  CHECK(tate_twist(up, -1) == l0);
}

TEST_CASE("monodromy dual flips every angle") {
  HodgeSystem l0 = make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(5, 6)}, {"x3", Angle(5, 6)}});
  MonodromySystem m = forget_hodge(l0);
  MonodromySystem d = dual_monodromy(m);
  CHECK(d.local_at("x2").at({Angle(1, 6), 0}) == 1);
  CHECK(d.local_at("x1").at({Angle(1, 2), 0}) == 1);
  CHECK(dual_monodromy(d) == m);

  MonodromySystem halves =
      forget_hodge(make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}}));
  CHECK(dual_monodromy(halves) == halves);
}

TEST_CASE("forget_hodge sums levels out") {
  HodgeSystem line = make_line(kPoints, {{"x1", Angle(1, 2)}}, 2);
  MonodromySystem m = forget_hodge(line);
  CHECK(m.rank == 1);
  CHECK(m.local_at("x1").at({Angle(1, 2), 0}) == 1);
  CHECK(forget_hodge(tate_twist(line, 3)) == m);
}

TEST_CASE("validation rejects broken degree bookkeeping") {
  HodgeSystem s = make_system({"x1", "x2"}, {{0, 1, 0}}, {}, {{0, 0, 1, 0, 1}});
  s.degrees[0] = -1;  // residue total is 0
  CHECK_THROWS_AS(s.validate(), CalcError);
}

TEST_CASE("line_of reads a rank-one system back") {
  std::map<std::string, Angle> angles{{"x1", Angle(1, 2)}, {"x2", Angle(5, 6)}};
  HodgeSystem line = make_line(kPoints, angles, 1);
  RankOneLine back = line_of(line);
  CHECK(back.level_offset == 1);
  CHECK(back.finite_angles == angles);
  CHECK(back.infinity_angle() == Angle(2, 3));
  CHECK(back.degree() == -2);

  RankOneLine inv = back.inverse();
  CHECK(inv.angle_at("x1") == Angle(1, 2));
  CHECK(inv.angle_at("x2") == Angle(1, 6));
  CHECK(inv.level_offset == -1);
}
