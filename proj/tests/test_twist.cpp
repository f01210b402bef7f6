#include "khc/twist.hpp"

#include "helpers.hpp"
#include "khc/conv.hpp"
#include "khc/core.hpp"
#include "khc/errors.hpp"

#include <doctest.h>

using namespace khc;

namespace {
const std::vector<std::string> kPoints{"x1", "x2", "x3"};

HodgeSystem first_convolution() {
  HodgeSystem l0 =
      make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(5, 6)}, {"x3", Angle(5, 6)}});
  return mc_hodge(l0);
}
}  // namespace

TEST_CASE("twist rotates local data and corrects degrees") {
  HodgeSystem m0 = first_convolution();  // rank 2, delta^0 = -2
  RankOneLine l1{{{"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}}, 0};
  HodgeSystem h1 = tensor_line(l1, m0);

  CHECK(h1.rank() == 2);
  CHECK(h1.h(0) == 2);
  CHECK(h1.delta(0) == -2);  // -2 - 2 + (1 + 1)
  CHECK(h1.local_at("x1").at({0, Angle(1, 3), 0}) == 1);
  CHECK(h1.local_at("x2").at({0, Angle(1, 6), 0}) == 1);
  CHECK(h1.local_at("x2").at({0, Angle(1, 2), 0}) == 1);
  CHECK(h1.local_at("x3").at({0, Angle(1, 6), 0}) == 1);
  CHECK(h1.local_at("x3").at({0, Angle(1, 2), 0}) == 1);
  CHECK(h1.infinity.at({0, Angle(1, 6), 0}) == 2);
}

TEST_CASE("twisting by the zero line is the identity") {
  HodgeSystem m0 = first_convolution();
  CHECK(tensor_line(RankOneLine{}, m0) == m0);
}

TEST_CASE("twist after two convolutions reproduces the next table") {
  HodgeSystem m0 = first_convolution();
  HodgeSystem h1 = tensor_line({{{"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}}, 0}, m0);
  HodgeSystem m1 = mc_hodge(h1);
  CHECK(m1.h(1) == 3);
  CHECK(m1.delta(1) == -5);

  HodgeSystem h2 = tensor_line({{{"x1", Angle(1, 2)}, {"x3", Angle(5, 6)}}, 0}, m1);
  CHECK(h2.delta(1) == -5);  // -5 + 3*(-2) + (1 + 2 + 3)
  CHECK(h2.local_at("x1").at({1, Angle(1, 2), 0}) == 2);
  CHECK(h2.local_at("x3").at({1, Angle(1, 6), 0}) == 1);
  CHECK(h2.local_at("x3").at({1, Angle(1, 2), 0}) == 1);
  CHECK(h2.local_at("x3").at({1, Angle(5, 6), 0}) == 1);
  CHECK(h2.infinity.at({1, Angle(1, 2), 0}) == 3);
}

TEST_CASE("inverse line undoes a twist") {
  khc::testing::RandomPipeline gen(99);
  for (int i = 0; i < 100; ++i) {
    HodgeSystem s = gen.random_line_system(kPoints);
    for (int step = 0; step < 3; ++step) gen.random_step(s);
    RankOneLine line;
    for (const auto& point : kPoints)
      if (gen.rng()() % 2) line.finite_angles.emplace(point, gen.random_angle());
    CHECK(tensor_line(line.inverse(), tensor_line(line, s)) == s);
  }
}

TEST_CASE("rank-one twists keep rank and h-vector") {
  khc::testing::RandomPipeline gen(7);
  for (int i = 0; i < 100; ++i) {
    HodgeSystem s = gen.random_line_system(kPoints);
    for (int step = 0; step < 3; ++step) gen.random_step(s);
    RankOneLine line{{{"x1", gen.random_angle()}, {"x3", gen.random_angle()}}, 0};
    HodgeSystem t = tensor_line(line, s);
    CHECK(t.hodge == s.hodge);
    CHECK(khc::testing::residue_identity_holds(t));
  }
}

TEST_CASE("twisting commutes with forgetting levels") {
  khc::testing::RandomPipeline gen(2024);
  for (int i = 0; i < 100; ++i) {
    HodgeSystem s = gen.random_line_system(kPoints);
    for (int step = 0; step < 3; ++step) gen.random_step(s);
    RankOneLine line{{{"x2", gen.random_angle()}}, 0};
    MonodromySystem a = forget_hodge(tensor_line(line, s));
    MonodromySystem b = tensor_line(line, forget_hodge(s));
    CHECK(a == b);

    // mu-total identity: mu(out) = rank - nu_{1/lambda_i, prim}(in).
    const Angle twist = line.angle_at("x2");
    BlockSpectrum nu_in = recover_nu(forget_hodge(s).local_at("x2"), s.rank());
    CHECK(b.local_at("x2").dimension() == s.rank() - nu_in.prim(twist.inverse()));
  }
}

TEST_CASE("pairing propagation under twists") {
  HodgeSystem halves =
      make_line(kPoints, {{"x1", Angle(1, 2)}, {"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}});
  CHECK(halves.pairing == Pairing::Symmetric);
  HodgeSystem real_twist = tensor_line({{{"x1", Angle(1, 2)}}, 0}, halves);
  CHECK(real_twist.pairing == Pairing::Symmetric);
  HodgeSystem complex_twist = tensor_line({{{"x1", Angle(1, 3)}}, 0}, halves);
  CHECK(complex_twist.pairing == Pairing::Unknown);
}

TEST_CASE("level offset of the line is a final tate twist") {
  HodgeSystem m0 = first_convolution();
  RankOneLine line{{{"x2", Angle(1, 2)}, {"x3", Angle(1, 2)}}, 2};
  CHECK(tensor_line(line, m0) ==
        tate_twist(tensor_line({line.finite_angles, 0}, m0), 2));
}

TEST_CASE("unknown points are rejected") {
  HodgeSystem m0 = first_convolution();
  CHECK_THROWS_AS(tensor_line({{{"zz", Angle(1, 2)}}, 0}, m0), CalcError);
}
