#include "khc/conv.hpp"

#include "khc/core.hpp"
#include "khc/errors.hpp"

#include <string>

namespace khc {

H1Result h1_hodge(const HodgeSystem& s, H1Variant variant) {
  H1Result res;
  res.variant = variant;
  const Angle one;
  int lo = s.min_level(), hi = s.max_level();
  for (int p = lo; p <= hi + 1; ++p) {
    long long v = s.delta(p - 1) - s.delta(p) - s.h(p);
    for (const auto& point : s.points) {
      const HodgeBlockData& mu = s.local_at(point);
      v += mu.total_excluding(p - 1, one);  // nearby != 1 equals the mu data
      v += mu.total(p, one);
    }
    if (variant == H1Variant::Projective) v -= s.infinity.prim(p - 1, one);
    if (v < 0)
      throw CalcError(ErrC::NegativeHodgeNumber,
                      "h^" + std::to_string(p) + "(H^1) = " + std::to_string(v));
    if (v > 0) {
      res.hodge[p] = static_cast<int>(v);
      res.total += static_cast<int>(v);
    }
  }
  return res;
}

int dim_h1_middle(const MonodromySystem& s) {
  const Angle one;
  long long v = static_cast<long long>(s.points.size() - 1) * s.rank;
  for (const auto& point : s.points) v -= recover_nu(s.local_at(point), s.rank).prim(one);
  v -= s.infinity.prim(one);
  if (v < 0)
    throw CalcError(ErrC::NegativeDimension, "dim H^1 = " + std::to_string(v));
  return static_cast<int>(v);
}

MonodromySystem mc_local(const MonodromySystem& s, const Angle& chi) {
  if (chi.is_zero()) throw CalcError(ErrC::ChiIsOne, "middle convolution needs chi != 1");
  const Angle one;
  const Angle chi_inv = chi.inverse();
  int h1 = dim_h1_middle(s);

  MonodromySystem out;
  out.points = s.points;
  for (const auto& point : s.points)
    out.local.emplace(point, rotated(s.local_at(point), chi));

  for (const auto& [key, mult] : s.infinity.entries()) {
    if (key.angle == chi) {
      if (key.ell >= 1) out.infinity.add({one, key.ell - 1}, mult);
    } else if (key.angle == one) {
      out.infinity.add({chi_inv, key.ell + 1}, mult);
    } else {
      out.infinity.add({key.angle - chi, key.ell}, mult);
    }
  }
  if (h1 > 0) out.infinity.add({chi_inv, 0}, h1);

  out.rank = s.rank + h1 + s.infinity.prim(one) - s.infinity.prim(chi);
  if (out.rank < 1)
    throw CalcError(ErrC::NegativeDimension,
                    "convolution output has rank 0; the input is a twisted Kummer system");
  for (const auto& point : out.points) {
    try {
      recover_nu(out.local_at(point), out.rank);
    } catch (const CalcError&) {
      throw CalcError(ErrC::NegativeDimension,
                      "convolution output inconsistent at '" + point +
                          "'; the input data are not realizable");
    }
  }
  out.validate();
  return out;
}

HodgeSystem mc_hodge(const HodgeSystem& s, std::optional<Angle> chi) {
  auto scalar = s.infinity_scalar();
  if (!scalar)
    throw CalcError(ErrC::NotScalarAtInfinity,
                    "middle convolution with Hodge data needs scalar monodromy at infinity");
  Angle a_o = *scalar;
  if (a_o.is_zero())
    throw CalcError(ErrC::ChiIsOne, "scalar monodromy at infinity is trivial");
  if (chi && *chi != a_o)
    throw CalcError(ErrC::ChiMismatch,
                    "chi = " + chi->str() + " but the only allowed choice is " + a_o.str());

  const Angle one;
  H1Result h1 = h1_hodge(s, H1Variant::Affine);
  if (h1.total < 1)
    throw CalcError(ErrC::NegativeDimension,
                    "convolution output has rank 0; the input is a twisted Kummer system");

  HodgeSystem out;
  out.points = s.points;
  out.hodge = h1.hodge;

  // Finite data: rotate by a_o; the level goes up by one exactly when the
  // output angle lands in (a_o, 1) or at 0.
  for (const auto& point : s.points) {
    HodgeBlockData mu(StoreKind::Mu);
    for (const auto& [key, mult] : s.local_at(point).entries()) {
      Angle a = key.angle + a_o;
      int bump = (a.is_zero() || a > a_o) ? 1 : 0;
      mu.add({key.level + bump, a, key.ell}, mult);
    }
    out.local.emplace(point, std::move(mu));
  }

  for (const auto& [p, hp] : out.hodge) {
    long long v = s.delta(p) + s.h(p);
    for (const auto& point : s.points) {
      const HodgeBlockData& mu = s.local_at(point);
      v -= mu.total(p, one);
      Rational cutoff = Rational(1) - a_o.value();
      for (const Angle& b : mu.angles())
        if (!b.is_zero() && b.value() < cutoff) v -= mu.total(p - 1, b);
    }
    out.degrees[p] = v;
  }

  Angle inv = a_o.inverse();
  for (const auto& [p, hp] : out.hodge) out.infinity.add({p, inv, 0}, hp);

  if (a_o == Angle(1, 2)) {
    out.pairing = s.pairing == Pairing::Symmetric ? Pairing::Skew
                  : s.pairing == Pairing::Skew    ? Pairing::Symmetric
                                                  : s.pairing;
  } else {
    out.pairing = Pairing::Unknown;
  }

  for (const auto& point : out.points) {
    try {
      recover_nu(out.local_at(point), out.hodge);
    } catch (const CalcError&) {
      throw CalcError(ErrC::NegativeHodgeNumber,
                      "convolution output inconsistent at '" + point +
                          "'; the input data are not realizable");
    }
  }
  int local_rank = mc_local(forget_hodge(s), a_o).rank;
  if (local_rank != out.rank())
    throw CalcError(ErrC::InvariantViolation,
                    "Hodge rank " + std::to_string(out.rank()) +
                        " disagrees with monodromy rank " + std::to_string(local_rank));
  out.validate();
  return out;
}

}  // namespace khc
