#include "khc/katz.hpp"

#include "khc/conv.hpp"
#include "khc/core.hpp"
#include "khc/errors.hpp"
#include "khc/twist.hpp"

#include <string>

namespace khc {

long long centralizer_dim(const BlockSpectrum& nu) {
  long long sum = 0;
  for (const auto& [k1, m1] : nu.entries())
    for (const auto& [k2, m2] : nu.entries()) {
      if (k1.angle != k2.angle) continue;
      sum += static_cast<long long>(m1) * m2 * std::min(k1.ell + 1, k2.ell + 1);
    }
  return sum;
}

long long rigidity_index(const MonodromySystem& s) {
  long long r = static_cast<long long>(s.points.size());
  long long index = (1 - r) * static_cast<long long>(s.rank) * s.rank;
  for (const auto& point : s.points)
    index += centralizer_dim(recover_nu(s.local_at(point), s.rank));
  index += centralizer_dim(s.infinity);
  return index;
}

long long rigidity_index(const HodgeSystem& s) { return rigidity_index(forget_hodge(s)); }

RankOneLine choose_allowed_line(const MonodromySystem& s) {
  if (s.rank < 2)
    throw CalcError(ErrC::ShapeMismatch, "the reduction step needs rank >= 2");
  auto scalar = s.infinity_scalar();
  if (!scalar)
    throw CalcError(ErrC::NotScalarAtInfinity,
                    "the reduction step needs scalar monodromy at infinity");

  RankOneLine line;
  for (const auto& point : s.points) {
    BlockSpectrum nu = recover_nu(s.local_at(point), s.rank);
    // Dominant eigenvalue by block count; the set iterates angles in
    // increasing order, so ties resolve to the smallest angle.
    Angle best;
    int best_prim = -1;
    for (const Angle& a : nu.angles()) {
      int p = nu.prim(a);
      if (p > best_prim) {
        best_prim = p;
        best = a;
      }
    }
    Angle twist = best.inverse();
    if (!twist.is_zero()) line.finite_angles.emplace(point, twist);
  }

  Angle post = *scalar + line.infinity_angle();
  if (post.is_zero())
    throw CalcError(ErrC::NotAllowed,
                    "the dominant-eigenvalue twist trivializes the monodromy at infinity");
  return line;
}

KatzTrace katz_reduce(const Value& start) {
  MonodromySystem mono0 =
      std::holds_alternative<HodgeSystem>(start)
          ? forget_hodge(std::get<HodgeSystem>(start))
          : std::get<MonodromySystem>(start);
  long long index = rigidity_index(mono0);
  if (index != 2)
    throw CalcError(ErrC::NotRigid, "rigidity index is " + std::to_string(index) + ", not 2");
  if (!mono0.infinity_scalar())
    throw CalcError(ErrC::NotScalarAtInfinity, "reduction needs scalar monodromy at infinity");

  KatzTrace trace;
  trace.terminal = start;
  Value current = start;
  int cap = rank_of(start) + 1;
  int iterations = 0;
  while (rank_of(current) > 1) {
    if (++iterations > cap)
      throw CalcError(ErrC::IterationCapExceeded,
                      "no rank-one system after " + std::to_string(cap) + " steps");
    int before = rank_of(current);
    KatzStep step;
    if (const auto* hodge = std::get_if<HodgeSystem>(&current)) {
      step.line = choose_allowed_line(forget_hodge(*hodge));
      HodgeSystem twisted = tensor_line(step.line, *hodge);
      step.chi = *twisted.infinity_scalar();
      step.snapshot = mc_hodge(twisted, step.chi);
    } else {
      const auto& mono = std::get<MonodromySystem>(current);
      step.line = choose_allowed_line(mono);
      MonodromySystem twisted = tensor_line(step.line, mono);
      step.chi = *twisted.infinity_scalar();
      step.snapshot = mc_local(twisted, step.chi);
    }
    step.before_rank = before;
    step.after_rank = rank_of(step.snapshot);
    if (step.after_rank >= before)
      throw CalcError(ErrC::InvariantViolation,
                      "reduction step did not decrease the rank (" + std::to_string(before) +
                          " -> " + std::to_string(step.after_rank) + ")");
    current = step.snapshot;
    trace.steps.push_back(std::move(step));
  }
  trace.terminal = current;
  return trace;
}

KatzTrace katz_reduce(const HodgeSystem& s) { return katz_reduce(Value(s)); }
KatzTrace katz_reduce(const MonodromySystem& s) { return katz_reduce(Value(s)); }

}  // namespace khc
