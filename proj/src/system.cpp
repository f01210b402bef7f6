#include "khc/system.hpp"

#include "khc/core.hpp"
#include "khc/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace khc {

const char* to_string(Pairing p) {
  switch (p) {
    case Pairing::None: return "none";
    case Pairing::Symmetric: return "symmetric";
    case Pairing::Skew: return "skew";
    case Pairing::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Pairing> pairing_from_string(const std::string& s) {
  if (s == "none") return Pairing::None;
  if (s == "symmetric") return Pairing::Symmetric;
  if (s == "skew") return Pairing::Skew;
  if (s == "unknown") return Pairing::Unknown;
  return std::nullopt;
}

namespace {

[[noreturn]] void invariant_fail(const std::string& what) {
  throw CalcError(ErrC::InvariantViolation, what);
}

}  // namespace

int HodgeSystem::rank() const {
  int sum = 0;
  for (const auto& [p, hp] : hodge) sum += hp;
  return sum;
}

int HodgeSystem::h(int p) const {
  auto it = hodge.find(p);
  return it == hodge.end() ? 0 : it->second;
}

long long HodgeSystem::delta(int p) const {
  auto it = degrees.find(p);
  return it == degrees.end() ? 0 : it->second;
}

int HodgeSystem::min_level() const {
  return hodge.empty() ? 0 : hodge.begin()->first;
}

int HodgeSystem::max_level() const {
  return hodge.empty() ? 0 : hodge.rbegin()->first;
}

const HodgeBlockData& HodgeSystem::local_at(const std::string& point) const {
  auto it = local.find(point);
  if (it == local.end()) throw CalcError(ErrC::UnknownPoint, "no finite point '" + point + "'");
  return it->second;
}

std::optional<Angle> HodgeSystem::infinity_scalar() const {
  std::optional<Angle> found;
  for (const auto& [key, mult] : infinity.entries()) {
    if (key.ell != 0) return std::nullopt;
    if (found && *found != key.angle) return std::nullopt;
    found = key.angle;
  }
  return found;
}

bool HodgeSystem::multiplicity_free() const {
  return std::all_of(hodge.begin(), hodge.end(), [](const auto& kv) { return kv.second <= 1; });
}

void HodgeSystem::validate() const {
  if (points.empty()) invariant_fail("system needs at least one finite point");
  if (local.size() != points.size()) invariant_fail("local stores do not match the point list");
  for (const auto& p : points)
    if (!local.count(p)) invariant_fail("missing local store for point '" + p + "'");
  for (const auto& [p, hp] : hodge)
    if (hp <= 0) invariant_fail("zero or negative Hodge number stored");
  if (rank() < 1) invariant_fail("rank must be at least 1");
  if (hodge.size() != degrees.size() ||
      !std::equal(hodge.begin(), hodge.end(), degrees.begin(),
                  [](const auto& a, const auto& b) { return a.first == b.first; }))
    invariant_fail("degree levels do not match Hodge levels");

  if (infinity.kind() != StoreKind::Nu) invariant_fail("infinity store must hold nearby cycles");
  if (infinity.dimension() != rank()) invariant_fail("infinity data dimension != rank");

  Rational residue = infinity.residue_weight();
  int lo = min_level(), hi = max_level();
  for (int p = lo; p <= hi; ++p)
    if (infinity.level_dim(p) != h(p)) invariant_fail("infinity level dimensions != h^p");

  for (const auto& point : points) {
    const HodgeBlockData& mu = local_at(point);
    if (mu.kind() != StoreKind::Mu) invariant_fail("finite store must hold vanishing cycles");
    HodgeBlockData nu(StoreKind::Nu);
    try {
      nu = recover_nu(mu, hodge);
    } catch (const CalcError& e) {
      invariant_fail("nearby-cycle recovery failed at '" + point + "': " + e.what());
    }
    for (int p = lo; p <= hi; ++p)
      if (nu.level_dim(p) != h(p))
        invariant_fail("recovered level dimensions != h^p at '" + point + "'");
    residue += nu.residue_weight();
  }

  long long delta_sum = 0;
  for (const auto& [p, d] : degrees) delta_sum += d;
  if (Rational(delta_sum) != -residue) {
    std::ostringstream msg;
    msg << "residue-degree identity broken: sum(delta) = " << delta_sum
        << " but residue total = " << residue.numerator() << "/" << residue.denominator();
    invariant_fail(msg.str());
  }
  if (delta_sum > 0) invariant_fail("total degree must be nonpositive");
}

const BlockSpectrum& MonodromySystem::local_at(const std::string& point) const {
  auto it = local.find(point);
  if (it == local.end()) throw CalcError(ErrC::UnknownPoint, "no finite point '" + point + "'");
  return it->second;
}

std::optional<Angle> MonodromySystem::infinity_scalar() const {
  std::optional<Angle> found;
  for (const auto& [key, mult] : infinity.entries()) {
    if (key.ell != 0) return std::nullopt;
    if (found && *found != key.angle) return std::nullopt;
    found = key.angle;
  }
  return found;
}

void MonodromySystem::validate() const {
  if (points.empty()) invariant_fail("system needs at least one finite point");
  if (local.size() != points.size()) invariant_fail("local stores do not match the point list");
  for (const auto& p : points)
    if (!local.count(p)) invariant_fail("missing local store for point '" + p + "'");
  if (rank < 1) invariant_fail("rank must be at least 1");
  if (infinity.kind() != StoreKind::Nu) invariant_fail("infinity store must hold nearby cycles");
  if (infinity.dimension() != rank) invariant_fail("infinity data dimension != rank");
  for (const auto& point : points) {
    const BlockSpectrum& mu = local_at(point);
    if (mu.kind() != StoreKind::Mu) invariant_fail("finite store must hold vanishing cycles");
    try {
      recover_nu(mu, rank);
    } catch (const CalcError& e) {
      invariant_fail("nearby-cycle recovery failed at '" + point + "': " + e.what());
    }
  }
}

Angle RankOneLine::angle_at(const std::string& point) const {
  auto it = finite_angles.find(point);
  return it == finite_angles.end() ? Angle() : it->second;
}

Angle RankOneLine::infinity_angle() const {
  Rational sum(0);
  for (const auto& [point, a] : finite_angles) sum += a.value();
  return Angle(-sum);
}

long long RankOneLine::degree() const {
  Rational sum = infinity_angle().value();
  for (const auto& [point, a] : finite_angles) sum += a.value();
  if (sum.denominator() != 1)
    throw CalcError(ErrC::InvariantViolation, "rank-one residues do not sum to an integer");
  return -sum.numerator();
}

RankOneLine RankOneLine::inverse() const {
  RankOneLine out;
  out.level_offset = -level_offset;
  for (const auto& [point, a] : finite_angles)
    if (!a.is_zero()) out.finite_angles.emplace(point, a.inverse());
  return out;
}

int rank_of(const Value& v) {
  if (const auto* h = std::get_if<HodgeSystem>(&v)) return h->rank();
  return std::get<MonodromySystem>(v).rank;
}

void validate(const Value& v) {
  std::visit([](const auto& s) { s.validate(); }, v);
}

}  // namespace khc
