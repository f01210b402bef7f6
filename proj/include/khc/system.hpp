#pragma once

#include "khc/block_data.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace khc {

enum class Pairing { None, Symmetric, Skew, Unknown };

const char* to_string(Pairing p);
std::optional<Pairing> pairing_from_string(const std::string& s);

/// Local system on P^1 minus (finite points + infinity), described by its
/// level-refined local data: vanishing cycles at finite points, nearby
/// cycles at infinity, Hodge numbers h^p and degrees delta^p of the graded
/// pieces of the canonical extension.
struct HodgeSystem {
  std::vector<std::string> points;              // finite singular points, ordered
  std::map<std::string, HodgeBlockData> local;  // mu-store per finite point
  HodgeBlockData infinity{StoreKind::Nu};
  std::map<int, int> hodge;        // p -> h^p, no zero entries
  std::map<int, long long> degrees;  // p -> delta^p, keys match hodge
  Pairing pairing = Pairing::Unknown;

  int rank() const;
  int h(int p) const;
  long long delta(int p) const;
  int min_level() const;
  int max_level() const;
  const HodgeBlockData& local_at(const std::string& point) const;

  /// The infinity angle when the monodromy there is scalar (all blocks of
  /// size one, a single eigenvalue); the trivial scalar (angle 0) counts.
  std::optional<Angle> infinity_scalar() const;

  /// True when h^p <= 1 for every p.
  bool multiplicity_free() const;

  /// Checks every structural invariant: rank >= 1, store shapes, per-level
  /// consistency at all points, and the residue-degree identity
  /// sum(delta) = -sum(angle * size * mult) <= 0. Throws InvariantViolation.
  void validate() const;

  friend bool operator==(const HodgeSystem&, const HodgeSystem&) = default;
};

/// The same data with Hodge levels summed out and no degrees.
struct MonodromySystem {
  std::vector<std::string> points;
  std::map<std::string, BlockSpectrum> local;  // mu
  BlockSpectrum infinity{StoreKind::Nu};
  int rank = 0;

  const BlockSpectrum& local_at(const std::string& point) const;
  std::optional<Angle> infinity_scalar() const;
  void validate() const;

  friend bool operator==(const MonodromySystem&, const MonodromySystem&) = default;
};

/// Rank-one local system given by the angles of its finite-point
/// monodromies; the infinity angle is forced by the product-one constraint.
/// Points absent from the map carry angle 0.
struct RankOneLine {
  std::map<std::string, Angle> finite_angles;
  int level_offset = 0;

  Angle angle_at(const std::string& point) const;
  Angle infinity_angle() const;

  /// Degree of the canonical extension: minus the sum of all r+1 residues
  /// (always an integer, and <= 0).
  long long degree() const;

  /// Pointwise inverse: a -> (1-a) mod 1, with 0 fixed.
  RankOneLine inverse() const;

  friend bool operator==(const RankOneLine&, const RankOneLine&) = default;
};

using Value = std::variant<HodgeSystem, MonodromySystem>;

int rank_of(const Value& v);
void validate(const Value& v);

}  // namespace khc
