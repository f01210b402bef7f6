#include "khc/angle.hpp"

#include "khc/errors.hpp"

#include <charconv>
#include <ostream>

namespace khc {

Angle::Angle(long long num, long long den) {
  if (den == 0) throw CalcError(ErrC::MalformedAngle, "zero denominator");
  value_ = normalized(Rational(num, den));
}

Rational Angle::normalized(Rational v) {
  // boost::rational keeps the denominator positive and the fraction reduced.
  long long n = v.numerator(), d = v.denominator();
  long long q = n / d;
  if (n % d < 0) --q;
  return v - q;
}

std::string Angle::str() const {
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

namespace {

long long parse_ll(std::string_view s) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw CalcError(ErrC::MalformedAngle, "bad integer '" + std::string(s) + "'");
  return out;
}

}  // namespace

Angle Angle::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(parse_ll(text), 1);
  return Angle(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.str(); }

const char* to_string(ErrC code) {
  switch (code) {
    case ErrC::MalformedAngle: return "MalformedAngle";
    case ErrC::UnknownPoint: return "UnknownPoint";
    case ErrC::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrC::ChiIsOne: return "ChiIsOne";
    case ErrC::NotScalarAtInfinity: return "NotScalarAtInfinity";
    case ErrC::ChiMismatch: return "ChiMismatch";
    case ErrC::NegativeHodgeNumber: return "NegativeHodgeNumber";
    case ErrC::NegativeDimension: return "NegativeDimension";
    case ErrC::NotRigid: return "NotRigid";
    case ErrC::NotAllowed: return "NotAllowed";
    case ErrC::NotMultiplicityFree: return "NotMultiplicityFree";
    case ErrC::ShapeMismatch: return "ShapeMismatch";
    case ErrC::MissingTrivialBlock: return "MissingTrivialBlock";
    case ErrC::Inconsistent: return "Inconsistent";
    case ErrC::IterationCapExceeded: return "IterationCapExceeded";
    case ErrC::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

}  // namespace khc
