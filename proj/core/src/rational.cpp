#include "listagree/rational.hpp"

#include "listagree/error.hpp"

namespace listagree {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedDimensions: return "MixedDimensions";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::TopDimensionalFace: return "TopDimensionalFace";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotARepresentationComplex: return "NotARepresentationComplex";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::CoreNotInFace: return "CoreNotInFace";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::LocalWitnessFailed: return "LocalWitnessFailed";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NotGenuine: return "NotGenuine";
    case ErrorKind::NotACoboundary: return "NotACoboundary";
    case ErrorKind::NoContainingFace: return "NoContainingFace";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotASimpleCycle: return "NotASimpleCycle";
    case ErrorKind::PreconditionUnsatisfiable: return "PreconditionUnsatisfiable";
    case ErrorKind::NonpositiveGamma: return "NonpositiveGamma";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace listagree
