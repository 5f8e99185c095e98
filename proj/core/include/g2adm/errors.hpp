#pragma once

#include <stdexcept>
#include <string>

namespace g2adm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input validation and parsing.
class InvalidGraph : public Error { using Error::Error; };
class InvalidParams : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

// Potential theory on metric graphs.
class NonZeroMass : public Error { using Error::Error; };
class Disconnected : public Error { using Error::Error; };
class NonProbabilityMeasure : public Error { using Error::Error; };
class InterpolationMismatch : public Error { using Error::Error; };

// Invariants of polarized metric graphs.
class GenusZero : public Error { using Error::Error; };
class UnsupportedGenus : public Error { using Error::Error; };
class AdmissibilityFailure : public Error { using Error::Error; };
class FormulaMismatch : public Error { using Error::Error; };
class Unclassifiable : public Error { using Error::Error; };

// Theta functions and the archimedean pipeline.
class NotPositiveDefinite : public Error { using Error::Error; };
class TruncationOverflow : public Error { using Error::Error; };
class QuadratureUnstable : public Error { using Error::Error; };

class DegenerateThetaNull : public Error {
 public:
  DegenerateThetaNull(std::string characteristic, double modulus);
  const std::string& characteristic() const noexcept { return characteristic_; }
  double modulus() const noexcept { return modulus_; }

 private:
  std::string characteristic_;
  double modulus_;
};

}  // namespace g2adm
