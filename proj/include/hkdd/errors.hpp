#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkdd/integer.hpp"

namespace hkdd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

class NonSymmetric : public Error {
 public:
  NonSymmetric(std::size_t i, std::size_t j)
      : Error("gram matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")"),
        row(i), col(j) {}
  std::size_t row;
  std::size_t col;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// MᵀGM differs from G at (row, col).
class NotIsometry : public Error {
 public:
  NotIsometry(std::size_t i, std::size_t j, Integer got, Integer want)
      : Error("matrix is not an isometry: (MᵀGM)(" + std::to_string(i) + ", " + std::to_string(j) + ") = " +
              got.str() + ", expected " + want.str()),
        row(i), col(j), actual(std::move(got)), expected(std::move(want)) {}
  std::size_t row;
  std::size_t col;
  Integer actual;
  Integer expected;
};

class LatticeMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("polynomial is zero") {}
};

class NotPalindromic : public Error {
 public:
  NotPalindromic() : Error("polynomial is not palindromic") {}
};

class OddDegree : public Error {
 public:
  OddDegree() : Error("polynomial has odd degree") {}
};

class NotMonic : public Error {
 public:
  NotMonic() : Error("polynomial is not monic") {}
};

class DegreeTooSmall : public Error {
 public:
  DegreeTooSmall() : Error("polynomial degree is below 2") {}
};

/// The characteristic polynomial is neither all-cyclotomic nor cyclotomic times one Salem factor.
class SpectralStructureViolated : public Error {
 public:
  SpectralStructureViolated(const std::string& what, double radius_estimate)
      : Error(what), spectral_radius_estimate(radius_estimate) {}
  double spectral_radius_estimate;
};

class BadN : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hkdd
