#pragma once

// Arbitrary-precision scalars and a small dense integer matrix.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hkdd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  void set_column(std::size_t j, const IntVector& v);

  IntMatrix transpose() const;
  std::vector<std::vector<Integer>> to_rows() const;

  // Largest absolute entry; 0 for the empty matrix.
  Integer max_abs() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

// Determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);

Integer dot(const IntVector& a, const IntVector& b);
Integer content(const IntVector& v);  // gcd of entries, nonnegative

// Exact floor of the square root; nullopt-like behaviour is expressed by is_perfect_square.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

double to_double(const Rational& q);
double to_double(const Integer& z);

// "p/q" or "p" for integral values.
std::string to_string(const Rational& q);
/// Decimal digits with an optional sign. Throws InvalidArgument.
Integer parse_integer(const std::string& text);
/// "p/q" or "p". Throws InvalidArgument.
Rational parse_rational(const std::string& text);

// Fixed-point rendering of q with `significant` significant digits, rounded half away from zero.
std::string format_decimal(const Rational& q, int significant);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

}  // namespace hkdd
