#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fractree {

// Reduced fraction num/den in [0, 1].
//
// Binary digits follow the terminating convention: a dyadic rational such as
// 1/2 expands as 0.1000..., never 0.0111.... The integer 1 has fractional part
// zero, so its digit stream is all zeros as well.
//
// Denominators are limited to 2^63 so that one doubling step never overflows.
class ExactPos {
 public:
  ExactPos() = default;
  ExactPos(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double to_double() const noexcept;
  std::string to_string() const;

  // frac(2^k * x), exact.
  ExactPos scaled_fraction(std::uint64_t k) const noexcept;

  // 1 - x.
  ExactPos mirror() const noexcept;

  // min(x, 1 - x); for x in [0,1] this is the distance to the nearest integer.
  ExactPos sigma() const noexcept;

  // k-th binary digit (k >= 1), computed by modular doubling.
  int digit(std::uint64_t k) const noexcept;

  friend bool operator==(const ExactPos&, const ExactPos&) = default;
  friend std::strong_ordering operator<=>(const ExactPos& lhs, const ExactPos& rhs) noexcept;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

// Sequential digit reader: each next() costs one doubling.
class DigitStream {
 public:
  explicit DigitStream(const ExactPos& x) noexcept;

  int next() noexcept;

 private:
  std::uint64_t rem_;
  std::uint64_t den_;
};

// Sequential reader of sigma(2^k x) for k = 0, 1, 2, ...
class SawtoothStream {
 public:
  explicit SawtoothStream(const ExactPos& x) noexcept;

  double next() noexcept;

 private:
  std::uint64_t rem_;
  std::uint64_t den_;
};

// Distance from x >= 0 to the nearest nonnegative integer.
double sigma(double x);
double sigma(const ExactPos& x) noexcept;

// sigma(2^k x) evaluated exactly, rounded once.
double sigma_scaled(const ExactPos& x, std::uint64_t k) noexcept;

int dyadic_digit(const ExactPos& x, std::uint64_t k) noexcept;

}  // namespace fractree
