#include "fractree/exact_pos.hpp"

#include <cmath>
#include <numeric>

#include "fractree/error.hpp"

namespace fractree {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kMaxDen = std::uint64_t{1} << 63;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t pow2mod(std::uint64_t k, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  std::uint64_t base = 2 % m;
  while (k > 0) {
    if (k & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    k >>= 1U;
  }
  return result;
}

double ratio(std::uint64_t num, std::uint64_t den) noexcept {
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ExactPos::ExactPos(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || den > kMaxDen) {
    throw Error(ErrorCode::OutOfRange, "denominator must lie in [1, 2^63]");
  }
  if (num > den) {
    throw Error(ErrorCode::OutOfRange,
                "position " + std::to_string(num) + "/" + std::to_string(den) + " exceeds 1");
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double ExactPos::to_double() const noexcept { return ratio(num_, den_); }

std::string ExactPos::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactPos ExactPos::scaled_fraction(std::uint64_t k) const noexcept {
  ExactPos out;
  out.num_ = mulmod(num_ % den_, pow2mod(k, den_), den_);
  out.den_ = den_;
  const std::uint64_t g = std::gcd(out.num_, out.den_);
  out.num_ /= g;
  out.den_ /= g;
  return out;
}

ExactPos ExactPos::mirror() const noexcept {
  ExactPos out;
  out.num_ = den_ - num_;
  out.den_ = den_;
  return out;
}

ExactPos ExactPos::sigma() const noexcept {
  return num_ <= den_ - num_ ? *this : mirror();
}

int ExactPos::digit(std::uint64_t k) const noexcept {
  if (k == 0) return 0;
  const std::uint64_t r = mulmod(num_ % den_, pow2mod(k - 1, den_), den_);
  return (static_cast<u128>(r) * 2 >= den_) ? 1 : 0;
}

std::strong_ordering operator<=>(const ExactPos& lhs, const ExactPos& rhs) noexcept {
  const u128 l = static_cast<u128>(lhs.num_) * rhs.den_;
  const u128 r = static_cast<u128>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DigitStream::DigitStream(const ExactPos& x) noexcept : rem_(x.num() % x.den()), den_(x.den()) {}

int DigitStream::next() noexcept {
  const u128 doubled = static_cast<u128>(rem_) * 2;
  if (doubled >= den_) {
    rem_ = static_cast<std::uint64_t>(doubled - den_);
    return 1;
  }
  rem_ = static_cast<std::uint64_t>(doubled);
  return 0;
}

SawtoothStream::SawtoothStream(const ExactPos& x) noexcept
    : rem_(x.num() % x.den()), den_(x.den()) {}

double SawtoothStream::next() noexcept {
  const std::uint64_t near = rem_ <= den_ - rem_ ? rem_ : den_ - rem_;
  const double value = ratio(near, den_);
  const u128 doubled = static_cast<u128>(rem_) * 2;
  rem_ = static_cast<std::uint64_t>(doubled >= den_ ? doubled - den_ : doubled);
  return value;
}

double sigma(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::OutOfRange, "sigma expects a finite nonnegative argument");
  }
  const double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

double sigma(const ExactPos& x) noexcept { return x.sigma().to_double(); }

double sigma_scaled(const ExactPos& x, std::uint64_t k) noexcept {
  return x.scaled_fraction(k).sigma().to_double();
}

int dyadic_digit(const ExactPos& x, std::uint64_t k) noexcept { return x.digit(k); }

}  // namespace fractree
