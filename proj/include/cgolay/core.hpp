#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cgolay {

/// An element of {1, i, -1, -i}, stored as the exponent c of i^c.
class Quat {
 public:
  constexpr Quat() = default;
  constexpr explicit Quat(int exponent) : exp_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {}

  static constexpr Quat one() { return Quat(0); }
  static constexpr Quat i() { return Quat(1); }
  static constexpr Quat minus_one() { return Quat(2); }
  static constexpr Quat minus_i() { return Quat(3); }

  constexpr int exponent() const { return exp_; }
  constexpr bool is_real() const { return (exp_ & 1U) == 0; }
  constexpr Quat conj() const { return Quat(4 - exp_); }

  constexpr Quat operator*(Quat o) const { return Quat(exp_ + o.exp_); }
  constexpr Quat operator-() const { return Quat(exp_ + 2); }
  constexpr bool operator==(const Quat&) const = default;

  std::complex<double> value() const;

  /// '+' for 1, '-' for -1, 'i' for i, 'j' for -i.
  char symbol() const;
  static Quat from_symbol(char c);

 private:
  std::uint8_t exp_ = 0;
};

/// Exact complex integer.
struct GaussianInt {
  long re = 0;
  long im = 0;

  constexpr GaussianInt operator+(GaussianInt o) const { return {re + o.re, im + o.im}; }
  constexpr GaussianInt operator-(GaussianInt o) const { return {re - o.re, im - o.im}; }
  constexpr GaussianInt operator*(GaussianInt o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  constexpr GaussianInt& operator+=(GaussianInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr long norm() const { return re * re + im * im; }
  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr bool operator==(const GaussianInt&) const = default;

  static constexpr GaussianInt of(Quat q) {
    constexpr std::array<long, 4> kRe{1, 0, -1, 0};
    constexpr std::array<long, 4> kIm{0, 1, 0, -1};
    return {kRe[q.exponent()], kIm[q.exponent()]};
  }
};

class QuatSequence {
 public:
  QuatSequence() = default;
  explicit QuatSequence(std::vector<Quat> entries);
  /// Parses the '+', '-', 'i', 'j' text encoding.
  static QuatSequence parse(std::string_view text);
  static QuatSequence from_exponents(const std::vector<int>& exponents);

  std::size_t size() const { return entries_.size(); }
  Quat operator[](std::size_t k) const { return entries_[k]; }
  Quat& operator[](std::size_t k) { return entries_[k]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Quat>& entries() const { return entries_; }

  std::string to_string() const;

  bool operator==(const QuatSequence&) const = default;
  /// Ordered by text encoding so that sorting matches sorted output files.
  std::strong_ordering operator<=>(const QuatSequence& o) const;

 private:
  std::vector<Quat> entries_;
};

enum class Parity { even, odd };

/// A length-n sequence whose slots of one index parity are forced to zero.
class MaskedSequence {
 public:
  /// All slots of the given parity start at 1; the others are zero.
  MaskedSequence(std::size_t n, Parity parity);

  std::size_t size() const { return slots_.size(); }
  Parity parity() const { return parity_; }
  /// True when index k carries an entry (is not a forced zero).
  bool is_active(std::size_t k) const { return (k % 2 == 0) == (parity_ == Parity::even); }
  std::optional<Quat> at(std::size_t k) const;
  /// Sets an active slot. Throws for inactive slots.
  void set(std::size_t k, Quat q);
  std::size_t nonzero_count() const;

  /// Zero slots print as '0'.
  std::string to_string() const;
  static MaskedSequence parse(std::string_view text, Parity parity);

  bool operator==(const MaskedSequence&) const = default;

 private:
  std::vector<std::int8_t> slots_;  // exponent, or -1 for a zero slot
  Parity parity_;
};

struct GolayPair {
  QuatSequence a;
  QuatSequence b;

  std::size_t size() const { return a.size(); }
  /// The pair-file line without trailing newline: n<TAB>A<TAB>B.
  std::string to_line() const;
  static GolayPair parse_line(std::string_view line);

  bool operator==(const GolayPair&) const = default;
  std::strong_ordering operator<=>(const GolayPair& o) const;
};

GaussianInt autocorr(const QuatSequence& seq, std::size_t shift);
GaussianInt autocorr(const MaskedSequence& seq, std::size_t shift);

/// Exact check of N_A(s) + N_B(s) = 0 for s = 1..n-1.
bool is_golay_pair(const QuatSequence& a, const QuatSequence& b);
inline bool is_golay_pair(const GolayPair& p) { return is_golay_pair(p.a, p.b); }

std::complex<double> hall_eval(const QuatSequence& seq, std::complex<double> z);
std::complex<double> hall_eval(const MaskedSequence& seq, std::complex<double> z);

/// (resum, imsum) of the entries.
GaussianInt entry_sum(const QuatSequence& seq);
GaussianInt entry_sum(const MaskedSequence& seq);

/// c * (x_0, ..., x_{n-1}) = (x_0, c x_1, c^2 x_2, ...).
QuatSequence positional_scale(Quat c, const QuatSequence& seq);

enum class Equivalence { E1, E2, E3, E4, E5 };
inline constexpr std::array<Equivalence, 5> kAllEquivalences{
    Equivalence::E1, Equivalence::E2, Equivalence::E3, Equivalence::E4, Equivalence::E5};

GolayPair apply_equivalence(Equivalence op, const GolayPair& p);

/// Equivalent pair with a_0 = a_1 = b_0 = 1 and a_2 != -i (for the indices
/// that exist).
GolayPair normalize(const GolayPair& p);
bool is_normalized(const GolayPair& p);

std::pair<MaskedSequence, MaskedSequence> split_even_odd(const QuatSequence& seq);

}  // namespace cgolay
