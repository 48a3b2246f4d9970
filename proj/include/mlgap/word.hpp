#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlgap {

using Digit = int;

/// Finite string of partial quotients, every digit >= 1. The empty word is
/// allowed and stands for the empty continuation.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Digit> digits);
  explicit Word(std::vector<Digit> digits);

  /// Parses "112" (one letter per character) or "10.3.1" (dot-separated).
  static Word parse(std::string_view token);
  /// Inverse of `parse`: plain digit string when every letter is below 10.
  std::string to_string() const;

  std::span<const Digit> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  Word concat(const Word& tail) const;
  Word reversed() const;
  /// Cyclic rotation starting at position `shift` (taken mod size).
  Word rotated(std::size_t shift) const;
  Word slice(std::size_t from, std::size_t count) const;
  /// Lexicographically smallest rotation.
  Word min_rotation() const;
  /// True when the word is not a proper power u^k, k >= 2.
  bool is_primitive() const;
  /// True when `needle` occurs as a factor.
  bool contains(const Word& needle) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Digit> digits_;
};

}  // namespace mlgap
