#include "mlgap/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace mlgap {

namespace {
void check_digits(const std::vector<Digit>& digits) {
  for (Digit d : digits) {
    if (d < 1) throw std::invalid_argument("word digits must be >= 1, got " + std::to_string(d));
  }
}
}  // namespace

Word::Word(std::initializer_list<Digit> digits) : digits_(digits) { check_digits(digits_); }

Word::Word(std::vector<Digit> digits) : digits_(std::move(digits)) { check_digits(digits_); }

Word Word::parse(std::string_view token) {
  std::vector<Digit> digits;
  if (token.empty() || token == "-") return Word{};
  if (token.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= token.size()) {
      const std::size_t stop = std::min(token.find('.', start), token.size());
      const std::string_view piece = token.substr(start, stop - start);
      Digit value = 0;
      const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
        throw std::invalid_argument("malformed word '" + std::string(token) + "'");
      }
      digits.push_back(value);
      start = stop + 1;
    }
  } else {
    for (char c : token) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("malformed word '" + std::string(token) + "'");
      }
      digits.push_back(c - '0');
    }
  }
  return Word(std::move(digits));
}

std::string Word::to_string() const {
  if (digits_.empty()) return "-";
  const bool compact = std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d < 10; });
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!compact && i > 0) out += '.';
    out += std::to_string(digits_[i]);
  }
  return out;
}

Word Word::concat(const Word& tail) const {
  std::vector<Digit> out = digits_;
  out.insert(out.end(), tail.digits_.begin(), tail.digits_.end());
  return Word(std::move(out));
}

Word Word::reversed() const {
  return Word(std::vector<Digit>(digits_.rbegin(), digits_.rend()));
}

Word Word::rotated(std::size_t shift) const {
  if (digits_.empty()) return *this;
  std::vector<Digit> out = digits_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return Word(std::move(out));
}

Word Word::slice(std::size_t from, std::size_t count) const {
  if (from > digits_.size()) throw std::out_of_range("word slice start past end");
  count = std::min(count, digits_.size() - from);
  return Word(std::vector<Digit>(digits_.begin() + static_cast<std::ptrdiff_t>(from),
                                 digits_.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

Word Word::min_rotation() const {
  Word best = *this;
  for (std::size_t k = 1; k < digits_.size(); ++k) {
    Word candidate = rotated(k);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

bool Word::is_primitive() const {
  const std::size_t n = digits_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0 && rotated(d) == *this) return false;
  }
  return true;
}

bool Word::contains(const Word& needle) const {
  return std::search(digits_.begin(), digits_.end(), needle.digits_.begin(), needle.digits_.end()) !=
         digits_.end();
}

}  // namespace mlgap
