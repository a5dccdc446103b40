#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "traintrack/errors.hpp"

namespace tt {

/// One signed generator of a free group: generator index plus orientation.
struct Letter {
  std::uint32_t index = 0;
  bool inverse = false;

  int sign() const noexcept { return inverse ? -1 : +1; }
  Letter inverted() const noexcept { return Letter{index, !inverse}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word. The empty word is the identity.
///
/// Construction always reduces, so a Word never contains an adjacent
/// pair (x, x^-1).
class Word {
 public:
  Word() = default;

  /// Reduces `raw` with a single stack pass.
  explicit Word(std::vector<Letter> raw);

  static Word from_letter(Letter l) { return Word(std::vector<Letter>{l}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  /// Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;

  /// Largest generator index used, or -1 when empty.
  std::int64_t max_index() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Reduces a raw letter sequence, validating indices against the alphabet.
Word reduce_word(const std::vector<Letter>& raw, std::size_t alphabet_size);

/// Formats a word over generator names; inverse letters carry a trailing
/// apostrophe ("c' b"). The empty word prints as "1".
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// Parses whitespace-separated letters ("c a a a", inverses as "a'").
Word parse_word(const std::string& text, const std::vector<std::string>& names);

}  // namespace tt
