#include "traintrack/morphism.hpp"

#include <algorithm>

namespace tt {

std::vector<std::string> default_names(std::size_t alphabet_size) {
  std::vector<std::string> names;
  names.reserve(alphabet_size);
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    if (i < 26) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      names.push_back("x" + std::to_string(i - 26));
    }
  }
  return names;
}

BasisMorphism::BasisMorphism(std::size_t alphabet_size, std::vector<Word> images,
                             std::vector<std::string> names)
    : alphabet_size_(alphabet_size), images_(std::move(images)), names_(std::move(names)) {
  if (images_.size() != alphabet_size_) {
    throw MalformedInputError("expected " + std::to_string(alphabet_size_) +
                              " images, got " + std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) {
      throw MalformedInputError("image of generator " + std::to_string(i) +
                                " is empty");
    }
    if (images_[i].max_index() >= static_cast<std::int64_t>(alphabet_size_)) {
      throw MalformedInputError("image of generator " + std::to_string(i) +
                                " uses a letter outside the alphabet");
    }
  }
  if (names_.empty()) names_ = default_names(alphabet_size_);
  if (names_.size() != alphabet_size_) {
    throw MalformedInputError("name list does not match alphabet size");
  }
}

bool BasisMorphism::is_positive() const noexcept {
  for (const Word& w : images_) {
    for (const Letter& l : w.letters()) {
      if (l.inverse) return false;
    }
  }
  return true;
}

std::size_t BasisMorphism::max_image_length() const noexcept {
  std::size_t mx = 0;
  for (const Word& w : images_) mx = std::max(mx, w.size());
  return mx;
}

BasisMorphism BasisMorphism::identity(std::size_t alphabet_size,
                                      std::vector<std::string> names) {
  std::vector<Word> images;
  images.reserve(alphabet_size);
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    images.push_back(Word::from_letter(Letter{static_cast<std::uint32_t>(i), false}));
  }
  return BasisMorphism(alphabet_size, std::move(images), std::move(names));
}

Word apply_morphism(const BasisMorphism& m, const Word& w) {
  if (w.max_index() >= static_cast<std::int64_t>(m.alphabet_size())) {
    throw MalformedInputError("word uses a letter outside the morphism's alphabet");
  }
  Word out;
  for (const Letter& l : w.letters()) {
    const Word& im = m.image(l.index);
    out = out * (l.inverse ? im.inverse() : im);
  }
  return out;
}

Word iterate_morphism(const BasisMorphism& m, const Word& w, std::size_t n) {
  Word cur = w;
  for (std::size_t i = 0; i < n; ++i) cur = apply_morphism(m, cur);
  return cur;
}

bool verify_inverse_pair(const BasisMorphism& m1, const BasisMorphism& m2) {
  if (m1.alphabet_size() != m2.alphabet_size()) {
    throw MalformedInputError("inverse-pair check requires matching alphabets");
  }
  for (std::size_t i = 0; i < m1.alphabet_size(); ++i) {
    const Word x = Word::from_letter(Letter{static_cast<std::uint32_t>(i), false});
    if (apply_morphism(m2, m1.image(i)) != x) return false;
    if (apply_morphism(m1, m2.image(i)) != x) return false;
  }
  return true;
}

}  // namespace tt
