#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "traintrack/word.hpp"

namespace tt {

/// An endomorphism of a free group given by the images of the basis.
///
/// Images must be non-empty reduced words. No global injectivity check is
/// attempted; verify_inverse_pair is the supported certificate that a pair
/// of morphisms are mutually inverse automorphisms.
class BasisMorphism {
 public:
  BasisMorphism(std::size_t alphabet_size, std::vector<Word> images,
                std::vector<std::string> names = {});

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(std::size_t generator) const { return images_.at(generator); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// True when every image uses only positive letters (substitution case).
  bool is_positive() const noexcept;

  std::size_t max_image_length() const noexcept;

  static BasisMorphism identity(std::size_t alphabet_size,
                                std::vector<std::string> names = {});

 private:
  std::size_t alphabet_size_;
  std::vector<Word> images_;
  std::vector<std::string> names_;
};

/// Image of a reduced word: concatenates generator images (inverted images
/// for negative letters) and freely reduces.
Word apply_morphism(const BasisMorphism& m, const Word& w);

/// n-fold application; n = 0 is the identity.
Word iterate_morphism(const BasisMorphism& m, const Word& w, std::size_t n);

/// True iff m2(m1(x)) = x and m1(m2(x)) = x for every generator x.
bool verify_inverse_pair(const BasisMorphism& m1, const BasisMorphism& m2);

/// Default generator names a, b, c, ... (then x0, x1, ... past 26).
std::vector<std::string> default_names(std::size_t alphabet_size);

}  // namespace tt
