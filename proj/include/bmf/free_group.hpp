#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bmf {

// A word in the free group on f_1..f_p. Letter +g is f_g, -g is f_g^{-1}.
// Words produced by this module are always freely reduced.
using FreeWord = std::vector<int>;

// Appends `letters` to `word` with free cancellation at the junction.
void append_reduced(FreeWord& word, std::span<const int> letters);
void append_reduced(FreeWord& word, int letter);

FreeWord free_reduce(std::span<const int> letters);
FreeWord free_inverse(std::span<const int> word);
FreeWord free_concat(std::span<const int> a, std::span<const int> b);
bool is_freely_reduced(std::span<const int> word);
std::string free_word_to_string(std::span<const int> word);

// Maximum total number of letters an ArtinImage may hold before the
// computation is aborted with ResourceError.
inline constexpr std::size_t kDefaultImageCap = 1'000'000;

// Images of f_1..f_p under an automorphism of the free group, acting on the
// right: (f_i)phi = images[i-1].
class ArtinImage {
 public:
  ArtinImage() = default;
  static ArtinImage identity(int rank);
  // Checks the braid-automorphism invariant: the reduced image of
  // f_1 f_2 ... f_p is f_1 f_2 ... f_p.
  static ArtinImage from_images(std::vector<FreeWord> images);
  // Caller guarantees the images are reduced and define a braid automorphism.
  static ArtinImage from_images_unchecked(std::vector<FreeWord> images) {
    return ArtinImage(std::move(images));
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int generator) const { return images_[generator - 1]; }
  std::size_t total_length() const;
  bool is_identity() const;
  bool preserves_boundary_word() const;

  // Image of an arbitrary word: substitute each letter by its image.
  FreeWord apply(std::span<const int> word, std::size_t cap = kDefaultImageCap) const;

  // Right-action composition: (x)(this.then(next)) = ((x)this)next.
  ArtinImage then(const ArtinImage& next, std::size_t cap = kDefaultImageCap) const;

  std::size_t hash() const;
  friend bool operator==(const ArtinImage&, const ArtinImage&) = default;

 private:
  explicit ArtinImage(std::vector<FreeWord> images) : images_(std::move(images)) {}
  std::vector<FreeWord> images_;
};

struct ArtinImageHash {
  std::size_t operator()(const ArtinImage& a) const { return a.hash(); }
};

// Hash helper shared by modules that key on sequences of images.
inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace bmf
