#include "bmf/free_group.hpp"

#include <cstdlib>
#include <sstream>

#include "bmf/error.hpp"

namespace bmf {

void append_reduced(FreeWord& word, int letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

void append_reduced(FreeWord& word, std::span<const int> letters) {
  for (int x : letters) append_reduced(word, x);
}

FreeWord free_reduce(std::span<const int> letters) {
  FreeWord out;
  out.reserve(letters.size());
  append_reduced(out, letters);
  return out;
}

FreeWord free_inverse(std::span<const int> word) {
  FreeWord out(word.rbegin(), word.rend());
  for (int& x : out) x = -x;
  return out;
}

FreeWord free_concat(std::span<const int> a, std::span<const int> b) {
  FreeWord out(a.begin(), a.end());
  append_reduced(out, b);
  return out;
}

bool is_freely_reduced(std::span<const int> word) {
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] == -word[i - 1]) return false;
  }
  return true;
}

std::string free_word_to_string(std::span<const int> word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << 'f' << std::abs(word[i]);
    if (word[i] < 0) os << "^-1";
  }
  return os.str();
}

ArtinImage ArtinImage::identity(int rank) {
  std::vector<FreeWord> images(rank);
  for (int i = 0; i < rank; ++i) images[i] = {i + 1};
  return ArtinImage(std::move(images));
}

bool ArtinImage::preserves_boundary_word() const {
  FreeWord product;
  for (const auto& w : images_) append_reduced(product, w);
  if (product.size() != images_.size()) return false;
  for (std::size_t i = 0; i < product.size(); ++i) {
    if (product[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

ArtinImage ArtinImage::from_images(std::vector<FreeWord> images) {
  const int rank = static_cast<int>(images.size());
  for (const auto& w : images) {
    for (int x : w) {
      if (x == 0 || std::abs(x) > rank) throw InputError("free letter out of range");
    }
    if (!is_freely_reduced(w)) throw InputError("image is not freely reduced");
  }
  ArtinImage out(std::move(images));
  if (!out.preserves_boundary_word()) {
    throw InputError("images do not fix f_1...f_p; not a braid automorphism");
  }
  return out;
}

std::size_t ArtinImage::total_length() const {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.size();
  return n;
}

bool ArtinImage::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].size() != 1 || images_[i][0] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

FreeWord ArtinImage::apply(std::span<const int> word, std::size_t cap) const {
  FreeWord out;
  for (int x : word) {
    const FreeWord& img = images_[std::abs(x) - 1];
    if (x > 0) {
      for (int y : img) append_reduced(out, y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) append_reduced(out, -*it);
    }
    if (out.size() > cap) throw ResourceError("free-word image exceeds length cap");
  }
  return out;
}

ArtinImage ArtinImage::then(const ArtinImage& next, std::size_t cap) const {
  std::vector<FreeWord> images;
  images.reserve(images_.size());
  std::size_t total = 0;
  for (const auto& w : images_) {
    images.push_back(next.apply(w, cap));
    total += images.back().size();
    if (total > cap) throw ResourceError("free-word image exceeds length cap");
  }
  return ArtinImage(std::move(images));
}

std::size_t ArtinImage::hash() const {
  std::size_t h = images_.size();
  for (const auto& w : images_) {
    h = hash_combine(h, w.size());
    for (int x : w) h = hash_combine(h, static_cast<std::size_t>(static_cast<std::int64_t>(x)));
  }
  return h;
}

}  // namespace bmf
