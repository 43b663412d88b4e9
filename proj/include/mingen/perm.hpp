#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mingen/common.hpp"

namespace mingen {

// A permutation of {0..degree-1}. Points act on the right: p^(a*b) = (p^a)^b.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity

  // Validates that `images` is a bijection; throws input_error otherwise.
  static Perm from_images(std::vector<int> images);
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& o) const;  // apply *this, then o
  Perm inverse() const;
  int order() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }

  int first_moved() const;  // -1 if identity
  bool moves(int p) const { return img_[p] != p; }

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles
  std::string str() const;                       // "(0 1 2)(3 4)" or "()"

  std::size_t hash() const;

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

Perm perm_pow(const Perm& x, long long e);  // e >= 0

}  // namespace mingen
