#include "mingen/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mingen {

Perm::Perm(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int x : images) {
    if (x < 0 || x >= n || seen[x])
      throw input_error("permutation images are not a bijection on 0.." +
                        std::to_string(n - 1));
    seen[x] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree)
        throw input_error("cycle point out of range 0.." + std::to_string(degree - 1));
      if (img[a] != a) throw input_error("point repeated across cycles: " + std::to_string(a));
      img[a] = b;
    }
  }
  return from_images(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
  return r;
}

int Perm::order() const {
  // lcm of cycle lengths; fits in int at supported degrees only for the
  // cycle structure itself, so accumulate in long long and saturate.
  long long ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    long long len = 0;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

int Perm::first_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return -1;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

std::size_t Perm::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ img_.size();
  for (int x : img_) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace mingen
namespace mingen {

Perm perm_pow(const Perm& x, long long e) {
  Perm acc(x.degree());
  Perm base = x;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace mingen
