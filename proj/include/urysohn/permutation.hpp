#ifndef URYSOHN_PERMUTATION_HPP
#define URYSOHN_PERMUTATION_HPP

#include <cstdint>
#include <cstring>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace urysohn {

/// Bijection on {0..degree-1}. Composition is (a*b)(x) = a(b(x)).
class Permutation {
public:
  explicit Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[v] = 1;
    }
  }

  /// Single cycle (c0 c1 ... ck) on the given degree.
  static Permutation cycle(int degree, std::span<const int> pts) {
    Permutation p(degree);
    for (std::size_t i = 0; i < pts.size(); ++i)
      p.img_[pts[i]] = pts[(i + 1) % pts.size()];
    return Permutation(std::move(p.img_));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int> &images() const { return img_; }

  Permutation compose(const Permutation &other) const {
    if (other.degree() != degree())
      throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> r(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
      r[x] = img_[other.img_[x]];
    Permutation p(0);
    p.img_ = std::move(r);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> r(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
      r[img_[x]] = static_cast<int>(x);
    Permutation p(0);
    p.img_ = std::move(r);
    return p;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != static_cast<int>(x))
        return false;
    return true;
  }

  long long order() const {
    // lcm of cycle lengths
    std::vector<char> seen(img_.size(), 0);
    long long ord = 1;
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s])
        continue;
      long long len = 0;
      int x = static_cast<int>(s);
      while (!seen[x]) {
        seen[x] = 1;
        x = img_[x];
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  /// Same permutation acting on a larger set, fixing the new points.
  Permutation padded(int new_degree) const {
    if (new_degree < degree())
      throw std::invalid_argument("Permutation: cannot pad to smaller degree");
    std::vector<int> r(new_degree);
    std::iota(r.begin(), r.end(), 0);
    for (int x = 0; x < degree(); ++x)
      r[x] = img_[x];
    Permutation p(0);
    p.img_ = std::move(r);
    return p;
  }

  bool operator==(const Permutation &o) const { return img_ == o.img_; }

  /// Stable byte key for hashing.
  std::string key() const {
    std::string s(img_.size() * sizeof(int), '\0');
    std::memcpy(s.data(), img_.data(), s.size());
    return s;
  }

private:
  std::vector<int> img_;
};

} // namespace urysohn

#endif
