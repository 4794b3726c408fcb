#pragma once

// Signed permutations: bijections of [n] ∪ [n]* commuting with the star
// involution (the hyperoctahedral group B_n). The even-sign-change elements
// form the index-2 subgroup D_n.

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "coxmat/errors.hpp"
#include "coxmat/signed_set.hpp"

namespace coxmat {

class signed_permutation {
 public:
  explicit signed_permutation(int n) : n_(n), image_(2 * n) {
    std::iota(image_.begin(), image_.end(), 0);
  }

  // Window notation: image_of_index[i-1] is the image of element i, as a
  // signed element. The image of i* follows by commuting with star.
  static signed_permutation from_images(int n, const std::vector<signed_element>& image_of_index) {
    if (static_cast<int>(image_of_index.size()) != n)
      throw error(errc::invalid_input, "window notation needs n images");
    signed_permutation g(n);
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
      int c = element_code(image_of_index[i], n);
      g.image_[i] = c;
      g.image_[i + n] = star_code(c, n);
      seen |= 1u << image_of_index[i].index;
    }
    if (std::popcount(seen) != n)
      throw error(errc::invalid_input, "window notation images must hit every index once");
    return g;
  }

  // The transposition (e, e*)(e*, e) — swaps one element with its star.
  static signed_permutation star_swap(int n, int index) {
    signed_permutation g(n);
    g.image_[index - 1] = index - 1 + n;
    g.image_[index - 1 + n] = index - 1;
    return g;
  }

  // Generators of D_n as listed in cycle notation:
  //   s_i = (i, i+1)(i*, (i+1)*) for i < n,  s_n = (n-1, n*)((n-1)*, n).
  static signed_permutation generator(int n, int i) {
    if (i < 1 || i > n || n < 2) throw error(errc::invalid_input, "generator index out of range");
    signed_permutation g(n);
    auto swap_codes = [&](int a, int b) {
      g.image_[a] = b;
      g.image_[b] = a;
    };
    if (i < n) {
      swap_codes(i - 1, i);
      swap_codes(i - 1 + n, i + n);
    } else {
      swap_codes(n - 2, 2 * n - 1);  // (n-1, n*)
      swap_codes(n - 2 + n, n - 1);  // ((n-1)*, n)
    }
    return g;
  }

  int ground_size() const { return n_; }

  int apply_code(int c) const { return image_[c]; }

  signed_element operator()(signed_element e) const {
    return element_from_code(image_[element_code(e, n_)], n_);
  }

  signed_set operator()(const signed_set& s) const {
    std::uint32_t m = 0;
    for (int c : s.codes()) m |= 1u << image_[c];
    return signed_set(n_, m);
  }

  // (g * h)(x) = g(h(x)).
  signed_permutation operator*(const signed_permutation& h) const {
    signed_permutation out(n_);
    for (int c = 0; c < 2 * n_; ++c) out.image_[c] = image_[h.image_[c]];
    return out;
  }

  signed_permutation inverse() const {
    signed_permutation out(n_);
    for (int c = 0; c < 2 * n_; ++c) out.image_[image_[c]] = c;
    return out;
  }

  // Number of indices i ∈ [n] mapped to a starred element.
  int sign_changes() const {
    int count = 0;
    for (int i = 0; i < n_; ++i) count += image_[i] >= n_;
    return count;
  }

  bool is_even() const { return sign_changes() % 2 == 0; }

  friend auto operator<=>(const signed_permutation&, const signed_permutation&) = default;

 private:
  int n_;
  std::vector<int> image_;
};

}  // namespace coxmat
