#pragma once

// Signed ground set [n] ∪ [n]*: elements, the star involution, and subsets
// of the signed ground set encoded as 2n-bit masks.
//
// Element codes: element i (1-based, unstarred) has code i-1; element i* has
// code n+i-1. A subset is a mask with bit c set for each member code c.
// Admissibility (no element together with its star) is then
// (mask & (mask >> n)) == 0 on the low n bits.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "coxmat/errors.hpp"

namespace coxmat {

inline constexpr int max_ground = 16;

// An element of [n] ∪ [n]*. Independent of n.
struct signed_element {
  int index = 1;     // 1..n
  bool starred = false;

  friend auto operator<=>(const signed_element&, const signed_element&) = default;
};

// The star involution: i ↔ i*. Involutive and fixed-point-free.
inline signed_element star(signed_element e) { return {e.index, !e.starred}; }

inline int element_code(signed_element e, int n) {
  return e.starred ? n + e.index - 1 : e.index - 1;
}

inline signed_element element_from_code(int code, int n) {
  return code < n ? signed_element{code + 1, false} : signed_element{code - n + 1, true};
}

inline int star_code(int code, int n) { return code < n ? code + n : code - n; }

inline std::string to_string(signed_element e) {
  return std::to_string(e.index) + (e.starred ? "*" : "");
}

// A subset of [n] ∪ [n]*, not necessarily admissible. Immutable value type;
// mutators return new sets.
class signed_set {
 public:
  signed_set() = default;
  signed_set(int n, std::uint32_t mask) : n_(n), mask_(mask) {}

  static signed_set empty(int n) { return signed_set(n, 0); }

  int ground_size() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }

  bool contains(signed_element e) const { return contains_code(element_code(e, n_)); }
  bool contains_code(int c) const { return (mask_ >> c) & 1u; }

  signed_set with(signed_element e) const { return with_code(element_code(e, n_)); }
  signed_set with_code(int c) const { return signed_set(n_, mask_ | (1u << c)); }
  signed_set without(signed_element e) const { return without_code(element_code(e, n_)); }
  signed_set without_code(int c) const { return signed_set(n_, mask_ & ~(1u << c)); }

  // Elementwise star of the whole set.
  signed_set star() const {
    std::uint32_t low = mask_ & low_mask();
    std::uint32_t high = mask_ >> n_;
    return signed_set(n_, (low << n_) | high);
  }

  // K ∩ K* = ∅.
  bool is_admissible() const { return ((mask_ >> n_) & mask_ & low_mask()) == 0; }

  // Number of starred members mod 2: 0 = even, 1 = odd.
  int parity() const { return std::popcount(mask_ >> n_) & 1; }
  int starred_count() const { return std::popcount(mask_ >> n_); }

  signed_set operator&(const signed_set& o) const { return signed_set(n_, mask_ & o.mask_); }
  signed_set operator|(const signed_set& o) const { return signed_set(n_, mask_ | o.mask_); }
  signed_set operator^(const signed_set& o) const { return signed_set(n_, mask_ ^ o.mask_); }

  // Member codes in increasing code order.
  std::vector<int> codes() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  std::vector<signed_element> elements() const {
    std::vector<signed_element> out;
    out.reserve(size());
    for (int c : codes()) out.push_back(element_from_code(c, n_));
    return out;
  }

  friend auto operator<=>(const signed_set&, const signed_set&) = default;

 private:
  std::uint32_t low_mask() const { return (n_ >= 32) ? ~0u : ((1u << n_) - 1); }

  int n_ = 0;
  std::uint32_t mask_ = 0;
};

inline bool is_admissible(const signed_set& s) { return s.is_admissible(); }

// Text form: members in index order, unstarred before starred at equal index,
// e.g. "1 2* 3". Empty set prints as "-".
inline std::string to_string(const signed_set& s) {
  if (s.is_empty()) return "-";
  std::vector<signed_element> es = s.elements();
  std::sort(es.begin(), es.end(), [](auto a, auto b) {
    return a.index != b.index ? a.index < b.index : a.starred < b.starred;
  });
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ' ';
    out += to_string(es[i]);
  }
  return out;
}

inline signed_element parse_signed_element(const std::string& tok, int n) {
  std::string t = tok;
  bool starred = false;
  if (!t.empty() && t.back() == '*') {
    starred = true;
    t.pop_back();
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw error(errc::parse_error, "bad element '" + tok + "'");
  int idx = std::stoi(t);
  if (idx < 1 || idx > n)
    throw error(errc::parse_error, "element index " + std::to_string(idx) +
                                       " out of range 1.." + std::to_string(n));
  return {idx, starred};
}

// Parses "1 2* 3" (or "-" for the empty set). Rejects duplicates.
inline signed_set parse_signed_set(const std::string& text, int n) {
  signed_set s = signed_set::empty(n);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "-") continue;
    signed_element e = parse_signed_element(tok, n);
    if (s.contains(e)) throw error(errc::parse_error, "duplicate element '" + tok + "'");
    s = s.with(e);
  }
  return s;
}

// All admissible k-subsets of [n] ∪ [n]*, i.e. the set J_k. Count C(n,k)·2^k.
inline std::vector<signed_set> enumerate_admissible_sets(int n, int k) {
  if (k < 0 || k > n)
    throw error(errc::invalid_rank, "k=" + std::to_string(k) + " not in 0..n=" + std::to_string(n));
  std::vector<signed_set> out;
  // Iterate supports S ⊆ [n] of size k, then all 2^k star patterns on S.
  std::uint32_t support = (k == 0) ? 0 : (1u << k) - 1;
  const std::uint32_t limit = 1u << n;
  auto next_subset = [](std::uint32_t v) {           // Gosper's hack
    std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  };
  if (k == 0) return {signed_set::empty(n)};
  for (; support < limit; support = next_subset(support)) {
    std::vector<int> idx;
    for (std::uint32_t m = support; m != 0; m &= m - 1) idx.push_back(std::countr_zero(m));
    for (std::uint32_t stars = 0; stars < (1u << k); ++stars) {
      std::uint32_t mask = 0;
      for (int j = 0; j < k; ++j) {
        int c = idx[j];
        mask |= 1u << (((stars >> j) & 1) ? c + n : c);
      }
      out.push_back(signed_set(n, mask));
    }
  }
  return out;
}

}  // namespace coxmat

template <>
struct std::hash<coxmat::signed_set> {
  std::size_t operator()(const coxmat::signed_set& s) const noexcept {
    return std::hash<std::uint64_t>()((std::uint64_t(s.ground_size()) << 32) | s.mask());
  }
};
