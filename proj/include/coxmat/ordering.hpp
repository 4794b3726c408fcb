#pragma once

// Admissible orderings of the signed ground set.
//
// Flavor C: a linear order on [n] ∪ [n]* with i ≺ j ⇒ j* ≺ i*. Listed from
// largest to smallest, the first n elements form an admissible set and the
// last n are their stars in reverse order; the top listing determines the
// whole order.
//
// Flavor D: the same with the two middle elements (the n-th and (n+1)-st of
// the listing, a star pair) incomparable. Canonical representative: the
// flavor-C top listing whose last element is unstarred.
//
// Flavor A: an arbitrary linear order on the unsigned ground set [n].

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coxmat/errors.hpp"
#include "coxmat/signed_permutation.hpp"
#include "coxmat/signed_set.hpp"

namespace coxmat {

enum class flavor : char { A = 'A', C = 'C', D = 'D' };

// Per-element rank lookup. rank[code] = position in the listing, 0 = largest.
// For flavor D the two middle codes are mutually incomparable.
struct rank_table {
  std::array<std::uint8_t, 2 * max_ground> rank{};
  int mid_a = -1;
  int mid_b = -1;

  // x ⪯ y in the element order.
  bool leq(int x, int y) const {
    if (x == y) return true;
    if ((x == mid_a && y == mid_b) || (x == mid_b && y == mid_a)) return false;
    return rank[x] > rank[y];
  }
};

class ordering {
 public:
  // top: codes listed largest first. Flavor A: a permutation of 0..n-1.
  // Flavors C/D: an admissible n-set; flavor D is canonicalized so the last
  // listed element is unstarred.
  static ordering from_top(flavor f, int n, std::vector<int> top) {
    if (n < 1 || n > max_ground) throw error(errc::invalid_input, "ground size out of range");
    if (static_cast<int>(top.size()) != n)
      throw error(errc::invalid_input, "ordering top listing must have n entries");
    if (f == flavor::A) {
      std::uint32_t seen = 0;
      for (int c : top) {
        if (c < 0 || c >= n) throw error(errc::invalid_input, "flavor-A entry out of range");
        seen |= 1u << c;
      }
      if (std::popcount(seen) != n) throw error(errc::invalid_input, "flavor-A top not a permutation");
    } else {
      std::uint32_t mask = 0;
      for (int c : top) {
        if (c < 0 || c >= 2 * n) throw error(errc::invalid_input, "entry out of range");
        mask |= 1u << c;
      }
      signed_set s(n, mask);
      if (s.size() != n || !s.is_admissible())
        throw error(errc::invalid_input, "ordering top listing must be an admissible n-set");
      if (f == flavor::D && top[n - 1] >= n) top[n - 1] -= n;  // canonical: unstarred last
    }
    return ordering(f, n, std::move(top));
  }

  // 1 ≻ 2 ≻ … ≻ n (≻ n* ≻ … ≻ 1*).
  static ordering natural(flavor f, int n) {
    std::vector<int> top(n);
    for (int i = 0; i < n; ++i) top[i] = i;
    return from_top(f, n, std::move(top));
  }

  flavor flav() const { return flavor_; }
  int ground_size() const { return n_; }
  const std::vector<int>& top() const { return top_; }

  // Full listing of element codes, largest first. For flavor D the middle
  // two positions hold the incomparable pair in canonical order.
  std::vector<int> listing() const {
    if (flavor_ == flavor::A) return top_;
    std::vector<int> out(top_);
    out.resize(2 * n_);
    for (int i = 0; i < n_; ++i) out[n_ + i] = star_code(top_[n_ - 1 - i], n_);
    return out;
  }

  rank_table ranks() const {
    rank_table t;
    std::vector<int> list = listing();
    for (std::size_t pos = 0; pos < list.size(); ++pos)
      t.rank[list[pos]] = static_cast<std::uint8_t>(pos);
    if (flavor_ == flavor::D) {
      t.mid_a = top_[n_ - 1];
      t.mid_b = star_code(top_[n_ - 1], n_);
    }
    return t;
  }

  ordering reversed() const {
    std::vector<int> top(top_);
    if (flavor_ == flavor::A) {
      std::reverse(top.begin(), top.end());
    } else {
      for (int& c : top) c = star_code(c, n_);
    }
    return from_top(flavor_, n_, std::move(top));
  }

  // The induced linear order on the unsigned ground set [n] (flavors C/D).
  // Well-defined for flavor D: the incomparable pair contributes exactly one
  // unstarred element, whose position relative to the rest is fixed.
  ordering restriction_to_unstarred() const {
    if (flavor_ == flavor::A) return *this;
    std::vector<int> top;
    top.reserve(n_);
    for (int c : listing())
      if (c < n_) top.push_back(c);
    return from_top(flavor::A, n_, std::move(top));
  }

  friend auto operator<=>(const ordering&, const ordering&) = default;

 private:
  ordering(flavor f, int n, std::vector<int> top) : flavor_(f), n_(n), top_(std::move(top)) {}

  flavor flavor_;
  int n_;
  std::vector<int> top_;
};

// g · ordering: the order with x ≺' y iff g⁻¹x ≺ g⁻¹y, i.e. top entries
// mapped elementwise.
inline ordering act(const signed_permutation& g, const ordering& ord) {
  if (ord.flav() == flavor::A) throw error(errc::invalid_input, "signed action needs flavor C or D");
  std::vector<int> top;
  top.reserve(ord.ground_size());
  for (int c : ord.top()) top.push_back(g.apply_code(c));
  return ordering::from_top(ord.flav(), ord.ground_size(), std::move(top));
}

inline std::string to_string(const ordering& ord) {
  const int n = ord.ground_size();
  std::vector<int> list = ord.listing();
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string name = ord.flav() == flavor::A ? std::to_string(list[i] + 1)
                                               : to_string(element_from_code(list[i], n));
    if (ord.flav() == flavor::D && static_cast<int>(i) == n - 1) {
      std::string other = to_string(element_from_code(list[i + 1], n));
      out += (i ? " > " : "") + ("{" + name + " ~ " + other + "}");
      ++i;
    } else {
      out += (i ? " > " : "") + name;
    }
  }
  return out;
}

// Lazily enumerates all admissible orderings of a flavor: n! (A),
// 2^n·n! (C), or 2^(n-1)·n! (D) of them, without materializing the list.
class ordering_range {
 public:
  ordering_range(int n, flavor f) : n_(n), flavor_(f) {
    if (n < 1 || n > max_ground) throw error(errc::invalid_input, "ground size out of range");
  }

  class iterator {
   public:
    using value_type = ordering;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, flavor f) : n_(n), flavor_(f), perm_(n), done_(false) {
      for (int i = 0; i < n; ++i) perm_[i] = i;
    }

    ordering operator*() const {
      std::vector<int> top(perm_);
      if (flavor_ != flavor::A)
        for (int i = 0; i < n_; ++i)
          if ((signs_ >> i) & 1u) top[i] += n_;
      return ordering::from_top(flavor_, n_, std::move(top));
    }

    iterator& operator++() {
      ++signs_;
      if (signs_ >= sign_limit()) {
        signs_ = 0;
        if (!std::next_permutation(perm_.begin(), perm_.end())) done_ = true;
      }
      return *this;
    }

    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }

    bool operator==(const iterator& o) const {
      if (done_ != o.done_) return false;
      if (done_) return true;
      return perm_ == o.perm_ && signs_ == o.signs_;
    }

    bool at_end() const { return done_; }

   private:
    std::uint32_t sign_limit() const {
      if (flavor_ == flavor::A) return 1;
      return flavor_ == flavor::C ? (1u << n_) : (1u << (n_ - 1));
    }

    int n_ = 0;
    flavor flavor_ = flavor::A;
    std::vector<int> perm_;
    std::uint32_t signs_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, flavor_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
  flavor flavor_;
};

inline ordering_range enumerate_orderings(int n, flavor f) { return ordering_range(n, f); }

}  // namespace coxmat
