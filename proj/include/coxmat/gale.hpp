#pragma once

// The Gale order on equal-size admissible sets induced by an admissible
// ordering: list both sets in decreasing element order and compare
// componentwise. For flavor D the order is genuinely partial (the middle
// star pair is incomparable), so comparisons return std::partial_ordering
// and callers must handle the unordered case explicitly.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxmat/collections.hpp"
#include "coxmat/errors.hpp"
#include "coxmat/ordering.hpp"
#include "coxmat/signed_set.hpp"

namespace coxmat {

// A set listed in decreasing element order, as ranks (increasing). Cheap to
// build once per (set, ordering) and reuse across comparisons.
struct ranked_set {
  std::array<std::uint8_t, max_ground> pos{};  // sorted ranks, smallest (= largest element) first
  int size = 0;

  static ranked_set of(std::uint32_t mask, const rank_table& t) {
    ranked_set r;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      std::uint8_t v = t.rank[std::countr_zero(m)];
      int j = r.size++;
      while (j > 0 && r.pos[j - 1] > v) {
        r.pos[j] = r.pos[j - 1];
        --j;
      }
      r.pos[j] = v;
    }
    return r;
  }
};

namespace detail {

// Componentwise a ⪯ b over sorted rank listings. mid_lo/mid_hi are the two
// middle ranks of a flavor-D table (incomparable), or -1.
inline bool ranked_leq(const ranked_set& a, const ranked_set& b, int mid_lo, int mid_hi) {
  for (int i = 0; i < a.size; ++i) {
    int ra = a.pos[i], rb = b.pos[i];
    if (ra == rb) continue;
    if (ra < rb) return false;                      // a's element is larger
    if (rb == mid_lo && ra == mid_hi) return false; // incomparable middle pair
  }
  return true;
}

struct middle_ranks {
  int lo = -1, hi = -1;
};

inline middle_ranks middles(const rank_table& t) {
  if (t.mid_a < 0) return {};
  int ra = t.rank[t.mid_a], rb = t.rank[t.mid_b];
  return {std::min(ra, rb), std::max(ra, rb)};
}

}  // namespace detail

// A ⪯ B in the Gale order. Requires |A| = |B|; both sets must be admissible
// so that the ordering restricts to a linear order on each.
inline bool gale_leq(const signed_set& a, const signed_set& b, const ordering& ord) {
  if (a.size() != b.size())
    throw error(errc::invalid_comparison, "Gale comparison needs equal-size sets");
  rank_table t = ord.ranks();
  auto [lo, hi] = detail::middles(t);
  return detail::ranked_leq(ranked_set::of(a.mask(), t), ranked_set::of(b.mask(), t), lo, hi);
}

inline std::partial_ordering gale_compare(const signed_set& a, const signed_set& b,
                                          const ordering& ord) {
  if (a.size() != b.size())
    throw error(errc::invalid_comparison, "Gale comparison needs equal-size sets");
  if (a == b) return std::partial_ordering::equivalent;
  rank_table t = ord.ranks();
  auto [lo, hi] = detail::middles(t);
  ranked_set ra = ranked_set::of(a.mask(), t), rb = ranked_set::of(b.mask(), t);
  bool ab = detail::ranked_leq(ra, rb, lo, hi);
  bool ba = detail::ranked_leq(rb, ra, lo, hi);
  if (ab && ba) return std::partial_ordering::equivalent;  // unreachable for distinct sets
  if (ab) return std::partial_ordering::less;
  if (ba) return std::partial_ordering::greater;
  return std::partial_ordering::unordered;
}

namespace detail {

// Shared two-pass maximum scan over any mask family under a rank table.
// Returns index of the unique maximum, or -1.
template <class MaskOf>
int max_index(std::size_t count, MaskOf&& mask_of, const rank_table& t) {
  auto [lo, hi] = middles(t);
  std::vector<ranked_set> ranked(count);
  for (std::size_t i = 0; i < count; ++i) ranked[i] = ranked_set::of(mask_of(i), t);
  std::size_t cand = 0;
  for (std::size_t i = 1; i < count; ++i)
    if (ranked_leq(ranked[cand], ranked[i], lo, hi)) cand = i;
  for (std::size_t i = 0; i < count; ++i)
    if (i != cand && !ranked_leq(ranked[i], ranked[cand], lo, hi)) return -1;
  return static_cast<int>(cand);
}

}  // namespace detail

// The unique Gale-maximal member, or absent when no member dominates all
// others. Absence is a value, not an error: it is the negative signal every
// axiom checker looks for.
inline std::optional<signed_set> max_member(const basis_collection& c, const ordering& ord) {
  if (ord.flav() == flavor::A)
    throw error(errc::invalid_comparison, "signed collection needs flavor C or D ordering");
  rank_table t = ord.ranks();
  const auto& bs = c.bases();
  int idx = detail::max_index(bs.size(), [&](std::size_t i) { return bs[i].mask(); }, t);
  if (idx < 0) return std::nullopt;
  return bs[idx];
}

inline std::optional<std::uint32_t> max_member(const ordinary_matroid& m, const ordering& ord) {
  if (ord.flav() != flavor::A)
    throw error(errc::invalid_comparison, "ordinary collection needs a flavor-A ordering");
  rank_table t = ord.ranks();
  const auto& bs = m.bases();
  int idx = detail::max_index(bs.size(), [&](std::size_t i) { return bs[i]; }, t);
  if (idx < 0) return std::nullopt;
  return bs[idx];
}

// All maximal members (no other member strictly above); used for witness
// reporting when the unique maximum is absent.
inline std::vector<signed_set> maximal_members(const basis_collection& c, const ordering& ord) {
  rank_table t = ord.ranks();
  auto [lo, hi] = detail::middles(t);
  const auto& bs = c.bases();
  std::vector<ranked_set> ranked(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) ranked[i] = ranked_set::of(bs[i].mask(), t);
  std::vector<signed_set> out;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < bs.size() && !dominated; ++j)
      if (j != i && detail::ranked_leq(ranked[i], ranked[j], lo, hi) &&
          !detail::ranked_leq(ranked[j], ranked[i], lo, hi))
        dominated = true;
    if (!dominated) out.push_back(bs[i]);
  }
  return out;
}

}  // namespace coxmat
