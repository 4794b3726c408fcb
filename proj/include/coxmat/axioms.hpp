#pragma once

// Axiom checkers for candidate matroids. All checkers are exhaustive scans
// over admissible orderings — desk-scale ground sets keep 2^n·n! small, and
// exhaustiveness doubles as the ground-truth oracle for every theorem test.

#include <optional>
#include <vector>

#include "coxmat/collections.hpp"
#include "coxmat/errors.hpp"
#include "coxmat/gale.hpp"
#include "coxmat/ordering.hpp"
#include "coxmat/signed_set.hpp"

namespace coxmat {

struct maximality_witness {
  ordering ord;                         // an ordering with no unique maximal member
  std::vector<signed_set> candidates;   // its maximal (mutually incomparable) members
};

// First ordering of the given flavor under which the collection has no
// unique Gale-maximal member, or absent if the Maximality Property holds.
inline std::optional<maximality_witness> find_maximality_failure(const basis_collection& c,
                                                                 flavor f) {
  for (const ordering& ord : enumerate_orderings(c.ground_size(), f)) {
    if (!max_member(c, ord))
      return maximality_witness{ord, maximal_members(c, ord)};
  }
  return std::nullopt;
}

// Maximality Property over every flavor-C admissible ordering.
inline bool is_symplectic_matroid(const basis_collection& c) {
  return !find_maximality_failure(c, flavor::C).has_value();
}

// Maximality Property over every flavor-D admissible ordering.
inline bool is_orthogonal_matroid(const basis_collection& c) {
  return !find_maximality_failure(c, flavor::D).has_value();
}

// Maximality over all linear orders of [n]; equivalently the greedy
// algorithm succeeds for every weighting.
inline bool is_ordinary_matroid(const ordinary_matroid& m) {
  for (const ordering& ord : enumerate_orderings(m.ground_size(), flavor::A))
    if (!max_member(m, ord)) return false;
  return true;
}

// Full rank plus the Maximality Property of the requested variant
// (flavor C = symplectic, flavor D = orthogonal).
inline bool is_lagrangian(const basis_collection& c, flavor f) {
  if (f != flavor::C && f != flavor::D)
    throw error(errc::invalid_input, "Lagrangian check needs flavor C or D");
  if (c.rank() != c.ground_size()) return false;
  return f == flavor::C ? is_symplectic_matroid(c) : is_orthogonal_matroid(c);
}

struct exchange_witness {
  signed_set a_basis;
  signed_set b_basis;
  signed_element pivot;  // the element of A△B with no admissible exchange partner
};

namespace detail {

inline void require_full_rank(const basis_collection& c, const char* what) {
  if (c.rank() != c.ground_size())
    throw error(errc::invalid_rank, std::string(what) + " needs a rank-n collection");
}

}  // namespace detail

// Strong Exchange Property, the exchange characterization of Lagrangian
// orthogonal matroids: for every A, B in the collection and a ∈ A△B there is
// b ∈ B∖A with b ≠ a*, such that A△{a,b,a*,b*} and B△{a,b,a*,b*} are both in
// the collection. (b = a is permitted when a itself lies in B∖A; the reading
// was pinned by exhaustive comparison with the D-ordering Maximality scan on
// every rank-n collection for n ≤ 3.)
inline std::optional<exchange_witness> strong_exchange_failure(const basis_collection& c) {
  detail::require_full_rank(c, "strong exchange");
  const int n = c.ground_size();
  for (const signed_set& A : c.bases()) {
    for (const signed_set& B : c.bases()) {
      std::uint32_t sym = A.mask() ^ B.mask();
      std::uint32_t b_not_a = B.mask() & ~A.mask();
      for (std::uint32_t am = sym; am != 0; am &= am - 1) {
        int a = std::countr_zero(am);
        bool found = false;
        for (std::uint32_t bm = b_not_a; bm != 0 && !found; bm &= bm - 1) {
          int b = std::countr_zero(bm);
          if (b == star_code(a, n)) continue;
          std::uint32_t ex = (1u << a) | (1u << b) | (1u << star_code(a, n)) |
                             (1u << star_code(b, n));
          found = c.contains(signed_set(n, A.mask() ^ ex)) &&
                  c.contains(signed_set(n, B.mask() ^ ex));
        }
        if (!found) return exchange_witness{A, B, element_from_code(a, n)};
      }
    }
  }
  return std::nullopt;
}

inline bool strong_exchange_holds(const basis_collection& c) {
  return !strong_exchange_failure(c).has_value();
}

// Symmetric Exchange Axiom in the Lagrangian signed form: for every A, B and
// a ∈ A△B there is b ∈ A△B (b = a allowed) with A△{a,a*,b,b*} in the
// collection. Validated empirically against the C-ordering Maximality scan
// at rank n before being relied on by the union theorem.
inline std::optional<exchange_witness> symmetric_exchange_failure(const basis_collection& c) {
  detail::require_full_rank(c, "symmetric exchange");
  const int n = c.ground_size();
  for (const signed_set& A : c.bases()) {
    for (const signed_set& B : c.bases()) {
      std::uint32_t sym = A.mask() ^ B.mask();
      for (std::uint32_t am = sym; am != 0; am &= am - 1) {
        int a = std::countr_zero(am);
        bool found = false;
        for (std::uint32_t bm = sym; bm != 0 && !found; bm &= bm - 1) {
          int b = std::countr_zero(bm);
          std::uint32_t ex = (1u << a) | (1u << b) | (1u << star_code(a, n)) |
                             (1u << star_code(b, n));
          found = c.contains(signed_set(n, A.mask() ^ ex));
        }
        if (!found) return exchange_witness{A, B, element_from_code(a, n)};
      }
    }
  }
  return std::nullopt;
}

inline bool symmetric_exchange_holds(const basis_collection& c) {
  return !symmetric_exchange_failure(c).has_value();
}

enum class parity_class { even, odd };

inline parity_class parity(const signed_set& b) {
  return b.parity() == 0 ? parity_class::even : parity_class::odd;
}

}  // namespace coxmat
