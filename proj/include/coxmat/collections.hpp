#pragma once

// Basis collections: candidate symplectic/orthogonal matroids on the signed
// ground set, and candidate ordinary matroids on [n]. Construction checks
// admissibility and equal cardinality only — matroid axioms are explicit
// validators, so non-matroids (counterexamples, fuzz inputs) are
// representable.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "coxmat/errors.hpp"
#include "coxmat/signed_set.hpp"

namespace coxmat {

class basis_collection {
 public:
  basis_collection(int n, std::vector<signed_set> bases) : n_(n), bases_(std::move(bases)) {
    if (bases_.empty()) throw error(errc::invalid_input, "basis collection must be nonempty");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    k_ = bases_.front().size();
    for (const signed_set& b : bases_) {
      if (b.ground_size() != n_)
        throw error(errc::invalid_input, "basis ground size mismatch");
      if (b.size() != k_)
        throw error(errc::invalid_input, "bases must have equal cardinality");
      if (!b.is_admissible())
        throw error(errc::invalid_input, "inadmissible basis " + to_string(b));
    }
    if (k_ > n_) throw error(errc::invalid_rank, "rank exceeds ground size");
  }

  int ground_size() const { return n_; }
  int rank() const { return k_; }
  const std::vector<signed_set>& bases() const { return bases_; }
  bool contains(const signed_set& b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
  }

  // Parity of the number of starred elements, when uniform across bases.
  bool has_uniform_parity() const {
    for (const signed_set& b : bases_)
      if (b.parity() != bases_.front().parity()) return false;
    return true;
  }
  int parity() const {
    if (!has_uniform_parity()) throw error(errc::invalid_input, "collection parity is not uniform");
    return bases_.front().parity();
  }

  friend auto operator<=>(const basis_collection&, const basis_collection&) = default;

 private:
  int n_;
  int k_;
  std::vector<signed_set> bases_;
};

// Convenience constructor from "1 2*"-style basis strings.
inline basis_collection collection_of(int n, const std::vector<std::string>& basis_texts) {
  std::vector<signed_set> bases;
  bases.reserve(basis_texts.size());
  for (const std::string& t : basis_texts) bases.push_back(parse_signed_set(t, n));
  return basis_collection(n, std::move(bases));
}

// A candidate ordinary matroid: equal-size subsets of [n], as n-bit masks.
class ordinary_matroid {
 public:
  ordinary_matroid(int n, std::vector<std::uint32_t> bases) : n_(n), bases_(std::move(bases)) {
    if (n < 0 || n > max_ground) throw error(errc::invalid_input, "ground size out of range");
    if (bases_.empty()) throw error(errc::invalid_input, "basis collection must be nonempty");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    k_ = std::popcount(bases_.front());
    const std::uint32_t ground = (n >= 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t b : bases_) {
      if ((b & ~ground) != 0) throw error(errc::invalid_input, "basis out of ground range");
      if (std::popcount(b) != k_)
        throw error(errc::invalid_input, "bases must have equal cardinality");
    }
  }

  int ground_size() const { return n_; }
  int rank() const { return k_; }
  const std::vector<std::uint32_t>& bases() const { return bases_; }
  bool contains(std::uint32_t b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
  }

  friend auto operator<=>(const ordinary_matroid&, const ordinary_matroid&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint32_t> bases_;
};

inline std::string subset_to_string(std::uint32_t mask) {
  if (mask == 0) return "-";
  std::string out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    if (!out.empty()) out += ' ';
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out;
}

}  // namespace coxmat
