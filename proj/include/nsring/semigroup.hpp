#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nsring/bitwindow.hpp"

namespace nsring {

using Int = std::int64_t;

// A numerical semigroup: a cofinite additive submonoid of the non-negative
// integers, kept in normalized form (sorted minimal generators, Frobenius
// number, gap set, membership window below the conductor).
//
// Values are immutable after construction and cheap to copy. The Apery cache
// is shared between copies and filled once per element on first use.
class NumericalSemigroup {
public:
  // Builds the semigroup generated by `gens`. Redundant generators are
  // dropped; throws std::invalid_argument on empty input, non-positive
  // entries, or gcd != 1 (the generated monoid would not be cofinite).
  static NumericalSemigroup from_generators(const std::vector<Int>& gens);

  // Builds the semigroup whose gap set is exactly `gaps` (sorted, positive).
  // The caller guarantees the complement is closed under addition; this is
  // the fast path for tree enumeration.
  static NumericalSemigroup from_gap_set(const std::vector<Int>& gaps);

  const std::vector<Int>& minimal_generators() const { return gens_; }
  Int frobenius() const { return frobenius_; }
  Int conductor() const { return frobenius_ + 1; }
  const std::vector<Int>& gaps() const { return gaps_; }
  const std::vector<Int>& pseudo_frobenius() const { return pf_; }

  bool contains(Int z) const {
    if (z < 0) return false;
    if (z >= conductor()) return true;
    return member_.get(static_cast<std::size_t>(z));
  }

  // Smallest element of H in each residue class mod e, sorted ascending.
  // Requires e > 0 and e in H. Cached per e; first writer wins.
  std::vector<Int> apery_set(Int e) const;

  Int type() const { return static_cast<Int>(pf_.size()); }
  Int multiplicity() const { return gens_.front(); }
  Int embedding_dimension() const { return static_cast<Int>(gens_.size()); }
  Int genus() const { return static_cast<Int>(gaps_.size()); }

  bool is_naturals() const { return frobenius_ == -1; }

  // True iff membership of z and f - z is exclusive for every integer z.
  bool is_symmetric() const;

  // True iff M + M = e + M for M = H \ {0}, e = multiplicity.
  bool has_minimal_multiplicity() const;

  // "⟨3,7,8⟩ f=5 g=4 t=2"
  std::string to_text() const;
  std::string generator_list() const;  // "3,7,8"

  bool operator==(const NumericalSemigroup& other) const {
    return gens_ == other.gens_;
  }
  bool operator!=(const NumericalSemigroup& other) const {
    return !(*this == other);
  }

private:
  struct AperyCache {
    std::mutex mu;
    std::map<Int, std::vector<Int>> by_element;
  };

  NumericalSemigroup() = default;
  static NumericalSemigroup from_membership(detail::BitWindow member, Int frobenius);
  void check_invariants() const;

  std::vector<Int> gens_;        // minimal generators, sorted ascending
  Int frobenius_ = -1;           // -1 when H = N
  std::vector<Int> gaps_;        // sorted ascending
  std::vector<Int> pf_;          // pseudo-Frobenius numbers; {-1} for N
  detail::BitWindow member_;     // membership on [0, conductor)
  std::shared_ptr<AperyCache> apery_ = std::make_shared<AperyCache>();
};

// Parses "3,7,8" (spaces tolerated). Throws std::invalid_argument on junk.
std::vector<Int> parse_generator_list(const std::string& text);

}  // namespace nsring
