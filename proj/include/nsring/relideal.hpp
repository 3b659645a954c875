#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nsring/bitwindow.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// A relative ideal of a numerical semigroup H: a bounded-below integer set E
// with E + H contained in E, held in normal form. Membership is total over
// the integers: false below min_element(), true from stable_from() on, and
// read off the window in between. Two ideals are equal iff their
// (min, stable_from, window) triples are identical over the same host.
//
// Pure value type; all operations are referentially transparent.
class RelativeIdeal {
public:
  // Union of x + H over the given offsets, normalized.
  static RelativeIdeal from_offsets(const NumericalSemigroup& host,
                                    const std::vector<Int>& offsets);

  // The ring itself, 0 + H.
  static RelativeIdeal unit_ideal(const NumericalSemigroup& host);

  // The maximal ideal M = H \ {0}.
  static RelativeIdeal maximal_ideal(const NumericalSemigroup& host);

  const NumericalSemigroup& host() const { return *host_; }
  const std::shared_ptr<const NumericalSemigroup>& host_ptr() const { return host_; }

  Int min_element() const { return min_; }
  Int stable_from() const { return stable_; }

  bool contains(Int z) const {
    if (z < min_) return false;
    if (z >= stable_) return true;
    return window_.get(static_cast<std::size_t>(z - min_));
  }

  // Members in [min, stable), ascending.
  std::vector<Int> window_members() const;

  // "{0,1,3,4}∪[6,∞)"
  std::string to_text() const;

  bool operator==(const RelativeIdeal& other) const;
  bool operator!=(const RelativeIdeal& other) const { return !(*this == other); }

  friend RelativeIdeal sum(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal unite(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal colon(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal translate(const RelativeIdeal&, Int);
  friend RelativeIdeal canonical_ideal(const NumericalSemigroup&);

private:
  RelativeIdeal(std::shared_ptr<const NumericalSemigroup> host, Int min,
                detail::BitWindow window);

  std::shared_ptr<const NumericalSemigroup> host_;
  Int min_ = 0;
  Int stable_ = 0;
  detail::BitWindow window_;  // membership on [min_, stable_)
};

// Sumset E + F. Hosts must match.
RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f);

// n-fold sumset; power(E, 0) is the unit ideal.
RelativeIdeal power(const RelativeIdeal& e, Int n);

// Set union (again a relative ideal). Hosts must match.
RelativeIdeal unite(const RelativeIdeal& e, const RelativeIdeal& f);

// Shifted ideal t + E.
RelativeIdeal translate(const RelativeIdeal& e, Int t);

// E : F = { z : z + F ⊆ E }. Hosts must match.
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);

bool is_subset(const RelativeIdeal& inner, const RelativeIdeal& outer);

// |E \ F| for F ⊆ E (checked; throws std::invalid_argument otherwise).
Int length_quotient(const RelativeIdeal& e, const RelativeIdeal& f);

// E \ (M + E): exponents of a minimal generating set of E over the host ring.
std::vector<Int> minimal_module_generators(const RelativeIdeal& e);

// Exponents generating the quotient module E/F (F ⊆ E): elements of E \ F
// not reachable from a smaller one by adding a nonzero host member.
std::vector<Int> quotient_module_generators(const RelativeIdeal& e,
                                            const RelativeIdeal& f);

// The fractional canonical ideal K, built from pseudo-Frobenius offsets and
// cross-checked against the gap-dual description {z : f - z not in H}.
RelativeIdeal canonical_ideal(const NumericalSemigroup& host);

struct Blowup {
  RelativeIdeal ring_set;   // S = union of the powers of K; a semigroup set
  Int reduction_number;     // least n with K^n = K^{n+1}
};

// Iterates powers of K (0 in K ⊆ N required) until they stabilize.
Blowup stabilize(const RelativeIdeal& k);

// Reads a semigroup back off an ideal that is a semigroup set
// (0 ∈ E, E + E ⊆ E; checked).
NumericalSemigroup semigroup_from_ideal(const RelativeIdeal& e);

}  // namespace nsring
