#include "nsring/relideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

namespace {

void require_same_host(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (a.host_ptr() == b.host_ptr()) return;
  if (a.host() == b.host()) return;
  throw std::invalid_argument("relative ideals live over different semigroups");
}

}  // namespace

RelativeIdeal::RelativeIdeal(std::shared_ptr<const NumericalSemigroup> host,
                             Int min, detail::BitWindow window)
    : host_(std::move(host)) {
  // Normalize: min must be the least member, stable_from minimal.
  const std::size_t first = window.first_set();
  std::size_t lo = 0;
  if (first == detail::BitWindow::npos) {
    // No explicit member below the ray: E = [min + size, ∞).
    min_ = min + static_cast<Int>(window.size());
    stable_ = min_;
    window_ = detail::BitWindow(0);
    return;
  }
  lo = first;
  const std::size_t lz = window.last_zero();
  if (lz == detail::BitWindow::npos || lz < lo) {
    // Window solid from lo up: E = [min + lo, ∞).
    min_ = min + static_cast<Int>(lo);
    stable_ = min_;
    window_ = detail::BitWindow(0);
    return;
  }
  min_ = min + static_cast<Int>(lo);
  stable_ = min + static_cast<Int>(lz) + 1;
  window_ = window.slice(lo, static_cast<std::size_t>(lz + 1 - lo));
}

RelativeIdeal RelativeIdeal::from_offsets(const NumericalSemigroup& host,
                                          const std::vector<Int>& offsets) {
  if (offsets.empty()) throw std::invalid_argument("empty offset list");
  auto hp = std::make_shared<const NumericalSemigroup>(host);
  const Int mu = *std::min_element(offsets.begin(), offsets.end());
  const Int stable0 = mu + host.conductor();
  detail::BitWindow w(static_cast<std::size_t>(stable0 - mu));
  for (Int z = mu; z < stable0; ++z) {
    for (Int x : offsets) {
      if (host.contains(z - x)) {
        w.set(static_cast<std::size_t>(z - mu));
        break;
      }
    }
  }
  return RelativeIdeal(std::move(hp), mu, std::move(w));
}

RelativeIdeal RelativeIdeal::unit_ideal(const NumericalSemigroup& host) {
  return from_offsets(host, {0});
}

RelativeIdeal RelativeIdeal::maximal_ideal(const NumericalSemigroup& host) {
  return from_offsets(host, host.minimal_generators());
}

std::vector<Int> RelativeIdeal::window_members() const {
  std::vector<Int> out;
  for (Int z = min_; z < stable_; ++z)
    if (window_.get(static_cast<std::size_t>(z - min_))) out.push_back(z);
  return out;
}

std::string RelativeIdeal::to_text() const {
  std::ostringstream out;
  const auto members = window_members();
  out << '{';
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out << ',';
    out << members[i];
  }
  out << "}∪[" << stable_ << ",∞)";
  return out.str();
}

bool RelativeIdeal::operator==(const RelativeIdeal& other) const {
  if (host_ptr() != other.host_ptr() && !(host() == other.host())) return false;
  return min_ == other.min_ && stable_ == other.stable_ && window_ == other.window_;
}

RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_host(e, f);
  const Int mu = e.min_ + f.min_;
  const Int stable0 = std::min(e.stable_ + f.min_, e.min_ + f.stable_);
  detail::BitWindow w(static_cast<std::size_t>(stable0 - mu));
  // Only explicit-window pairs land below stable0; every sum touching a
  // stable tail is >= stable0 by construction.
  for (Int x = e.min_; x < e.stable_; ++x) {
    if (!e.window_.get(static_cast<std::size_t>(x - e.min_))) continue;
    w.or_shifted(f.window_, static_cast<std::size_t>(x - e.min_));
  }
  return RelativeIdeal(e.host_ptr(), mu, std::move(w));
}

RelativeIdeal power(const RelativeIdeal& e, Int n) {
  if (n < 0) throw std::invalid_argument("negative power of an ideal");
  RelativeIdeal acc = RelativeIdeal::unit_ideal(e.host());
  for (Int i = 0; i < n; ++i) acc = sum(acc, e);
  return acc;
}

RelativeIdeal unite(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_host(e, f);
  const Int mu = std::min(e.min_, f.min_);
  const Int stable0 = std::min(e.stable_, f.stable_);
  detail::BitWindow w(static_cast<std::size_t>(std::max<Int>(stable0 - mu, 0)));
  for (Int z = mu; z < stable0; ++z)
    if (e.contains(z) || f.contains(z)) w.set(static_cast<std::size_t>(z - mu));
  return RelativeIdeal(e.host_ptr(), mu, std::move(w));
}

RelativeIdeal translate(const RelativeIdeal& e, Int t) {
  RelativeIdeal out = e;
  out.min_ += t;
  out.stable_ += t;
  return out;
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_host(e, f);
  // Everything from e.stable - f.min on belongs to E : F; scan the finite
  // strip below it. The lower bound e.min - f.stable is conservative.
  const Int stable0 = e.stable_ - f.min_;
  const Int lo = e.min_ - f.stable_;
  detail::BitWindow w(static_cast<std::size_t>(std::max<Int>(stable0 - lo, 0)));
  for (Int z = lo; z < stable0; ++z) {
    bool ok = true;
    for (Int y = f.min_; y < e.stable_ - z; ++y) {
      if (f.contains(y) && !e.contains(z + y)) {
        ok = false;
        break;
      }
    }
    if (ok) w.set(static_cast<std::size_t>(z - lo));
  }
  return RelativeIdeal(e.host_ptr(), lo, std::move(w));
}

bool is_subset(const RelativeIdeal& inner, const RelativeIdeal& outer) {
  const Int hi = std::max(inner.stable_from(), outer.stable_from());
  for (Int z = inner.min_element(); z < hi; ++z)
    if (inner.contains(z) && !outer.contains(z)) return false;
  return true;
}

Int length_quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!is_subset(f, e))
    throw std::invalid_argument("length_quotient: second ideal not contained in first");
  Int count = 0;
  const Int hi = std::max(e.stable_from(), f.stable_from());
  for (Int z = e.min_element(); z < hi; ++z)
    if (e.contains(z) && !f.contains(z)) ++count;
  return count;
}

std::vector<Int> minimal_module_generators(const RelativeIdeal& e) {
  const RelativeIdeal me = sum(RelativeIdeal::maximal_ideal(e.host()), e);
  std::vector<Int> out;
  const Int hi = std::max(e.stable_from(), me.stable_from());
  for (Int z = e.min_element(); z < hi; ++z)
    if (e.contains(z) && !me.contains(z)) out.push_back(z);
  return out;
}

std::vector<Int> quotient_module_generators(const RelativeIdeal& e,
                                            const RelativeIdeal& f) {
  if (!is_subset(f, e))
    throw std::invalid_argument("quotient_module_generators: not a submodule");
  std::vector<Int> diff;
  const Int hi = std::max(e.stable_from(), f.stable_from());
  for (Int z = e.min_element(); z < hi; ++z)
    if (e.contains(z) && !f.contains(z)) diff.push_back(z);

  const NumericalSemigroup& h = e.host();
  std::vector<Int> gens;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    bool reachable = false;
    for (std::size_t j = 0; j < i && !reachable; ++j) {
      const Int step = diff[i] - diff[j];
      if (step >= 1 && h.contains(step)) reachable = true;
    }
    if (!reachable) gens.push_back(diff[i]);
  }
  return gens;
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& host) {
  const Int f = host.frobenius();
  std::vector<Int> offsets;
  for (Int c : host.pseudo_frobenius()) offsets.push_back(f - c);
  const RelativeIdeal from_pf = RelativeIdeal::from_offsets(host, offsets);

  // Gap dual: z is in K iff f - z is not in H.
  auto hp = std::make_shared<const NumericalSemigroup>(host);
  const Int c = host.conductor();
  detail::BitWindow w(static_cast<std::size_t>(c));
  for (Int z = 0; z < c; ++z)
    if (!host.contains(f - z)) w.set(static_cast<std::size_t>(z));
  const RelativeIdeal dual(std::move(hp), 0, std::move(w));

  if (!(from_pf == dual))
    throw internal_error("canonical ideal constructions disagree for " + host.to_text());
  return from_pf;
}

Blowup stabilize(const RelativeIdeal& k) {
  if (k.min_element() != 0 || !k.contains(0))
    throw std::invalid_argument("stabilize requires 0 in K ⊆ N");
  RelativeIdeal cur = RelativeIdeal::unit_ideal(k.host());
  for (Int n = 0;; ++n) {
    RelativeIdeal next = sum(cur, k);
    if (next == cur) return {cur, n};
    cur = std::move(next);
    if (n > 256) throw internal_error("blowup failed to stabilize");
  }
}

NumericalSemigroup semigroup_from_ideal(const RelativeIdeal& e) {
  if (e.min_element() != 0 || !e.contains(0))
    throw std::invalid_argument("not a semigroup set: 0 is not the least member");
  if (!is_subset(sum(e, e), e))
    throw std::invalid_argument("not a semigroup set: not closed under addition");
  Int first_nonzero = 1;
  while (!e.contains(first_nonzero)) ++first_nonzero;
  std::vector<Int> members;
  for (Int z = 1; z <= e.stable_from() + first_nonzero; ++z)
    if (e.contains(z)) members.push_back(z);
  return NumericalSemigroup::from_generators(members);
}

}  // namespace nsring
