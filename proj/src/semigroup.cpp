#include "nsring/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

namespace {

// Membership sieve for the monoid generated by `gens` over [0, bound).
detail::BitWindow sieve(const std::vector<Int>& gens, Int bound) {
  detail::BitWindow dp(static_cast<std::size_t>(bound));
  dp.set(0);
  for (Int z = 1; z < bound; ++z) {
    for (Int g : gens) {
      if (g > z) break;
      if (dp.get(static_cast<std::size_t>(z - g))) {
        dp.set(static_cast<std::size_t>(z));
        break;
      }
    }
  }
  return dp;
}

// True when dp has `run` consecutive set bits ending at the top of the
// window; everything at or above the start of that run is then a member.
bool tail_run(const detail::BitWindow& dp, Int run) {
  if (static_cast<Int>(dp.size()) < run) return false;
  for (Int i = 0; i < run; ++i)
    if (!dp.get(dp.size() - 1 - static_cast<std::size_t>(i))) return false;
  return true;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_membership(detail::BitWindow member,
                                                       Int frobenius) {
  NumericalSemigroup H;
  H.frobenius_ = frobenius;
  H.member_ = std::move(member);

  const Int c = frobenius + 1;
  for (Int z = 1; z < c; ++z)
    if (!H.member_.get(static_cast<std::size_t>(z))) H.gaps_.push_back(z);

  // Minimal generators: members that are not a sum of two nonzero members.
  // Every minimal generator is < c + multiplicity.
  Int mult = 0;
  for (Int z = 1;; ++z) {
    if (H.contains(z)) {
      mult = z;
      break;
    }
  }
  const Int gen_bound = std::max(c + mult, mult + 1);
  for (Int z = mult; z < gen_bound; ++z) {
    if (!H.contains(z)) continue;
    bool decomposable = false;
    for (Int x = mult; x <= z - mult; ++x) {
      if (H.contains(x) && H.contains(z - x)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) H.gens_.push_back(z);
  }

  // Pseudo-Frobenius numbers. Convention: PF(N) = {-1}.
  if (frobenius == -1) {
    H.pf_ = {-1};
  } else {
    for (Int n : H.gaps_) {
      bool pf = true;
      for (Int g : H.gens_) {
        if (!H.contains(n + g)) {
          pf = false;
          break;
        }
      }
      if (pf) H.pf_.push_back(n);
    }
  }

  H.check_invariants();
  return H;
}

void NumericalSemigroup::check_invariants() const {
  if (gens_.empty()) throw internal_error("semigroup without generators");
  if (embedding_dimension() > multiplicity())
    throw internal_error("embedding dimension exceeds multiplicity");
  if (frobenius_ >= 0 && contains(frobenius_))
    throw internal_error("Frobenius number is a member");
  if (!pf_.empty() && frobenius_ != -1 && pf_.back() != frobenius_)
    throw internal_error("largest pseudo-Frobenius number is not f");
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& gens_in) {
  if (gens_in.empty()) throw std::invalid_argument("empty generator list");
  std::vector<Int> gens = gens_in;
  for (Int g : gens)
    if (g <= 0) throw std::invalid_argument("generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Int g = 0;
  for (Int x : gens) g = std::gcd(g, x);
  if (g != 1)
    throw std::invalid_argument("non-cofinite: gcd of generators is " + std::to_string(g));

  if (gens.front() == 1) {
    detail::BitWindow empty(0);
    return from_membership(std::move(empty), -1);
  }

  // Sieve until a run of `multiplicity` consecutive members closes the top
  // of the window; the true conductor is then inside it. When the two
  // smallest generators are coprime their product already bounds the
  // conductor; otherwise the window keeps doubling until the run appears.
  const Int mult = gens.front();
  Int bound = gens.back() + mult + 1;
  if (gens.size() >= 2) bound = std::max(bound, gens[0] * gens[1] + 1);
  detail::BitWindow dp;
  for (;;) {
    dp = sieve(gens, bound);
    if (tail_run(dp, mult)) break;
    bound *= 2;
  }

  const std::size_t lz = dp.last_zero();
  const Int frobenius = (lz == detail::BitWindow::npos) ? -1 : static_cast<Int>(lz);
  detail::BitWindow member = dp.slice(0, static_cast<std::size_t>(frobenius + 1));
  return from_membership(std::move(member), frobenius);
}

NumericalSemigroup NumericalSemigroup::from_gap_set(const std::vector<Int>& gaps) {
  if (gaps.empty()) {
    detail::BitWindow empty(0);
    return from_membership(std::move(empty), -1);
  }
  std::vector<Int> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() <= 0) throw std::invalid_argument("bad gap set");
  const Int f = sorted.back();
  detail::BitWindow m(static_cast<std::size_t>(f + 1));
  std::size_t gi = 0;
  for (Int z = 0; z <= f; ++z) {
    if (gi < sorted.size() && sorted[gi] == z) {
      ++gi;
      continue;
    }
    m.set(static_cast<std::size_t>(z));
  }
  if (gi != sorted.size()) throw std::invalid_argument("bad gap set");
  return from_membership(std::move(m), f);
}

std::vector<Int> NumericalSemigroup::apery_set(Int e) const {
  if (e <= 0 || !contains(e))
    throw std::invalid_argument("Apery set needs a positive member of H");
  {
    std::lock_guard<std::mutex> lock(apery_->mu);
    auto it = apery_->by_element.find(e);
    if (it != apery_->by_element.end()) return it->second;
  }

  // Smallest member per residue class; every class has one below c + e.
  std::vector<Int> by_class(static_cast<std::size_t>(e), -1);
  Int found = 0;
  for (Int z = 0; found < e; ++z) {
    if (!contains(z)) continue;
    Int r = z % e;
    if (by_class[static_cast<std::size_t>(r)] == -1) {
      by_class[static_cast<std::size_t>(r)] = z;
      ++found;
    }
  }
  std::sort(by_class.begin(), by_class.end());

  std::lock_guard<std::mutex> lock(apery_->mu);
  auto [it, inserted] = apery_->by_element.emplace(e, by_class);
  return it->second;
}

bool NumericalSemigroup::is_symmetric() const {
  const Int f = frobenius_;
  for (Int z = 0; z <= f; ++z) {
    const bool a = contains(z);
    const bool b = contains(f - z);
    if (a == b) return false;
  }
  return true;
}

bool NumericalSemigroup::has_minimal_multiplicity() const {
  const Int e = multiplicity();
  const Int c = conductor();
  const Int bound = c + 2 * e + 1;
  // Compare M + M with e + M on [0, bound); both contain everything above.
  for (Int z = 0; z < bound; ++z) {
    bool in_mm = false;
    for (Int x = e; x <= z - e; ++x) {
      if (contains(x) && contains(z - x)) {
        in_mm = true;
        break;
      }
    }
    const bool in_em = (z - e >= 1) && contains(z - e);
    if (in_mm != in_em) return false;
  }
  return true;
}

std::string NumericalSemigroup::generator_list() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ',';
    out << gens_[i];
  }
  return out.str();
}

std::string NumericalSemigroup::to_text() const {
  std::ostringstream out;
  out << "⟨" << generator_list() << "⟩"
      << " f=" << frobenius_ << " g=" << genus() << " t=" << type();
  return out.str();
}

std::vector<Int> parse_generator_list(const std::string& text) {
  std::vector<Int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    const std::string trimmed = [&] {
      std::string t = token;
      t.erase(0, t.find_first_not_of(" \t"));
      const auto last = t.find_last_not_of(" \t");
      if (last != std::string::npos) t.erase(last + 1);
      return t;
    }();
    if (trimmed.empty()) throw std::invalid_argument("malformed generator list");
    long long v = 0;
    try {
      v = std::stoll(trimmed, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed generator list: '" + trimmed + "'");
    }
    if (pos != trimmed.size() || v <= 0)
      throw std::invalid_argument("malformed generator list: '" + trimmed + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty generator list");
  return out;
}

}  // namespace nsring
