#include "nsring/corpus.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "nsring/classify.hpp"
#include "nsring/constructs.hpp"
#include "nsring/errors.hpp"
#include "nsring/relideal.hpp"
#include "nsring/threegen.hpp"

namespace nsring {

namespace {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NSRING_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) over [0, n) on `workers` threads. Results must be written to
// per-index slots so that merging stays deterministic.
void parallel_indices(std::size_t n, int workers,
                      const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

std::string ints_to_string(const std::vector<Int>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

struct Check {
  std::vector<Violation>* out;
  const NumericalSemigroup* h;

  void expect(bool ok, const std::string& property, const std::string& observed,
              const std::string& expected) const {
    if (!ok)
      out->push_back({h->minimal_generators(), property, observed, expected});
  }
  void expect_eq(Int observed, Int expected, const std::string& property) const {
    expect(observed == expected, property, std::to_string(observed),
           std::to_string(expected));
  }
  void expect_true(bool observed, const std::string& property) const {
    expect(observed, property, "false", "true");
  }
};

using ItemFn = std::function<void(const NumericalSemigroup&, std::vector<Violation>&)>;

// The per-item worker body shared by all corpus suites: run the check, file
// any exception as a violation of its own.
void run_item(const NumericalSemigroup& h, const ItemFn& fn,
              std::vector<Violation>& out) {
  try {
    fn(h, out);
  } catch (const std::exception& e) {
    out.push_back({h.minimal_generators(), "exception", e.what(), "no exception"});
  }
}

VerificationReport run_over_corpus(const std::string& suite,
                                   const std::string& descriptor,
                                   const std::vector<NumericalSemigroup>& corpus,
                                   int workers, const ItemFn& fn,
                                   bool tally_classes) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = suite;
  rep.corpus = descriptor;
  rep.total = static_cast<long>(corpus.size());

  std::vector<std::vector<Violation>> slots(corpus.size());
  std::vector<std::string> class_names(tally_classes ? corpus.size() : 0);

  parallel_indices(corpus.size(), workers, [&](std::size_t i) {
    run_item(corpus[i], fn, slots[i]);
    if (tally_classes) {
      const NumericalSemigroup& h = corpus[i];
      if (h.is_naturals()) {
        class_names[i] = "DVR";
      } else {
        const CanonicalContext ctx = canonical_context(h);
        const Int rank = length_quotient(ctx.S, ctx.K);
        class_names[i] = classification_name(
            rank == 0   ? Classification::Gorenstein
            : rank == 1 ? Classification::AGL
            : rank == 2 ? Classification::TwoAGL
                        : Classification::HigherRank,
            rank);
      }
    }
  });

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (auto& v : slots[i]) rep.violations.push_back(std::move(v));
    if (tally_classes) ++rep.counts[{corpus[i].genus(), class_names[i]}];
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_by_genus(int genus_max) {
  if (genus_max < 0) throw std::invalid_argument("genus bound must be non-negative");
  std::vector<NumericalSemigroup> out;
  std::vector<NumericalSemigroup> level{NumericalSemigroup::from_gap_set({})};
  out.push_back(level.front());
  for (int g = 0; g < genus_max; ++g) {
    std::vector<std::vector<Int>> next_gaps;
    for (const auto& h : level) {
      for (Int x : h.minimal_generators()) {
        if (x > h.frobenius()) {
          std::vector<Int> gaps = h.gaps();
          gaps.push_back(x);  // x exceeds every existing gap
          next_gaps.push_back(std::move(gaps));
        }
      }
    }
    std::sort(next_gaps.begin(), next_gaps.end());
    level.clear();
    level.reserve(next_gaps.size());
    for (const auto& gs : next_gaps) level.push_back(NumericalSemigroup::from_gap_set(gs));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

// Candidate (a,b,c) triples whose semigroup has exactly these three minimal
// generators and Frobenius number <= f_max, in ascending order.
void for_each_three_generated_triple(
    Int f_max, const std::function<void(Int, Int, Int, const std::vector<Int>&)>& fn) {
  if (f_max < 1) throw std::invalid_argument("Frobenius bound must be positive");
  const Int window = f_max + 202 + 1;
  std::vector<std::uint64_t> dp((static_cast<std::size_t>(window) + 63) / 64);
  std::vector<std::uint64_t> tmp(dp.size());

  auto shift_or = [&](Int s) {
    const std::size_t ws = static_cast<std::size_t>(s) >> 6;
    const unsigned bs = static_cast<unsigned>(s & 63);
    bool changed = false;
    for (std::size_t j = dp.size(); j-- > 0;) {
      std::uint64_t v = 0;
      if (j >= ws) {
        v = dp[j - ws] << bs;
        if (bs && j > ws) v |= dp[j - ws - 1] >> (64 - bs);
      }
      const std::uint64_t nv = dp[j] | v;
      if (nv != dp[j]) {
        dp[j] = nv;
        changed = true;
      }
    }
    return changed;
  };
  auto get = [&](Int i) {
    return (dp[static_cast<std::size_t>(i) >> 6] >>
            (static_cast<unsigned>(i) & 63)) & 1u;
  };

  for (Int a = 3; a <= f_max + 1; ++a) {
    const Int w = f_max + a + 1;  // membership needed on [0, w)
    for (Int b = a + 1; b <= f_max + a; ++b) {
      if (b % a == 0) continue;
      const Int gab = std::gcd(a, b);
      for (Int c = b + 1; c <= f_max + a; ++c) {
        if (std::gcd(gab, c) != 1) continue;
        std::fill(dp.begin(), dp.end(), 0);
        dp[0] = 1;
        for (;;) {
          bool ch = shift_or(a);
          ch |= shift_or(b);
          ch |= shift_or(c);
          if (!ch) break;
        }
        // f <= f_max iff the top run [f_max+1, f_max+a] is solid.
        bool tail = true;
        for (Int z = f_max + 1; z < w && tail; ++z) tail = get(z);
        if (!tail) continue;
        // b and c must be irredundant (a, as the multiplicity, always is).
        auto minimal = [&](Int g) {
          for (Int x = a; x <= g - a; ++x)
            if (get(x) && get(g - x)) return false;
          return true;
        };
        if (!minimal(b) || !minimal(c)) continue;
        std::vector<Int> gaps;
        for (Int z = 1; z < w; ++z)
          if (!get(z)) gaps.push_back(z);
        fn(a, b, c, gaps);
      }
    }
  }
}

}  // namespace

void for_each_three_generated(
    Int f_max, const std::function<void(const NumericalSemigroup&)>& fn) {
  for_each_three_generated_triple(
      f_max, [&](Int, Int, Int, const std::vector<Int>& gaps) {
        fn(NumericalSemigroup::from_gap_set(gaps));
      });
}

std::vector<NumericalSemigroup> enumerate_three_generated(Int f_max) {
  std::vector<NumericalSemigroup> out;
  for_each_three_generated(f_max, [&](const NumericalSemigroup& h) { out.push_back(h); });
  return out;
}

namespace {

struct BData {
  RelativeIdeal b_set;
  NumericalSemigroup b;
  Int b_rank = 0;
};

BData b_data(const NumericalSemigroup& h) {
  const RelativeIdeal m = RelativeIdeal::maximal_ideal(h);
  RelativeIdeal b_set = colon(m, m);
  NumericalSemigroup b = semigroup_from_ideal(b_set);
  Int b_rank = 0;
  if (!b.is_naturals()) {
    const CanonicalContext bctx = canonical_context(b);
    b_rank = rank_of(bctx);
  }
  return {std::move(b_set), std::move(b), b_rank};
}

// B[L] at set level: the smallest L-and-B-closed set, i.e. the union of
// B, L, L+L, ... with B added throughout.
RelativeIdeal generated_ring_set(const RelativeIdeal& b_set, const RelativeIdeal& l) {
  RelativeIdeal cur = b_set;
  for (int guard = 0;; ++guard) {
    RelativeIdeal next = unite(cur, sum(cur, l));
    if (next == cur) return cur;
    cur = std::move(next);
    if (guard > 256) throw internal_error("ring generation did not stabilize");
  }
}

// ---- per-suite item checks -------------------------------------------------

void check_thm14(const NumericalSemigroup& h, std::vector<Violation>& out) {
  const auto v = rank_two_equivalents(canonical_context(h));
  const bool all_equal = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
  if (!all_equal) {
    std::string got = "[";
    for (std::size_t i = 0; i < v.size(); ++i) got += (v[i] ? "T" : "F");
    got += "]";
    out.push_back({h.minimal_generators(), "rank-2 equivalents agree", got,
                   "all equal"});
  }
}

void check_thm23(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_naturals()) return;
  Check chk{&out, &h};
  const Int c = h.conductor();
  std::vector<Int> ranks, reds, e1s;
  std::vector<RelativeIdeal> blowups;
  for (Int a : {c, c + 1, c + 2}) {
    const CanonicalContext ctx = canonical_context(h, a);
    ranks.push_back(rank_of(ctx));  // three formulas agree or it throws
    e1s.push_back(hilbert_coefficients(ctx).second);
    blowups.push_back(ctx.S);

    // Reduction number read off the ideal side must match the K side.
    Int red_i = 0;
    RelativeIdeal in = RelativeIdeal::unit_ideal(h);
    RelativeIdeal in1 = ctx.I;
    for (;; ++red_i) {
      if (in1 == translate(in, a)) break;
      in = in1;
      in1 = sum(in1, ctx.I);
      if (red_i > 128) throw internal_error("ideal-side reduction number diverges");
    }
    chk.expect_eq(red_i, ctx.reduction_number, "reduction number via I equals via K");
    reds.push_back(ctx.reduction_number);
  }
  chk.expect_true(ranks[0] == ranks[1] && ranks[1] == ranks[2],
                  "rank independent of parameter");
  chk.expect_true(reds[0] == reds[1] && reds[1] == reds[2],
                  "reduction number independent of parameter");
  chk.expect_true(e1s[0] == e1s[1] && e1s[1] == e1s[2],
                  "e1 independent of parameter");
  chk.expect_true(blowups[0] == blowups[1] && blowups[1] == blowups[2],
                  "blowup independent of parameter");
}

void check_prop24(const NumericalSemigroup& h, std::vector<Violation>& out) {
  Check chk{&out, &h};
  const CanonicalContext ctx = canonical_context(h);
  const Int rank = rank_of(ctx);

  chk.expect_eq(length_quotient(ctx.unit, ctx.conductor),
                length_quotient(ctx.S, ctx.K), "len(R/c) = len(S/K)");
  chk.expect_true(colon(ctx.K, ctx.S) == ctx.conductor, "c = K : S");

  const RelativeIdeal k2 = sum(ctx.K, ctx.K);
  chk.expect_true((colon(ctx.unit, ctx.K) == ctx.conductor) == (ctx.S == k2),
                  "c = R:K iff S = K^2");

  chk.expect_true((ctx.reduction_number <= 1) == ctx.gorenstein,
                  "Gorenstein iff reduction number <= 1");
  chk.expect_true(ctx.gorenstein == h.is_symmetric(), "Gorenstein iff symmetric");

  const bool agl = is_almost_gorenstein(h);
  chk.expect_true(agl == (rank <= 1), "almost Gorenstein iff rank <= 1");
  if (agl && !ctx.gorenstein) {
    chk.expect_eq(ctx.reduction_number, 2, "AGL non-Gorenstein: red = 2");
    chk.expect_eq(length_quotient(k2, ctx.K), 1, "AGL non-Gorenstein: len(K^2/K) = 1");
  }
}

void check_cor25(const NumericalSemigroup& h, std::vector<Violation>& out) {
  Check chk{&out, &h};
  const CanonicalContext ctx = canonical_context(h);
  if (ctx.gorenstein) return;

  const RelativeIdeal k2 = sum(ctx.K, ctx.K);
  const RelativeIdeal km = colon(ctx.K, ctx.maxideal);
  chk.expect_true(is_subset(km, k2), "K:m inside K^2 when not Gorenstein");
  if (!is_almost_gorenstein(h))
    chk.expect_true(!(km == k2), "K:m strictly inside K^2 when not AGL");

  if (length_quotient(k2, ctx.K) == 2) {
    chk.expect_true(unite(sum(ctx.maxideal, k2), ctx.K) == km,
                    "m K^2 + K = K : m when len(K^2/K) = 2");
  }
  if (rank_of(ctx) == 2) {
    chk.expect_eq(static_cast<Int>(quotient_module_generators(ctx.S, ctx.K).size()), 1,
                  "S/K cyclic when 2-AGL");
  }
}

void check_prop27(const NumericalSemigroup& h, std::vector<Violation>& out) {
  const CanonicalContext ctx = canonical_context(h);
  if (h.is_naturals() || rank_of(ctx) != 2) return;
  Check chk{&out, &h};
  const Int r = h.type();

  chk.expect_true(colon(ctx.K, ctx.S) == ctx.conductor, "c = K:S");
  chk.expect_true(colon(ctx.unit, ctx.K) == ctx.conductor, "c = R:K");
  chk.expect_eq(length_quotient(ctx.unit, ctx.conductor), 2, "len(R/c) = 2");
  chk.expect_true(is_subset(sum(ctx.maxideal, ctx.maxideal), ctx.conductor),
                  "m^2 inside c");

  // S/K is cyclic of length 2 and killed by the conductor: a copy of R/c.
  std::vector<Int> missing;
  const Int hi = std::max(ctx.S.stable_from(), ctx.K.stable_from());
  for (Int z = ctx.S.min_element(); z < hi; ++z)
    if (ctx.S.contains(z) && !ctx.K.contains(z)) missing.push_back(z);
  chk.expect_eq(static_cast<Int>(missing.size()), 2, "exactly two exponents in S\\K");
  for (Int x : missing) {
    bool killed = true;
    for (Int s : ctx.conductor.window_members())
      if (!ctx.K.contains(x + s)) killed = false;
    for (Int z = ctx.conductor.stable_from();
         killed && z < ctx.conductor.stable_from() + 4; ++z)
      if (!ctx.K.contains(x + z)) killed = false;
    chk.expect_true(killed, "conductor annihilates S/K at exponent " + std::to_string(x));
  }
  chk.expect_eq(static_cast<Int>(quotient_module_generators(ctx.S, ctx.K).size()), 1,
                "S/K cyclic");

  // K/R: r-1 generators; socle summand count read off the annihilators.
  const auto kr_gens = quotient_module_generators(ctx.K, ctx.unit);
  chk.expect_eq(static_cast<Int>(kr_gens.size()), r - 1, "mu(K/R) = r-1");
  const Int len_kr = length_quotient(ctx.K, ctx.unit);
  const Int free_rank = len_kr - (r - 1);
  const Int socle_count = 2 * (r - 1) - len_kr;
  chk.expect_true(free_rank >= 1 && socle_count >= 0, "decomposition in range");
  Int killed_gens = 0;
  for (Int x : kr_gens) {
    bool killed = true;
    for (Int g : h.minimal_generators())
      if (!h.contains(x + g)) killed = false;
    if (killed) ++killed_gens;
  }
  chk.expect_eq(killed_gens, socle_count, "socle generators of K/R");

  chk.expect_eq(static_cast<Int>(quotient_module_generators(ctx.S, ctx.unit).size()), r,
                "mu(S/R) = r");
}

void check_prop36(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_naturals() || h.type() != 2) return;
  Check chk{&out, &h};
  const CanonicalContext ctx = canonical_context(h);

  const bool two_agl = (rank_of(ctx) == 2);
  const Int len_kr = length_quotient(ctx.K, ctx.unit);
  const bool cond2 = (colon(ctx.unit, ctx.K) == ctx.conductor) && len_kr == 2;
  const bool cond3 = (ctx.S == sum(ctx.K, ctx.K)) && len_kr == 2;
  chk.expect_true(two_agl == cond2, "2-AGL iff c = R:K and len(K/R) = 2");
  chk.expect_true(two_agl == cond3, "2-AGL iff S = K^2 and len(K/R) = 2");
  if (two_agl) {
    chk.expect_eq(len_kr - 1, 1, "K/R = R/c: free rank 1");
    chk.expect_eq(static_cast<Int>(quotient_module_generators(ctx.K, ctx.unit).size()),
                  1, "K/R cyclic");
  }
}

void check_prop37(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_naturals() || h.multiplicity() != 3 || !h.has_minimal_multiplicity()) return;
  Check chk{&out, &h};
  const CanonicalContext ctx = canonical_context(h);
  chk.expect_true((rank_of(ctx) == 2) == (length_quotient(ctx.K, ctx.unit) == 2),
                  "multiplicity 3, minimal multiplicity: 2-AGL iff len(K/R) = 2");
}

void check_thm62(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_naturals() || !h.has_minimal_multiplicity()) return;
  Check chk{&out, &h};
  const CanonicalContext ctx = canonical_context(h);
  const Int rank = rank_of(ctx);
  const BData bd = b_data(h);

  chk.expect_true((rank == 2) == (bd.b_rank == 1),
                  "minimal multiplicity: 2-AGL iff B is AGL non-Gorenstein");

  if (!ctx.gorenstein) {
    // With minimal multiplicity, B = R : m and L = BK = K : m, and the
    // blowup is generated over B by L (equivalently by K).
    chk.expect_true(bd.b_set == colon(ctx.unit, ctx.maxideal), "B = R : m");
    const RelativeIdeal l = sum(bd.b_set, ctx.K);
    chk.expect_true(l == colon(ctx.K, ctx.maxideal), "BK = K : m");
    chk.expect_true(colon(ctx.K, bd.b_set) == sum(ctx.maxideal, ctx.K), "K : B = mK");
    chk.expect_true(generated_ring_set(bd.b_set, l) == ctx.S, "S = B[L]");
    chk.expect_true(generated_ring_set(bd.b_set, ctx.K) == ctx.S, "S = B[K]");
    if (rank == 2) {
      const RelativeIdeal l2 = sum(l, l);
      chk.expect_eq(length_quotient(l2, l), 1, "len(L^2/L) = 1 when 2-AGL");
    }
  }
}

void check_finalthm(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_naturals()) return;
  const Int e = h.multiplicity();
  if (e < 3 || !h.has_minimal_multiplicity()) return;
  const CanonicalContext ctx = canonical_context(h);
  const Int rank = rank_of(ctx);
  if (rank <= 1) return;  // hypothesis: R is not AGL
  const BData bd = b_data(h);
  if (bd.b.is_naturals()) return;
  if (bd.b_rank > 1) return;                       // B must be AGL
  if (bd.b.multiplicity() != e) return;            // with the same multiplicity
  if (!bd.b.has_minimal_multiplicity()) return;    // and minimal multiplicity

  Check chk{&out, &h};
  chk.expect_eq(rank, 2, "hypotheses met: rank is 2");
  if (rank == 2) {
    const Int len_kr = length_quotient(ctx.K, ctx.unit);
    chk.expect_eq(len_kr, 2 * (h.type() - 1), "hypotheses met: K/R free over R/c");
  }
}

void check_thm72(const NumericalSemigroup& h, std::vector<Violation>& out) {
  const auto verdict = type_two_shift_criterion(h);  // throws on mismatch
  (void)verdict;
  (void)out;
}

void check_thm74(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_symmetric()) return;
  const auto verdict = two_agl_from_presentation(h);  // throws on mismatch
  (void)verdict;
  (void)out;
}

void check_prop75(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_symmetric()) return;
  Check chk{&out, &h};
  const HerzogData hz = herzog_matrix(h);
  const CanonicalContext ctx = canonical_context(h);
  chk.expect_eq(length_quotient(ctx.K, ctx.unit), hz.alpha * hz.beta * hz.gamma,
                "len(K/R) = alpha beta gamma");
}

void check_cor77(const NumericalSemigroup& h, std::vector<Violation>& out) {
  const Int e = h.multiplicity();
  if (e > 5) return;
  Check chk{&out, &h};
  const auto match = small_multiplicity_family(h);  // throws when match != 2-AGL
  if (e == 4) chk.expect_true(!match.has_value(), "multiplicity 4 never matches");

  // When a normal form with top row (2,1,1) exists, the generators are the
  // stated functions of the bottom-row exponents.
  if (!h.is_symmetric()) {
    for (const auto& hz : herzog_normal_forms(h)) {
      if (hz.alpha != 2 || hz.beta != 1 || hz.gamma != 1) continue;
      chk.expect_eq(hz.ordered_gens[0], hz.beta_p * hz.gamma_p + hz.beta_p + 1,
                    "a1 = b'g' + b' + 1");
      chk.expect_eq(hz.ordered_gens[1], 2 * hz.gamma_p + hz.alpha_p * hz.gamma_p + 2,
                    "a2 = 2g' + a'g' + 2");
      chk.expect_eq(hz.ordered_gens[2], hz.alpha_p * hz.beta_p + hz.alpha_p + 2,
                    "a3 = a'b' + a' + 2");
    }
  }
}

void check_prop79(const NumericalSemigroup& h, std::vector<Violation>& out) {
  const CanonicalContext ctx = canonical_context(h);
  if (h.is_naturals() || rank_of(ctx) != 2) return;
  const bool free = canonical_free_over_conductor(h);  // throws on mismatch
  (void)free;
  (void)out;
}

void check_prop41(const NumericalSemigroup& h, std::vector<Violation>& out) {
  if (h.is_naturals()) return;
  Check chk{&out, &h};
  const CanonicalContext ctx = canonical_context(h);
  const IdealizationPreview p = idealization_preview(h);
  const Int mu_c = static_cast<Int>(minimal_module_generators(ctx.conductor).size());
  chk.expect_eq(p.embdim, h.embedding_dimension() + mu_c, "v(A) = v(R) + mu(c)");
  chk.expect_true(mu_c >= 1, "conductor needs at least one generator");
  chk.expect_eq(p.mult, 2 * h.multiplicity(), "e(A) = 2 e(R)");
  chk.expect_true(p.mult % 2 == 0, "e(A) even");
  chk.expect_eq(p.rank, rank_of(ctx), "rank of A equals rank of R");
}

// thm710 / claims711-712 grid: symmetric seeds, lift steps, n = 0..6.
struct GridItem {
  std::vector<Int> seed_gens;
  Int e;
  Int n;
};

std::vector<GridItem> family_grid() {
  const std::vector<std::vector<Int>> seeds{{2, 3}, {3, 4}, {3, 5}, {4, 5}};
  std::vector<GridItem> items;
  for (const auto& gens : seeds) {
    const NumericalSemigroup seed = NumericalSemigroup::from_generators(gens);
    std::vector<Int> steps;
    for (Int z = 1; static_cast<Int>(steps.size()) < 3; ++z)
      if (seed.contains(z)) steps.push_back(z);
    for (Int e : steps) {
      if (e < 3) continue;  // the lift is symmetric (content-free) below 3
      for (Int n = 0; n <= 6; ++n) items.push_back({gens, e, n});
    }
  }
  return items;
}

VerificationReport run_family_suite(const std::string& suite, int workers,
                                    bool claims_only, int horizon) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = suite;
  rep.corpus = "symmetric seeds {<2,3>,<3,4>,<3,5>,<4,5>}, e in first members >= 3, n = 0..6";
  const auto grid = family_grid();
  rep.total = static_cast<long>(grid.size());

  const std::vector<std::string> claim_keys{
      "multiplicity", "embdim",       "minimal_multiplicity",
      "PF",           "conductor",    "len_R_mod_c",
      "filtration_lengths",           "filtration_ends_at_unit"};

  std::vector<std::vector<Violation>> slots(grid.size());
  parallel_indices(grid.size(), workers, [&](std::size_t i) {
    const GridItem& item = grid[i];
    try {
      const NumericalSemigroup seed = NumericalSemigroup::from_generators(item.seed_gens);
      const FamilyInstance inst = apery_lift_family(seed, item.e, item.n);
      for (const auto& chk : check_family_instance(inst, horizon)) {
        if (claims_only &&
            std::find(claim_keys.begin(), claim_keys.end(), chk.key) == claim_keys.end())
          continue;
        if (!chk.ok) {
          slots[i].push_back({inst.semigroup.minimal_generators(),
                              "seed " + ints_to_string(item.seed_gens) + " e=" +
                                  std::to_string(item.e) + " n=" + std::to_string(item.n) +
                                  " " + chk.key,
                              chk.observed.dump(), chk.expected.dump()});
        }
      }
    } catch (const std::exception& e) {
      slots[i].push_back({item.seed_gens,
                          "exception (e=" + std::to_string(item.e) +
                              ", n=" + std::to_string(item.n) + ")",
                          e.what(), "no exception"});
    }
  });
  for (auto& s : slots)
    for (auto& v : s) rep.violations.push_back(std::move(v));
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "thm14",   "thm23-invariance", "prop24",  "cor25",   "prop27",
      "prop36",  "prop37",           "thm62",   "finalthm", "thm72",
      "thm74",   "prop75",           "cor77",   "prop79",  "thm710",
      "claims711-712", "prop41-42"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
  const int workers = resolve_workers(opt.workers);

  // Genus-corpus suites.
  const std::map<std::string, std::pair<int, ItemFn>> genus_suites{
      {"thm14", {20, check_thm14}},
      {"thm23-invariance", {15, check_thm23}},
      {"prop24", {15, check_prop24}},
      {"cor25", {15, check_cor25}},
      {"prop27", {15, check_prop27}},
      {"prop36", {15, check_prop36}},
      {"prop37", {15, check_prop37}},
      {"thm62", {15, check_thm62}},
      {"finalthm", {15, check_finalthm}},
      {"thm72", {15, check_thm72}},
      {"prop79", {15, check_prop79}},
      {"prop41-42", {15, check_prop41}},
  };
  if (auto it = genus_suites.find(name); it != genus_suites.end()) {
    const int g = opt.genus_max >= 0 ? opt.genus_max : it->second.first;
    const auto corpus = enumerate_by_genus(g);
    return run_over_corpus(name, "genus <= " + std::to_string(g), corpus, workers,
                           it->second.second, true);
  }

  // Three-generated sweeps.
  const std::map<std::string, ItemFn> sweep_suites{
      {"thm74", check_thm74},
      {"prop75", check_prop75},
      {"cor77", check_cor77},
  };
  if (auto it = sweep_suites.find(name); it != sweep_suites.end()) {
    const Int f = opt.f_max >= 1 ? opt.f_max : 200;
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::array<Int, 3>> triples;
    for_each_three_generated_triple(
        f, [&](Int a, Int b, Int c, const std::vector<Int>&) {
          triples.push_back({a, b, c});
        });

    VerificationReport rep;
    rep.suite = name;
    rep.corpus = "3-generated, f <= " + std::to_string(f);
    rep.total = static_cast<long>(triples.size());
    std::vector<std::vector<Violation>> slots(triples.size());
    const ItemFn& fn = it->second;
    parallel_indices(triples.size(), workers, [&](std::size_t i) {
      const NumericalSemigroup h = NumericalSemigroup::from_generators(
          {triples[i][0], triples[i][1], triples[i][2]});
      run_item(h, fn, slots[i]);
    });
    for (auto& s : slots)
      for (auto& v : s) rep.violations.push_back(std::move(v));
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }

  if (name == "thm710") return run_family_suite(name, workers, false, opt.horizon);
  if (name == "claims711-712") return run_family_suite(name, workers, true, opt.horizon);

  throw std::invalid_argument("unknown suite: " + name);
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " over " << r.corpus << ": " << r.total
      << " items, " << r.violations.size() << " violations, " << r.elapsed_seconds
      << " s\n";
  for (const auto& v : r.violations) {
    out << "  VIOLATION " << ints_to_string(v.gens) << " " << v.property
        << ": observed " << v.observed << ", expected " << v.expected << "\n";
  }
  if (!r.counts.empty()) {
    out << "  classification counts by genus:\n";
    Int genus = -1;
    for (const auto& [key, count] : r.counts) {
      if (key.first != genus) {
        if (genus >= 0) out << "\n";
        genus = key.first;
        out << "    genus " << genus << ":";
      }
      out << "  " << key.second << " " << count;
    }
    out << "\n";
  }
  out << (r.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string report_to_json_lines(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& v : r.violations) {
    nlohmann::json line{{"suite", r.suite},
                        {"gens", v.gens},
                        {"property", v.property},
                        {"observed", v.observed},
                        {"expected", v.expected}};
    out << line.dump() << "\n";
  }
  nlohmann::json summary{{"suite", r.suite},
                         {"corpus", r.corpus},
                         {"total", r.total},
                         {"violations", r.violations.size()}};
  if (!r.counts.empty()) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [key, count] : r.counts)
      counts["genus " + std::to_string(key.first)][key.second] = count;
    summary["counts"] = counts;
  }
  out << summary.dump() << "\n";
  return out.str();
}

}  // namespace nsring
