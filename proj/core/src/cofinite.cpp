#include "locale_lab/cofinite.hpp"

#include <algorithm>

#include "locale_lab/errors.hpp"

namespace lab {

namespace {

std::vector<uint32_t> set_union(const std::vector<uint32_t>& a,
                                const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<uint32_t> set_intersection(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<uint32_t> set_difference(const std::vector<uint32_t>& a,
                                     const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const std::vector<uint32_t>& a,
                  const std::vector<uint32_t>& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

/// All elements with complement inside {0..range-1}, bottom first.
std::vector<CofiniteElement> bounded_elements(int range) {
  std::vector<CofiniteElement> out{CofiniteElement::bottom()};
  for (uint32_t mask = 0; mask < (uint32_t{1} << range); ++mask) {
    std::vector<uint32_t> c;
    for (int i = 0; i < range; ++i)
      if ((mask >> i) & 1) c.push_back(i);
    out.push_back(CofiniteElement::cofinite(std::move(c)));
  }
  return out;
}

CofiniteElement singleton_prime(uint32_t x) {
  return CofiniteElement::cofinite({x});
}

}  // namespace

CofiniteElement CofiniteElement::bottom() {
  CofiniteElement e;
  e.bottom_ = true;
  return e;
}

CofiniteElement CofiniteElement::cofinite(std::vector<uint32_t> complement) {
  std::sort(complement.begin(), complement.end());
  complement.erase(std::unique(complement.begin(), complement.end()),
                   complement.end());
  CofiniteElement e;
  e.complement_ = std::move(complement);
  return e;
}

std::string CofiniteElement::to_string() const {
  if (bottom_) return "bot";
  if (complement_.empty()) return "top";
  std::string s = "cofin{";
  for (size_t i = 0; i < complement_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(complement_[i]);
  }
  return s + "}";
}

bool cf_leq(const CofiniteElement& a, const CofiniteElement& b) {
  if (a.is_bottom()) return true;
  if (b.is_bottom()) return false;
  return set_contains(a.complement(), b.complement());
}

CofiniteElement cf_meet(const CofiniteElement& a, const CofiniteElement& b) {
  if (a.is_bottom() || b.is_bottom()) return CofiniteElement::bottom();
  return CofiniteElement::cofinite(set_union(a.complement(), b.complement()));
}

CofiniteElement cf_join(const CofiniteElement& a, const CofiniteElement& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return CofiniteElement::cofinite(
      set_intersection(a.complement(), b.complement()));
}

CofiniteElement cf_heyting(const CofiniteElement& a, const CofiniteElement& b) {
  if (a.is_bottom()) return CofiniteElement::top();
  if (b.is_bottom()) return CofiniteElement::bottom();
  // Two cofinite opens always intersect, so w∧a <= b pins w to avoid the
  // finitely many points of b's complement not already missing from a.
  std::vector<uint32_t> needed =
      set_difference(b.complement(), a.complement());
  if (needed.empty()) return CofiniteElement::top();
  return CofiniteElement::cofinite(std::move(needed));
}

bool cf_adjunction_exhaustive(int range) {
  std::vector<CofiniteElement> elems = bounded_elements(range);
  for (const CofiniteElement& a : elems)
    for (const CofiniteElement& b : elems)
      for (const CofiniteElement& c : elems)
        if (cf_leq(cf_meet(c, a), b) != cf_leq(c, cf_heyting(a, b)))
          return false;
  return true;
}

bool CofinitePrimeFacts::all_certified() const {
  return std::all_of(facts.begin(), facts.end(),
                     [](const CofiniteFact& f) { return f.holds; });
}

CofinitePrimeFacts cf_primes_facts(int range) {
  CofinitePrimeFacts out;
  std::vector<CofiniteElement> elems = bounded_elements(range);
  const CofiniteElement bot = CofiniteElement::bottom();

  {
    bool ok = true;
    for (int x = 0; x < range && ok; ++x) {
      CofiniteElement p = singleton_prime(static_cast<uint32_t>(x));
      for (const CofiniteElement& a : elems)
        for (const CofiniteElement& b : elems)
          if (cf_leq(cf_meet(a, b), p) && !cf_leq(a, p) && !cf_leq(b, p))
            ok = false;
    }
    out.singletons_prime = ok;
    out.facts.push_back(
        {"every cofin{x} is prime", ok,
         "a∧b <= cofin{x} puts x in one complement, so a factor is below; "
         "checked for all pairs with complements in 0.." +
             std::to_string(range - 1)});
  }

  {
    bool ok = true;
    for (const CofiniteElement& a : elems)
      for (const CofiniteElement& b : elems)
        if (cf_meet(a, b).is_bottom() && !a.is_bottom() && !b.is_bottom())
          ok = false;
    out.bottom_prime = ok;
    out.facts.push_back(
        {"bot is prime", ok,
         "two cofinite opens meet in a cofinite open (complements stay "
         "finite while the carrier is infinite); checked over the bounded "
         "range"});
  }

  {
    bool ok = true;
    for (const CofiniteElement& p : elems) {
      if (p.is_bottom() || p.complement().size() < 2) continue;
      CofiniteElement a = singleton_prime(p.complement().front());
      CofiniteElement b = CofiniteElement::cofinite(std::vector<uint32_t>(
          p.complement().begin() + 1, p.complement().end()));
      bool witnesses = cf_leq(cf_meet(a, b), p) && !cf_leq(a, p) &&
                       !cf_leq(b, p);
      ok = ok && witnesses;
    }
    out.larger_cofinite_not_prime = ok;
    out.facts.push_back(
        {"no cofin F with |F| >= 2 is prime", ok,
         "splitting the complement gives a∧b <= p with neither factor "
         "below; witnessed for every bounded F"});
  }

  {
    // Lower bounds of the singleton family are below every cofin{x}; a
    // cofinite lower bound would need an infinite complement.
    bool ok = true;
    for (const CofiniteElement& c : elems) {
      if (c.is_bottom()) continue;
      uint32_t outside = c.complement().empty()
                             ? 0
                             : c.complement().back() + 1;
      if (cf_leq(c, singleton_prime(outside))) ok = false;
    }
    out.bottom_is_meet_of_singletons = ok;
    out.facts.push_back(
        {"bot is the meet of the family {cofin{x} : x in the carrier}", ok,
         "every cofinite element fails to lie below cofin{y} for y outside "
         "its finite complement, so only bot bounds the family from below; "
         "checked for every bounded element"});
  }

  {
    // The family above avoids bot yet meets to it.
    out.bottom_weakly_covered = !out.bottom_is_meet_of_singletons;
    out.facts.push_back(
        {"bot is not weakly covered", !out.bottom_weakly_covered,
         "the singleton family meets to bot without containing it"});
  }

  {
    bool ok = true;
    for (int x = 0; x < range && ok; ++x) {
      CofiniteElement p = singleton_prime(static_cast<uint32_t>(x));
      // Finite prime families in range: subsets of {bot} ∪ singletons.
      std::vector<CofiniteElement> primes_in_range{bot};
      for (int y = 0; y < range; ++y)
        primes_in_range.push_back(singleton_prime(static_cast<uint32_t>(y)));
      const size_t k = primes_in_range.size();
      for (uint64_t mask = 0; mask < (uint64_t{1} << k) && ok; ++mask) {
        CofiniteElement m = CofiniteElement::top();
        bool contains_p = false;
        for (size_t i = 0; i < k; ++i)
          if ((mask >> i) & 1) {
            m = cf_meet(m, primes_in_range[i]);
            contains_p = contains_p || primes_in_range[i] == p;
          }
        if (m == p && !contains_p) ok = false;
      }
    }
    out.singletons_weakly_covered = ok;
    out.facts.push_back(
        {"every cofin{x} is weakly covered", ok,
         "finite singleton families meet to cofin of their union and "
         "infinite ones to bot, so a family meeting to cofin{x} contains "
         "it; checked over all bounded prime families"});
  }

  {
    // Prime chains: the only strict comparability among primes is
    // bot < cofin{x}, so descending chains stop after two steps (an
    // infinite descent is impossible even though primes here are not
    // completely prime -- that implication only runs the other way).
    bool ok = true;
    for (int x = 0; x < range && ok; ++x)
      for (int y = 0; y < range; ++y) {
        CofiniteElement px = singleton_prime(static_cast<uint32_t>(x));
        CofiniteElement py = singleton_prime(static_cast<uint32_t>(y));
        if (x != y && (cf_leq(px, py) || cf_leq(py, px))) ok = false;
        if (!cf_leq(bot, px) || cf_leq(px, bot)) ok = false;
      }
    out.facts.push_back(
        {"descending chains of primes have length at most two", ok,
         "distinct singleton-complement primes are incomparable and bot "
         "sits strictly below each; checked pairwise over the bounded "
         "range"});
  }

  {
    // The singleton family witnesses failure for bot, and the family of all
    // other singletons witnesses failure for cofin{x}.
    bool bot_fails = out.bottom_is_meet_of_singletons;
    for (const CofiniteElement& e : elems)
      if (!e.is_bottom() && cf_leq(e, bot)) bot_fails = false;
    out.bottom_completely_prime = !bot_fails;
    out.facts.push_back(
        {"bot is prime but not completely prime", bot_fails,
         "the singleton family meets below bot while no member is"});

    bool singleton_fails = true;
    for (int x = 0; x < range && singleton_fails; ++x) {
      CofiniteElement p = singleton_prime(static_cast<uint32_t>(x));
      // {cofin{y} : y != x} meets to bot <= p; members are below p only
      // when y = x, which the family omits.
      for (int y = 0; y < range; ++y)
        if (y != x && cf_leq(singleton_prime(static_cast<uint32_t>(y)), p))
          singleton_fails = false;
    }
    out.singletons_completely_prime = !singleton_fails;
    out.facts.push_back(
        {"no cofin{x} is completely prime", singleton_fails,
         "the family of all other singletons meets to bot <= cofin{x} with "
         "no member below it"});
  }

  return out;
}

std::vector<CofiniteElement> cf_essential_primes(const CofiniteElement& a) {
  auto fixpoint = [&](const CofiniteElement& p) {
    return cf_heyting(cf_heyting(p, a), a) == p;
  };
  std::vector<CofiniteElement> out;
  if (a.is_bottom()) {
    if (!fixpoint(CofiniteElement::bottom()))
      throw CrossCheckError("bot must be its own essential prime");
    out.push_back(CofiniteElement::bottom());
  } else {
    for (uint32_t x : a.complement()) {
      CofiniteElement p = singleton_prime(x);
      if (!cf_leq(a, p) || !fixpoint(p))
        throw CrossCheckError(
            "expected essential prime fails the fixpoint characterization");
      out.push_back(std::move(p));
    }
  }
  // Fringe of non-candidates: nearby singletons outside the complement and
  // bot must fail.
  uint32_t fringe_start =
      a.is_bottom() || a.complement().empty() ? 0 : a.complement().back() + 1;
  for (uint32_t x = fringe_start; x < fringe_start + 3; ++x) {
    CofiniteElement p = singleton_prime(x);
    if (cf_leq(a, p) && fixpoint(p) && !a.is_bottom() &&
        std::find(a.complement().begin(), a.complement().end(), x) ==
            a.complement().end())
      throw CrossCheckError("unexpected essential prime outside the complement");
  }
  if (!a.is_bottom() && fixpoint(CofiniteElement::bottom()) &&
      cf_leq(a, CofiniteElement::bottom()))
    throw CrossCheckError("bot cannot be essential for a cofinite element");
  return out;
}

CofiniteClassification cf_classification(uint64_t sample_seed, int samples) {
  CofiniteClassification out;
  CofinitePrimeFacts facts = cf_primes_facts();
  out.certificates = facts.facts;

  // Elements checked: the bounds, every complement inside {0..4}, and a
  // seeded sample of larger complements.
  std::vector<CofiniteElement> probe = bounded_elements(5);
  uint64_t state = sample_seed;
  auto next = [&state]() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (int s = 0; s < samples; ++s) {
    std::vector<uint32_t> c;
    int size = static_cast<int>(next() % 9);
    for (int i = 0; i < size; ++i)
      c.push_back(static_cast<uint32_t>(next() % 64));
    probe.push_back(CofiniteElement::cofinite(std::move(c)));
  }

  {
    bool ok = true;
    std::string witness;
    for (const CofiniteElement& a : probe) {
      CofiniteElement m = CofiniteElement::top();
      for (const CofiniteElement& p : cf_essential_primes(a))
        m = cf_meet(m, p);
      if (!(m == a)) {
        ok = false;
        witness = a.to_string();
        break;
      }
    }
    out.totally_spatial = {"every element is the meet of its essential primes",
                           ok, true, witness};
  }

  out.td = {"all primes weakly covered", facts.bottom_weakly_covered, true,
            facts.bottom_weakly_covered ? "" : "bot is not weakly covered"};

  {
    // Absolutely essential primes of bot: essential (only bot) and weakly
    // covered (bot is not), so the set is empty and its meet is top.
    bool abs_ess_empty = !facts.bottom_weakly_covered;
    bool scattered = !abs_ess_empty;
    out.scattered = {"every element is the meet of its absolutely essential primes",
                     scattered, true,
                     scattered ? ""
                               : "AbsEss(bot) is empty, so its meet is top, "
                                 "not bot"};
  }

  bool all_weakly = facts.bottom_weakly_covered &&
                    facts.singletons_weakly_covered;
  out.implication_consistent =
      out.scattered.holds == (out.totally_spatial.holds && all_weakly);
  return out;
}

}  // namespace lab
