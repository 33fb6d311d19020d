#include <doctest.h>

#include "locale_lab/classify.hpp"
#include "locale_lab/errors.hpp"
#include "locale_lab/galois.hpp"
#include "locale_lab/spectrum.hpp"
#include "test_helpers.hpp"

using namespace lab;

TEST_CASE("weakly covered primes") {
  FiniteLattice chain3 = chain_lattice(3);
  CHECK(is_weakly_covered(chain3, 0));
  CHECK(is_weakly_covered(chain3, 1));  // no strictly greater primes
  FiniteLattice b2 = boolean_lattice(2);
  CHECK(is_weakly_covered(b2, 1));
  CHECK_THROWS_AS(is_weakly_covered(b2, b2.top()), NotPrime);
}

TEST_CASE("covered primes, and coveredness equals weak coveredness here") {
  FiniteLattice chain3 = chain_lattice(3);
  CHECK(is_covered(chain3, 0));  // meet of {m, top} is m, not bottom
  CHECK(is_covered(chain3, 1));  // coatom
  for (const FiniteLattice& L : lab::testing::small_frames()) {
    Bitset ps = primes(L);
    for (int p = ps.first(); p >= 0; p = ps.next_after(p))
      CHECK(is_covered(L, p) == is_weakly_covered(L, p));
  }
}

TEST_CASE("essential primes on the named instances") {
  FiniteLattice chain3 = chain_lattice(3);
  CHECK(essential_primes(chain3, 0) == Bitset::of(3, {0}));
  CHECK(essential_primes(chain3, chain3.top()).none());
  FiniteLattice b2 = boolean_lattice(2);
  CHECK(essential_primes(b2, 0) == Bitset::of(4, {1, 2}));
  CHECK(essential_primes(b2, 1) == Bitset::of(4, {1}));
}

TEST_CASE("absolutely essential primes") {
  FiniteLattice chain3 = chain_lattice(3);
  CHECK(absolutely_essential_primes(chain3, 0) == Bitset::of(3, {0}));
  CHECK(absolutely_essential_primes(chain3, chain3.top()).none());
  SUBCASE("equals the essential primes on finite frames") {
    for (const FiniteLattice& L : lab::testing::small_frames())
      for (int a = 0; a < L.size(); ++a)
        CHECK(absolutely_essential_primes(L, a) == essential_primes(L, a));
  }
}

TEST_CASE("isolated iff essential, over all prime subsets") {
  for (const FiniteLattice& L : lab::testing::small_frames(5)) {
    Bitset ps = primes(L);
    if (ps.count() > 8) continue;
    SpectrumSpace spec = spectrum_space(L);
    std::vector<int> elems;
    ps.for_each([&](int p) { elems.push_back(p); });
    for (uint64_t mask = 1; mask < (uint64_t{1} << elems.size()); ++mask) {
      Bitset family(L.size());
      uint64_t family_pts = 0;
      for (size_t i = 0; i < elems.size(); ++i)
        if ((mask >> i) & 1) {
          family.set(elems[i]);
          family_pts |= uint64_t{1} << spec.point_of_prime(elems[i]);
        }
      family.for_each([&](int p) {
        Bitset others = family;
        others.reset(p);
        bool essential = !L.leq(L.big_meet(others), p);
        int pt = spec.point_of_prime(p);
        bool isolated =
            (min_nbhd(spec.carrier, pt) & family_pts) == (uint64_t{1} << pt);
        CHECK(essential == isolated);
      });
    }
  }
}

TEST_CASE("families of essential primes are pairwise incomparable") {
  for (const FiniteLattice& L : lab::testing::small_frames(5)) {
    Bitset ps = primes(L);
    if (ps.count() > 8) continue;
    std::vector<int> elems;
    ps.for_each([&](int p) { elems.push_back(p); });
    for (uint64_t mask = 1; mask < (uint64_t{1} << elems.size()); ++mask) {
      Bitset family(L.size());
      for (size_t i = 0; i < elems.size(); ++i)
        if ((mask >> i) & 1) family.set(elems[i]);
      bool all_essential = true;
      family.for_each([&](int p) {
        Bitset others = family;
        others.reset(p);
        if (L.leq(L.big_meet(others), p)) all_essential = false;
      });
      if (!all_essential) continue;
      family.for_each([&](int p) {
        family.for_each([&](int q) {
          if (p != q) CHECK_FALSE(L.leq(p, q));
        });
      });
    }
  }
}

TEST_CASE("the implication formula through primes") {
  // x -> a is the meet of the primes above a outside the upset of x,
  // whenever a is a meet of primes.
  for (const FiniteLattice& L : lab::testing::small_frames()) {
    Bitset ps = primes(L);
    for (int a = 0; a < L.size(); ++a)
      for (int x = 0; x < L.size(); ++x) {
        Bitset outside = (ps & L.upset(a)).minus(L.upset(x));
        CHECK(L.heyting(x, a) == L.big_meet(outside));
      }
  }
}

TEST_CASE("primes of Boolean lattices are the coatoms") {
  for (int atoms : {1, 2, 3, 4}) {
    FiniteLattice B = boolean_lattice(atoms);
    Bitset expect(B.size());
    for (int co : B.lower_covers(B.top())) expect.set(co);
    CHECK(primes(B) == expect);
    CHECK(is_discrete(spectrum_space(B).carrier));
  }
}

TEST_CASE("implication into a prime collapses to top or the prime") {
  // x -> p is top when x <= p and p itself otherwise; and any element with
  // that dichotomy is prime.
  for (const FiniteLattice& L : lab::testing::small_frames()) {
    Bitset ps = primes(L);
    for (int p = 0; p < L.size(); ++p) {
      bool dichotomy = p != L.top();
      for (int x = 0; x < L.size() && dichotomy; ++x) {
        int expect = L.leq(x, p) ? L.top() : p;
        if (ps.test(p)) CHECK(L.heyting(x, p) == expect);
        if (L.heyting(x, p) != expect) dichotomy = false;
      }
      if (p != L.top()) CHECK(dichotomy == ps.test(p));
    }
  }
}

TEST_CASE("prime dossiers are internally consistent") {
  for (const FiniteLattice& L : lab::testing::small_frames(6)) {
    if (primes(L).count() > 8) continue;
    for (const PrimeDossier& d : prime_dossiers(L)) {
      CHECK(d.weakly_covered);
      CHECK(d.covered == d.weakly_covered);  // spatial case
      CHECK(d.isolated_in_skula);
      CHECK(d.isolated_in_upset_spectrum == d.weakly_covered);
    }
  }
}

TEST_CASE("discrete dense subspaces: fast path vs exhaustive search") {
  auto brute = [](const FiniteSpace& X) {
    for (uint64_t d = 0;; ++d) {
      bool discrete = true, dense = true;
      FiniteSpace D = subspace(X, d);
      for (int i = 0; i < D.point_count(); ++i)
        if (min_nbhd(D, i) != (uint64_t{1} << i)) discrete = false;
      for (uint64_t u : X.opens)
        if (u != 0 && (u & d) == 0) dense = false;
      if (discrete && dense) return true;
      if (d == X.full_mask()) break;
    }
    return false;
  };
  for (uint64_t seed = 0; seed < 25; ++seed) {
    FiniteSpace X = random_space(1 + seed % 5, seed * 31 + 1, 0.45);
    if (!is_t0(X)) continue;  // the fast path is for the T0 spectra
    CHECK(has_discrete_dense_subspace(X) == brute(X));
  }
}

TEST_CASE("theorem suites on the named instances") {
  for (int n : {1, 3}) {
    FiniteLattice L = chain_lattice(n);
    CHECK(theorem_td(L).all_true());
    CHECK(theorem_totally_spatial(L).all_true());
    CHECK(theorem_scattered(L).all_true());
    CHECK(coframe_proposition(L).all_true());
  }
  FiniteLattice b2 = boolean_lattice(2);
  TheoremReport td = theorem_td(b2);
  CHECK(td.all_true());
  CHECK(td.verdicts.size() == 6);
  TheoremReport total = theorem_totally_spatial(b2);
  CHECK(total.all_true());
  CHECK(total.verdicts.size() == 8);
  TheoremReport sc = theorem_scattered(b2);
  CHECK(sc.all_true());
  CHECK(sc.verdicts.size() == 8);
  TheoremReport cf = coframe_proposition(b2);
  CHECK(cf.all_true());
  CHECK(cf.verdicts.size() == 3);
}

TEST_CASE("the coframe proposition on an up-set frame") {
  Poset P{{"p", "q"}, {Bitset::of(2, {0, 1}), Bitset::of(2, {1})}};
  FiniteLattice L = frame_from_poset_upsets(P).lattice;
  CHECK(coframe_proposition(L).all_true());
}

TEST_CASE("the finite-scale tautology over the random pool") {
  // Finite frames are spatial, T_D and scattered, so every suite must agree
  // with all-true verdicts; each verdict still runs its own code path, so
  // this cross-validates 25 independent computations per instance.
  for (const FiniteLattice& L : lab::testing::small_frames(8)) {
    if (primes(L).count() > 8) continue;
    for (const TheoremReport& r :
         {theorem_td(L), theorem_totally_spatial(L), theorem_scattered(L),
          coframe_proposition(L)}) {
      CHECK(r.agreement);
      CHECK(r.all_true());
      CHECK_FALSE(r.closed_form_only);
    }
  }
}

TEST_CASE("suites fall back to closed forms past the prime cap") {
  FiniteLattice L = chain_lattice(8);  // 7 primes
  Caps tight;
  tight.max_exhaustive_primes = 3;
  tight.max_enumeration = 18;
  TheoremReport r = theorem_td(L, tight);
  CHECK(r.closed_form_only);
  CHECK(r.agreement);
  bool saw_skip = false;
  for (const Verdict& v : r.verdicts) saw_skip = saw_skip || !v.computed;
  CHECK(saw_skip);
}

TEST_CASE("classification errors") {
  FiniteLattice b2 = boolean_lattice(2);
  CHECK_THROWS_AS(is_covered(b2, b2.bottom()), NotPrime);
  CHECK_THROWS_AS(is_weakly_covered(b2, b2.top()), NotPrime);
}
