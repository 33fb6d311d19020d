#include <doctest.h>

#include "locale_lab/errors.hpp"
#include "locale_lab/galois.hpp"
#include "locale_lab/spectrum.hpp"
#include "test_helpers.hpp"

using namespace lab;

TEST_CASE("meet closures of prime sets") {
  FiniteLattice b2 = boolean_lattice(2);
  CHECK(meet_closure(b2, Bitset::of(4, {1, 2})).members() == Bitset::full(4));
  CHECK(meet_closure(b2, Bitset(4)).members() == Bitset::of(4, {3}));
  FiniteLattice chain3 = chain_lattice(3);
  CHECK(meet_closure(chain3, Bitset::of(3, {1})).members() ==
        Bitset::of(3, {1, 2}));
  CHECK_THROWS_AS(meet_closure(b2, Bitset::of(4, {0})), NotPrimes);
}

TEST_CASE("spatialization of sublocales") {
  FiniteLattice L = chain_lattice(3);
  CHECK(spatialization(full_sublocale(L)) == full_sublocale(L));
  CHECK(spatialization(void_sublocale(L)) == void_sublocale(L));
  Sublocale s(L, Bitset::of(3, {0, 2}));
  CHECK(spatialization(s) == s);
}

TEST_CASE("sobrification of prime subsets") {
  FiniteLattice b2 = boolean_lattice(2);
  CHECK(sobrification(b2, Bitset::of(4, {1, 2})) == Bitset::of(4, {1, 2}));
  CHECK(sobrification(b2, Bitset(4)).none());
  FiniteLattice chain3 = chain_lattice(3);
  CHECK(sobrification(chain3, Bitset::of(3, {1})) == Bitset::of(3, {1}));
  CHECK_THROWS_AS(sobrification(chain3, Bitset::of(3, {2})), NotPrimes);
}

TEST_CASE("adjunction and conucleus reports on the named instances") {
  for (int n : {1, 3}) {
    CHECK(check_adjunction(chain_lattice(n)).all_ok());
    CHECK(check_conucleus(chain_lattice(n)).all_ok());
  }
  CHECK(check_adjunction(boolean_lattice(2)).all_ok());
  CHECK(check_conucleus(boolean_lattice(2)).all_ok());
}

TEST_CASE("main diagram and skula assembly on the named instances") {
  for (int n : {1, 3}) {
    CHECK(check_main_diagram(chain_lattice(n)).all_ok());
    CHECK(assembly_spectrum_vs_skula(chain_lattice(n)).all_ok());
  }
  CHECK(check_main_diagram(boolean_lattice(2)).all_ok());
  CHECK(assembly_spectrum_vs_skula(boolean_lattice(2)).all_ok());
}

TEST_CASE("the spatialization image has one sublocale per prime subset") {
  auto sp_image_size = [](const FiniteLattice& L) {
    std::vector<Sublocale> image;
    for (const Sublocale& s : enumerate_sublocales(L)) {
      Sublocale sp = spatialization(s);
      if (std::find(image.begin(), image.end(), sp) == image.end())
        image.push_back(sp);
    }
    return image.size();
  };
  CHECK(sp_image_size(chain_lattice(3)) == 4);
  CHECK(sp_image_size(boolean_lattice(2)) == 4);  // the powerset of 2 points
  CHECK(sp_image_size(chain_lattice(1)) == 1);
}

TEST_CASE("witness collection policy is accepted by every check") {
  FiniteLattice L = boolean_lattice(2);
  CHECK(check_adjunction(L, {}, WitnessPolicy::kCollectAll).all_ok());
  CHECK(check_conucleus(L, {}, WitnessPolicy::kCollectAll).all_ok());
  CHECK(check_main_diagram(L, {}, WitnessPolicy::kCollectAll).all_ok());
  DiagramReport r = check_conucleus(L, {}, WitnessPolicy::kCollectAll);
  for (const LawCheck& l : r.laws) CHECK(l.witnesses.empty());
}

TEST_CASE("all four reports pass on the random pool") {
  for (const FiniteLattice& L : lab::testing::small_frames(8)) {
    if (primes(L).count() > 8) continue;
    CHECK(check_adjunction(L).all_ok());
    CHECK(check_conucleus(L).all_ok());
    CHECK(check_main_diagram(L).all_ok());
    CHECK(assembly_spectrum_vs_skula(L).all_ok());
  }
}

TEST_CASE("triangle identities of the adjunction") {
  for (const FiniteLattice& L : lab::testing::small_frames(5)) {
    if (primes(L).count() > 8) continue;
    // M . pt . M = M over prime subsets.
    Bitset ps = primes(L);
    std::vector<int> elems;
    ps.for_each([&](int p) { elems.push_back(p); });
    for (uint64_t mask = 0; mask < (uint64_t{1} << elems.size()); ++mask) {
      Bitset y(L.size());
      for (size_t i = 0; i < elems.size(); ++i)
        if ((mask >> i) & 1) y.set(elems[i]);
      Sublocale my = meet_closure(L, y);
      CHECK(meet_closure(L, points_of_sublocale(my)) == my);
    }
    // pt . M . pt = pt over sublocales.
    for (const Sublocale& s : enumerate_sublocales(L)) {
      Bitset pts = points_of_sublocale(s);
      CHECK(points_of_sublocale(meet_closure(L, pts)) == pts);
    }
  }
}

TEST_CASE("fixpoint characterizations") {
  for (const FiniteLattice& L : lab::testing::small_frames(5)) {
    if (primes(L).count() > 6) continue;
    SpectrumSpace spec = spectrum_space(L);
    FiniteSpace skula = skula_space(spec.carrier);
    // sob(Y) = Y iff Y is Skula-closed.
    for (uint64_t y_mask = 0;; ++y_mask) {
      Bitset y = spec.elems_of_point_mask(y_mask);
      bool fixed = sobrification(L, y) == y;
      bool skula_closed =
          skula.has_open(skula.full_mask() & ~y_mask);
      CHECK(fixed == skula_closed);
      if (y_mask == spec.carrier.full_mask()) break;
    }
    // sp(S) = S iff every member is a meet of primes of S.
    for (const Sublocale& s : enumerate_sublocales(L)) {
      Bitset pts = points_of_sublocale(s);
      bool all_meets = true;
      s.members().for_each([&](int m) {
        if (L.big_meet(pts & L.upset(m)) != m) all_meets = false;
      });
      CHECK((spatialization(s) == s) == all_meets);
    }
  }
}

TEST_CASE("assembly spatiality matches total spatiality of the base") {
  // S(L)^op spatial iff all sublocales of L spatial; both sides computed
  // independently. Finite frames satisfy both, so the check is that both
  // routes say yes.
  for (const FiniteLattice& L : lab::testing::small_frames(5)) {
    if (primes(L).count() > 6) continue;
    SublocaleAssembly A = sublocale_assembly(L);
    bool assembly_spatial = is_spatial(A.dual);
    bool all_spatial = true;
    for (const Sublocale& s : A.sublocales)
      if (!(spatialization(s) == s)) all_spatial = false;
    CHECK(assembly_spatial == all_spatial);
    CHECK(assembly_spatial);
  }
}
