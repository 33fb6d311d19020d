#include "locale_lab/galois.hpp"

#include <algorithm>

#include "locale_lab/errors.hpp"
#include "locale_lab/spectrum.hpp"

namespace lab {

bool DiagramReport::all_ok() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawCheck& l) { return l.ok; });
}

const LawCheck* DiagramReport::find(std::string_view law) const {
  for (const LawCheck& l : laws)
    if (l.law == law) return &l;
  return nullptr;
}

namespace {

/// Per-law witness accumulator. fail() returns whether the scan should keep
/// going (only under kCollectAll).
struct LawScan {
  WitnessPolicy policy = WitnessPolicy::kFirstOnly;
  bool ok = true;
  std::vector<std::string> witnesses;

  bool fail(std::string witness) {
    ok = false;
    witnesses.push_back(std::move(witness));
    return policy == WitnessPolicy::kCollectAll;
  }
  void commit(DiagramReport& r, std::string law) {
    r.laws.push_back({std::move(law), ok, std::move(witnesses)});
    ok = true;
    witnesses.clear();
  }
};

/// All subsets of the primes of L, each with its meet-closure, in a
/// deterministic order. Guarded by the exhaustive-primes cap.
struct PrimeSubsets {
  std::vector<Bitset> subsets;           // as element sets
  std::vector<Sublocale> meet_closures;  // aligned with subsets
};

PrimeSubsets all_prime_subsets(const FiniteLattice& L, const Bitset& ps,
                               const Caps& caps) {
  const int k = ps.count();
  if (k > caps.max_exhaustive_primes || k > 30)
    throw CapExceeded("prime-subset quantification is capped at " +
                      std::to_string(std::min(caps.max_exhaustive_primes, 30)) +
                      " primes");
  std::vector<int> elems;
  ps.for_each([&](int p) { elems.push_back(p); });
  PrimeSubsets out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    Bitset y(L.size());
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) y.set(elems[i]);
    out.meet_closures.push_back(meet_closure(L, y, ps));
    out.subsets.push_back(std::move(y));
  }
  return out;
}

}  // namespace

Sublocale meet_closure(const FiniteLattice& L, const Bitset& prime_subset) {
  return meet_closure(L, prime_subset, primes(L));
}

Sublocale meet_closure(const FiniteLattice& L, const Bitset& prime_subset,
                       const Bitset& lattice_primes) {
  if (!prime_subset.subset_of(lattice_primes))
    throw NotPrimes("meet-closure takes a set of primes");
  Bitset m = Bitset::of(L.size(), {L.top()});
  // Incremental product: after step k, m holds the meets of all subsets of
  // the first k primes.
  prime_subset.for_each([&](int p) {
    Bitset next = m;
    m.for_each([&](int r) { next.set(L.meet(r, p)); });
    m = std::move(next);
  });
  Sublocale s(L, std::move(m));
  if (!is_sublocale(L, s.members()))
    throw CrossCheckError("meet-closure of primes is not a sublocale");
  return s;
}

Sublocale spatialization(const Sublocale& s) {
  return spatialization(s, primes(s.lattice()));
}

Sublocale spatialization(const Sublocale& s, const Bitset& lattice_primes) {
  const FiniteLattice& L = s.lattice();
  Bitset pts = points_of_sublocale(s, lattice_primes);
  Sublocale via_meets = meet_closure(L, pts, lattice_primes);
  std::vector<Sublocale> booleans;
  pts.for_each([&](int p) { booleans.push_back(boolean_sublocale(L, p)); });
  Sublocale via_joins = sublocale_join(L, booleans);
  if (!(via_meets == via_joins))
    throw CrossCheckError(
        "spatialization: M(pt(S)) disagrees with the join of the b(p)");
  return via_meets;
}

Bitset sobrification(const FiniteLattice& L, const Bitset& prime_subset,
                     const Caps& caps) {
  if (!prime_subset.subset_of(primes(L)))
    throw NotPrimes("sobrification takes a set of primes");
  const Bitset ps = primes(L);
  Bitset result =
      points_of_sublocale(meet_closure(L, prime_subset, ps), ps);
  if (ps.count() <= caps.max_exhaustive_primes) {
    // Independent route: intersect every sober subspace of the spectrum
    // containing Y.
    SpectrumSpace spec = spectrum_space(L);
    uint64_t y_mask = spec.prime_mask_of(prime_subset);
    uint64_t inter = spec.carrier.full_mask();
    for (uint64_t z = 0; z <= spec.carrier.full_mask(); ++z) {
      if ((y_mask & ~z) != 0) continue;
      if (is_sober(subspace(spec.carrier, z))) inter &= z;
    }
    if (!(spec.elems_of_point_mask(inter) == result))
      throw CrossCheckError(
          "sobrification: pt(M(Y)) disagrees with the intersection of sober "
          "supersets");
  }
  return result;
}

DiagramReport check_adjunction(const FiniteLattice& L, const Caps& caps,
                               WitnessPolicy policy) {
  DiagramReport r{"adjunction", {}};
  std::vector<Sublocale> subs = enumerate_sublocales(L, caps);
  const Bitset ps = primes(L);
  std::vector<Bitset> pts;
  pts.reserve(subs.size());
  for (const Sublocale& s : subs) pts.push_back(points_of_sublocale(s, ps));
  PrimeSubsets ys = all_prime_subsets(L, ps, caps);
  LawScan scan{policy, true, {}};
  bool stop = false;
  for (size_t yi = 0; yi < ys.subsets.size() && !stop; ++yi) {
    const Bitset& y = ys.subsets[yi];
    const Sublocale& my = ys.meet_closures[yi];
    for (size_t si = 0; si < subs.size(); ++si) {
      bool lhs = my.members().subset_of(subs[si].members());
      bool rhs = y.subset_of(pts[si]);
      if (lhs != rhs &&
          !scan.fail("Y=" + y.to_string() + " S=" + subs[si].to_string())) {
        stop = true;
        break;
      }
    }
  }
  scan.commit(r, "M(Y) <= S iff Y <= pt(S)");
  return r;
}

DiagramReport check_conucleus(const FiniteLattice& L, const Caps& caps,
                              WitnessPolicy policy) {
  DiagramReport r{"conucleus", {}};
  std::vector<Sublocale> subs = enumerate_sublocales(L, caps);
  const Bitset ps = primes(L);
  std::vector<Sublocale> sp;
  sp.reserve(subs.size());
  for (const Sublocale& s : subs) sp.push_back(spatialization(s, ps));

  LawScan scan{policy, true, {}};
  for (size_t i = 0; i < subs.size(); ++i)
    if (!sp[i].subset_of(subs[i]) &&
        !scan.fail("S=" + subs[i].to_string()))
      break;
  scan.commit(r, "sp(S) <= S");

  for (size_t i = 0; i < subs.size(); ++i)
    if (!(spatialization(sp[i], ps) == sp[i]) &&
        !scan.fail("S=" + subs[i].to_string()))
      break;
  scan.commit(r, "sp(sp(S)) = sp(S)");

  {
    bool stop = false;
    for (size_t i = 0; i < subs.size() && !stop; ++i)
      for (size_t j = 0; j < subs.size(); ++j)
        if (subs[i].subset_of(subs[j]) && !sp[i].subset_of(sp[j]) &&
            !scan.fail("S=" + subs[i].to_string() +
                       " T=" + subs[j].to_string())) {
          stop = true;
          break;
        }
    scan.commit(r, "S <= T implies sp(S) <= sp(T)");
  }

  {
    bool stop = false;
    for (size_t i = 0; i < subs.size() && !stop; ++i)
      for (size_t j = i; j < subs.size(); ++j) {
        Sublocale lhs = spatialization(sublocale_join(subs[i], subs[j]), ps);
        Sublocale rhs = sublocale_join(sp[i], sp[j]);
        if (!(lhs == rhs) && !scan.fail("S=" + subs[i].to_string() +
                                        " T=" + subs[j].to_string())) {
          stop = true;
          break;
        }
      }
    scan.commit(r, "sp(S v T) = sp(S) v sp(T)");
  }
  return r;
}

DiagramReport check_main_diagram(const FiniteLattice& L, const Caps& caps,
                                 WitnessPolicy policy) {
  DiagramReport r{"main_diagram", {}};
  std::vector<Sublocale> subs = enumerate_sublocales(L, caps);
  Bitset ps = primes(L);
  if (ps.count() > caps.max_exhaustive_primes)
    throw CapExceeded("main diagram check is capped at " +
                      std::to_string(caps.max_exhaustive_primes) + " primes");
  SpectrumSpace spec = spectrum_space(L);

  // Spatial sublocales two ways: fixpoints of sp, and "every member is a
  // meet of the primes of S".
  std::vector<char> is_fixpoint(subs.size());
  LawScan scan{policy, true, {}};
  for (size_t i = 0; i < subs.size(); ++i) {
    is_fixpoint[i] = spatialization(subs[i], ps) == subs[i];
    Bitset pts = points_of_sublocale(subs[i], ps);
    bool all_meets = true;
    subs[i].members().for_each([&](int m) {
      if (L.big_meet(pts & L.upset(m)) != m) all_meets = false;
    });
    if (is_fixpoint[i] != all_meets &&
        !scan.fail("S=" + subs[i].to_string()))
      break;
  }
  scan.commit(r, "fixpoints of sp are the sublocales whose members are meets "
                 "of their primes");

  // Sober subspaces of the spectrum, enumerated directly.
  std::vector<uint64_t> sober_masks;
  for (uint64_t z = 0;; ++z) {
    if (is_sober(subspace(spec.carrier, z))) sober_masks.push_back(z);
    if (z == spec.carrier.full_mask()) break;
  }

  // pt restricted to spatial sublocales: order isomorphism onto the sober
  // subspaces, with inverse M.
  {
    std::vector<size_t> spatial_idx;
    for (size_t i = 0; i < subs.size(); ++i)
      if (is_fixpoint[i]) spatial_idx.push_back(i);
    std::vector<uint64_t> images;
    for (size_t i : spatial_idx)
      images.push_back(spec.prime_mask_of(points_of_sublocale(subs[i], ps)));
    std::vector<uint64_t> sorted_images = images;
    std::sort(sorted_images.begin(), sorted_images.end());
    bool bijective =
        sorted_images == sober_masks &&
        std::adjacent_find(sorted_images.begin(), sorted_images.end()) ==
            sorted_images.end();
    if (!bijective) scan.fail("pt image does not match the sober subspaces");
    for (size_t a = 0; a < spatial_idx.size() && scan.ok; ++a)
      for (size_t b = 0; b < spatial_idx.size() && scan.ok; ++b) {
        bool sub_le = subs[spatial_idx[a]].subset_of(subs[spatial_idx[b]]);
        bool img_le = (images[a] & ~images[b]) == 0;
        if (sub_le != img_le)
          scan.fail("order mismatch at S=" + subs[spatial_idx[a]].to_string() +
                    " T=" + subs[spatial_idx[b]].to_string());
      }
    for (size_t a = 0; a < spatial_idx.size() && scan.ok; ++a) {
      Sublocale back =
          meet_closure(L, spec.elems_of_point_mask(images[a]), ps);
      if (!(back == subs[spatial_idx[a]]))
        scan.fail("M does not invert pt at S=" +
                  subs[spatial_idx[a]].to_string());
    }
    scan.commit(r, "pt: spatial sublocales -> sober subspaces is an order "
                   "isomorphism with inverse M");
  }

  // The square commutes: pt(sp(S)) = pt(S).
  for (const Sublocale& s : subs)
    if (!(points_of_sublocale(spatialization(s, ps), ps) ==
          points_of_sublocale(s, ps)) &&
        !scan.fail("S=" + s.to_string()))
      break;
  scan.commit(r, "pt(sp(S)) = pt(S)");

  // sp[S(L)] is the join closure of the two-element sublocales.
  {
    std::vector<Sublocale> sp_image;
    for (const Sublocale& s : subs)
      sp_image.push_back(spatialization(s, ps));
    auto less = [](const Sublocale& a, const Sublocale& b) {
      return a.numeric_less(b);
    };
    std::sort(sp_image.begin(), sp_image.end(), less);
    sp_image.erase(std::unique(sp_image.begin(), sp_image.end()),
                   sp_image.end());

    std::vector<Sublocale> closure{void_sublocale(L)};
    std::vector<Sublocale> gens = two_element_sublocales(L);
    std::vector<size_t> work{0};
    auto known = [&](const Sublocale& s) {
      return std::any_of(closure.begin(), closure.end(),
                         [&](const Sublocale& t) { return t == s; });
    };
    for (const Sublocale& g : gens)
      if (!known(g)) {
        closure.push_back(g);
        work.push_back(closure.size() - 1);
      }
    while (!work.empty()) {
      size_t i = work.back();
      work.pop_back();
      for (const Sublocale& g : gens) {
        Sublocale j = sublocale_join(closure[i], g);
        if (!known(j)) {
          closure.push_back(j);
          work.push_back(closure.size() - 1);
        }
      }
    }
    std::sort(closure.begin(), closure.end(), less);
    if (!(sp_image == closure)) scan.fail("image and closure differ");
    scan.commit(r, "sp[S(L)] is the join closure of the two-element "
                   "sublocales");
  }
  return r;
}

DiagramReport assembly_spectrum_vs_skula(const FiniteLattice& L,
                                         const Caps& caps) {
  DiagramReport r{"assembly_spectrum_vs_skula", {}};
  SublocaleAssembly assembly = sublocale_assembly(L, caps);
  SpectrumSpace dual_spec = spectrum_space(assembly.dual);
  SpectrumSpace spec = spectrum_space(L);
  FiniteSpace skula = skula_space(spec.carrier);

  // The map p -> b(p) from the points of the Skula space to those of
  // pt(S(L)^op).
  std::vector<int> image_point(skula.point_count(), -1);
  LawScan scan;
  for (int i = 0; i < skula.point_count() && scan.ok; ++i) {
    int p = spec.prime_of_point[i];
    int idx = assembly.index_of(boolean_sublocale(L, p).members());
    int pt = idx < 0 ? -1 : dual_spec.point_of_prime(idx);
    if (pt < 0)
      scan.fail("b(" + std::to_string(p) +
                ") is not a point of pt(S(L)^op)");
    image_point[i] = pt;
  }
  if (scan.ok && dual_spec.carrier.point_count() != skula.point_count())
    scan.fail("point counts differ");
  if (scan.ok) {
    std::vector<int> sorted = image_point;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      scan.fail("p -> b(p) is not injective");
  }
  bool points_ok = scan.ok;
  scan.commit(r, "p -> b(p) is a bijection of points");
  if (!points_ok) return r;

  auto forward = [&](uint64_t mask) {
    uint64_t out = 0;
    for (int i = 0; i < skula.point_count(); ++i)
      if ((mask >> i) & 1) out |= uint64_t{1} << image_point[i];
    return out;
  };
  for (uint64_t u : skula.opens)
    if (!dual_spec.carrier.has_open(forward(u))) {
      scan.fail("image of a Skula open is not open in pt(S(L)^op)");
      break;
    }
  if (scan.ok && skula.opens.size() != dual_spec.carrier.opens.size())
    scan.fail("open-set counts differ");
  scan.commit(r, "p -> b(p) is a homeomorphism onto pt(S(L)^op)");
  return r;
}

}  // namespace lab
