#include "locale_lab/classify.hpp"

#include <algorithm>
#include <string>

#include "locale_lab/errors.hpp"
#include "locale_lab/galois.hpp"
#include "locale_lab/spectrum.hpp"
#include "locale_lab/sublocale.hpp"

namespace lab {

namespace {

void require_prime(const FiniteLattice& L, int p) {
  if (!is_prime(L, p))
    throw NotPrime("element " + std::to_string(p) + " is not prime");
}

void require_meet_of_primes(const FiniteLattice& L, int a) {
  if (L.big_meet(primes(L) & L.upset(a)) != a)
    throw NotMeetOfPrimes("element " + std::to_string(a) +
                          " is not a meet of primes");
}

std::vector<int> prime_list(const Bitset& ps) {
  std::vector<int> v;
  ps.for_each([&](int p) { v.push_back(p); });
  return v;
}

/// Calls f(family) for every subset of the given primes.
template <typename F>
void for_each_prime_family(const FiniteLattice& L, const std::vector<int>& ps,
                           F&& f) {
  if (ps.size() > 30)
    throw CapExceeded("prime-family quantification needs at most 30 primes");
  for (uint64_t mask = 0; mask < (uint64_t{1} << ps.size()); ++mask) {
    Bitset family(L.size());
    for (size_t i = 0; i < ps.size(); ++i)
      if ((mask >> i) & 1) family.set(ps[i]);
    f(family);
  }
}

}  // namespace

bool is_weakly_covered(const FiniteLattice& L, int p, const Caps& caps) {
  require_prime(L, p);
  Bitset strictly_above = primes(L) & L.upset(p);
  strictly_above.reset(p);
  bool closed_form = L.big_meet(strictly_above) != p;
  Bitset ps = primes(L);
  if (ps.count() <= std::min(caps.max_exhaustive_primes, 30)) {
    bool exhaustive = true;
    for_each_prime_family(L, prime_list(ps), [&](const Bitset& family) {
      if (L.big_meet(family) == p && !family.test(p)) exhaustive = false;
    });
    if (exhaustive != closed_form)
      throw CrossCheckError(
          "weakly covered: closed form disagrees with the exhaustive "
          "quantification");
  }
  return closed_form;
}

bool is_covered(const FiniteLattice& L, int p) {
  require_prime(L, p);
  Bitset strictly_above = L.upset(p);
  strictly_above.reset(p);
  return L.big_meet(strictly_above) != p;
}

Bitset essential_primes(const FiniteLattice& L, int a) {
  require_meet_of_primes(L, a);
  Bitset ps = primes(L);
  Bitset above = ps & L.upset(a);

  Bitset via_fixpoint(L.size());
  above.for_each([&](int p) {
    if (L.heyting(L.heyting(p, a), a) == p) via_fixpoint.set(p);
  });

  Bitset via_meet(L.size());
  above.for_each([&](int p) {
    Bitset others = above.minus(L.upset(p));
    if (!L.leq(L.big_meet(others), p)) via_meet.set(p);
  });

  Bitset via_boolean(L.size());
  const Bitset blocale = boolean_sublocale(L, a).members();
  above.for_each([&](int p) {
    if (blocale.test(p)) via_boolean.set(p);
  });

  if (!(via_fixpoint == via_meet) || !(via_meet == via_boolean))
    throw CrossCheckError(
        "essential primes: the three characterizations disagree at element " +
        std::to_string(a));
  return via_fixpoint;
}

Bitset absolutely_essential_primes(const FiniteLattice& L, int a,
                                   const Caps& caps) {
  require_meet_of_primes(L, a);
  Bitset ps = primes(L);
  Bitset above = ps & L.upset(a);

  Bitset via_essential = essential_primes(L, a);
  {
    Bitset filtered(L.size());
    via_essential.for_each([&](int p) {
      if (is_weakly_covered(L, p, caps)) filtered.set(p);
    });
    via_essential = filtered;
  }

  // Isolated points of the closed subspace pt(up(a)) of the spectrum.
  Bitset via_isolated(L.size());
  {
    SpectrumSpace spec = spectrum_space(L);
    uint64_t sub = spec.prime_mask_of(above);
    above.for_each([&](int p) {
      int pt = spec.point_of_prime(p);
      uint64_t me = uint64_t{1} << pt;
      if ((min_nbhd(spec.carrier, pt) & sub) == me) via_isolated.set(p);
    });
  }
  if (!(via_essential == via_isolated))
    throw CrossCheckError(
        "absolutely essential primes: essential-and-weakly-covered disagrees "
        "with the isolated-point route at element " +
        std::to_string(a));

  if (ps.count() <= std::min(caps.max_exhaustive_primes, 30)) {
    Bitset via_families = above;
    for_each_prime_family(L, prime_list(ps), [&](const Bitset& family) {
      if (L.big_meet(family) == a) via_families &= family;
    });
    if (!(via_families == via_essential))
      throw CrossCheckError(
          "absolutely essential primes: the literal quantification disagrees "
          "at element " +
          std::to_string(a));
  }
  return via_essential;
}

std::vector<PrimeDossier> prime_dossiers(const FiniteLattice& L,
                                         const Caps& caps) {
  Bitset ps = primes(L);
  SpectrumSpace spec = spectrum_space(L);
  FiniteSpace skula = skula_space(spec.carrier);
  std::vector<PrimeDossier> out;
  ps.for_each([&](int p) {
    PrimeDossier d;
    d.prime = p;
    d.weakly_covered = is_weakly_covered(L, p, caps);
    d.covered = is_covered(L, p);
    d.completely_prime = is_completely_prime(L, p);
    if (L.size() <= 16) {
      if (is_completely_prime_exhaustive(L, p, caps) != d.completely_prime)
        throw CrossCheckError(
            "completely prime: closed form disagrees with the exhaustive "
            "check");
      // Coveredness, quantified literally over every element family.
      bool covered_exhaustive = true;
      for (uint64_t mask = 0; mask < (uint64_t{1} << L.size()); ++mask) {
        Bitset family(L.size());
        for (int e = 0; e < L.size(); ++e)
          if ((mask >> e) & 1) family.set(e);
        if (L.big_meet(family) == p && !family.test(p))
          covered_exhaustive = false;
      }
      if (covered_exhaustive != d.covered)
        throw CrossCheckError(
            "covered: closed form disagrees with the exhaustive check");
    }
    int pt = spec.point_of_prime(p);
    d.isolated_in_skula =
        skula.has_open(uint64_t{1} << pt);
    Bitset above = ps & L.upset(p);
    uint64_t sub = spec.prime_mask_of(above);
    d.isolated_in_upset_spectrum =
        (min_nbhd(spec.carrier, pt) & sub) == (uint64_t{1} << pt);
    // Literal route: some ambient open cuts {p} out of the subspace.
    bool by_scan = false;
    for (uint64_t u : spec.carrier.opens)
      if ((u & sub) == (uint64_t{1} << pt)) by_scan = true;
    if (by_scan != d.isolated_in_upset_spectrum)
      throw CrossCheckError(
          "isolated in pt(up(p)): minimal-neighborhood route disagrees with "
          "the open-set scan");
    out.push_back(d);
  });
  return out;
}

bool has_discrete_dense_subspace(const FiniteSpace& X) {
  uint64_t iso = 0;
  for (int y = 0; y < X.point_count(); ++y)
    if (min_nbhd(X, y) == (uint64_t{1} << y)) iso |= uint64_t{1} << y;
  for (uint64_t u : X.opens)
    if (u != 0 && (u & iso) == 0) return false;
  return true;
}

bool TheoremReport::all_true() const {
  return agreement &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) {
           return !v.computed || v.holds;
         }) &&
         std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.computed; });
}

namespace {

void push_verdict(TheoremReport& r, std::string label, bool holds,
                  std::string witness = "") {
  r.verdicts.push_back(
      {std::move(label), holds, true, holds ? "" : std::move(witness)});
}

void push_skipped(TheoremReport& r, std::string label, std::string reason) {
  r.verdicts.push_back({std::move(label), false, false, std::move(reason)});
}

void finish(TheoremReport& r) {
  bool seen = false, value = false;
  r.agreement = true;
  r.closed_form_only = false;
  for (const Verdict& v : r.verdicts) {
    if (!v.computed) {
      r.closed_form_only = true;
      continue;
    }
    if (!seen) {
      seen = true;
      value = v.holds;
    } else if (v.holds != value) {
      r.agreement = false;
    }
  }
}

bool is_spatial_sublocale(const Sublocale& s, const Bitset& lattice_primes) {
  const FiniteLattice& L = s.lattice();
  Bitset pts = points_of_sublocale(s, lattice_primes);
  bool ok = true;
  s.members().for_each([&](int m) {
    if (L.big_meet(pts & L.upset(m)) != m) ok = false;
  });
  return ok;
}

/// Shared inputs the suites draw on. Each verdict still applies its own
/// definition to them.
struct SuiteContext {
  Bitset ps;
  std::vector<int> prime_elems;
  SpectrumSpace spec;
  std::vector<Sublocale> sublocales;
  std::vector<Bitset> pt_of_sublocale;

  SuiteContext(const FiniteLattice& L, const Caps& caps)
      : ps(primes(L)), prime_elems(prime_list(ps)), spec(spectrum_space(L)),
        sublocales(enumerate_sublocales(L, caps)) {
    for (const Sublocale& s : sublocales)
      pt_of_sublocale.push_back(points_of_sublocale(s, ps));
  }

  uint64_t pt_mask(size_t i) const {
    return spec.prime_mask_of(pt_of_sublocale[i]);
  }
};

std::vector<uint64_t> sober_subspace_masks(const SpectrumSpace& spec) {
  std::vector<uint64_t> out;
  for (uint64_t z = 0;; ++z) {
    if (is_sober(subspace(spec.carrier, z))) out.push_back(z);
    if (z == spec.carrier.full_mask()) break;
  }
  return out;
}

/// Bijective and order-preserving both ways from sublocale indices onto the
/// given set of point masks.
bool pt_is_iso_onto(const SuiteContext& ctx, const std::vector<size_t>& idx,
                    std::vector<uint64_t> target, std::string* witness) {
  std::vector<uint64_t> images;
  images.reserve(idx.size());
  for (size_t i : idx) images.push_back(ctx.pt_mask(i));
  std::vector<uint64_t> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    *witness = "pt is not injective";
    return false;
  }
  std::sort(target.begin(), target.end());
  if (sorted != target) {
    *witness = "pt image differs from the target lattice";
    return false;
  }
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b) {
      bool sub_le =
          ctx.sublocales[idx[a]].subset_of(ctx.sublocales[idx[b]]);
      bool img_le = (images[a] & ~images[b]) == 0;
      if (sub_le != img_le) {
        *witness = "pt does not preserve and reflect order at S=" +
                   ctx.sublocales[idx[a]].to_string();
        return false;
      }
    }
  return true;
}

std::vector<uint64_t> powerset_masks(int k) {
  std::vector<uint64_t> out;
  for (uint64_t m = 0; m < (uint64_t{1} << k); ++m) out.push_back(m);
  return out;
}

struct BooleanCheck {
  bool boolean = true;
  int atom_count = 0;
  std::string witness;
};

/// Complementation inside the full coframe S(L), plus its atom count.
BooleanCheck sublocale_lattice_boolean(const FiniteLattice& L,
                                       const std::vector<Sublocale>& subs) {
  BooleanCheck out;
  const Sublocale bottom = void_sublocale(L);
  const Sublocale top = full_sublocale(L);
  for (const Sublocale& s : subs) {
    bool complemented = false;
    for (const Sublocale& t : subs)
      if (sublocale_meet(s, t) == bottom && sublocale_join(s, t) == top) {
        complemented = true;
        break;
      }
    if (!complemented) {
      out.boolean = false;
      out.witness = "no complement for S=" + s.to_string();
      break;
    }
  }
  for (const Sublocale& s : subs) {
    if (s == bottom) continue;
    bool atom = true;
    for (const Sublocale& t : subs)
      if (!(t == bottom) && !(t == s) && t.subset_of(s)) {
        atom = false;
        break;
      }
    if (atom) ++out.atom_count;
  }
  return out;
}

}  // namespace

TheoremReport theorem_td(const FiniteLattice& L, const Caps& caps) {
  TheoremReport r{TheoremTag::kTd, {}, false, false};
  SuiteContext ctx(L, caps);
  const int k = static_cast<int>(ctx.prime_elems.size());

  {
    bool all = true;
    std::string witness;
    for (int p : ctx.prime_elems)
      if (!is_weakly_covered(L, p, caps)) {
        all = false;
        witness = "prime " + std::to_string(p);
        break;
      }
    push_verdict(r, "all primes weakly covered", all, witness);
  }

  if (k <= caps.max_exhaustive_primes) {
    bool all = true;
    std::string witness;
    for (uint64_t z = 0;; ++z) {
      if (!is_sober(subspace(ctx.spec.carrier, z))) {
        all = false;
        witness = "subspace mask " + std::to_string(z);
        break;
      }
      if (z == ctx.spec.carrier.full_mask()) break;
    }
    push_verdict(r, "all subspaces of pt(L) sober", all, witness);
  } else {
    push_skipped(r, "all subspaces of pt(L) sober", "prime cap");
  }

  {
    std::vector<size_t> sp_idx;
    std::vector<char> seen(ctx.sublocales.size(), 0);
    for (size_t i = 0; i < ctx.sublocales.size(); ++i) {
      Sublocale sp = spatialization(ctx.sublocales[i], ctx.ps);
      // Indices of the distinct spatial sublocales.
      auto it = std::find(ctx.sublocales.begin(), ctx.sublocales.end(), sp);
      if (it == ctx.sublocales.end())
        throw CrossCheckError("spatialization left the enumerated S(L)");
      size_t j = static_cast<size_t>(it - ctx.sublocales.begin());
      if (!seen[j]) {
        seen[j] = 1;
        sp_idx.push_back(j);
      }
    }
    std::string witness;
    bool ok = pt_is_iso_onto(ctx, sp_idx, powerset_masks(k), &witness);
    push_verdict(r, "pt: sp[S(L)] -> P(pt(L)) is an isomorphism", ok,
                 witness);
  }

  {
    SublocaleAssembly assembly = sublocale_assembly(L, caps);
    push_verdict(r, "pt(S(L)^op) is discrete",
                 is_discrete(spectrum_space(assembly.dual).carrier));
  }

  push_verdict(r, "pt(L) is T_D", is_td_space(ctx.spec.carrier));

  {
    // sp[S(L)] as a coframe: joins as in S(L), meets spatialized.
    std::vector<Sublocale> image;
    for (const Sublocale& s : ctx.sublocales) {
      Sublocale sp = spatialization(s, ctx.ps);
      if (std::find(image.begin(), image.end(), sp) == image.end())
        image.push_back(sp);
    }
    const Sublocale bottom = void_sublocale(L);
    const Sublocale top = spatialization(full_sublocale(L), ctx.ps);
    bool boolean = true;
    std::string witness;
    for (const Sublocale& s : image) {
      bool complemented = false;
      for (const Sublocale& t : image)
        if (spatialization(sublocale_meet(s, t), ctx.ps) == bottom &&
            sublocale_join(s, t) == top) {
          complemented = true;
          break;
        }
      if (!complemented) {
        boolean = false;
        witness = "no complement for S=" + s.to_string();
        break;
      }
    }
    push_verdict(r, "sp[S(L)] is a Boolean algebra", boolean, witness);
  }

  finish(r);
  return r;
}

TheoremReport theorem_totally_spatial(const FiniteLattice& L,
                                      const Caps& caps) {
  TheoremReport r{TheoremTag::kTotallySpatial, {}, false, false};
  SuiteContext ctx(L, caps);
  const int k = static_cast<int>(ctx.prime_elems.size());
  const bool spatial = is_spatial(L);

  {
    bool all = true;
    std::string witness;
    for (const Sublocale& s : ctx.sublocales)
      if (!is_spatial_sublocale(s, ctx.ps)) {
        all = false;
        witness = "S=" + s.to_string();
        break;
      }
    push_verdict(r, "every sublocale is spatial", all, witness);
  }

  {
    SublocaleAssembly assembly = sublocale_assembly(L, caps);
    push_verdict(r, "S(L)^op is spatial", is_spatial(assembly.dual));
  }

  if (k <= caps.max_exhaustive_primes) {
    std::vector<size_t> all_idx(ctx.sublocales.size());
    for (size_t i = 0; i < all_idx.size(); ++i) all_idx[i] = i;
    std::string witness;
    bool ok = pt_is_iso_onto(ctx, all_idx, sober_subspace_masks(ctx.spec),
                             &witness);
    push_verdict(r, "pt: S(L) -> sober subspaces is an isomorphism", ok,
                 witness);
  } else {
    push_skipped(r, "pt: S(L) -> sober subspaces is an isomorphism",
                 "prime cap");
  }

  {
    bool all = true;
    std::string witness;
    for (int x = 0; x < L.size(); ++x) {
      if (x == L.top()) continue;
      if (points_of_sublocale(boolean_sublocale(L, x), ctx.ps).none()) {
        all = false;
        witness = "b(" + std::to_string(x) + ") has no point";
        break;
      }
    }
    push_verdict(r, "every Boolean sublocale other than {1} has a point", all,
                 witness);
  }

  {
    bool all = spatial;
    std::string witness = spatial ? "" : "L is not spatial";
    for (int a = 0; all && a < L.size(); ++a) {
      if (a == L.top()) continue;
      if (essential_primes(L, a).none()) {
        all = false;
        witness = "element " + std::to_string(a);
      }
    }
    push_verdict(r, "spatial and every a != 1 has an essential prime", all,
                 witness);
  }

  {
    bool all = spatial;
    std::string witness = spatial ? "" : "L is not spatial";
    for (int a = 0; all && a < L.size(); ++a) {
      if (a == L.top()) continue;
      bool found = false;
      for (int y = 0; y < L.size() && !found; ++y)
        if (ctx.ps.test(L.heyting(y, a))) found = true;
      if (!found) {
        all = false;
        witness = "element " + std::to_string(a);
      }
    }
    push_verdict(r, "spatial and every a != 1 has a prime of the form y -> a",
                 all, witness);
  }

  {
    bool all = true;
    std::string witness;
    for (int a = 0; a < L.size(); ++a)
      if (L.big_meet(essential_primes(L, a)) != a) {
        all = false;
        witness = "element " + std::to_string(a);
        break;
      }
    push_verdict(r, "every element is the meet of its essential primes", all,
                 witness);
  }

  {
    bool all = spatial;
    std::string witness = spatial ? "" : "L is not spatial";
    if (all)
      for (int a = 0; a < L.size(); ++a) {
        uint64_t closed = ctx.spec.prime_mask_of(ctx.ps & L.upset(a));
        if (!has_discrete_dense_subspace(subspace(ctx.spec.carrier, closed))) {
          all = false;
          witness = "closed subspace of element " + std::to_string(a);
          break;
        }
      }
    push_verdict(
        r, "spatial and every closed subspace of pt(L) has a discrete dense subspace",
        all, witness);
  }

  finish(r);
  return r;
}

TheoremReport theorem_scattered(const FiniteLattice& L, const Caps& caps) {
  TheoremReport r{TheoremTag::kScattered, {}, false, false};
  SuiteContext ctx(L, caps);
  const int k = static_cast<int>(ctx.prime_elems.size());
  const bool spatial = is_spatial(L);

  if (k <= caps.max_space_points) {
    push_verdict(r, "spatial and pt(L) is scattered",
                 spatial && is_scattered_space(ctx.spec.carrier, caps));
  } else {
    push_skipped(r, "spatial and pt(L) is scattered", "point cap");
  }

  {
    bool totally = true;
    std::string witness;
    for (const Sublocale& s : ctx.sublocales)
      if (!is_spatial_sublocale(s, ctx.ps)) {
        totally = false;
        witness = "S=" + s.to_string();
        break;
      }
    bool weakly = true;
    for (int p : ctx.prime_elems)
      if (!is_weakly_covered(L, p, caps)) {
        weakly = false;
        witness = "prime " + std::to_string(p);
        break;
      }
    push_verdict(r, "totally spatial and all primes weakly covered",
                 totally && weakly, witness);
  }

  {
    std::vector<size_t> all_idx(ctx.sublocales.size());
    for (size_t i = 0; i < all_idx.size(); ++i) all_idx[i] = i;
    std::string witness;
    bool ok = pt_is_iso_onto(ctx, all_idx, powerset_masks(k), &witness);
    push_verdict(r, "pt: S(L) -> P(pt(L)) is an isomorphism", ok, witness);
  }

  {
    // Existence of any isomorphism, decided by atom counting: S(L) must be
    // Boolean and have exactly one atom per prime.
    BooleanCheck bc = sublocale_lattice_boolean(L, ctx.sublocales);
    bool ok = bc.boolean && bc.atom_count == k;
    push_verdict(r, "S(L) is isomorphic to some powerset of the primes", ok,
                 bc.boolean ? "atom count differs from the prime count"
                            : bc.witness);
  }

  {
    BooleanCheck bc = sublocale_lattice_boolean(L, ctx.sublocales);
    push_verdict(r, "S(L) is Boolean and L is spatial", bc.boolean && spatial,
                 bc.witness);
  }

  {
    bool all = spatial;
    std::string witness = spatial ? "" : "L is not spatial";
    for (int a = 0; all && a < L.size(); ++a) {
      if (a == L.top()) continue;
      if (absolutely_essential_primes(L, a, caps).none()) {
        all = false;
        witness = "element " + std::to_string(a);
      }
    }
    push_verdict(r, "spatial and every a != 1 has an absolutely essential prime",
                 all, witness);
  }

  {
    bool all = true;
    std::string witness;
    for (int a = 0; a < L.size(); ++a)
      if (L.big_meet(absolutely_essential_primes(L, a, caps)) != a) {
        all = false;
        witness = "element " + std::to_string(a);
        break;
      }
    push_verdict(r, "every element is the meet of its absolutely essential primes",
                 all, witness);
  }

  if (k <= caps.max_exhaustive_primes) {
    bool all = spatial;
    std::string witness = spatial ? "" : "L is not spatial";
    if (all)
      for (uint64_t z = 0;; ++z) {
        if (!has_discrete_dense_subspace(subspace(ctx.spec.carrier, z))) {
          all = false;
          witness = "subspace mask " + std::to_string(z);
          break;
        }
        if (z == ctx.spec.carrier.full_mask()) break;
      }
    push_verdict(
        r, "spatial and every subspace of pt(L) has a discrete dense subspace",
        all, witness);
  } else {
    push_skipped(
        r, "spatial and every subspace of pt(L) has a discrete dense subspace",
        "prime cap");
  }

  finish(r);
  return r;
}

TheoremReport coframe_proposition(const FiniteLattice& L, const Caps& caps) {
  if (!is_spatial(L)) throw NotSpatial("the frame is not spatial");
  {
    // The order dual must itself validate as a frame.
    std::vector<Bitset> dual_rows(L.size(), Bitset(L.size()));
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b)
        if (L.leq(b, a)) dual_rows[a].set(b);
    try {
      FiniteLattice::build(std::move(dual_rows), caps);
    } catch (const InputError& e) {
      throw NotACoframe(std::string("the order dual fails frame validation: ") +
                        e.what());
    }
  }

  TheoremReport r{TheoremTag::kCoframe, {}, false, false};
  SpectrumSpace spec = spectrum_space(L);

  push_verdict(r, "pt(L) is T_D", is_td_space(spec.carrier));

  {
    bool all = true;
    std::string witness;
    Bitset ps = primes(L);
    for (int p = ps.first(); p >= 0; p = ps.next_after(p))
      if (!is_completely_prime(L, p)) {
        all = false;
        witness = "prime " + std::to_string(p);
        break;
      }
    push_verdict(r, "all primes are completely prime", all, witness);
  }

  if (spec.carrier.point_count() <= caps.max_space_points) {
    push_verdict(r, "pt(L) is scattered",
                 is_scattered_space(spec.carrier, caps));
  } else {
    push_skipped(r, "pt(L) is scattered", "point cap");
  }

  finish(r);
  return r;
}

}  // namespace lab
