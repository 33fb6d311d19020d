#include "locale_lab/spectrum.hpp"

#include <algorithm>
#include <string>

#include "locale_lab/errors.hpp"

namespace lab {

bool is_prime(const FiniteLattice& L, int p) {
  if (p == L.top()) return false;
  // Meet-irreducibility (necessary for primality in any lattice) is cheap
  // and rejects most non-primes before the quadratic scan.
  Bitset strict_up = L.upset(p);
  strict_up.reset(p);
  if (L.big_meet(strict_up) == p) return false;
  Bitset not_below = L.downset(p).complement();
  for (int x = not_below.first(); x >= 0; x = not_below.next_after(x))
    for (int y = not_below.first(); y >= 0; y = not_below.next_after(y))
      if (L.leq(L.meet(x, y), p)) return false;
  return true;
}

Bitset primes(const FiniteLattice& L) {
  Bitset ps(L.size());
  for (int p = 0; p < L.size(); ++p)
    if (is_prime(L, p)) ps.set(p);
  return ps;
}

bool is_completely_prime(const FiniteLattice& L, int p) {
  if (!is_prime(L, p)) throw NotPrime(std::to_string(p) + " is not prime");
  // The hardest family is the full set of elements not below p: any family
  // with no member below p is a subfamily, and shrinking a family only
  // raises its meet.
  Bitset not_below = L.downset(p).complement();
  return !L.leq(L.big_meet(not_below), p);
}

bool is_completely_prime_exhaustive(const FiniteLattice& L, int p,
                                    const Caps& caps) {
  if (!is_prime(L, p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (L.size() > 20 || L.size() > caps.max_enumeration)
    throw CapExceeded("exhaustive complete-primality needs small lattices");
  const int n = L.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Bitset family(n);
    bool some_below = false;
    for (int e = 0; e < n; ++e)
      if ((mask >> e) & 1) {
        family.set(e);
        some_below = some_below || L.leq(e, p);
      }
    if (L.leq(L.big_meet(family), p) && !some_below) return false;
  }
  return true;
}

int SpectrumSpace::point_of_prime(int elem) const {
  auto it =
      std::lower_bound(prime_of_point.begin(), prime_of_point.end(), elem);
  if (it == prime_of_point.end() || *it != elem) return -1;
  return static_cast<int>(it - prime_of_point.begin());
}

uint64_t SpectrumSpace::prime_mask_of(const Bitset& prime_elems) const {
  uint64_t m = 0;
  prime_elems.for_each([&](int e) {
    int pt = point_of_prime(e);
    if (pt >= 0) m |= uint64_t{1} << pt;
  });
  return m;
}

Bitset SpectrumSpace::elems_of_point_mask(uint64_t mask) const {
  Bitset elems(source->size());
  for (size_t i = 0; i < prime_of_point.size(); ++i)
    if ((mask >> i) & 1) elems.set(prime_of_point[i]);
  return elems;
}

SpectrumSpace spectrum_space(const FiniteLattice& L) {
  Bitset ps = primes(L);
  if (ps.count() > 64)
    throw CapExceeded("spectrum spaces are capped at 64 prime points");
  SpectrumSpace S;
  S.source = &L;
  ps.for_each([&](int p) {
    S.prime_of_point.push_back(p);
    S.carrier.points.push_back("p" + std::to_string(p));
  });
  S.sigma.assign(L.size(), 0);
  for (int a = 0; a < L.size(); ++a) {
    uint64_t open = 0;
    for (size_t i = 0; i < S.prime_of_point.size(); ++i)
      if (!L.leq(a, S.prime_of_point[i])) open |= uint64_t{1} << i;
    S.sigma[a] = open;
  }
  S.carrier.opens = S.sigma;
  std::sort(S.carrier.opens.begin(), S.carrier.opens.end());
  S.carrier.opens.erase(
      std::unique(S.carrier.opens.begin(), S.carrier.opens.end()),
      S.carrier.opens.end());
  S.carrier.validate();
  return S;
}

bool is_spatial(const FiniteLattice& L) {
  Bitset ps = primes(L);
  for (int a = 0; a < L.size(); ++a)
    if (L.big_meet(ps & L.upset(a)) != a) return false;
  return true;
}

bool is_sober(const FiniteSpace& X) {
  X.validate();
  std::vector<uint64_t> point_closures;
  for (int x = 0; x < X.point_count(); ++x)
    point_closures.push_back(closure_of(X, uint64_t{1} << x));
  std::vector<uint64_t> irreducibles = point_closures;
  std::sort(irreducibles.begin(), irreducibles.end());
  irreducibles.erase(std::unique(irreducibles.begin(), irreducibles.end()),
                     irreducibles.end());
  for (uint64_t c : irreducibles) {
    int generic = 0;
    for (int x = 0; x < X.point_count(); ++x)
      if (point_closures[x] == c) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

bool is_td_space(const FiniteSpace& X) {
  for (int x = 0; x < X.point_count(); ++x) {
    bool found = false;
    uint64_t xbit = uint64_t{1} << x;
    for (uint64_t u : X.opens)
      if ((u & xbit) != 0 && X.has_open(u & ~xbit)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool is_scattered_space(const FiniteSpace& X, const Caps& caps) {
  X.validate();
  if (X.point_count() > caps.max_space_points)
    throw CapExceeded("exhaustive scattered check is capped at " +
                      std::to_string(caps.max_space_points) + " points");
  std::vector<uint64_t> min_open(X.point_count());
  for (int x = 0; x < X.point_count(); ++x) min_open[x] = min_nbhd(X, x);
  bool exhaustive = true;
  for (uint64_t sub = X.full_mask(); sub > 0; --sub) {
    bool isolated = false;
    for (int y = 0; y < X.point_count() && !isolated; ++y)
      if (((sub >> y) & 1) != 0 &&
          (min_open[y] & sub) == (uint64_t{1} << y))
        isolated = true;
    if (!isolated) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive != is_t0(X))
    throw CrossCheckError(
        "scattered: exhaustive subset check disagrees with the finite "
        "closed form (T0)");
  return exhaustive;
}

FiniteSpace skula_space(const FiniteSpace& X) {
  std::vector<uint64_t> subbase = X.opens;
  for (uint64_t o : X.opens) subbase.push_back(X.full_mask() & ~o);
  FiniteSpace S;
  S.points = X.points;
  S.opens = generate_topology(std::move(subbase), uint64_t{1} << 20);
  S.validate();
  return S;
}

bool is_discrete(const FiniteSpace& X) {
  if (X.point_count() >= 64) return false;  // 2^64 opens cannot materialize
  return X.opens.size() == (uint64_t{1} << X.point_count());
}

}  // namespace lab
