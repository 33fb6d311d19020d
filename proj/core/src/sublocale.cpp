#include "locale_lab/sublocale.hpp"

#include <algorithm>
#include <unordered_set>

#include "locale_lab/errors.hpp"
#include "locale_lab/parallel.hpp"
#include "locale_lab/spectrum.hpp"

namespace lab {

namespace {

void require_same_lattice(const Sublocale& s, const Sublocale& t) {
  if (&s.lattice() != &t.lattice())
    throw MixedSources("sublocales belong to different lattices");
}

}  // namespace

Sublocale::Sublocale(const FiniteLattice& lattice, Bitset members)
    : lattice_(&lattice), members_(std::move(members)) {
  if (members_.universe() != lattice.size())
    throw MixedSources("member set does not range over the lattice");
}

bool Sublocale::subset_of(const Sublocale& o) const {
  require_same_lattice(*this, o);
  return members_.subset_of(o.members_);
}

bool Sublocale::numeric_less(const Sublocale& o) const {
  require_same_lattice(*this, o);
  return members_.numeric_less(o.members_);
}

bool is_sublocale(const FiniteLattice& L, const Bitset& members) {
  if (!members.test(L.top())) return false;  // the empty meet
  for (int s = members.first(); s >= 0; s = members.next_after(s))
    for (int t = members.next_after(s); t >= 0; t = members.next_after(t))
      if (!members.test(L.meet(s, t))) return false;
  for (int x = 0; x < L.size(); ++x)
    for (int s = members.first(); s >= 0; s = members.next_after(s))
      if (!members.test(L.heyting(x, s))) return false;
  return true;
}

Sublocale closed_sublocale(const FiniteLattice& L, int a) {
  return Sublocale(L, L.upset(a));
}

Sublocale open_sublocale(const FiniteLattice& L, int a) {
  Bitset m(L.size());
  for (int x = 0; x < L.size(); ++x) m.set(L.heyting(a, x));
  return Sublocale(L, std::move(m));
}

Sublocale boolean_sublocale(const FiniteLattice& L, int x) {
  Bitset m(L.size());
  for (int y = 0; y < L.size(); ++y) m.set(L.heyting(y, x));
  return Sublocale(L, std::move(m));
}

Sublocale void_sublocale(const FiniteLattice& L) {
  return Sublocale(L, Bitset::of(L.size(), {L.top()}));
}

Sublocale full_sublocale(const FiniteLattice& L) {
  return Sublocale(L, Bitset::full(L.size()));
}

Sublocale sublocale_join(const Sublocale& s, const Sublocale& t) {
  require_same_lattice(s, t);
  const FiniteLattice& L = s.lattice();
  // One pairwise pass closes the union: both sides are already meet-closed,
  // and meets of the added cross terms split back into cross terms.
  Bitset m = s.members() | t.members();
  for (int a = s.members().first(); a >= 0; a = s.members().next_after(a))
    for (int b = t.members().first(); b >= 0; b = t.members().next_after(b))
      m.set(L.meet(a, b));
  return Sublocale(L, std::move(m));
}

Sublocale sublocale_join(const FiniteLattice& L,
                         std::span<const Sublocale> parts) {
  Sublocale acc = void_sublocale(L);
  for (const Sublocale& p : parts) acc = sublocale_join(acc, p);
  return acc;
}

Sublocale sublocale_meet(const Sublocale& s, const Sublocale& t) {
  require_same_lattice(s, t);
  return Sublocale(s.lattice(), s.members() & t.members());
}

Bitset points_of_sublocale(const Sublocale& s) {
  return points_of_sublocale(s, primes(s.lattice()));
}

Bitset points_of_sublocale(const Sublocale& s, const Bitset& lattice_primes) {
  const FiniteLattice& L = s.lattice();
  Bitset result = lattice_primes & s.members();
  // Cross-check: primality computed inside S, with meets (and hence the
  // order) inherited from L. Skipped for very large member sets.
  if (s.member_count() <= 64) {
    Bitset inside(L.size());
    const Bitset& m = s.members();
    for (int p = m.first(); p >= 0; p = m.next_after(p)) {
      if (p == L.top()) continue;
      bool prime_in_s = true;
      for (int x = m.first(); x >= 0 && prime_in_s; x = m.next_after(x))
        for (int y = m.first(); y >= 0 && prime_in_s; y = m.next_after(y))
          if (L.leq(L.meet(x, y), p) && !L.leq(x, p) && !L.leq(y, p))
            prime_in_s = false;
      if (prime_in_s) inside.set(p);
    }
    if (!(inside == result))
      throw CrossCheckError(
          "points of a sublocale: ambient primes in S disagree with primes "
          "computed inside S");
  }
  return result;
}

std::vector<Sublocale> two_element_sublocales(const FiniteLattice& L) {
  std::vector<Sublocale> out;
  for (int p = 0; p < L.size(); ++p) {
    if (p == L.top()) continue;
    Bitset m = Bitset::of(L.size(), {p, L.top()});
    if (is_sublocale(L, m)) out.emplace_back(L, std::move(m));
  }
  // These must be exactly the b(p) over the primes.
  Bitset ps = primes(L);
  std::vector<Sublocale> via_boolean;
  for (int p = ps.first(); p >= 0; p = ps.next_after(p))
    via_boolean.push_back(boolean_sublocale(L, p));
  auto by_members = [](const Sublocale& a, const Sublocale& b) {
    return a.numeric_less(b);
  };
  std::sort(out.begin(), out.end(), by_members);
  std::sort(via_boolean.begin(), via_boolean.end(), by_members);
  if (!(out == via_boolean))
    throw CrossCheckError(
        "two-element sublocales disagree with the Boolean sublocales of the "
        "primes");
  return out;
}

namespace {

std::vector<Sublocale> enumerate_subset_filter(const FiniteLattice& L,
                                               const Caps& caps) {
  const int n = L.size();
  if (n > caps.max_enumeration)
    throw CapExceeded("subset-filter enumeration is capped at " +
                      std::to_string(caps.max_enumeration) + " elements");
  // Compact tables: a subset of an n <= 18 element lattice fits in uint32_t.
  std::vector<uint8_t> meet(static_cast<size_t>(n) * n),
      hey(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[static_cast<size_t>(a) * n + b] =
          static_cast<uint8_t>(L.meet(a, b));
      hey[static_cast<size_t>(a) * n + b] =
          static_cast<uint8_t>(L.heyting(a, b));
    }
  const uint32_t top_bit = uint32_t{1} << L.top();
  auto passes = [&](uint32_t mask) {
    if ((mask & top_bit) == 0) return false;
    // Highest members first: meet-closure violations surface fast.
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      int s = 31 - std::countl_zero(rest ^ (rest & (rest - 1)));
      for (uint32_t rest2 = rest; rest2 != 0; rest2 &= rest2 - 1) {
        int t = std::countr_zero(rest2);
        if ((mask >> meet[static_cast<size_t>(s) * n + t] & 1u) == 0)
          return false;
      }
    }
    for (int x = 0; x < n; ++x)
      for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        int s = std::countr_zero(rest);
        if ((mask >> hey[static_cast<size_t>(x) * n + s] & 1u) == 0)
          return false;
      }
    return true;
  };
  const uint64_t total = uint64_t{1} << n;
  // Thread startup costs more than the whole scan on small lattices.
  const int threads = n >= 14 ? configured_threads(caps.threads) : 1;
  std::vector<std::vector<uint32_t>> found(threads);
  run_chunked(total, threads, [&](int chunk, uint64_t begin, uint64_t end) {
    for (uint64_t mask = begin; mask < end; ++mask)
      if (passes(static_cast<uint32_t>(mask)))
        found[chunk].push_back(static_cast<uint32_t>(mask));
  });
  std::vector<Sublocale> out;
  for (const auto& chunk : found)
    for (uint32_t mask : chunk) {
      Bitset m(n);
      for (uint32_t rest = mask; rest != 0; rest &= rest - 1)
        m.set(std::countr_zero(rest));
      out.emplace_back(L, std::move(m));
    }
  // Chunks are contiguous and scanned in ascending mask order, so the
  // concatenation is already canonically sorted.
  return out;
}

std::vector<Sublocale> enumerate_join_closure(const FiniteLattice& L,
                                              const Caps& caps) {
  const int prime_count = primes(L).count();
  if (prime_count > caps.max_exhaustive_primes)
    throw CapExceeded("join-closure enumeration is capped at " +
                      std::to_string(caps.max_exhaustive_primes) + " primes");
  std::vector<Sublocale> generators;
  {
    std::unordered_set<Bitset, BitsetHash> seen;
    for (int x = 0; x < L.size(); ++x) {
      Sublocale b = boolean_sublocale(L, x);
      if (seen.insert(b.members()).second) generators.push_back(std::move(b));
    }
  }
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Sublocale> out;
  std::vector<size_t> worklist;
  auto push = [&](Sublocale s) {
    if (seen.insert(s.members()).second) {
      out.push_back(std::move(s));
      worklist.push_back(out.size() - 1);
    }
  };
  push(void_sublocale(L));
  for (const Sublocale& g : generators) push(g);
  while (!worklist.empty()) {
    size_t i = worklist.back();
    worklist.pop_back();
    for (const Sublocale& g : generators) {
      Sublocale j = sublocale_join(out[i], g);
      push(std::move(j));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Sublocale& a, const Sublocale& b) {
              return a.numeric_less(b);
            });
  return out;
}

}  // namespace

std::vector<Sublocale> enumerate_sublocales(const FiniteLattice& L,
                                            const Caps& caps,
                                            EnumerationBackend backend) {
  switch (backend) {
    case EnumerationBackend::kSubsetFilter:
      return enumerate_subset_filter(L, caps);
    case EnumerationBackend::kJoinClosure:
      return enumerate_join_closure(L, caps);
    case EnumerationBackend::kAuto:
      break;
  }
  if (L.size() <= caps.max_enumeration) return enumerate_subset_filter(L, caps);
  return enumerate_join_closure(L, caps);
}

int SublocaleAssembly::index_of(const Bitset& members) const {
  auto it = std::lower_bound(
      sublocales.begin(), sublocales.end(), members,
      [](const Sublocale& s, const Bitset& m) {
        return s.members().numeric_less(m);
      });
  if (it == sublocales.end() || !(it->members() == members)) return -1;
  return static_cast<int>(it - sublocales.begin());
}

SublocaleAssembly sublocale_assembly(const FiniteLattice& L, const Caps& caps,
                                     EnumerationBackend backend) {
  std::vector<Sublocale> subs = enumerate_sublocales(L, caps, backend);
  const int m = static_cast<int>(subs.size());
  if (m > caps.max_elements)
    throw CapExceeded("S(L) has " + std::to_string(m) +
                      " sublocales, above the lattice cap");
  std::vector<Bitset> rows(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (subs[j].members().subset_of(subs[i].members())) rows[i].set(j);
  // Frame validation of the reverse-inclusion order is exactly the coframe
  // certificate for S(L).
  return SublocaleAssembly{std::move(subs),
                           FiniteLattice::build(std::move(rows), caps)};
}

}  // namespace lab
