#include "locale_lab/space.hpp"

#include <algorithm>
#include <unordered_set>

#include "locale_lab/errors.hpp"

namespace lab {

namespace {

std::string mask_label(const std::vector<std::string>& names, uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (size_t i = 0; i < names.size(); ++i)
    if ((mask >> i) & 1) {
      if (!first) s += ",";
      s += names[i];
      first = false;
    }
  return s + "}";
}

void sort_unique(std::vector<uint64_t>& masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

/// Closes a family under binary union and intersection; the result size is
/// capped to keep degenerate subbases from exploding.
std::vector<uint64_t> close_family(std::vector<uint64_t> family,
                                   size_t max_size) {
  sort_unique(family);
  std::unordered_set<uint64_t> seen(family.begin(), family.end());
  std::vector<uint64_t> frontier = family;
  while (!frontier.empty()) {
    std::vector<uint64_t> fresh;
    for (uint64_t a : frontier)
      for (uint64_t b : family) {
        for (uint64_t c : {a | b, a & b})
          if (seen.insert(c).second) fresh.push_back(c);
        if (seen.size() > max_size)
          throw CapExceeded("topology closure exceeded " +
                            std::to_string(max_size) + " open sets");
      }
    for (uint64_t c : fresh) family.push_back(c);
    frontier = std::move(fresh);
  }
  sort_unique(family);
  return family;
}

}  // namespace

bool FiniteSpace::has_open(uint64_t mask) const {
  return std::binary_search(opens.begin(), opens.end(), mask);
}

void FiniteSpace::validate() const {
  if (points.size() > 64) throw CapExceeded("spaces are capped at 64 points");
  if (!std::is_sorted(opens.begin(), opens.end()) ||
      std::adjacent_find(opens.begin(), opens.end()) != opens.end())
    throw NotATopology("open family must be sorted and duplicate-free");
  for (uint64_t o : opens)
    if ((o & ~full_mask()) != 0)
      throw NotATopology("open set mentions a point outside the space");
  if (!has_open(0)) throw NotATopology("the empty set is not open");
  if (!has_open(full_mask()))
    throw NotATopology("the full point set is not open");
  for (uint64_t a : opens)
    for (uint64_t b : opens) {
      if (!has_open(a | b))
        throw NotATopology("union of opens " + mask_label(points, a) +
                           " and " + mask_label(points, b) + " is not open");
      if (!has_open(a & b))
        throw NotATopology("intersection of opens " + mask_label(points, a) +
                           " and " + mask_label(points, b) + " is not open");
    }
}

uint64_t closure_of(const FiniteSpace& X, uint64_t set) {
  // Intersection of all closed supersets.
  uint64_t c = X.full_mask();
  for (uint64_t o : X.opens) {
    uint64_t closed = X.full_mask() & ~o;
    if ((set & ~closed) == 0) c &= closed;
  }
  return c;
}

uint64_t min_nbhd(const FiniteSpace& X, int point) {
  uint64_t m = X.full_mask();
  for (uint64_t o : X.opens)
    if ((o >> point) & 1) m &= o;
  return m;
}

FiniteSpace subspace(const FiniteSpace& X, uint64_t keep) {
  FiniteSpace sub;
  std::vector<int> old_index;
  for (int i = 0; i < X.point_count(); ++i)
    if ((keep >> i) & 1) {
      old_index.push_back(i);
      sub.points.push_back(X.points[i]);
    }
  for (uint64_t o : X.opens) {
    uint64_t r = 0;
    for (size_t j = 0; j < old_index.size(); ++j)
      if ((o >> old_index[j]) & 1) r |= uint64_t{1} << j;
    sub.opens.push_back(r);
  }
  sort_unique(sub.opens);
  return sub;
}

bool is_t0(const FiniteSpace& X) {
  for (int a = 0; a < X.point_count(); ++a)
    for (int b = a + 1; b < X.point_count(); ++b)
      if (min_nbhd(X, a) == min_nbhd(X, b)) return false;
  return true;
}

int FrameOfOpens::element_of_open(uint64_t mask) const {
  auto it =
      std::lower_bound(open_of_element.begin(), open_of_element.end(), mask);
  if (it == open_of_element.end() || *it != mask) return -1;
  return static_cast<int>(it - open_of_element.begin());
}

std::string FrameOfOpens::element_label(int e) const {
  return mask_label(space.points, open_of_element[e]);
}

FrameOfOpens frame_from_space(const FiniteSpace& X, const Caps& caps) {
  X.validate();
  const int n = static_cast<int>(X.opens.size());
  if (n > caps.max_elements)
    throw CapExceeded("frame of opens has " + std::to_string(n) +
                      " elements, above the cap of " +
                      std::to_string(caps.max_elements));
  std::vector<Bitset> rows(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((X.opens[a] & ~X.opens[b]) == 0) rows[a].set(b);
  FrameOfOpens F{FiniteLattice::build(std::move(rows), caps), X.opens, X};
  // Lattice meets/joins must be set intersections/unions; set lattices are
  // distributive, but this is asserted rather than assumed.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (F.open_of_element[F.lattice.meet(a, b)] !=
          (F.open_of_element[a] & F.open_of_element[b]))
        throw CrossCheckError("frame of opens: meet is not intersection");
      if (F.open_of_element[F.lattice.join(a, b)] !=
          (F.open_of_element[a] | F.open_of_element[b]))
        throw CrossCheckError("frame of opens: join is not union");
    }
  return F;
}

FiniteSpace alexandroff_space(const Poset& P) {
  const int n = static_cast<int>(P.names.size());
  if (n > 20)
    throw CapExceeded("poset up-set enumeration is capped at 20 points");
  FiniteSpace X;
  X.points = P.names;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    bool upclosed = true;
    for (int a = 0; a < n && upclosed; ++a)
      if ((mask >> a) & 1)
        P.leq_rows[a].for_each([&](int b) {
          if (((mask >> b) & 1) == 0) upclosed = false;
        });
    if (upclosed) X.opens.push_back(mask);
  }
  return X;
}

FrameOfOpens frame_from_poset_upsets(const Poset& P, const Caps& caps) {
  const int n = static_cast<int>(P.names.size());
  for (const Bitset& row : P.leq_rows)
    if (row.universe() != n)
      throw NotAPartialOrder("poset rows must range over its points");
  for (int a = 0; a < n; ++a) {
    if (!P.leq_rows[a].test(a))
      throw NotAPartialOrder("poset relation is not reflexive at " +
                             P.names[a]);
    for (int b = P.leq_rows[a].first(); b >= 0;
         b = P.leq_rows[a].next_after(b)) {
      if (b != a && P.leq_rows[b].test(a))
        throw NotAPartialOrder("poset antisymmetry fails between " +
                               P.names[a] + " and " + P.names[b]);
      if (!P.leq_rows[b].subset_of(P.leq_rows[a]))
        throw NotAPartialOrder("poset transitivity fails at " + P.names[a] +
                               " <= " + P.names[b]);
    }
  }
  return frame_from_space(alexandroff_space(P), caps);
}

namespace {

// splitmix64; fixed here so generated instances are reproducible across
// platforms and standard libraries.
struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  bool chance(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next() < static_cast<uint64_t>(p * 18446744073709551616.0L);
  }
};

}  // namespace

std::vector<uint64_t> generate_topology(std::vector<uint64_t> subbase,
                                        size_t max_size) {
  return close_family(std::move(subbase), max_size);
}

FiniteSpace random_space(int num_points, uint64_t seed, double density,
                         const Caps& caps) {
  if (num_points < 1 || num_points > caps.max_space_points)
    throw CapExceeded("random spaces take 1.." +
                      std::to_string(caps.max_space_points) + " points");
  FiniteSpace X;
  for (int i = 0; i < num_points; ++i)
    X.points.push_back("x" + std::to_string(i));
  SplitMix64 rng{seed * 0x9e3779b97f4a7c15ull + num_points};
  std::vector<uint64_t> subbase{0, X.full_mask()};
  for (int s = 0; s < num_points; ++s) {
    uint64_t m = 0;
    for (int i = 0; i < num_points; ++i)
      if (rng.chance(density)) m |= uint64_t{1} << i;
    subbase.push_back(m);
  }
  X.opens = close_family(std::move(subbase), uint64_t{1} << num_points);
  X.validate();
  return X;
}

}  // namespace lab
