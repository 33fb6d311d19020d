#include "locale_lab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "locale_lab/errors.hpp"

namespace lab {

namespace {

std::string elem(int e) { return "element " + std::to_string(e); }

}  // namespace

FiniteLattice FiniteLattice::build(std::vector<Bitset> leq_rows,
                                   const Caps& caps) {
  const int n = static_cast<int>(leq_rows.size());
  if (n == 0) throw NotALattice("a lattice needs at least one element");
  if (n > caps.max_elements)
    throw CapExceeded("lattice size " + std::to_string(n) +
                      " exceeds the cap of " +
                      std::to_string(caps.max_elements));
  for (const Bitset& row : leq_rows)
    if (row.universe() != n)
      throw NotAPartialOrder("relation rows must all range over n elements");

  // Partial order checks.
  for (int a = 0; a < n; ++a)
    if (!leq_rows[a].test(a))
      throw NotAPartialOrder("relation is not reflexive at " + elem(a));
  for (int a = 0; a < n; ++a)
    for (int b = leq_rows[a].first(); b >= 0; b = leq_rows[a].next_after(b)) {
      if (b != a && leq_rows[b].test(a))
        throw NotAPartialOrder("antisymmetry fails between " + elem(a) +
                               " and " + elem(b));
      if (!leq_rows[b].subset_of(leq_rows[a]))
        throw NotAPartialOrder("transitivity fails at " + elem(a) +
                               " <= " + elem(b));
    }

  FiniteLattice L;
  L.n_ = n;
  L.up_ = std::move(leq_rows);
  L.down_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    L.up_[a].for_each([&](int b) { L.down_[b].set(a); });

  // Internal relabeling: sort by downset size, which is a linear extension,
  // so an internal index order agrees with the lattice order. Meets and joins
  // of down/upset intersections then sit at the extreme set bit.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return L.down_[a].count() < L.down_[b].count();
  });
  L.pos_.assign(n, 0);
  L.inv_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    L.pos_[order[i]] = i;
    L.inv_[i] = order[i];
  }

  std::vector<Bitset> iup(n, Bitset(n)), idown(n, Bitset(n));
  for (int a = 0; a < n; ++a) {
    L.up_[a].for_each([&](int b) { iup[L.pos_[a]].set(L.pos_[b]); });
    L.down_[a].for_each([&](int b) { idown[L.pos_[a]].set(L.pos_[b]); });
  }

  // Meet and join tables (internal labels).
  const size_t nn = static_cast<size_t>(n) * n;
  L.meet_.assign(nn, 0);
  L.join_.assign(nn, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Bitset lower = idown[i] & idown[j];
      int m = lower.last();
      if (m < 0 || !lower.subset_of(idown[m]))
        throw NotALattice(elem(L.inv_[i]) + " and " + elem(L.inv_[j]) +
                          " have no meet");
      Bitset upper = iup[i] & iup[j];
      int u = upper.first();
      if (u < 0 || !upper.subset_of(iup[u]))
        throw NotALattice(elem(L.inv_[i]) + " and " + elem(L.inv_[j]) +
                          " have no join");
      L.meet_[static_cast<size_t>(i) * n + j] = m;
      L.meet_[static_cast<size_t>(j) * n + i] = m;
      L.join_[static_cast<size_t>(i) * n + j] = u;
      L.join_[static_cast<size_t>(j) * n + i] = u;
    }
  L.bottom_ = L.inv_[0];
  L.top_ = L.inv_[n - 1];

  // Covers (internal labels; exported under caller labels below).
  std::vector<std::vector<int>> icovers_down(n);
  for (int b = 0; b < n; ++b) {
    Bitset strict = idown[b];
    strict.reset(b);
    for (int c = strict.first(); c >= 0; c = strict.next_after(c)) {
      Bitset between = iup[c] & strict;
      between.reset(c);
      if (between.none()) icovers_down[b].push_back(c);
    }
  }

  // Distributivity, checked through join-irreducibles: the lattice is
  // distributive iff for all a,b the join-irreducibles below a∨b are exactly
  // those below a or below b. A violating irreducible yields a witnessing
  // triple for the distributive law itself.
  Bitset ji(n);
  for (int j = 1; j < n; ++j) {
    Bitset strict = idown[j];
    strict.reset(j);
    int fold = 0;  // internal bottom
    for (int c = strict.first(); c >= 0; c = strict.next_after(c))
      fold = L.join_[static_cast<size_t>(fold) * n + c];
    if (fold != j) ji.set(j);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int ab = L.join_[static_cast<size_t>(a) * n + b];
      Bitset lhs = idown[ab] & ji;
      Bitset rhs = (idown[a] | idown[b]) & ji;
      if (!(lhs == rhs)) {
        int j = lhs.minus(rhs).first();
        int pa = L.inv_[j], pb = L.inv_[a], pc = L.inv_[b];
        throw NotDistributive(
            pa, pb, pc,
            "not distributive: meet(" + std::to_string(pa) + ", join(" +
                std::to_string(pb) + "," + std::to_string(pc) +
                ")) != join(meet(" + std::to_string(pa) + "," +
                std::to_string(pb) + "), meet(" + std::to_string(pa) + "," +
                std::to_string(pc) + "))");
      }
    }

  // Heyting table: heyting(a,b) is the join of every c with meet(c,a) <= b,
  // folded along a linear extension of b so each entry reuses the entries of
  // the lower covers of b.
  L.heyting_.assign(nn, 0);
  std::vector<std::vector<int>> bucket(n);
  for (int a = 0; a < n; ++a) {
    for (auto& v : bucket) v.clear();
    for (int c = 0; c < n; ++c)
      bucket[L.meet_[static_cast<size_t>(c) * n + a]].push_back(c);
    for (int b = 0; b < n; ++b) {
      int h = 0;
      for (int c : bucket[b]) h = L.join_[static_cast<size_t>(h) * n + c];
      for (int lc : icovers_down[b]) {
        int hl = L.heyting_[static_cast<size_t>(a) * n + lc];
        h = L.join_[static_cast<size_t>(h) * n + hl];
      }
      L.heyting_[static_cast<size_t>(a) * n + b] = h;
    }
  }

  // Adjunction check: c∧a <= b  <=>  c <= a→b. Together with the
  // by-construction monotonicity of the table in b, the two sweeps below
  // cover every triple.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int h = L.heyting_[static_cast<size_t>(a) * n + b];
      int ha = L.meet_[static_cast<size_t>(h) * n + a];
      if (!idown[b].test(ha))
        throw CrossCheckError("heyting adjunction: meet(a->b, a) <= b fails");
    }
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a) {
      int m = L.meet_[static_cast<size_t>(c) * n + a];
      int h = L.heyting_[static_cast<size_t>(a) * n + m];
      if (!iup[c].test(h))
        throw CrossCheckError("heyting adjunction: c <= a->(c∧a) fails");
    }

  L.covers_down_.assign(n, {});
  L.covers_up_.assign(n, {});
  for (int b = 0; b < n; ++b)
    for (int c : icovers_down[b]) {
      L.covers_down_[L.inv_[b]].push_back(L.inv_[c]);
      L.covers_up_[L.inv_[c]].push_back(L.inv_[b]);
    }
  for (auto& v : L.covers_down_) std::sort(v.begin(), v.end());
  for (auto& v : L.covers_up_) std::sort(v.begin(), v.end());
  return L;
}

int FiniteLattice::big_meet(const Bitset& elems) const {
  int m = top_;
  elems.for_each([&](int e) { m = meet(m, e); });
  return m;
}

int FiniteLattice::big_meet(std::initializer_list<int> elems) const {
  int m = top_;
  for (int e : elems) m = meet(m, e);
  return m;
}

int FiniteLattice::big_join(const Bitset& elems) const {
  int j = bottom_;
  elems.for_each([&](int e) { j = join(j, e); });
  return j;
}

int FiniteLattice::big_join(std::initializer_list<int> elems) const {
  int j = bottom_;
  for (int e : elems) j = join(j, e);
  return j;
}

FiniteLattice chain_lattice(int n, const Caps& caps) {
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (int a = 0; a < n; ++a) {
    Bitset row(n);
    for (int b = a; b < n; ++b) row.set(b);
    rows.push_back(std::move(row));
  }
  return FiniteLattice::build(std::move(rows), caps);
}

FiniteLattice boolean_lattice(int atoms, const Caps& caps) {
  const int n = 1 << atoms;
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (int a = 0; a < n; ++a) {
    Bitset row(n);
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) row.set(b);
    rows.push_back(std::move(row));
  }
  return FiniteLattice::build(std::move(rows), caps);
}

}  // namespace lab
