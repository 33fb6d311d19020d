#include "locale_lab/bitset.hpp"

#include <cassert>

namespace lab {

namespace {
constexpr size_t words_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }
}  // namespace

Bitset::Bitset(int universe) : n_(universe), w_(words_for(universe), 0) {
  assert(universe >= 0);
}

Bitset Bitset::full(int universe) {
  Bitset b(universe);
  for (auto& w : b.w_) w = ~uint64_t{0};
  if (universe % 64 != 0 && !b.w_.empty())
    b.w_.back() &= (uint64_t{1} << (universe % 64)) - 1;
  return b;
}

Bitset Bitset::of(int universe, std::initializer_list<int> bits) {
  Bitset b(universe);
  for (int i : bits) b.set(i);
  return b;
}

bool Bitset::test(int i) const {
  assert(i >= 0 && i < n_);
  return (w_[i / 64] >> (i % 64)) & 1;
}

void Bitset::set(int i) {
  assert(i >= 0 && i < n_);
  w_[i / 64] |= uint64_t{1} << (i % 64);
}

void Bitset::reset(int i) {
  assert(i >= 0 && i < n_);
  w_[i / 64] &= ~(uint64_t{1} << (i % 64));
}

bool Bitset::any() const {
  for (uint64_t w : w_)
    if (w != 0) return true;
  return false;
}

int Bitset::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  assert(n_ == o.n_);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  assert(n_ == o.n_);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset Bitset::minus(const Bitset& o) const {
  assert(n_ == o.n_);
  Bitset r(*this);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
  return r;
}

Bitset Bitset::complement() const { return full(n_).minus(*this); }

bool Bitset::subset_of(const Bitset& o) const {
  assert(n_ == o.n_);
  for (size_t i = 0; i < w_.size(); ++i)
    if ((w_[i] & ~o.w_[i]) != 0) return false;
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  assert(n_ == o.n_);
  for (size_t i = 0; i < w_.size(); ++i)
    if ((w_[i] & o.w_[i]) != 0) return true;
  return false;
}

int Bitset::first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
  return -1;
}

int Bitset::last() const {
  for (size_t i = w_.size(); i-- > 0;)
    if (w_[i] != 0)
      return static_cast<int>(i * 64) + 63 - std::countl_zero(w_[i]);
  return -1;
}

int Bitset::next_after(int i) const {
  ++i;
  if (i >= n_) return -1;
  size_t w = static_cast<size_t>(i) / 64;
  uint64_t bits = w_[w] & (~uint64_t{0} << (i % 64));
  while (true) {
    if (bits != 0) return static_cast<int>(w * 64) + std::countr_zero(bits);
    if (++w >= w_.size()) return -1;
    bits = w_[w];
  }
}

bool Bitset::numeric_less(const Bitset& o) const {
  assert(n_ == o.n_);
  for (size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

size_t Bitset::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t w : w_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::string Bitset::to_string() const {
  std::string s = "{";
  bool first_elem = true;
  for_each([&](int i) {
    if (!first_elem) s += ",";
    s += std::to_string(i);
    first_elem = false;
  });
  s += "}";
  return s;
}

}  // namespace lab
