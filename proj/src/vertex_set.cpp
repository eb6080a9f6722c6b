#include "isocut/vertex_set.hpp"

#include <string>

#include "isocut/errors.hpp"

namespace isocut {

VertexSet::VertexSet(int universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const VertexId> members) : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (VertexId v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v < 0 || v >= universe_)
    throw InvalidInput("vertex " + std::to_string(v) + " outside [0," + std::to_string(universe_) + ")");
  auto& w = words_[static_cast<std::size_t>(v) >> 6];
  std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(VertexId v) {
  if (v < 0 || v >= universe_) return;
  auto& w = words_[static_cast<std::size_t>(v) >> 6];
  std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

VertexSet VertexSet::complement() const {
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (universe_ & 63) r.words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  r.count_ = universe_ - count_;
  return r;
}

namespace {
void check_same(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw InvalidInput("vertex sets over different universes");
}
}  // namespace

VertexSet VertexSet::operator&(const VertexSet& o) const {
  check_same(*this, o);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] & o.words_[i];
    r.count_ += std::popcount(r.words_[i]);
  }
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  check_same(*this, o);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] | o.words_[i];
    r.count_ += std::popcount(r.words_[i]);
  }
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  check_same(*this, o);
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] & ~o.words_[i];
    r.count_ += std::popcount(r.words_[i]);
  }
  return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

int VertexSet::intersection_size(const VertexSet& o) const {
  check_same(*this, o);
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(count_));
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

VertexId VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<VertexId>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

}  // namespace isocut
