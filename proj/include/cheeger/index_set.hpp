#ifndef CHEEGER_INDEX_SET_HPP
#define CHEEGER_INDEX_SET_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace cheeger
{

/// A subset of {0, ..., universe-1}. The tag keeps group subsets and vertex
/// sets from being mixed up.
template<typename Tag>
class IndexSet
{
public:
  IndexSet() = default;

  explicit IndexSet(std::size_t universe)
  : bits_(universe, false)
  {}

  IndexSet(std::size_t universe, std::initializer_list<int> members)
  : bits_(universe, false)
  {
    for (int i : members)
      insert(i);
  }

  IndexSet(std::size_t universe, std::span<const int> members)
  : bits_(universe, false)
  {
    for (int i : members)
      insert(i);
  }

  static IndexSet full(std::size_t universe)
  {
    IndexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  static IndexSet from_mask(std::size_t universe, std::uint64_t mask)
  {
    assert(universe <= 64);
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
      s.bits_[i] = (mask >> i) & 1u;
    return s;
  }

  std::uint64_t to_mask() const
  {
    if (bits_.size() > 64)
      throw std::length_error("index set too large for a 64-bit mask");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i])
        m |= std::uint64_t{1} << i;
    return m;
  }

  std::size_t universe() const { return bits_.size(); }

  bool contains(int i) const
  { return i >= 0 && static_cast<std::size_t>(i) < bits_.size() && bits_[i]; }

  void insert(int i)
  {
    check(i);
    bits_[i] = true;
  }

  void erase(int i)
  {
    check(i);
    bits_[i] = false;
  }

  std::size_t size() const
  {
    std::size_t c = 0;
    for (bool b : bits_)
      c += b;
    return c;
  }

  bool empty() const { return size() == 0; }

  std::vector<int> members() const
  {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i])
        out.push_back(static_cast<int>(i));
    return out;
  }

  IndexSet complement() const
  {
    IndexSet s(universe());
    for (std::size_t i = 0; i < bits_.size(); ++i)
      s.bits_[i] = !bits_[i];
    return s;
  }

  bool is_subset_of(IndexSet const &other) const
  {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.contains(static_cast<int>(i)))
        return false;
    return true;
  }

  friend IndexSet operator|(IndexSet const &a, IndexSet const &b)
  { return combine(a, b, [](bool x, bool y) { return x || y; }); }

  friend IndexSet operator&(IndexSet const &a, IndexSet const &b)
  { return combine(a, b, [](bool x, bool y) { return x && y; }); }

  friend IndexSet operator-(IndexSet const &a, IndexSet const &b)
  { return combine(a, b, [](bool x, bool y) { return x && !y; }); }

  friend bool operator==(IndexSet const &a, IndexSet const &b) = default;

private:
  void check(int i) const
  {
    if (i < 0 || static_cast<std::size_t>(i) >= bits_.size())
      throw std::out_of_range("index outside the universe");
  }

  template<typename Op>
  static IndexSet combine(IndexSet const &a, IndexSet const &b, Op op)
  {
    if (a.universe() != b.universe())
      throw std::invalid_argument("index sets over different universes");
    IndexSet s(a.universe());
    for (std::size_t i = 0; i < a.bits_.size(); ++i)
      s.bits_[i] = op(a.bits_[i], b.bits_[i]);
    return s;
  }

  std::vector<bool> bits_;
};

using GroupSubset = IndexSet<struct GroupElementTag>;
using VertexSet = IndexSet<struct VertexTag>;

} // namespace cheeger

#endif // CHEEGER_INDEX_SET_HPP
