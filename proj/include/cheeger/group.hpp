#ifndef CHEEGER_GROUP_HPP
#define CHEEGER_GROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "index_set.hpp"

namespace cheeger
{

struct GroupLimits
{
  std::size_t order_cap = 5040;
  int symmetric_degree_cap = 5;
};

/// A finite group stored as its full multiplication table. Elements are
/// indices 0..order-1; labels are informational only.
///
/// Instances are immutable once built and are always validated: every row and
/// column of the table is a permutation, the identity exists and every element
/// has an inverse. Tables that come from outside (from_table) are also checked
/// for associativity.
class FiniteGroup
{
public:
  /// Validates an arbitrary table, including the O(n^3) associativity check.
  /// Errors name the offending element triple.
  static FiniteGroup from_table(std::vector<std::vector<int>> const &table,
                                std::vector<std::string> labels = {},
                                GroupLimits const &limits = {});

  int order() const { return n_; }
  int identity() const { return identity_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inverses_[a]; }

  std::span<const int> row(int a) const
  { return {table_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)}; }

  std::string const &label(int a) const { return labels_[a]; }
  std::vector<std::string> const &labels() const { return labels_; }
  std::optional<int> find_label(std::string_view label) const;

  int element_order(int a) const;
  bool is_abelian() const;

  /// Full table as nested rows, e.g. for serialization.
  std::vector<std::vector<int>> table() const;

  friend bool operator==(FiniteGroup const &, FiniteGroup const &) = default;

private:
  friend FiniteGroup make_validated(int n, std::vector<int> table,
                                    std::vector<std::string> labels,
                                    bool check_associativity);

  FiniteGroup() = default;

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
};

/// Z_n with labels "0".."n-1".
FiniteGroup cyclic_group(int n);

/// Dihedral group of order 2n. Index i < n is the rotation r^i ("r<i>"),
/// index n+i is the reflection r^i s ("s<i>").
FiniteGroup dihedral_group(int n);

/// Symmetric group on n points, composition (pq)(i) = p(q(i)), elements in
/// lexicographic order of their one-line notation (identity first).
FiniteGroup symmetric_group(int n, GroupLimits const &limits = {});

/// G x H, element (g,h) at index g*|H| + h, labelled "g.h".
FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h,
                           GroupLimits const &limits = {});

bool is_symmetric_set(FiniteGroup const &x, GroupSubset const &s);
bool is_normal_set(FiniteGroup const &x, GroupSubset const &s);

/// Smallest subgroup containing s; {identity} for an empty s.
GroupSubset generated_subgroup(FiniteGroup const &x, GroupSubset const &s);

/// {a^-1 b : a, b in s}.
GroupSubset inverse_product_set(FiniteGroup const &x, GroupSubset const &s);

/// {g s g^-1 : s in s}.
GroupSubset conjugate_set(FiniteGroup const &x, int g, GroupSubset const &s);

/// Every subgroup of index two, in a deterministic order. Empty for odd order.
std::vector<GroupSubset> index2_subgroups(FiniteGroup const &x);

} // namespace cheeger

#endif // CHEEGER_GROUP_HPP
