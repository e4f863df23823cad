#include "cheeger/group.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

#include "cheeger/errors.hpp"

namespace cheeger
{

namespace
{

std::string triple(int a, int b, int c)
{
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

void check_order(std::size_t n, GroupLimits const &limits)
{
  if (n == 0)
    throw ValidationError("group must have at least one element");
  if (n > limits.order_cap)
    throw CapExceeded("group order " + std::to_string(n) +
                      " exceeds the order cap " +
                      std::to_string(limits.order_cap));
}

} // namespace

FiniteGroup make_validated(int n, std::vector<int> table,
                           std::vector<std::string> labels,
                           bool check_associativity)
{
  auto const un = static_cast<std::size_t>(n);
  if (table.size() != un * un)
    throw ValidationError("multiplication table is not n x n");

  for (int v : table)
    if (v < 0 || v >= n)
      throw ValidationError("table entry " + std::to_string(v) +
                            " outside 0.." + std::to_string(n - 1));

  // Latin square: every row and column is a permutation.
  std::vector<int> seen(un);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < n; ++j) {
      int v = table[i * un + j];
      if (seen[v] >= 0)
        throw ValidationError("row " + std::to_string(i) +
                              " is not a permutation: columns " +
                              std::to_string(seen[v]) + " and " +
                              std::to_string(j) + " both give " +
                              std::to_string(v));
      seen[v] = j;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < n; ++i) {
      int v = table[i * un + j];
      if (seen[v] >= 0)
        throw ValidationError("column " + std::to_string(j) +
                              " is not a permutation: rows " +
                              std::to_string(seen[v]) + " and " +
                              std::to_string(i) + " both give " +
                              std::to_string(v));
      seen[v] = i;
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = table[e * un + i] == i && table[i * un + e] == i;
    if (ok)
      identity = e;
  }
  if (identity < 0)
    throw ValidationError("table has no two-sided identity");

  std::vector<int> inverses(un, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i * un + j] == identity) {
        inverses[i] = j;
        break;
      }
    int j = inverses[i];
    if (table[j * un + i] != identity)
      throw ValidationError("element " + std::to_string(i) +
                            " has no two-sided inverse: " + triple(i, j, j) +
                            " gives i*j = id but j*i != id");
  }

  if (check_associativity) {
    long long first_bad = LLONG_MAX;
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int ab = table[a * un + b];
        for (int c = 0; c < n; ++c) {
          int lhs = table[ab * un + c];
          int rhs = table[a * un + table[b * un + c]];
          if (lhs != rhs) {
            long long idx = (static_cast<long long>(a) * n + b) * n + c;
            first_bad = std::min(first_bad, idx);
            goto next_a;
          }
        }
      }
    next_a:;
    }
    if (first_bad != LLONG_MAX) {
      int c = static_cast<int>(first_bad % n);
      int b = static_cast<int>((first_bad / n) % n);
      int a = static_cast<int>(first_bad / (static_cast<long long>(n) * n));
      throw ValidationError("table is not associative at (a,b,c)=" +
                            triple(a, b, c) + ": (ab)c != a(bc)");
    }
  }

  if (labels.empty()) {
    labels.resize(un);
    for (int i = 0; i < n; ++i)
      labels[i] = std::to_string(i);
  }
  if (labels.size() != un)
    throw ValidationError("label count does not match group order");

  FiniteGroup g;
  g.n_ = n;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> const &table,
                                    std::vector<std::string> labels,
                                    GroupLimits const &limits)
{
  check_order(table.size(), limits);
  auto n = table.size();
  std::vector<int> flat;
  flat.reserve(n * n);
  for (auto const &row : table) {
    if (row.size() != n)
      throw ValidationError("multiplication table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_validated(static_cast<int>(n), std::move(flat),
                        std::move(labels), true);
}

std::optional<int> FiniteGroup::find_label(std::string_view label) const
{
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label)
      return i;
  return std::nullopt;
}

int FiniteGroup::element_order(int a) const
{
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a))
    ++k;
  return k;
}

bool FiniteGroup::is_abelian() const
{
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
  std::vector<std::vector<int>> out(n_);
  for (int a = 0; a < n_; ++a)
    out[a].assign(row(a).begin(), row(a).end());
  return out;
}

FiniteGroup cyclic_group(int n)
{
  if (n < 1)
    throw ValidationError("cyclic group needs n >= 1");
  check_order(static_cast<std::size_t>(n), GroupLimits{});
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i * n + j] = (i + j) % n;
  return make_validated(n, std::move(t), {}, false);
}

FiniteGroup dihedral_group(int n)
{
  if (n < 1)
    throw ValidationError("dihedral group needs n >= 1");
  int const order = 2 * n;
  check_order(static_cast<std::size_t>(order), GroupLimits{});
  // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int a = x % n, b = x / n, c = y % n, d = y / n;
      int rot = ((b == 0 ? a + c : a - c) % n + n) % n;
      t[x * order + y] = rot + n * ((b + d) % 2);
    }
  std::vector<std::string> labels(order);
  for (int i = 0; i < n; ++i) {
    labels[i] = "r" + std::to_string(i);
    labels[n + i] = "s" + std::to_string(i);
  }
  return make_validated(order, std::move(t), std::move(labels), false);
}

FiniteGroup symmetric_group(int n, GroupLimits const &limits)
{
  if (n < 1)
    throw ValidationError("symmetric group needs n >= 1");
  if (n > limits.symmetric_degree_cap)
    throw CapExceeded("symmetric group degree " + std::to_string(n) +
                      " exceeds the cap " +
                      std::to_string(limits.symmetric_degree_cap));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  check_order(perms.size(), limits);

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i], static_cast<int>(i));

  int const order = static_cast<int>(perms.size());
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i)
        comp[i] = perms[a][perms[b][i]];
      t[a * order + b] = index.at(comp);
    }

  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (n > 9 && i > 0)
        s += ',';
      s += std::to_string(perms[a][i] + 1);
    }
    labels[a] = s;
  }
  return make_validated(order, std::move(t), std::move(labels), false);
}

FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h,
                           GroupLimits const &limits)
{
  auto const order = static_cast<std::size_t>(g.order()) * h.order();
  check_order(order, limits);
  int const m = h.order();
  int const n = static_cast<int>(order);
  std::vector<int> t(order * order);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * order + y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  std::vector<std::string> labels(order);
  for (int x = 0; x < n; ++x)
    labels[x] = g.label(x / m) + "." + h.label(x % m);
  return make_validated(n, std::move(t), std::move(labels), false);
}

bool is_symmetric_set(FiniteGroup const &x, GroupSubset const &s)
{
  for (int a : s.members())
    if (!s.contains(x.inverse(a)))
      return false;
  return true;
}

bool is_normal_set(FiniteGroup const &x, GroupSubset const &s)
{
  auto members = s.members();
  for (int g = 0; g < x.order(); ++g) {
    int gi = x.inverse(g);
    for (int a : members)
      if (!s.contains(x.mul(x.mul(g, a), gi)))
        return false;
  }
  return true;
}

GroupSubset generated_subgroup(FiniteGroup const &x, GroupSubset const &s)
{
  // Breadth-first closure under right multiplication by the generators; in
  // a finite group the generated monoid is already the subgroup.
  GroupSubset h(static_cast<std::size_t>(x.order()));
  auto gens = s.members();
  std::vector<int> frontier{x.identity()};
  h.insert(x.identity());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        int b = x.mul(a, g);
        if (!h.contains(b)) {
          h.insert(b);
          next.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  return h;
}

GroupSubset inverse_product_set(FiniteGroup const &x, GroupSubset const &s)
{
  GroupSubset out(static_cast<std::size_t>(x.order()));
  auto members = s.members();
  for (int a : members)
    for (int b : members)
      out.insert(x.mul(x.inverse(a), b));
  return out;
}

GroupSubset conjugate_set(FiniteGroup const &x, int g, GroupSubset const &s)
{
  GroupSubset out(static_cast<std::size_t>(x.order()));
  int gi = x.inverse(g);
  for (int a : s.members())
    out.insert(x.mul(x.mul(g, a), gi));
  return out;
}

std::vector<GroupSubset> index2_subgroups(FiniteGroup const &x)
{
  int const n = x.order();
  if (n % 2 != 0)
    return {};

  // Every index-2 subgroup contains all squares. K = <squares> is normal and
  // X/K is an elementary abelian 2-group, so the index-2 subgroups are the
  // kernels of the nonzero functionals on X/K ~ Z_2^r.
  GroupSubset squares(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    squares.insert(x.mul(a, a));
  GroupSubset k = generated_subgroup(x, squares);

  std::vector<int> coord(n, -1);
  std::vector<int> current = k.members();
  for (int a : current)
    coord[a] = 0;
  int r = 0;
  for (int g = 0; g < n; ++g) {
    if (coord[g] >= 0)
      continue;
    std::vector<int> grown = current;
    for (int a : current) {
      int b = x.mul(a, g);
      coord[b] = coord[a] | (1 << r);
      grown.push_back(b);
    }
    current = std::move(grown);
    ++r;
  }

  std::vector<GroupSubset> out;
  for (int c = 1; c < (1 << r); ++c) {
    GroupSubset h(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      if (__builtin_popcount(static_cast<unsigned>(coord[a] & c)) % 2 == 0)
        h.insert(a);
    out.push_back(std::move(h));
  }
  return out;
}

} // namespace cheeger
