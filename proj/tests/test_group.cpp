#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cheeger/errors.hpp"
#include "cheeger/group.hpp"
#include "oracles.hpp"

using namespace cheeger;

namespace
{

GroupSubset subset(FiniteGroup const &x, std::initializer_list<char const *> labels)
{
  GroupSubset s(static_cast<std::size_t>(x.order()));
  for (auto const *l : labels)
    s.insert(*x.find_label(l));
  return s;
}

GroupSubset transpositions(FiniteGroup const &s3)
{
  return subset(s3, {"213", "132", "321"});
}

void check_latin(FiniteGroup const &x)
{
  int const n = x.order();
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (int b = 0; b < n; ++b) {
      row[x.mul(a, b)] = true;
      col[x.mul(b, a)] = true;
    }
    CHECK(std::all_of(row.begin(), row.end(), [](bool v) { return v; }));
    CHECK(std::all_of(col.begin(), col.end(), [](bool v) { return v; }));
    CHECK(x.mul(a, x.inverse(a)) == x.identity());
  }
}

std::multiset<int> element_orders(FiniteGroup const &x)
{
  std::multiset<int> out;
  for (int a = 0; a < x.order(); ++a)
    out.insert(x.element_order(a));
  return out;
}

} // namespace

TEST_SUITE("group")
{
  TEST_CASE("trivial and cyclic groups")
  {
    auto z1 = cyclic_group(1);
    CHECK(z1.order() == 1);
    CHECK(z1.table() == std::vector<std::vector<int>>{{0}});
    auto z5 = cyclic_group(5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        CHECK(z5.mul(i, j) == (i + j) % 5);
  }

  TEST_CASE("constructors produce Latin squares")
  {
    for (auto const &x : {cyclic_group(7), dihedral_group(4), dihedral_group(5),
                          symmetric_group(3), symmetric_group(4),
                          direct_product(cyclic_group(2), dihedral_group(3))})
      check_latin(x);
  }

  TEST_CASE("D3 and S3 are isomorphic")
  {
    auto d3 = dihedral_group(3), s3 = symmetric_group(3);
    CHECK(oracle::isomorphic(d3, s3));
    CHECK(element_orders(d3) == std::multiset<int>{1, 2, 2, 2, 3, 3});
    CHECK(element_orders(s3) == element_orders(d3));
    CHECK_FALSE(oracle::isomorphic(cyclic_group(6), s3));
    CHECK(oracle::isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
  }

  TEST_CASE("from_table validates")
  {
    CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 2}}), ValidationError);
    // A Latin square with identity but no associativity.
    std::vector<std::vector<int>> loop5 = {{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(loop5), ValidationError);
    auto z4 = cyclic_group(4);
    CHECK(FiniteGroup::from_table(z4.table(), z4.labels()) == z4);
  }

  TEST_CASE("symmetric group order cap")
  {
    CHECK_THROWS(symmetric_group(6));
    GroupLimits lim;
    lim.symmetric_degree_cap = 6;
    CHECK(symmetric_group(6, lim).order() == 720);
  }

  TEST_CASE("symmetric and normal sets")
  {
    auto z5 = cyclic_group(5);
    CHECK(is_symmetric_set(z5, subset(z5, {"1", "4"})));
    CHECK_FALSE(is_symmetric_set(z5, subset(z5, {"1"})));
    CHECK(is_normal_set(z5, subset(z5, {"1"})));
    auto s3 = symmetric_group(3);
    CHECK(is_symmetric_set(s3, transpositions(s3)));
    CHECK(is_normal_set(s3, transpositions(s3)));
    CHECK_FALSE(is_normal_set(s3, subset(s3, {"213"})));
  }

  TEST_CASE("generated subgroups")
  {
    auto z6 = cyclic_group(6);
    CHECK(generated_subgroup(z6, subset(z6, {"2"})).members() == std::vector<int>{0, 2, 4});
    auto z5 = cyclic_group(5);
    CHECK(generated_subgroup(z5, subset(z5, {"1"})).size() == 5);
    CHECK(generated_subgroup(z5, GroupSubset(5)).members() == std::vector<int>{0});
    auto s3 = symmetric_group(3);
    auto h = generated_subgroup(s3, subset(s3, {"231"}));
    CHECK(h.size() == 3);
    CHECK(generated_subgroup(s3, h) == h);
  }

  TEST_CASE("index-two subgroups match subset enumeration")
  {
    for (auto const &x : {cyclic_group(5), cyclic_group(4), cyclic_group(6),
                          symmetric_group(3), dihedral_group(4),
                          direct_product(cyclic_group(2), cyclic_group(2))}) {
      std::vector<std::vector<int>> expected;
      for (auto const &h : oracle::subgroups(x))
        if (2 * static_cast<int>(h.size()) == x.order())
          expected.push_back(h);
      std::vector<std::vector<int>> got;
      for (auto const &h : index2_subgroups(x))
        got.push_back(h.members());
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
    CHECK(index2_subgroups(cyclic_group(5)).empty());
    auto z4 = index2_subgroups(cyclic_group(4));
    REQUIRE(z4.size() == 1);
    CHECK(z4[0].members() == std::vector<int>{0, 2});
    auto s3 = symmetric_group(3);
    auto a3 = index2_subgroups(s3);
    REQUIRE(a3.size() == 1);
    CHECK(a3[0] == generated_subgroup(s3, subset(s3, {"231"})));
    CHECK(index2_subgroups(direct_product(cyclic_group(2), cyclic_group(2))).size() == 3);
  }

  TEST_CASE("index-two complement squares into the subgroup")
  {
    for (auto const &x : {dihedral_group(4), symmetric_group(4), cyclic_group(8)})
      for (auto const &h : index2_subgroups(x)) {
        auto c = h.complement();
        for (int a : c.members())
          for (int b : c.members())
            CHECK(h.contains(x.mul(a, b)));
      }
  }

  TEST_CASE("conjugation")
  {
    auto s3 = symmetric_group(3);
    auto s = subset(s3, {"213"});
    auto g = *s3.find_label("231");
    auto c = conjugate_set(s3, g, s);
    CHECK(c.size() == 1);
    // g (12) g^-1 computed by hand from the table.
    int const expected = s3.mul(s3.mul(g, *s3.find_label("213")), s3.inverse(g));
    CHECK(c.members() == std::vector<int>{expected});
    CHECK(conjugate_set(s3, s3.identity(), s) == s);
    auto z7 = cyclic_group(7);
    auto t = subset(z7, {"2", "3"});
    CHECK(conjugate_set(z7, 4, t) == t);
    auto tr = transpositions(s3);
    for (int x = 0; x < 6; ++x)
      CHECK(conjugate_set(s3, x, tr) == tr);
  }

  TEST_CASE("generated subgroup is monotone")
  {
    auto x = dihedral_group(5);
    for (unsigned a = 0; a < 64; ++a) {
      GroupSubset s = GroupSubset::from_mask(10, a);
      GroupSubset t = GroupSubset::from_mask(10, a | 0x155u);
      CHECK(generated_subgroup(x, s).is_subset_of(generated_subgroup(x, t)));
    }
  }
}
