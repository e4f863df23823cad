#include <doctest.h>

#include "cheeger/errors.hpp"
#include "cheeger/signed.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cheeger;
using testing::random_graph;
using testing::random_set;
using testing::random_signature;
using testing::random_switch;

namespace
{

Signature loop_minus()
{
  std::vector<Edge> e = {{0, 0}};
  Graph g(1, e);
  return Signature::all_minus(g);
}

} // namespace

TEST_SUITE("signed")
{
  TEST_CASE("switching")
  {
    auto c4 = cycle_graph(4);
    auto minus = Signature::all_minus(c4);
    auto full = VertexSet::full(4);
    CHECK(switch_signature(c4, minus, SwitchingFunction::constant(full, 1)) == minus);
    SwitchingFunction alt(full, {1, -1, 1, -1});
    CHECK(switch_signature(c4, minus, alt) == Signature::all_plus(c4));
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      auto g = random_graph(rng, 8, 0.4, 0.2);
      auto s = random_signature(rng, g);
      auto t = random_switch(rng, 8);
      CHECK(switch_signature(g, switch_signature(g, s, t), t) == s);
      for (int v = 0; v < 8; ++v)
        if (g.has_loop(v))
          CHECK(switch_signature(g, s, t).sign(v, v) == s.sign(v, v));
    }
    SwitchingFunction partial(VertexSet(4, {0}), {1, 0, 0, 0});
    CHECK_THROWS_AS(switch_signature(c4, minus, partial), ValidationError);
  }

  TEST_CASE("balance")
  {
    auto c5 = cycle_graph(5);
    auto plus = is_balanced(c5, Signature::all_plus(c5));
    CHECK(plus.balanced);
    CHECK(plus.tau == SwitchingFunction::constant(VertexSet::full(5), 1));
    auto odd = is_balanced(c5, Signature::all_minus(c5));
    CHECK_FALSE(odd.balanced);
    int sign = 1;
    auto const &w = odd.unbalanced_cycle;
    for (std::size_t i = 0; i < w.size(); ++i)
      sign *= Signature::all_minus(c5).sign(w[i], w[(i + 1) % w.size()]);
    CHECK(sign == -1);
    auto c4 = cycle_graph(4);
    auto even = is_balanced(c4, Signature::all_minus(c4));
    CHECK(even.balanced);
    CHECK(switch_signature(c4, Signature::all_minus(c4), even.tau) == Signature::all_plus(c4));
    std::vector<Edge> e = {{0, 0}};
    CHECK_FALSE(is_balanced(Graph(1, e), loop_minus()).balanced);
  }

  TEST_CASE("edge frustration examples")
  {
    auto c5 = cycle_graph(5);
    auto all = VertexSet::full(5);
    auto r = frustration_edge(c5, Signature::all_minus(c5), all);
    CHECK(r.value.exact() == Rational(2));
    CHECK(frustration_edge(c5, Signature::all_plus(c5), all).value.exact() == Rational(0));
    std::vector<Edge> e = {{0, 0}};
    Graph loop(1, e);
    CHECK(frustration_edge(loop, loop_minus(), VertexSet::full(1)).value.exact() == Rational(1));
    CHECK(frustration_edge(c5, Signature::all_minus(c5), all, 2.0).value.exact() ==
          Rational(4));
    CHECK_THROWS_AS(frustration_edge(c5, Signature::all_minus(c5), all, 0.5), ValidationError);
  }

  TEST_CASE("sup frustration examples")
  {
    auto c5 = cycle_graph(5);
    auto minus = Signature::all_minus(c5);
    auto pi = VertexMeasure::counting(5);
    CHECK(frustration_sup(c5, minus, pi, VertexSet(5, {0, 1, 2, 3})).value.exact() ==
          Rational(0));
    CHECK(frustration_sup(c5, minus, pi, VertexSet::full(5)).value.exact() == Rational(2));
    CHECK(frustration_sup(c5, minus, pi, VertexSet(5, {0, 2})).value.exact() == Rational(0));
  }

  TEST_CASE("frustration matches the definition on random signed graphs")
  {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      int const n = 2 + static_cast<int>(rng.below(6));
      auto g = random_graph(rng, n, 0.5, 0.15);
      auto s = random_signature(rng, g);
      auto v1 = random_set(rng, n);
      auto m = v1.members();
      for (double p : {1.0, 2.0, 1.5}) {
        auto r = frustration_edge(g, s, v1, p);
        CHECK(r.value.to_double() == doctest::Approx(oracle::iota_edge(g, s, m, p)));
        if (p == 1.0) {
          CHECK(r.value.is_exact());
          // The witness reproduces the value.
          double at = 0.0;
          for (int x : m)
            for (int y : m)
              if (g.adjacent(x, y))
                at += std::abs(r.tau(x) - s.sign(x, y) * r.tau(y));
          CHECK(at / 2.0 == doctest::Approx(r.value.to_double()));
        }
      }
      std::vector<double> w(static_cast<std::size_t>(n));
      for (auto &x : w)
        x = 0.5 + rng.uniform();
      for (auto const &pi : {VertexMeasure::counting(n), VertexMeasure(w)}) {
        auto r = frustration_sup(g, s, pi, v1);
        auto const pw = testing::weights(pi);
        CHECK(r.value.to_double() == doctest::Approx(oracle::iota_sup(g, s, pw, m)));
        std::vector<int> tau(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
          tau[i] = r.tau(m[i]);
        CHECK(oracle::iota_sup_at(g, s, pw, m, tau) == doctest::Approx(r.value.to_double()));
      }
    }
  }

  TEST_CASE("zero frustration means balanced")
  {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      int const n = 2 + static_cast<int>(rng.below(7));
      auto g = random_graph(rng, n, 0.4, 0.1);
      auto s = random_signature(rng, g);
      auto v1 = VertexSet::full(static_cast<std::size_t>(n));
      bool const balanced = is_balanced(g, s).balanced;
      CHECK((frustration_edge(g, s, v1).value.exact() == Rational(0)) == balanced);
      CHECK((frustration_sup(g, s, VertexMeasure::counting(n), v1).value.exact() ==
             Rational(0)) == balanced);
    }
  }

  TEST_CASE("frustration is switching invariant")
  {
    Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
      int const n = 3 + static_cast<int>(rng.below(6));
      auto g = random_graph(rng, n, 0.5, 0.1);
      auto s = random_signature(rng, g);
      auto t = random_switch(rng, n);
      auto st = switch_signature(g, s, t);
      auto v1 = random_set(rng, n);
      CHECK(frustration_edge(g, s, v1).value.exact() == frustration_edge(g, st, v1).value.exact());
      auto pi = VertexMeasure::counting(n);
      CHECK(frustration_sup(g, s, pi, v1).value.exact() ==
            frustration_sup(g, st, pi, v1).value.exact());
    }
  }

  TEST_CASE("deleting an edge never increases frustration")
  {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      int const n = 3 + static_cast<int>(rng.below(6));
      auto g = random_graph(rng, n, 0.6);
      auto edges = g.edges();
      if (edges.empty())
        continue;
      auto s = random_signature(rng, g);
      auto drop = static_cast<std::size_t>(rng.below(edges.size()));
      std::vector<Edge> kept;
      std::map<Edge, int> signs;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (i != drop) {
          kept.push_back(edges[i]);
          signs[edges[i]] = s.sign(edges[i].first, edges[i].second);
        }
      Graph h(n, kept);
      auto sh = Signature::from_map(h, signs);
      auto v1 = VertexSet::full(static_cast<std::size_t>(n));
      auto pi = VertexMeasure::counting(n);
      CHECK(frustration_edge(h, sh, v1).value.to_double() <=
            frustration_edge(g, s, v1).value.to_double());
      CHECK(frustration_sup(h, sh, pi, v1).value.to_double() <=
            frustration_sup(g, s, pi, v1).value.to_double());
    }
  }

  TEST_CASE("serial and parallel enumeration agree")
  {
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      int const n = 8 + static_cast<int>(rng.below(8));
      auto g = random_graph(rng, n, 0.3, 0.05);
      auto s = random_signature(rng, g);
      auto v1 = VertexSet::full(static_cast<std::size_t>(n));
      auto a = frustration_edge(g, s, v1, 1.0, {}, Execution::serial);
      auto b = frustration_edge(g, s, v1, 1.0, {}, Execution::parallel);
      CHECK(a.value.exact() == b.value.exact());
      CHECK(a.tau == b.tau);
      auto pi = VertexMeasure::counting(n);
      auto c = frustration_sup(g, s, pi, v1, {}, Execution::serial);
      auto d = frustration_sup(g, s, pi, v1, {}, Execution::parallel);
      CHECK(c.value.exact() == d.value.exact());
      CHECK(c.tau == d.tau);
    }
  }

  TEST_CASE("caps")
  {
    auto g = cycle_graph(24);
    Caps caps;
    CHECK_THROWS_AS(frustration_edge(g, Signature::all_minus(g), VertexSet::full(24), 1.0, caps),
                    CapExceeded);
    caps.subset_cap = 24;
    CHECK_NOTHROW(frustration_edge(g, Signature::all_minus(g), VertexSet(24, {0, 1, 2}), 1.0, caps));
  }

  TEST_CASE("signature lookup rejects non-edges")
  {
    auto c5 = cycle_graph(5);
    CHECK_THROWS_AS(Signature::from_map(c5, {{{0, 2}, -1}}), ValidationError);
    CHECK_THROWS_AS(Signature::from_map(c5, {{{0, 1}, 3}}), ValidationError);
  }
}
