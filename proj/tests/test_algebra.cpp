#include <doctest.h>

#include "lpa/algebra.hpp"
#include "lpa/io.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

AlgebraPtr e2_over(RingId r = RingId::integers()) { return make_algebra(e2(), r); }

RawCombination raw_of(const Graph& g, std::initializer_list<std::pair<std::vector<std::string>, std::vector<std::string>>> monos,
                      const RingId& r = RingId::integers()) {
  RawCombination raw;
  for (auto& [a, b] : monos) {
    raw.push_back(Term{RingElement::one(r), Monomial{g.path_from_names(a), g.path_from_names(b)}});
  }
  return raw;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("generators and unit") {
    auto a = e2_over();
    CHECK(Element::vertex(a, 0).terms().size() == 1);
    CHECK(Element::unit(a) == Element::vertex(a, 0));
    auto f = make_algebra(line_graph(3), RingId::integers());
    Element one = Element::unit(f);
    CHECK(one.terms().size() == 3);
    CHECK(one == X(f, "u1 + u2 + u3"));
  }

  TEST_CASE("special edges are the smallest outgoing names") {
    auto a = make_algebra(e2_minus(), RingId::integers());
    const Graph& g = a->graph();
    CHECK(g.edge(*a->special_edge(g.vertex("u"))).name == "d1");
    CHECK(g.edge(*a->special_edge(g.vertex("v1"))).name == "d2");
    CHECK(g.edge(*a->special_edge(g.vertex("v2"))).name == "e3");
    auto f = make_algebra(line_graph(2), RingId::integers());
    CHECK_FALSE(f->special_edge(1).has_value());
  }

  TEST_CASE("reduce") {
    auto a = e2_over();
    const Graph& g = a->graph();
    RawCombination r1 = raw_of(g, {{{"a"}, {"a"}}, {{"b"}, {"b"}}});
    Element x1 = reduce(a, r1);
    CHECK(x1 == Element::unit(a));
    CHECK(oracle_equals(g, r1, to_raw(Element::unit(a))));

    RawCombination r2 = raw_of(g, {{{"a"}, {"b"}}});
    Element x2 = reduce(a, r2);
    REQUIRE(x2.terms().size() == 1);
    CHECK(x2.terms().begin()->first == Monomial{P(g, {"a"}), P(g, {"b"})});

    RawCombination r3 = raw_of(g, {{{"b", "a"}, {"b", "a"}}, {{"b", "b"}, {"b", "b"}}});
    Element x3 = reduce(a, r3);
    CHECK(x3 == X(a, "b b^*"));
    CHECK(oracle_equals(g, r3, raw_of(g, {{{"b"}, {"b"}}})));
  }

  TEST_CASE("normal forms contain no reducible monomial") {
    Rng rng(3);
    for (int k = 0; k < 300; ++k) {
      auto a = make_algebra(random_graph(rng, 4, 8), RingId::integers());
      Element x = reduce(a, random_raw(rng, a, 6, 3));
      for (auto& [m, c] : x.terms()) {
        CHECK_FALSE(a->reducible(m));
        CHECK(a->well_formed(m));
        CHECK_FALSE(c.is_zero());
      }
    }
  }

  TEST_CASE("multiplication") {
    auto a = e2_over();
    CHECK(X(a, "a b^*") * X(a, "b a^*") == X(a, "a a^*"));
    CHECK((X(a, "a^*") * X(a, "b")).is_zero());
    Element w = X(a, "a b^* + b a^*");
    CHECK(w * w == Element::unit(a));
    CHECK(oracle_equals(w * w, Element::unit(a)));
    CHECK(X(a, "a^* a") == Element::unit(a));
  }

  TEST_CASE("multiply_monomials") {
    Graph g = e2();
    Monomial x{P(g, {"a"}), P(g, {"b"})};
    Monomial y{P(g, {"b", "a"}), P(g, {"u"})};
    auto xy = multiply_monomials(g, x, y);
    REQUIRE(xy);
    CHECK(*xy == Monomial{P(g, {"a", "a"}), P(g, {"u"})});
    Monomial z{P(g, {"a"}), P(g, {"a"})};
    CHECK_FALSE(multiply_monomials(g, x, z).has_value());
    Monomial w{P(g, {"u"}), P(g, {"b", "a"})};
    // A trivial gamma leaves the whole of beta to be absorbed by delta.
    auto xw = multiply_monomials(g, x, w);
    REQUIRE(xw);
    CHECK(*xw == Monomial{P(g, {"a"}), P(g, {"b", "a", "b"})});
  }

  TEST_CASE("star") {
    auto a = e2_over(RingId::gaussian_integers());
    CHECK(X(a, "[i] * a b^*").star() == X(a, "[-i] * b a^*"));
    CHECK(X(a, "u").star() == X(a, "u"));
    CHECK(X(a, "a").star() == X(a, "a^*"));
  }

  TEST_CASE("add, scale, equals") {
    auto a = e2_over();
    Element x = X(a, "2 * a b^* - b");
    CHECK((x + RingElement::from_int(a->ring(), -1) * x).is_zero());
    CHECK((x + (-x)).terms().empty());
    CHECK(equals(X(a, "a a^* + b b^*"), Element::unit(a)));
    CHECK_FALSE(equals(X(a, "a a^*"), Element::unit(a)));
    auto other = make_algebra(e2_minus(), RingId::integers());
    CHECK_THROWS_AS((void)(Element::unit(a) == Element::unit(other)), AlgebraMismatch);
    auto zi = e2_over(RingId::gaussian_integers());
    CHECK_THROWS_AS(Element::unit(a) + Element::unit(zi), AlgebraMismatch);
  }

  TEST_CASE("degree components") {
    auto a = e2_over();
    auto d1 = degree_components(X(a, "a b^*"));
    REQUIRE(d1.size() == 1);
    CHECK(d1.count(0));
    auto d2 = degree_components(X(a, "a + b^*"));
    REQUIRE(d2.size() == 2);
    CHECK(d2.at(1) == X(a, "a"));
    CHECK(d2.at(-1) == X(a, "b^*"));
    auto d3 = degree_components(X(a, "u"));
    CHECK(d3.size() == 1);
    CHECK(d3.at(0) == X(a, "u"));
  }

  TEST_CASE("expand_to_depth") {
    auto a = e2_over();
    const Graph& g = a->graph();
    auto t1 = expand_to_depth(Element::unit(a), 1);
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].mono == Monomial{P(g, {"a"}), P(g, {"a"})});
    CHECK(t1[1].mono == Monomial{P(g, {"b"}), P(g, {"b"})});

    auto t2 = expand_to_depth(X(a, "a b^*"), 2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].mono == Monomial{P(g, {"a", "a"}), P(g, {"b", "a"})});
    CHECK(t2[1].mono == Monomial{P(g, {"a", "b"}), P(g, {"b", "b"})});
    CHECK(t2[0].coeff.is_one());
    CHECK(oracle_equals(g, t2, to_raw(X(a, "a b^*"))));

    auto f = make_algebra(line_graph(3), RingId::integers());
    auto t3 = expand_to_depth(X(f, "u3"), 2);
    REQUIRE(t3.size() == 1);
    CHECK(t3[0].mono.alpha.trivial());
    CHECK(t3[0].mono.beta == f->graph().trivial_path(2));

    CHECK_THROWS_AS(expand_to_depth(X(a, "a b^*"), 0), std::invalid_argument);
  }

  TEST_CASE("expansion respects depth and value on random elements") {
    Rng rng(19);
    for (int k = 0; k < 200; ++k) {
      auto a = make_algebra(random_graph(rng, 4, 8), RingId::integers());
      Element x = reduce(a, random_raw(rng, a, 5, 3));
      std::size_t depth = x.max_beta_length() + uniform(rng, 0, 2);
      auto t = expand_to_depth(x, depth);
      std::set<Monomial> seen;
      for (auto& term : t) {
        const Path& b = term.mono.beta;
        CHECK((b.length() == depth || (b.length() < depth && a->graph().is_sink(a->graph().range(b)))));
        CHECK(seen.insert(term.mono).second);
      }
      CHECK(reduce(a, t) == x);
      CHECK(oracle_equals(a->graph(), t, to_raw(x)));
    }
  }

  TEST_CASE("oracle_equals") {
    auto a = e2_over();
    CHECK(oracle_equals(X(a, "a a^* + b b^*"), Element::unit(a)));
    CHECK_FALSE(oracle_equals(X(a, "a a^*"), Element::unit(a)));
    CHECK_FALSE(oracle_equals(X(a, "a"), X(a, "b")));
    CHECK(oracle_equals(X(a, "a b^* b"), X(a, "a")));
  }

  TEST_CASE("diagonal") {
    auto a = e2_over();
    CHECK(is_diagonal(X(a, "a a^*")));
    CHECK_FALSE(is_diagonal(X(a, "a b^* + b a^*")));
    CHECK(diagonal_part(X(a, "a b^* + b b^* + 3 * a a^*")) == X(a, "b b^* + 3 * a a^*"));
    auto qi = e2_over(RingId::gaussian_rationals());
    CHECK_FALSE(is_diagonal(X(qi, "1/2 * (a a^* + a b^* + b a^* + b b^*)")));
    // 1 = u is diagonal and so is 1 - a a^* = b b^*.
    CHECK(is_diagonal(X(a, "u - a a^*")));
  }

  TEST_CASE("relations hold for every generator") {
    for (Graph g : {e2(), e2_minus(), line_graph(3), rose(3)}) {
      auto a = make_algebra(g, RingId::gaussian_integers());
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        Element pv = Element::vertex(a, v);
        CHECK(pv * pv == pv);
        CHECK(pv.star() == pv);
        for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
          if (w != v) CHECK((pv * Element::vertex(a, w)).is_zero());
        }
        if (!g.is_sink(v)) {
          Element sum(a);
          for (EdgeIndex e : g.out_edges(v)) sum += Element::edge(a, e) * Element::edge_star(a, e);
          CHECK(sum == pv);
        }
      }
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        Element x = Element::edge(a, e);
        CHECK(Element::vertex(a, g.edge(e).source) * x == x);
        CHECK(x * Element::vertex(a, g.edge(e).range) == x);
        CHECK(x.star() == Element::edge_star(a, e));
        for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
          Element prod = Element::edge_star(a, e) * Element::edge(a, f);
          if (e == f) {
            CHECK(prod == Element::vertex(a, g.edge(e).range));
          } else {
            CHECK(prod.is_zero());
          }
        }
      }
    }
  }

  TEST_CASE("sum over X_{v,m} of paths times their adjoints is v") {
    for (Graph g : {e2(), e2_minus(), line_graph(4)}) {
      auto a = make_algebra(g, RingId::integers());
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t m = 0; m <= 3; ++m) {
          auto xs = enumerate_X(g, v, m);
          CHECK(Element::projection_sum(a, xs) == Element::vertex(a, v));
        }
      }
    }
  }

  TEST_CASE("confluence: the work-list order does not matter") {
    Rng rng(23);
    for (int k = 0; k < 300; ++k) {
      auto a = make_algebra(random_graph(rng, 4, 8), RingId::gaussian_integers());
      RawCombination raw = random_raw(rng, a, 6, 4);
      raw = random_equivalent(rng, a->graph(), raw);
      Element x = reduce(a, raw);
      CHECK(reduce_shuffled(a, raw, rng()) == x);
      CHECK(reduce_shuffled(a, raw, rng()) == x);
    }
  }

  TEST_CASE("ring axioms and involution on random elements") {
    Rng rng(29);
    for (int k = 0; k < 150; ++k) {
      auto a = make_algebra(random_graph(rng, 3, 6), RingId::gaussian_integers());
      Element x = reduce(a, random_raw(rng, a, 3, 2));
      Element y = reduce(a, random_raw(rng, a, 3, 2));
      Element z = reduce(a, random_raw(rng, a, 3, 2));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y).star() == y.star() * x.star());
      CHECK(x.star().star() == x);
      CHECK(Element::unit(a) * x == x);
      CHECK(x * Element::unit(a) == x);
      RingElement l = random_scalar(rng, a->ring());
      CHECK((l * x).star() == conj(l) * x.star());
      CHECK(oracle_equals(x * y, x * y));
    }
  }

  TEST_CASE("basis monomials of the line graph number n squared") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto a = make_algebra(line_graph(n), RingId::integers());
      CHECK(basis_monomials(*a, n).size() == n * n);
    }
  }

  TEST_CASE("basis monomials of E2 match the word count") {
    // Basis monomials a b^* with |a|,|b| <= L: all pairs minus those ending in
    // the special edge a on both sides.
    auto a = e2_over();
    for (std::size_t L = 0; L <= 4; ++L) {
      std::size_t words = (std::size_t(1) << (L + 1)) - 1;  // sum of 2^k
      std::size_t pairs = words * words;
      std::size_t both_a = 0;
      if (L >= 1) {
        std::size_t shorter = (std::size_t(1) << L) - 1;
        both_a = shorter * shorter;
      }
      CHECK(basis_monomials(*a, L).size() == pairs - both_a);
    }
  }
}
