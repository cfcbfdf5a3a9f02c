#include <doctest.h>

#include "lpa/io.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

const char* kE2 = "graph E2\nvertex u\nedge a : u -> u\nedge b : u -> u\n";

ParseError parse_error(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("graph parsing") {
    Graph g = parse_graph(kE2);
    CHECK(g.name() == "E2");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 2);

    Graph h = parse_graph("# comment line\r\nvertex u  # trailing\r\nvertex w\nedge x : u -> w\n\n");
    CHECK(h.name() == "G");
    CHECK(h.edge_count() == 1);

    auto e = parse_error([] { parse_graph("vertex u\nedge a : u -> w\n", "bad.graph"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 15);
    CHECK(e.input() == "bad.graph");
    CHECK(std::string(e.what()).find("'w'") != std::string::npos);
    CHECK(std::string(e.what()).rfind("bad.graph:2:15:", 0) == 0);

    auto d = parse_error([] { parse_graph("vertex u\nvertex u\n"); });
    CHECK(d.line() == 2);
    CHECK(d.column() == 8);

    auto s = parse_error([] { parse_graph("vertex u\nedge a u -> u\n"); });
    CHECK(s.line() == 2);
    CHECK(s.column() == 8);
    CHECK_FALSE(s.expected().empty());

    CHECK_THROWS_AS(parse_graph("vertices u\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex u\nedge a : u ->\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex u\nedge a : u -> u extra\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex u\ngraph late\n"), ParseError);
  }

  TEST_CASE("graph round trip") {
    Rng rng(43);
    for (int k = 0; k < 200; ++k) {
      Graph g = random_graph(rng, 5, 10);
      Graph back = parse_graph(serialize_graph(g));
      CHECK(back.same_structure(g));
      CHECK(back.name() == g.name());
      CHECK(serialize_graph(back) == serialize_graph(g));
    }
    Graph s = parse_graph(serialize_graph(e2_minus()));
    CHECK(s.same_structure(e2_minus()));
  }

  TEST_CASE("ring literals") {
    const RingId Zi = RingId::gaussian_integers();
    CHECK(parse_ring_literal("1-2i", Zi) == RingElement(Zi, {1, -2}));
    CHECK(parse_ring_literal("-i", Zi) == RingElement(Zi, {0, -1}));
    CHECK(parse_ring_literal("1/2r2", RingId::quadratic_rationals(2)) ==
          RingElement(RingId::quadratic_rationals(2), {0, mpq_class(1, 2)}));
    CHECK(parse_ring_literal("3t^2 - t", RingId::polynomial_integers()) ==
          RingElement(RingId::polynomial_integers(), {0, -1, 3}));
    CHECK_THROWS_AS(parse_ring_literal("1/2", RingId::integers()), ParseError);
    CHECK_THROWS_AS(parse_ring_literal("i", RingId::integers()), ParseError);
    CHECK_THROWS_AS(parse_ring_literal("1/0", RingId::rationals()), ParseError);
    CHECK_THROWS_AS(parse_ring_literal("", RingId::integers()), ParseError);
    CHECK_THROWS_AS(parse_ring_literal("2r3", RingId::quadratic_integers(2)), ParseError);
  }

  TEST_CASE("expressions") {
    auto a = make_algebra(parse_graph(kE2), RingId::integers());
    Element flip = parse_expr("a b^* + b a^*", a);
    CHECK(flip == Element::monomial(a, P(a->graph(), {"a"}), P(a->graph(), {"b"})) +
                      Element::monomial(a, P(a->graph(), {"b"}), P(a->graph(), {"a"})));
    CHECK(parse_expr("(a b)^*", a) == parse_expr("b^* a^*", a));
    CHECK(parse_expr("2 * a - 3 * (a + b)", a) == parse_expr("-a - 3 * b", a));
    CHECK(parse_expr("1", a) == Element::unit(a));
    CHECK(parse_expr("0", a).is_zero());
    CHECK(parse_expr("-(a a^*)", a) == parse_expr("b b^* - u", a));

    auto qi = make_algebra(parse_graph(kE2), RingId::gaussian_rationals());
    Element half = parse_expr("1/2 * (a a^* + a b^* + b a^* + b b^*)", qi);
    CHECK(half.terms().size() == 3);  // a a^* is rewritten to u - b b^*
    CHECK(parse_expr("[1/2+i] * a", qi) == parse_expr("1/2 * a + [i] * a", qi));

    auto e = parse_error([&] { parse_expr("a c", a, "expr"); });
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("'c'") != std::string::npos);
    CHECK_THROWS_AS(parse_expr("a +", a), ParseError);
    CHECK_THROWS_AS(parse_expr("(a", a), ParseError);
    CHECK_THROWS_AS(parse_expr("a ^", a), ParseError);
    CHECK_THROWS_AS(parse_expr("1/2 * a", a), ParseError);
    CHECK_THROWS_AS(parse_expr("a )", a), ParseError);
    CHECK_THROWS_AS(parse_expr("", a), ParseError);
  }

  TEST_CASE("malformed expressions never escape as other exceptions") {
    auto a = make_algebra(e2_minus(), RingId::gaussian_integers());
    const std::string alphabet = "f1 d2 e3^*+-()[]*/i 2u";
    Rng rng(47);
    for (int k = 0; k < 2000; ++k) {
      std::string text;
      for (std::size_t j = uniform(rng, 0, 12); j > 0; --j) text += alphabet[uniform(rng, 0, alphabet.size() - 1)];
      try {
        parse_expr(text, a);
      } catch (const ParseError& err) {
        CHECK(err.line() == 1);
        CHECK(err.column() >= 1);
        CHECK(err.column() <= text.size() + 1);
      }
    }
  }

  TEST_CASE("expression formatting round trip") {
    Rng rng(53);
    for (RingId r : {RingId::integers(), RingId::gaussian_integers(), RingId::quadratic_rationals(2)}) {
      for (int k = 0; k < 100; ++k) {
        auto a = make_algebra(random_graph(rng, 4, 8), r);
        Element x = reduce(a, random_raw(rng, a, 5, 3));
        std::string text = format_element(x);
        CHECK(parse_expr(text, a) == x);
        CHECK(format_element(parse_expr(text, a)) == text);
      }
    }
    auto a = make_algebra(e2(), RingId::integers());
    CHECK(format_element(parse_expr("b a^* + a b^*", a)) == "a b^* + b a^*");
    CHECK(format_element(Element::zero(a)) == "0");
    CHECK(format_element(parse_expr("2 * u - b", a)) == "2 * u - b");
  }

  TEST_CASE("matrices") {
    IntMatrix m = parse_matrix("-1 -1 0\n-1 0 -1\n0 -1 0\n");
    CHECK(m == IntMatrix{{-1, -1, 0}, {-1, 0, -1}, {0, -1, 0}});
    CHECK(parse_matrix(serialize_matrix(m)) == m);
    auto r = parse_error([] { parse_matrix("1 2\n3\n"); });
    CHECK(r.line() == 2);
    auto t = parse_error([] { parse_matrix("1 x\n"); });
    CHECK(t.column() == 3);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK(parse_matrix("123456789012345678901234567890\n")(0, 0) ==
          mpz_class("123456789012345678901234567890"));
  }

  TEST_CASE("matrix round trip") {
    Rng rng(59);
    for (int k = 0; k < 100; ++k) {
      IntMatrix m(uniform(rng, 1, 5), uniform(rng, 1, 5));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(uniform(rng, 0, 20)) - 10;
      }
      CHECK(parse_matrix(serialize_matrix(m)) == m);
    }
  }

  TEST_CASE("homomorphism files") {
    Graph g = parse_graph(kE2);
    const char* gauge =
        "hom E2 -> E2 over Zi\n"
        "v u = u\n"
        "e a = [i] * a   # gauge by i\n"
        "e b = [i] * b\n";
    HomFile h = parse_hom(gauge, g, g);
    CHECK(h.ring == RingId::gaussian_integers());
    CHECK(check_homomorphism(h.images).valid);

    auto missing = parse_error([&] { parse_hom("hom E2 -> E2 over Z\nv u = u\ne a = a\n", g, g); });
    CHECK(std::string(missing.what()).find("'b'") != std::string::npos);
    auto header = parse_error([&] { parse_hom("hom X -> E2 over Z\n", g, g); });
    CHECK(header.line() == 1);
    CHECK(header.column() == 5);
    auto expr = parse_error([&] { parse_hom("hom E2 -> E2 over Z\nv u = u\ne a = a q\ne b = b\n", g, g); });
    CHECK(expr.line() == 3);
    CHECK(expr.column() == 9);
    CHECK_THROWS_AS(parse_hom("hom E2 -> E2 over Z\nv u = u\nv u = u\n", g, g), ParseError);
    CHECK_THROWS_AS(parse_hom("hom E2 -> E2 over R\n", g, g), ParseError);
  }

  TEST_CASE("partition files") {
    Graph g = e2_minus();
    OutSplitPartition p = parse_partition("u : f1 d1 | f2\nv1 : e1 | e2 | d2\n", g);
    CHECK(p.classes[g.vertex("u")].size() == 2);
    CHECK(p.classes[g.vertex("v1")].size() == 3);
    CHECK(p.classes[g.vertex("v2")].size() == 1);
    CHECK_THROWS_AS(parse_partition("u : f1 | f2\n", g), ParseError);        // d1 missing
    CHECK_THROWS_AS(parse_partition("u : f1 d1 | f2 | f1\n", g), ParseError);  // f1 twice
    CHECK_THROWS_AS(parse_partition("u : e1 f1 d1 | f2\n", g), ParseError);   // e1 leaves v1
    CHECK_THROWS_AS(parse_partition("w : f1\n", g), ParseError);
  }
}
