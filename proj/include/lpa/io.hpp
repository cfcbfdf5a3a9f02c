#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lpa/algebra.hpp"
#include "lpa/flow.hpp"
#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"
#include "lpa/moves.hpp"
#include "lpa/ring.hpp"
#include "lpa/structure.hpp"

namespace lpa {

/// Syntax or resolution error with a 1-based position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string input, std::size_t line, std::size_t column, std::string message,
             std::string expected = {});

  const std::string& input() const { return input_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& expected() const { return expected_; }

 private:
  std::string input_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string expected_;
};

// Graph text format:
//   graph <name>
//   vertex <v>
//   edge <e> : <v> -> <w>
// One declaration per line; '#' at the start of a token begins a comment.
Graph parse_graph(std::string_view text, std::string_view input = "<graph>");
std::string serialize_graph(const Graph& g);

/// Sums of terms like 3, -1/2, 2i, 1/2r2, 3t^2 in the given ring.
RingElement parse_ring_literal(std::string_view text, const RingId& ring,
                               std::string_view input = "<literal>");

/// expr := term (('+'|'-') term)*, term := literal ['*' factor+] | factor+,
/// factor := ident ['^*'] | '(' expr ')' ['^*']. Literals start with a digit
/// or are bracketed: `[1+2i] * a`.
Element parse_expr(std::string_view text, const AlgebraPtr& algebra,
                   std::string_view input = "<expr>");
/// Normal-form text ordered by (|beta|, |alpha|, alpha, beta); parse_expr
/// reads it back.
std::string format_element(const Element& x);

/// One row per line of whitespace-separated integers.
IntMatrix parse_matrix(std::string_view text, std::string_view input = "<matrix>");
std::string serialize_matrix(const IntMatrix& m);

struct HomFile {
  std::string source_name;
  std::string target_name;
  RingId ring;
  GeneratorImages images;
};

// Homomorphism file:
//   hom <srcgraph> -> <dstgraph> over <ring>
//   v <vertex> = <expr>
//   e <edge> = <expr>
HomFile parse_hom(std::string_view text, const Graph& source, const Graph& target,
                  std::string_view input = "<hom>");

// Out-split partition file: `<vertex> : <edge> <edge> | <edge> ...` per line.
// Vertices not listed keep a single class.
OutSplitPartition parse_partition(std::string_view text, const Graph& g,
                                  std::string_view input = "<partition>");

}  // namespace lpa
