#include "lpa/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace lpa {

ParseError::ParseError(std::string input, std::size_t line, std::size_t column, std::string message,
                       std::string expected)
    : std::runtime_error(input + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message + (expected.empty() ? "" : " (expected " + expected + ")")),
      input_(std::move(input)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

// Character cursor that tracks 1-based line and column.
class Cursor {
 public:
  Cursor(std::string_view text, std::string_view input, std::size_t line = 1, std::size_t column = 1)
      : text_(text), input_(input), line_(line), column_(column) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    get();
    return true;
  }
  void expect(char c, std::string_view what) {
    if (!accept(c)) fail("unexpected " + describe_next(), std::string(what));
  }
  std::string describe_next() const {
    if (done()) return "end of input";
    return std::string("'") + peek() + "'";
  }
  [[noreturn]] void fail(std::string message, std::string expected = {}) const {
    throw ParseError(std::string(input_), line_, column_, std::move(message), std::move(expected));
  }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string_view text_;
  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_digits(Cursor& cur) {
  std::string out;
  while (is_digit(cur.peek())) out += cur.get();
  return out;
}

// number ['/' number], assuming the cursor sits on a digit.
mpq_class read_rational(Cursor& cur) {
  mpz_class num(read_digits(cur));
  mpz_class den(1);
  cur.skip_space();
  if (cur.peek() == '/') {
    cur.get();
    cur.skip_space();
    if (!is_digit(cur.peek())) cur.fail("malformed rational", "denominator digits");
    den = mpz_class(read_digits(cur));
    if (den == 0) cur.fail("zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Optional basis symbol after a coefficient: returns the coordinate index,
// or 0 when no symbol follows.
std::size_t read_basis(Cursor& cur, const RingId& ring) {
  cur.skip_space();
  char c = cur.peek();
  if (ring.is_gaussian() && c == 'i' && !std::isalnum(static_cast<unsigned char>(cur.peek(1)))) {
    cur.get();
    return 1;
  }
  if (ring.is_quadratic() && c == 'r' && is_digit(cur.peek(1))) {
    cur.get();
    std::string d = read_digits(cur);
    if (d != std::to_string(ring.radicand())) {
      cur.fail("radical r" + d + " does not belong to ring " + ring.name(),
               "r" + std::to_string(ring.radicand()));
    }
    return 1;
  }
  if (ring.is_polynomial() && c == 't' && !std::isalnum(static_cast<unsigned char>(cur.peek(1)))) {
    cur.get();
    cur.skip_space();
    if (cur.peek() == '^' && cur.peek(1) != '*') {
      cur.get();
      cur.skip_space();
      if (!is_digit(cur.peek())) cur.fail("malformed exponent", "digits after 't^'");
      std::string k = read_digits(cur);
      if (k.size() > 6) cur.fail("exponent too large");
      return static_cast<std::size_t>(std::stoul(k));
    }
    return 1;
  }
  return 0;
}

RingElement make_scalar(Cursor& cur, const RingId& ring, const mpq_class& q, std::size_t k) {
  std::vector<mpq_class> coords(k + 1, mpq_class(0));
  coords[k] = q;
  try {
    return RingElement(ring, std::move(coords));
  } catch (const std::invalid_argument& e) {
    cur.fail(std::string("literal not in ring ") + ring.name() + ": " + e.what());
  }
}

bool basis_start(const Cursor& cur, const RingId& ring) {
  char c = cur.peek();
  return (ring.is_gaussian() && c == 'i') || (ring.is_quadratic() && c == 'r') ||
         (ring.is_polynomial() && c == 't');
}

// One signed-free monomial literal: number [basis] or a bare basis symbol.
RingElement read_literal_term(Cursor& cur, const RingId& ring) {
  cur.skip_space();
  if (is_digit(cur.peek())) {
    mpq_class q = read_rational(cur);
    return make_scalar(cur, ring, q, read_basis(cur, ring));
  }
  if (basis_start(cur, ring)) {
    std::size_t k = read_basis(cur, ring);
    if (k == 0) cur.fail("malformed ring literal", "a number or basis symbol");
    return make_scalar(cur, ring, mpq_class(1), k);
  }
  cur.fail("unexpected " + cur.describe_next() + " in ring literal", "a number or basis symbol");
}

// Full literal: [sign] term (('+'|'-') term)*; stops at anything else.
RingElement read_literal_sum(Cursor& cur, const RingId& ring) {
  RingElement total = RingElement::zero(ring);
  bool negative = false;
  if (cur.accept('-')) negative = true;
  else cur.accept('+');
  for (;;) {
    RingElement t = read_literal_term(cur, ring);
    total += negative ? -t : t;
    cur.skip_space();
    if (cur.peek() == '+' || cur.peek() == '-') {
      negative = cur.get() == '-';
      continue;
    }
    return total;
  }
}

// --- algebra expressions -------------------------------------------------

class ExprParser {
 public:
  ExprParser(std::string_view text, const AlgebraPtr& algebra, std::string_view input,
             std::size_t line = 1, std::size_t column = 1)
      : cur_(text, input, line, column), algebra_(algebra), input_(input) {}

  Element parse_all() {
    Element x = expr();
    cur_.skip_space();
    if (!cur_.done()) cur_.fail("unexpected " + cur_.describe_next(), "'+', '-' or end of input");
    return x;
  }

 private:
  const RingId& ring() const { return algebra_->ring(); }

  Element expr() {
    cur_.skip_space();
    bool negative = false;
    if (cur_.accept('-')) negative = true;
    else cur_.accept('+');
    Element total = Element::zero(algebra_);
    for (;;) {
      Element t = term();
      if (negative) total -= t;
      else total += t;
      cur_.skip_space();
      if (cur_.peek() == '+' || cur_.peek() == '-') {
        negative = cur_.get() == '-';
        continue;
      }
      return total;
    }
  }

  bool factor_start() {
    cur_.skip_space();
    return ident_start(cur_.peek()) || cur_.peek() == '(';
  }

  Element term() {
    cur_.skip_space();
    std::optional<RingElement> scalar;
    if (is_digit(cur_.peek())) {
      mpq_class q = read_rational(cur_);
      scalar = make_scalar(cur_, ring(), q, read_basis(cur_, ring()));
    } else if (cur_.peek() == '[') {
      cur_.get();
      scalar = read_literal_sum(cur_, ring());
      cur_.expect(']', "']' closing the ring literal");
    }
    if (scalar) {
      if (!cur_.accept('*')) {
        cur_.skip_space();
        if (ident_start(cur_.peek()) || cur_.peek() == '(') {
          cur_.fail("scalar literal must be followed by '*'", "'*'");
        }
        return Element::scalar(algebra_, *scalar);
      }
      if (!factor_start()) cur_.fail("unexpected " + cur_.describe_next(), "identifier or '('");
    } else if (!factor_start()) {
      cur_.fail("unexpected " + cur_.describe_next(), "a term");
    }
    std::optional<Element> product;
    while (factor_start()) {
      Element f = factor();
      product = product ? *product * f : std::move(f);
    }
    return scalar ? *scalar * *product : *product;
  }

  Element factor() {
    cur_.skip_space();
    Element base(algebra_);
    if (cur_.peek() == '(') {
      cur_.get();
      base = expr();
      cur_.expect(')', "')'");
    } else {
      base = identifier();
    }
    cur_.skip_space();
    if (cur_.peek() == '^' && cur_.peek(1) == '*') {
      cur_.get();
      cur_.get();
      return base.star();
    }
    return base;
  }

  Element identifier() {
    std::size_t line = cur_.line(), column = cur_.column();
    std::string name;
    while (!cur_.done()) {
      char c = cur_.peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '\'' ||
          c == '.') {
        name += cur_.get();
      } else if (c == '^' && cur_.peek(1) != '*' && cur_.peek(1) != '\0' &&
                 !std::isspace(static_cast<unsigned char>(cur_.peek(1)))) {
        name += cur_.get();
      } else {
        break;
      }
    }
    const Graph& g = algebra_->graph();
    if (auto v = g.find_vertex(name)) return Element::vertex(algebra_, *v);
    if (auto e = g.find_edge(name)) return Element::edge(algebra_, *e);
    throw ParseError(input_, line, column, "unknown identifier '" + name + "'",
                     "a vertex or edge of graph '" + g.name() + "'");
  }

  Cursor cur_;
  AlgebraPtr algebra_;
  std::string input_;
};

// --- line-oriented formats -------------------------------------------------

struct Token {
  std::string text;
  std::size_t column;
};

// Whitespace tokens of a line; a token starting with '#' ends the line.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

// Drops a comment: '#' at the start of the line or after whitespace.
std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::size_t line_end_column(std::string_view line) { return line.size() + 1; }

}  // namespace

Graph parse_graph(std::string_view text, std::string_view input) {
  const std::string in(input);
  std::string name = "G";
  bool have_header = false;
  std::vector<std::string> vertices;
  struct PendingEdge {
    EdgeSpec spec;
    std::size_t line, source_col, range_col;
  };
  std::vector<PendingEdge> edges;
  std::set<std::string> names;

  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    auto need = [&](std::size_t count, std::string_view shape) {
      if (tokens.size() < count) {
        throw ParseError(in, line_no, line_end_column(lines[ln]), "incomplete declaration",
                         std::string(shape));
      }
      if (tokens.size() > count) {
        throw ParseError(in, line_no, tokens[count].column,
                         "unexpected '" + tokens[count].text + "'", "end of line");
      }
    };
    auto declare = [&](const Token& t) {
      if (!names.insert(t.text).second) {
        throw ParseError(in, line_no, t.column, "duplicate name '" + t.text + "'");
      }
    };
    if (kw == "graph") {
      need(2, "graph <name>");
      if (have_header || !vertices.empty() || !edges.empty()) {
        throw ParseError(in, line_no, tokens[0].column, "graph header must come first and only once");
      }
      have_header = true;
      name = tokens[1].text;
    } else if (kw == "vertex") {
      need(2, "vertex <name>");
      declare(tokens[1]);
      vertices.push_back(tokens[1].text);
    } else if (kw == "edge") {
      if (tokens.size() > 2 && tokens[2].text != ":") {
        throw ParseError(in, line_no, tokens[2].column, "unexpected '" + tokens[2].text + "'", "':'");
      }
      if (tokens.size() > 4 && tokens[4].text != "->") {
        throw ParseError(in, line_no, tokens[4].column, "unexpected '" + tokens[4].text + "'", "'->'");
      }
      need(6, "edge <name> : <source> -> <range>");
      declare(tokens[1]);
      edges.push_back({EdgeSpec{tokens[1].text, tokens[3].text, tokens[5].text}, line_no,
                       tokens[3].column, tokens[5].column});
    } else {
      throw ParseError(in, line_no, tokens[0].column, "unknown declaration '" + kw + "'",
                       "'graph', 'vertex' or 'edge'");
    }
  }

  std::set<std::string> vertex_set(vertices.begin(), vertices.end());
  std::vector<EdgeSpec> specs;
  for (auto& e : edges) {
    if (!vertex_set.contains(e.spec.source)) {
      throw ParseError(in, e.line, e.source_col, "unknown vertex '" + e.spec.source + "'",
                       "a declared vertex");
    }
    if (!vertex_set.contains(e.spec.range)) {
      throw ParseError(in, e.line, e.range_col, "unknown vertex '" + e.spec.range + "'",
                       "a declared vertex");
    }
    specs.push_back(std::move(e.spec));
  }
  try {
    return Graph(name, std::move(vertices), std::move(specs));
  } catch (const GraphError& err) {
    throw ParseError(in, 1, 1, err.what());
  }
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.name() << '\n';
  for (const auto& v : g.vertex_names()) os << "vertex " << v << '\n';
  for (const auto& e : g.edge_specs()) {
    os << "edge " << e.name << " : " << e.source << " -> " << e.range << '\n';
  }
  return os.str();
}

RingElement parse_ring_literal(std::string_view text, const RingId& ring, std::string_view input) {
  Cursor cur(text, input);
  RingElement out = read_literal_sum(cur, ring);
  cur.skip_space();
  if (!cur.done()) cur.fail("unexpected " + cur.describe_next(), "'+', '-' or end of literal");
  return out;
}

namespace {

Element parse_expr_at(std::string_view text, const AlgebraPtr& algebra, std::string_view input,
                      std::size_t line, std::size_t column) {
  ExprParser p(text, algebra, input, line, column);
  return p.parse_all();
}

std::string monomial_text(const Graph& g, const Monomial& m) {
  if (m.alpha.trivial() && m.beta.trivial()) return g.vertex_name(m.alpha.base);
  std::string out;
  for (EdgeIndex e : m.alpha.edges) {
    if (!out.empty()) out += ' ';
    out += g.edge(e).name;
  }
  for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += g.edge(*it).name + "^*";
  }
  return out;
}

// Single-coordinate coefficient: (is_negative, magnitude text or "" for 1).
std::pair<bool, std::string> coefficient_text(const RingElement& c) {
  std::size_t nonzero = 0, index = 0;
  for (std::size_t k = 0; k < c.coords().size(); ++k) {
    if (c.coords()[k] != 0) {
      ++nonzero;
      index = k;
    }
  }
  if (nonzero == 1) {
    const mpq_class& q = c.coords()[index];
    const bool negative = q < 0;
    RingElement magnitude = negative ? -c : c;
    if (magnitude.is_one()) return {negative, ""};
    std::string lit = to_string(magnitude);
    if (!is_digit(lit.front())) lit = "[" + lit + "]";
    return {negative, lit};
  }
  return {false, "[" + to_string(c) + "]"};
}

}  // namespace

Element parse_expr(std::string_view text, const AlgebraPtr& algebra, std::string_view input) {
  return parse_expr_at(text, algebra, input, 1, 1);
}

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  const Graph& g = x.graph();
  std::vector<const Element::TermMap::value_type*> order;
  for (const auto& kv : x.terms()) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [&](auto* s, auto* t) {
    const Monomial& a = s->first;
    const Monomial& b = t->first;
    if (a.beta.length() != b.beta.length()) return a.beta.length() < b.beta.length();
    if (a.alpha.length() != b.alpha.length()) return a.alpha.length() < b.alpha.length();
    if (a.alpha != b.alpha) return g.path_less(a.alpha, b.alpha);
    return g.path_less(a.beta, b.beta);
  });
  std::string out;
  for (auto* kv : order) {
    auto [negative, coeff] = coefficient_text(kv->second);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!coeff.empty()) out += coeff + " * ";
    out += monomial_text(g, kv->first);
  }
  return out;
}

IntMatrix parse_matrix(std::string_view text, std::string_view input) {
  const std::string in(input);
  std::vector<std::vector<mpz_class>> rows;
  std::size_t first_line = 0;
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    std::vector<mpz_class> row;
    for (const auto& t : tokens) {
      if (!is_integer_token(t.text)) {
        throw ParseError(in, ln + 1, t.column, "'" + t.text + "' is not an integer", "an integer");
      }
      std::string digits = t.text.front() == '+' ? t.text.substr(1) : t.text;
      row.emplace_back(digits);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(in, ln + 1, tokens.front().column,
                       "row has " + std::to_string(row.size()) + " entries but row at line " +
                           std::to_string(first_line) + " has " +
                           std::to_string(rows.front().size()),
                       std::to_string(rows.front().size()) + " entries");
    }
    if (rows.empty()) first_line = ln + 1;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(in, 1, 1, "empty matrix", "at least one row");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string serialize_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

HomFile parse_hom(std::string_view text, const Graph& source, const Graph& target,
                  std::string_view input) {
  const std::string in(input);
  auto lines = split_lines(text);
  std::optional<HomFile> out;
  std::vector<bool> vertex_seen(source.vertex_count(), false);
  std::vector<bool> edge_seen(source.edge_count(), false);

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    if (!out) {
      if (tokens[0].text != "hom") {
        throw ParseError(in, line_no, tokens[0].column, "missing header",
                         "'hom <source> -> <target> over <ring>'");
      }
      if (tokens.size() != 6 || tokens[2].text != "->" || tokens[4].text != "over") {
        throw ParseError(in, line_no, tokens[0].column, "malformed header",
                         "'hom <source> -> <target> over <ring>'");
      }
      if (tokens[1].text != source.name()) {
        throw ParseError(in, line_no, tokens[1].column,
                         "header names source graph '" + tokens[1].text + "' but the source is '" +
                             source.name() + "'");
      }
      if (tokens[3].text != target.name()) {
        throw ParseError(in, line_no, tokens[3].column,
                         "header names target graph '" + tokens[3].text + "' but the target is '" +
                             target.name() + "'");
      }
      RingId ring;
      try {
        ring = RingId::from_name(tokens[5].text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(in, line_no, tokens[5].column, e.what(), "a ring name");
      }
      out.emplace(HomFile{tokens[1].text, tokens[3].text, ring,
                          GeneratorImages(source, make_algebra(target, ring))});
      continue;
    }
    const std::string& kind = tokens[0].text;
    if ((kind != "v" && kind != "e") || tokens.size() < 3 || tokens[2].text != "=") {
      throw ParseError(in, line_no, tokens[0].column, "malformed image line",
                       "'v <vertex> = <expr>' or 'e <edge> = <expr>'");
    }
    std::string_view line = strip_comment(lines[ln]);
    std::size_t eq = line.find('=', tokens[2].column - 1);
    std::string_view expr = line.substr(eq + 1);
    Element x = parse_expr_at(expr, out->images.target, input, line_no, eq + 2);
    if (kind == "v") {
      auto v = source.find_vertex(tokens[1].text);
      if (!v) throw ParseError(in, line_no, tokens[1].column, "unknown vertex '" + tokens[1].text + "'");
      if (vertex_seen[*v]) {
        throw ParseError(in, line_no, tokens[1].column, "duplicate image for '" + tokens[1].text + "'");
      }
      vertex_seen[*v] = true;
      out->images.set_vertex(*v, std::move(x));
    } else {
      auto e = source.find_edge(tokens[1].text);
      if (!e) throw ParseError(in, line_no, tokens[1].column, "unknown edge '" + tokens[1].text + "'");
      if (edge_seen[*e]) {
        throw ParseError(in, line_no, tokens[1].column, "duplicate image for '" + tokens[1].text + "'");
      }
      edge_seen[*e] = true;
      out->images.set_edge(*e, std::move(x));
    }
  }
  if (!out) throw ParseError(in, 1, 1, "missing header", "'hom <source> -> <target> over <ring>'");
  const std::size_t last = lines.size();
  for (VertexIndex v = 0; v < source.vertex_count(); ++v) {
    if (!vertex_seen[v]) {
      throw ParseError(in, last, 1, "no image for vertex '" + source.vertex_name(v) + "'");
    }
  }
  for (EdgeIndex e = 0; e < source.edge_count(); ++e) {
    if (!edge_seen[e]) throw ParseError(in, last, 1, "no image for edge '" + source.edge(e).name + "'");
  }
  return std::move(*out);
}

OutSplitPartition parse_partition(std::string_view text, const Graph& g, std::string_view input) {
  const std::string in(input);
  OutSplitPartition p = OutSplitPartition::trivial(g);
  std::vector<bool> listed(g.vertex_count(), false);
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    if (tokens.size() < 3 || tokens[1].text != ":") {
      throw ParseError(in, ln + 1, tokens[0].column, "malformed partition line",
                       "'<vertex> : <edges> | <edges>'");
    }
    auto v = g.find_vertex(tokens[0].text);
    if (!v) throw ParseError(in, ln + 1, tokens[0].column, "unknown vertex '" + tokens[0].text + "'");
    if (listed[*v]) throw ParseError(in, ln + 1, tokens[0].column, "vertex listed twice");
    listed[*v] = true;
    std::vector<std::vector<EdgeIndex>> classes(1);
    std::vector<EdgeIndex> used;
    for (std::size_t k = 2; k < tokens.size(); ++k) {
      if (tokens[k].text == "|") {
        classes.emplace_back();
        continue;
      }
      auto e = g.find_edge(tokens[k].text);
      if (!e) throw ParseError(in, ln + 1, tokens[k].column, "unknown edge '" + tokens[k].text + "'");
      if (g.edge(*e).source != *v) {
        throw ParseError(in, ln + 1, tokens[k].column,
                         "edge '" + tokens[k].text + "' does not start at '" + tokens[0].text + "'");
      }
      if (std::find(used.begin(), used.end(), *e) != used.end()) {
        throw ParseError(in, ln + 1, tokens[k].column, "edge '" + tokens[k].text + "' listed twice");
      }
      used.push_back(*e);
      classes.back().push_back(*e);
    }
    for (const auto& c : classes) {
      if (c.empty()) {
        throw ParseError(in, ln + 1, tokens[1].column, "empty class in the partition of '" +
                                                            tokens[0].text + "'");
      }
    }
    for (EdgeIndex e : g.out_edges(*v)) {
      if (std::find(used.begin(), used.end(), e) == used.end()) {
        throw ParseError(in, ln + 1, line_end_column(lines[ln]),
                         "edge '" + g.edge(e).name + "' of '" + tokens[0].text + "' is not in any class");
      }
    }
    p.classes[*v] = std::move(classes);
  }
  return p;
}

}  // namespace lpa
