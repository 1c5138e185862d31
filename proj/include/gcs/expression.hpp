#ifndef GCS_EXPRESSION_HPP
#define GCS_EXPRESSION_HPP

// Text grammar for algebra elements:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom
//   atom   := 'S(' id ')' | 'S*(' id ')' | 'P(' id ')' | rational | '(' expr ')'
//
// Rational literals ("1", "3/4") denote scalar multiples of the unit. The
// printer renders a normal form as coefficient-tagged monomials in the
// deterministic term order.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "gcs/algebra.hpp"
#include "gcs/errors.hpp"
#include "gcs/graph.hpp"
#include "gcs/rational.hpp"

namespace gcs {

namespace detail {

class ExpressionParser {
public:
  ExpressionParser(GraphPtr graph, std::string_view src) : graph_(std::move(graph)), src_(src) {}

  AlgebraElement parse() {
    AlgebraElement result = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError("unexpected trailing input at position " + std::to_string(pos_));
    }
    return result;
  }

private:
  AlgebraElement parse_expr() {
    AlgebraElement acc = parse_term();
    while (true) {
      skip_ws();
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  AlgebraElement parse_term() {
    AlgebraElement acc = parse_factor();
    while (true) {
      skip_ws();
      if (accept('*')) {
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    }
  }

  AlgebraElement parse_factor() {
    skip_ws();
    if (accept('-')) return -parse_factor();
    return parse_atom();
  }

  AlgebraElement parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == 'S') {
      ++pos_;
      const bool star = accept('*');
      expect('(');
      const std::string id = read_until(')');
      expect(')');
      return star ? gen_s_star(graph_, id) : gen_s(graph_, id);
    }
    if (c == 'P') {
      ++pos_;
      expect('(');
      const std::string id = read_until(')');
      expect(')');
      return gen_p(graph_, id);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return rational_from_string(read_number()) * unit(graph_);
    }
    throw ParseError(std::string("unexpected character '") + c + "' at position " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos_));
    }
  }

  std::string read_until(char stop) {
    std::string out;
    while (pos_ < src_.size() && src_[pos_] != stop) out += src_[pos_++];
    std::string_view trimmed = out;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
      trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.remove_suffix(1);
    if (trimmed.empty()) throw ParseError("empty identifier in expression");
    return std::string(trimmed);
  }

  std::string read_number() {
    std::string out;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        out += src_[pos_++];
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      out += src_[pos_++];
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        throw ParseError("malformed rational literal");
      }
      digits();
    }
    return out;
  }

  GraphPtr graph_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline AlgebraElement parse_expression(const GraphPtr& g, std::string_view text) {
  return detail::ExpressionParser(g, text).parse();
}

inline std::string path_to_string(const Graph& g, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i > 0) out += ' ';
    out += g.edge_id(p.edges[i]);
  }
  return out;
}

inline std::string monomial_to_string(const Graph& g, const PathMonomial& m) {
  if (m.is_vertex_projection()) return "P(" + g.vertex_id(m.alpha.anchor) + ")";
  std::string out;
  if (!m.alpha.empty()) out += "S(" + path_to_string(g, m.alpha) + ")";
  if (!m.beta.empty()) out += "S*(" + path_to_string(g, m.beta) + ")";
  return out;
}

inline std::string element_to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  const Graph& g = *a.graph();
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : a.terms()) {
    const bool negative = coeff < 0;
    const Rational magnitude = abs(coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + " · ";
    out += monomial_to_string(g, mono);
    first = false;
  }
  return out;
}

} // namespace gcs

#endif // GCS_EXPRESSION_HPP
