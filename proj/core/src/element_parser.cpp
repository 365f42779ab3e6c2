#include <cctype>
#include <map>
#include <sstream>

#include "term_parser.hpp"
#include "ufsr/algebra.hpp"
#include "ufsr/error.hpp"

namespace ufsr {

namespace detail {

namespace {

class TermLexer {
 public:
  TermLexer(const Domain& d, std::string_view text, bool allow_powers)
      : domain_(d), text_(text), allow_powers_(allow_powers) {}

  std::vector<ParsedTerm> run() {
    std::vector<ParsedTerm> terms;
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negate));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-' but found '") + c + "'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  ParsedTerm term(bool negate) {
    skip_space();
    if (at_end()) throw ParseError("expected a term", pos_);
    ParsedTerm t{Scalar::one(domain_), {}};
    if (std::isdigit(static_cast<unsigned char>(peek())) ||
        (peek() == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      t.coefficient = scalar();
    } else {
      t.factors.push_back(factor());
    }
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_space();
      t.factors.push_back(factor());
    }
    if (negate) t.coefficient = -t.coefficient;
    return t;
  }

  Scalar scalar() {
    const std::size_t begin = pos_;
    if (peek() == '-') ++pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    try {
      return Scalar::parse(domain_, text_.substr(begin, pos_ - begin));
    } catch (const ParseError& e) {
      throw ParseError("invalid scalar literal '" + std::string(text_.substr(begin, pos_ - begin)) + "'",
                       begin + e.position());
    }
  }

  ParsedFactor factor() {
    if (at_end()) throw ParseError("expected a generator name", pos_);
    if (!ident_start(peek())) throw ParseError(std::string("expected a generator name but found '") + peek() + "'", pos_);
    ParsedFactor f;
    f.position = pos_;
    const std::size_t begin = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    f.name = std::string(text_.substr(begin, pos_ - begin));
    skip_space();
    if (!at_end() && peek() == '^') {
      if (!allow_powers_) throw ParseError("powers are not allowed here", pos_);
      ++pos_;
      skip_space();
      const std::size_t dbegin = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dbegin == pos_) throw ParseError("expected a positive exponent", dbegin);
      const std::string digits(text_.substr(dbegin, pos_ - dbegin));
      if (digits.size() > 6) throw ParseError("exponent too large", dbegin);
      f.exponent = static_cast<unsigned>(std::stoul(digits));
      if (f.exponent == 0) throw ParseError("exponent must be positive", dbegin);
    }
    return f;
  }

  Domain domain_;
  std::string_view text_;
  bool allow_powers_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(const Domain& d, std::string_view text, bool allow_powers) {
  return TermLexer(d, text, allow_powers).run();
}

}  // namespace detail

Element parse_element(const AlgebraPtr& algebra, std::string_view text) {
  const Domain& d = algebra->field();
  const auto terms = detail::parse_terms(d, text, false);
  Vector free = zero_vector(d, algebra->free_dim());
  for (const auto& t : terms) {
    Mask mask = 0;
    int sign = 1;
    for (const auto& f : t.factors) {
      auto idx = algebra->generator_index(f.name);
      if (!idx) throw ParseError("unknown generator '" + f.name + "'", f.position);
      const Mask bit = Mask{1} << *idx;
      sign *= koszul_sign(mask, bit);
      mask |= bit;
      if (sign == 0) break;
    }
    if (sign == 0) continue;
    Scalar c = t.coefficient;
    if (sign < 0) c = -c;
    free[algebra->free_position(mask)] += c;
  }
  return Element(algebra, algebra->reduce_free(std::move(free)));
}

std::string format_element(const Element& a) {
  const auto& alg = *a.algebra();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Scalar& c = a.coeff(i);
    if (c.is_zero()) continue;
    const bool negative = c.is_negative();
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Scalar mag = c.abs();
    const Mask m = alg.basis()[i];
    if (m == 0) {
      out << mag.to_string();
    } else {
      if (!mag.is_one()) out << mag.to_string() << '*';
      out << alg.monomial_name(m);
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace ufsr
