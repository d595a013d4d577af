// parse.hpp -- the term grammar and canonical printers.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := [coef '*'] bracket
//   bracket := '[' element (',' element)* ']' | atom
//   element := bracket
//   atom    := name ['@' degree]
//   coef    := integer ['/' integer]
//
// Bracket lists denote left-normed nesting; a one-element bracket is the
// element itself. Name prefixes carry default degrees: y -> 0, z -> 1,
// w -> 2; a missing index means 1; explicit degrees reduce mod n.
#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "utlie/cpoly.hpp"
#include "utlie/normal.hpp"

namespace utlie {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class TermParser {
 public:
  TermParser(const std::string& text, int n, FieldSpec field)
      : text_(text), n_(n), field_(field) {}

  WordCombo parse() {
    WordCombo out = make_combo(field_, n_);
    skip_ws();
    bool negative = eat('-');
    for (;;) {
      Scalar coeff = parse_term_into(out, negative);
      (void)coeff;
      skip_ws();
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        break;
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    if (out.terms.empty() && !sawTerm_) throw ParseError("empty expression", pos_);
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer", pos_);
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v < 0) throw ParseError("integer overflow", start);
      ++pos_;
    }
    return text_[start] == '-' ? -v : v;
  }

  Scalar parse_coef() {
    std::size_t start = pos_;
    long long num = parse_integer();
    if (eat('/')) {
      long long den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", start);
      return Scalar::fraction(num, den, field_);
    }
    return Scalar::of(num, field_);
  }

  Variable parse_atom() {
    skip_ws();
    std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];
    if (name.empty()) throw ParseError("expected a variable name", pos_);
    int index = 1;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = v * 10 + (text_[pos_++] - '0');
      if (v < 1 || v > 1000000) throw ParseError("variable index out of range", start);
      index = static_cast<int>(v);
    }
    int degree;
    if (eat('@')) {
      long long d = parse_integer();
      if (d < 0) throw ParseError("negative degree", start);
      degree = static_cast<int>(d % n_);
    } else if (name == "y") {
      degree = 0;
    } else if (name == "z") {
      degree = 1 % n_;
    } else if (name == "w") {
      degree = 2 % n_;
    } else {
      throw ParseError("unknown variable prefix '" + name + "' (use y, z, w, or name@degree)",
                       start);
    }
    return var(degree, index, n_);
  }

  BracketExpr parse_bracket() {
    if (eat('[')) {
      std::size_t open = pos_ - 1;
      BracketExpr e = parse_bracket();
      while (eat(',')) e = BracketExpr::node(std::move(e), parse_bracket());
      if (!eat(']')) throw ParseError("unclosed bracket", open);
      return e;
    }
    return BracketExpr::leaf(parse_atom());
  }

  Scalar parse_term_into(WordCombo& out, bool negative) {
    skip_ws();
    sawTerm_ = true;
    Scalar coeff = Scalar::one(field_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      coeff = parse_coef();
      if (!eat('*')) throw ParseError("expected '*' after a coefficient", at);
    }
    if (negative) coeff = -coeff;
    BracketExpr e = parse_bracket();
    WordCombo part = combo_scale(left_normalize(e, field_), coeff);
    out = combo_add(out, part);
    return coeff;
  }

  const std::string& text_;
  int n_;
  FieldSpec field_;
  std::size_t pos_ = 0;
  bool sawTerm_ = false;
};

}  // namespace detail

/// Parses an expression in the term grammar into a word combination over
/// the given field, with degrees reduced mod n.
inline WordCombo parse_combo(const std::string& text, int n, FieldSpec field) {
  if (n < 2) throw std::invalid_argument("group modulus must be at least 2");
  return detail::TermParser(text, n, field).parse();
}

// ---- printers (outputs re-parse to the same values) ----

inline std::string print_variable(const Variable& v) {
  if (v.degree.value == 0) return "y" + std::to_string(v.index);
  return "z" + std::to_string(v.index) + "@" + std::to_string(v.degree.value);
}

inline std::string print_word(const LieWord& w) {
  if (w.size() == 1) return print_variable(w[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += print_variable(w[i]);
  }
  return s + "]";
}

inline std::string print_scalar(const Scalar& s) { return s.str(); }

namespace detail {

/// Shared term-list printer: sign-aware over the rationals, plain residue
/// coefficients over a prime field.
template <class TermMap, class WordOf>
std::string print_terms(const TermMap& terms, FieldSpec field, WordOf wordOf) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    std::string mag;
    bool negative = false;
    if (field.characteristic == 0) {
      Rational q = coeff.rational();
      negative = q < 0;
      mag = ((negative ? -q : q)).str();
    } else {
      mag = std::to_string(coeff.residue());
    }
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != "1") out << mag << "*";
    out << wordOf(key);
  }
  return out.str();
}

}  // namespace detail

inline std::string print_combo(const WordCombo& c) {
  return detail::print_terms(c.terms, c.field, [](const LieWord& w) { return print_word(w); });
}

inline std::string print_poly(const LiePoly& p) {
  return detail::print_terms(p.terms, p.field,
                             [](const NormalMonomial& m) { return print_word(m.word()); });
}

inline std::string print_cindeterminate(const CIndeterminate& x) {
  if (x.kind == CIndeterminate::Kind::Gamma)
    return "g(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
  return "t(" + std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c) + ")";
}

inline std::string print_cmonomial(const CMonomial& m) {
  if (m.exps.empty()) return "1";
  std::string s;
  bool first = true;
  for (const auto& [x, e] : m.exps) {
    if (!first) s += "*";
    first = false;
    s += print_cindeterminate(x);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline std::string print_cpolynomial(const CPolynomial& p) {
  return detail::print_terms(p.terms(), p.field(),
                             [](const CMonomial& m) { return print_cmonomial(m); });
}

/// Multidegree syntax: comma-separated entries "var[:count]", e.g.
/// "z1@1,z2@1,y1:2"; counts default to 1.
inline Multidegree parse_multidegree(const std::string& text, int n) {
  Multidegree md;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    // the variable itself may contain no commas, so split on entry level
    std::string entry = text.substr(pos, next == std::string::npos ? next : next - pos);
    std::size_t colon = entry.find(':');
    std::string varText = colon == std::string::npos ? entry : entry.substr(0, colon);
    int count = 1;
    if (colon != std::string::npos) {
      try {
        count = std::stoi(entry.substr(colon + 1));
      } catch (const std::exception&) {
        throw ParseError("bad count in multidegree entry '" + entry + "'", pos);
      }
      if (count < 1) throw ParseError("multidegree count must be positive", pos);
    }
    WordCombo c = parse_combo(varText, n, make_field(0));
    if (c.terms.size() != 1 || c.terms.begin()->first.size() != 1)
      throw ParseError("multidegree entry must be a single variable", pos);
    md[c.terms.begin()->first[0]] += count;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (md.empty()) throw ParseError("empty multidegree", 0);
  return md;
}

inline std::string print_multidegree(const Multidegree& md) {
  std::string s;
  bool first = true;
  for (const auto& [v, cnt] : md) {
    if (!first) s += ",";
    first = false;
    s += print_variable(v);
    if (cnt != 1) s += ":" + std::to_string(cnt);
  }
  return s;
}

/// Sequence-vector syntax: tuples separated by ';', entries by ',', e.g.
/// "1,0;0,2"; an empty string is the empty sequence.
inline SeqVector parse_seq(const std::string& text, int k) {
  std::vector<std::vector<int>> items;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t next = text.find(';', pos);
      std::string tupleText =
          text.substr(pos, next == std::string::npos ? next : next - pos);
      std::vector<int> tuple;
      std::size_t tpos = 0;
      while (true) {
        std::size_t tnext = tupleText.find(',', tpos);
        std::string num =
            tupleText.substr(tpos, tnext == std::string::npos ? tnext : tnext - tpos);
        try {
          tuple.push_back(std::stoi(num));
        } catch (const std::exception&) {
          throw ParseError("bad tuple entry '" + num + "'", pos + tpos);
        }
        if (tnext == std::string::npos) break;
        tpos = tnext + 1;
      }
      items.push_back(std::move(tuple));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  try {
    return make_seq(k, std::move(items));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

inline std::string print_seq(const SeqVector& s) {
  std::string out;
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < s.items[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(s.items[i][j]);
    }
  }
  return out;
}

}  // namespace utlie
