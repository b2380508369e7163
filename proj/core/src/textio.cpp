#include "koszul/textio.hpp"

#include <cctype>
#include <map>

#include "koszul/errors.hpp"

namespace koszul {

bool ParsedInput::operator==(const ParsedInput& o) const {
  if (vars != o.vars || has_ideal != o.has_ideal ||
      has_module != o.has_module ||
      module_gen_degrees != o.module_gen_degrees)
    return false;
  auto polys_equal = [](const std::vector<MultiPolynomial>& a,
                        const std::vector<MultiPolynomial>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!a[i].equals(b[i])) return false;
    return true;
  };
  if (!polys_equal(ideal_gens, o.ideal_gens)) return false;
  if (module_relations.size() != o.module_relations.size()) return false;
  for (size_t i = 0; i < module_relations.size(); ++i)
    if (!polys_equal(module_relations[i], o.module_relations[i]))
      return false;
  return true;
}

namespace {

enum class Tok { Ident, Number, Caret, Star, Plus, Minus, Comma, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(
                                      text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    current_ = {Tok::End, "", line_, col_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    auto single = [&](Tok k) {
      current_ = {k, std::string(1, c), line_, col_};
      ++pos_;
      ++col_;
    };
    if (c == '^') return single(Tok::Caret);
    if (c == '*') return single(Tok::Star);
    if (c == '+') return single(Tok::Plus);
    if (c == '-') return single(Tok::Minus);
    if (c == ',') return single(Tok::Comma);
    if (c == ';') return single(Tok::Semi);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_ = {Tok::Number, text_.substr(start, pos_ - start), line_, col_};
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      current_ = {Tok::Ident, text_.substr(start, pos_ - start), line_, col_};
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    throw parse_error("unexpected character '" + std::string(1, c) +
                      "' at line " + std::to_string(line_) + ", column " +
                      std::to_string(col_));
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_;
};

[[noreturn]] void fail(const Token& t, const std::string& what) {
  std::string seen = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw parse_error(what + " at line " + std::to_string(t.line) +
                    ", column " + std::to_string(t.col) + " (found " + seen +
                    ")");
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ParsedInput run() {
    ParsedInput in;
    expect_keyword("ring");
    in.vars = ident_list();
    expect(Tok::Semi, "expected ';' after the ring stanza");
    for (size_t v = 0; v < in.vars.size(); ++v)
      if (!vars_.emplace(in.vars[v], v).second)
        throw parse_error("variable '" + in.vars[v] + "' declared twice");

    while (lex_.peek().kind != Tok::End) {
      Token head = lex_.take();
      if (head.kind != Tok::Ident) fail(head, "expected a stanza keyword");
      if (head.text == "ideal") {
        if (in.has_ideal) fail(head, "duplicate ideal stanza");
        in.has_ideal = true;
        in.ideal_gens = poly_list("ideal generator");
        expect(Tok::Semi, "expected ';' after the ideal stanza");
      } else if (head.text == "module") {
        if (in.has_module) fail(head, "duplicate module stanza");
        in.has_module = true;
        expect_keyword("gens");
        in.module_gen_degrees = degree_list();
        expect(Tok::Semi, "expected ';' after the generator degrees");
      } else if (head.text == "rel") {
        if (!in.has_module) fail(head, "rel stanza before module stanza");
        std::vector<MultiPolynomial> col = poly_list("relation entry");
        expect(Tok::Semi, "expected ';' after the relation");
        if (col.size() != in.module_gen_degrees.size())
          fail(head, "relation entry count does not match the generators");
        in.module_relations.push_back(std::move(col));
      } else {
        fail(head, "unknown stanza keyword");
      }
    }
    return in;
  }

 private:
  void expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) fail(lex_.peek(), what);
    lex_.take();
  }

  void expect_keyword(const std::string& kw) {
    Token t = lex_.peek();
    if (t.kind != Tok::Ident || t.text != kw)
      fail(t, "expected keyword '" + kw + "'");
    lex_.take();
  }

  std::vector<std::string> ident_list() {
    std::vector<std::string> out;
    while (true) {
      Token t = lex_.peek();
      if (t.kind != Tok::Ident) fail(t, "expected a variable name");
      out.push_back(lex_.take().text);
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    return out;
  }

  std::vector<int> degree_list() {
    std::vector<int> out;
    while (true) {
      Token t = lex_.peek();
      if (t.kind != Tok::Number) fail(t, "expected a generator degree");
      lex_.take();
      if (t.text.size() > 6) fail(t, "generator degree out of range");
      out.push_back(std::stoi(t.text));
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    return out;
  }

  std::vector<MultiPolynomial> poly_list(const std::string& role) {
    std::vector<MultiPolynomial> out;
    if (lex_.peek().kind == Tok::Semi) return out;  // empty list allowed
    while (true) {
      Token at = lex_.peek();
      MultiPolynomial p = poly();
      if (!p.is_homogeneous())
        throw parse_error(role + " starting at line " +
                          std::to_string(at.line) + ", column " +
                          std::to_string(at.col) + " mixes degrees");
      out.push_back(std::move(p));
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    return out;
  }

  MultiPolynomial poly() {
    std::vector<std::pair<Monomial, Rat>> terms;
    bool negative = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      negative = true;
    } else if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    }
    while (true) {
      terms.push_back(term(negative));
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        negative = false;
      } else if (k == Tok::Minus) {
        lex_.take();
        negative = true;
      } else {
        break;
      }
    }
    return MultiPolynomial::from_terms(std::move(terms), Field{});
  }

  std::pair<Monomial, Rat> term(bool negative) {
    Rat coef(1);
    Monomial m(vars_.size());
    bool has_factor = false;
    Token t = lex_.peek();
    if (t.kind == Tok::Number) {
      lex_.take();
      coef = Rat(Int(t.text));
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        factor(m);
        has_factor = true;
      } else if (lex_.peek().kind == Tok::Ident) {
        fail(lex_.peek(), "expected '*' between coefficient and variable");
      }
    } else if (t.kind == Tok::Ident) {
      factor(m);
      has_factor = true;
    } else {
      fail(t, "expected a term");
    }
    while (has_factor && lex_.peek().kind == Tok::Star) {
      lex_.take();
      factor(m);
    }
    if (negative) coef = -coef;
    return {std::move(m), std::move(coef)};
  }

  void factor(Monomial& m) {
    Token t = lex_.peek();
    if (t.kind != Tok::Ident) fail(t, "expected a variable name");
    lex_.take();
    auto it = vars_.find(t.text);
    if (it == vars_.end())
      throw parse_error("unknown variable '" + t.text + "' at line " +
                        std::to_string(t.line) + ", column " +
                        std::to_string(t.col));
    int e = 1;
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token p = lex_.peek();
      if (p.kind != Tok::Number) fail(p, "expected an exponent");
      lex_.take();
      if (p.text.size() > 6) fail(p, "exponent out of range");
      e = std::stoi(p.text);
    }
    m.exp[it->second] += e;
  }

  Lexer lex_;
  std::map<std::string, size_t> vars_;
};

}  // namespace

ParsedInput parse_input(const std::string& text) {
  return Parser(text).run();
}

std::string print_input(const ParsedInput& in) {
  std::string s = "ring ";
  for (size_t v = 0; v < in.vars.size(); ++v) {
    if (v) s += ", ";
    s += in.vars[v];
  }
  s += ";\n";
  if (in.has_ideal) {
    s += "ideal ";
    for (size_t g = 0; g < in.ideal_gens.size(); ++g) {
      if (g) s += ", ";
      s += in.ideal_gens[g].str(in.vars);
    }
    s += ";\n";
  }
  if (in.has_module) {
    s += "module gens ";
    for (size_t g = 0; g < in.module_gen_degrees.size(); ++g) {
      if (g) s += ", ";
      s += std::to_string(in.module_gen_degrees[g]);
    }
    s += ";\n";
    for (const auto& col : in.module_relations) {
      s += "rel ";
      for (size_t r = 0; r < col.size(); ++r) {
        if (r) s += ", ";
        s += col[r].str(in.vars);
      }
      s += ";\n";
    }
  }
  return s;
}

}  // namespace koszul
