#include "colorlie/exprparse.hpp"

#include <cctype>

#include "colorlie/error.hpp"

namespace colorlie {

namespace {

struct Token {
  enum Kind { Number, Ident, Q, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = static_cast<int>(i) + 1;
    if (isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string name = s.substr(i, j - i);
      out.push_back({name == "q" ? Token::Q : Token::Ident, std::move(name), col});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", 1, col);
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Token::End, "", static_cast<int>(s.size()) + 1});
  return out;
}

// Expanded distributive form of a subexpression.
using Terms = std::vector<Word>;

Terms scalar_term(const Scalar& s) { return {Word{s, {}}}; }

void append_scaled(Terms& into, const Terms& ts, const Scalar& f) {
  for (const auto& t : ts) {
    Scalar c = t.coeff * f;
    if (!c.is_zero()) into.push_back({c, t.gens});
  }
}

// Distributed expansion can explode combinatorially ((x+y)^n); cap the term
// count so hostile input fails fast instead of exhausting memory.
constexpr size_t kMaxTerms = 100000;

Terms product(const Terms& a, const Terms& b) {
  Terms out;
  if (a.size() * b.size() > kMaxTerms)
    throw ParseError("expression expands to too many terms");
  for (const auto& x : a)
    for (const auto& y : b) {
      Scalar c = x.coeff * y.coeff;
      if (c.is_zero()) continue;
      Word w{c, x.gens};
      w.gens.insert(w.gens.end(), y.gens.begin(), y.gens.end());
      out.push_back(std::move(w));
    }
  return out;
}

bool pure_scalar(const Terms& ts) {
  for (const auto& t : ts)
    if (!t.gens.empty()) return false;
  return true;
}

Scalar fold_scalar(const Terms& ts) {
  Scalar s(0);
  for (const auto& t : ts) s += t.coeff;
  return s;
}

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& names)
      : toks_(tokenize(text)), names_(names) {}

  Terms parse() {
    Terms t = expr();
    expect(Token::End, "end of input");
    return t;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what + ", found '" + peek().text + "'", 1, peek().column);
    ++pos_;
  }

  Terms expr() {
    bool neg = false;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus)
      neg = take().kind == Token::Minus;
    Terms acc;
    append_scaled(acc, term(), Scalar(neg ? -1 : 1));
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = take().kind == Token::Minus;
      append_scaled(acc, term(), Scalar(minus ? -1 : 1));
    }
    return acc;
  }

  Terms term() {
    Terms acc = factor();
    while (peek().kind == Token::Star || peek().kind == Token::Slash) {
      bool divide = take().kind == Token::Slash;
      int col = peek().column;
      Terms rhs = factor();
      if (divide) {
        if (!pure_scalar(rhs))
          throw ParseError("division by a non-scalar expression", 1, col);
        Scalar d = fold_scalar(rhs);
        if (d.is_zero()) throw ParseError("division by zero", 1, col);
        Terms out;
        append_scaled(out, acc, d.inverse());
        acc = std::move(out);
      } else {
        acc = product(acc, rhs);
      }
    }
    return acc;
  }

  Terms factor() {
    Terms base = atom();
    if (peek().kind != Token::Caret) return base;
    int col = take().column;
    long n = integer();
    if (pure_scalar(base)) return scalar_term(fold_scalar(base).pow(n));
    if (n < 0)
      throw ParseError("negative power of a non-scalar expression", 1, col);
    size_t total = 0;
    for (const auto& w : base) total += w.gens.size();
    if (total * static_cast<size_t>(n) > kMaxTerms)
      throw ParseError("expression expands to too many terms", 1, col);
    Terms acc = scalar_term(Scalar(1));
    for (long i = 0; i < n; ++i) acc = product(acc, base);
    return acc;
  }

  Terms atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Number: {
        Token tok = take();
        return scalar_term(Scalar(Poly(BigInt(tok.text, 10))));
      }
      case Token::Q:
        take();
        return scalar_term(Scalar::q_power(1));
      case Token::Ident: {
        Token tok = take();
        for (size_t i = 0; i < names_.size(); ++i)
          if (names_[i] == tok.text) return {Word{Scalar(1), {static_cast<int>(i)}}};
        throw ParseError("unknown identifier '" + tok.text + "'", 1, tok.column);
      }
      case Token::LParen: {
        take();
        Terms inner = expr();
        expect(Token::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected an atom, found '" + t.text + "'", 1, t.column);
    }
  }

  long integer() {
    bool neg = false;
    if (peek().kind == Token::Minus || peek().kind == Token::Plus)
      neg = take().kind == Token::Minus;
    if (peek().kind != Token::Number)
      throw ParseError("expected an integer exponent, found '" + peek().text + "'", 1,
                       peek().column);
    Token tok = take();
    if (tok.text.size() > 4)
      throw ParseError("exponent out of range", 1, tok.column);
    long v = std::stol(tok.text);
    if (v > 4096) throw ParseError("exponent out of range", 1, tok.column);
    return neg ? -v : v;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const std::vector<std::string>& names_;
};

}  // namespace

std::vector<Word> parse_expression(const std::string& text,
                                   const std::vector<std::string>& generator_names) {
  Parser p(text, generator_names);
  return p.parse();
}

Scalar parse_scalar(const std::string& text) {
  std::vector<std::string> none;
  Parser p(text, none);
  Terms t = p.parse();
  return fold_scalar(t);  // words are impossible without generator names
}

}  // namespace colorlie
