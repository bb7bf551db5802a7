#include "parse.hpp"

#include <cctype>
#include <limits>

namespace syzgap::detail {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw Error("unexpected character '" + std::string(1, c) + "' at position " +
                    std::to_string(i) + " in \"" + std::string(s) + "\"");
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx)
      : text_(text), ctx_(ctx), f_(*ctx.field), toks_(tokenize(text)) {}

  Sparse run() {
    if (toks_.front().kind == Tok::End) fail("empty expression", 0);
    Sparse r = expr();
    if (peek().kind != Tok::End) fail("unexpected token '" + peek().text + "'", peek().pos);
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t pos) const {
    throw Error("malformed expression \"" + std::string(text_) + "\": " + what +
                " at position " + std::to_string(pos));
  }
  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  Sparse constant(Elem c) const {
    Sparse s;
    if (c != 0) s[{0, 0}] = c;
    return s;
  }

  Sparse add(const Sparse& a, const Sparse& b, bool negate) const {
    Sparse r = a;
    for (const auto& [k, v] : b) {
      Elem w = negate ? f_.neg(v) : v;
      auto it = r.find(k);
      if (it == r.end()) {
        r[k] = w;
      } else {
        it->second = f_.add(it->second, w);
        if (it->second == 0) r.erase(it);
      }
    }
    return r;
  }

  Sparse mul(const Sparse& a, const Sparse& b) const {
    Sparse r;
    for (const auto& [ka, va] : a) {
      for (const auto& [kb, vb] : b) {
        std::array<int, 2> k{ka[0] + kb[0], ka[1] + kb[1]};
        Elem prod = f_.mul(va, vb);
        auto it = r.find(k);
        if (it == r.end()) {
          r[k] = prod;
        } else {
          it->second = f_.add(it->second, prod);
        }
      }
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
  }

  Sparse power(Sparse base, std::uint64_t k) const {
    Sparse r = constant(1);
    while (k > 0) {
      if (k & 1) r = mul(r, base);
      k >>= 1;
      if (k > 0) base = mul(base, base);
    }
    return r;
  }

  Sparse expr() {
    Sparse acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool negate = take().kind == Tok::Minus;
      acc = add(acc, term(), negate);
    }
    return acc;
  }

  static bool starts_primary(Tok k) {
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  Sparse term() {
    Sparse acc = unary();
    for (;;) {
      if (peek().kind == Tok::Star) {
        take();
        acc = mul(acc, unary());
      } else if (starts_primary(peek().kind)) {
        acc = mul(acc, power_expr());
      } else {
        return acc;
      }
    }
  }

  Sparse unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return add(Sparse{}, unary(), true);
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return power_expr();
  }

  Sparse power_expr() {
    Sparse base = primary();
    if (peek().kind == Tok::Caret) {
      take();
      const Token& t = peek();
      if (t.kind != Tok::Number) fail("exponent must be a nonnegative integer literal", t.pos);
      std::uint64_t k = parse_u64(take());
      return power(std::move(base), k);
    }
    return base;
  }

  std::uint64_t parse_u64(const Token& t) const {
    std::uint64_t v = 0;
    for (char c : t.text) {
      std::uint64_t d = static_cast<std::uint64_t>(c - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("integer literal too large", t.pos);
      v = v * 10 + d;
    }
    return v;
  }

  Sparse symbol(const std::string& name, std::size_t pos) const {
    for (std::size_t i = 0; i < ctx_.variables.size(); ++i) {
      if (ctx_.variables[i] == name) {
        Sparse s;
        std::array<int, 2> k{0, 0};
        k[i] = 1;
        s[k] = 1;
        return s;
      }
    }
    if (!ctx_.generator.empty() && ctx_.generator == name) return constant(f_.generator());
    throw Error("unknown symbol '" + name + "' at position " + std::to_string(pos) + " in \"" +
                std::string(text_) + "\"");
  }

  bool known(const std::string& name) const {
    for (const auto& v : ctx_.variables)
      if (v == name) return true;
    return !ctx_.generator.empty() && ctx_.generator == name;
  }

  Sparse primary() {
    Token t = take();
    switch (t.kind) {
      case Tok::Number: {
        // Reduce digit by digit so arbitrarily long literals stay exact mod p.
        std::uint64_t p = f_.characteristic();
        Elem v = 0;
        for (char c : t.text) {
          v = f_.add(f_.mul(v, f_.from_int(10 % static_cast<std::int64_t>(p))),
                     f_.from_int(static_cast<std::int64_t>((c - '0') % p)));
        }
        return constant(v);
      }
      case Tok::Ident: {
        if (known(t.text)) return symbol(t.text, t.pos);
        // Juxtaposed single-letter symbols, e.g. "xy".
        Sparse acc = constant(1);
        for (std::size_t i = 0; i < t.text.size(); ++i) {
          std::string one(1, t.text[i]);
          if (!known(one)) {
            throw Error("unknown symbol '" + t.text + "' at position " + std::to_string(t.pos) +
                        " in \"" + std::string(text_) + "\"");
          }
          acc = mul(acc, symbol(one, t.pos + i));
        }
        return acc;
      }
      case Tok::LParen: {
        Sparse inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek().pos);
        take();
        return inner;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected token '" + t.text + "'",
             t.pos);
    }
  }

  std::string_view text_;
  const ParseContext& ctx_;
  const FieldSpec& f_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

Sparse parse_sparse(std::string_view text, const ParseContext& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace syzgap::detail
