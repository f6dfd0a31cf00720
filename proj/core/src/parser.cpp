#include "folb/parser.hpp"

#include <algorithm>
#include <cctype>

#include "folb/errors.hpp"

namespace folb {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Not, And, Or, Implies, Iff, Eq, Neq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < s.size() && is_ident(s[i])) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    auto emit = [&](Tok t, std::size_t len) {
      out.push_back({t, s.substr(start, len), start});
      i += len;
    };
    switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case '&': emit(Tok::And, 1); continue;
      case '|': emit(Tok::Or, 1); continue;
      case '=': emit(Tok::Eq, 1); continue;
      case '!':
        if (i + 1 < s.size() && s[i + 1] == '=') emit(Tok::Neq, 2);
        else emit(Tok::Not, 1);
        continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          emit(Tok::Implies, 2);
          continue;
        }
        break;
      case '<':
        if (s.compare(i, 3, "<->") == 0) {
          emit(Tok::Iff, 3);
          continue;
        }
        break;
      default:
        break;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", start,
                      {"identifier", "'('", "'!'", "connective"});
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SyntaxPtr parse_all() {
    SyntaxPtr f = formula();
    if (peek().kind != Tok::End) fail({"'&'", "'|'", "'->'", "'<->'", "end of input"});
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    std::string msg = "unexpected " + found + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
    throw SyntaxError(msg, t.pos, std::move(expected));
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail({describe(kind)});
    return take();
  }

  static SyntaxPtr node(Syntax::Kind k, std::size_t pos, std::vector<SyntaxPtr> kids = {},
                        std::vector<std::string> vars = {}, std::string name = {}) {
    auto s = std::make_shared<Syntax>();
    s->kind = k;
    s->pos = pos;
    s->kids = std::move(kids);
    s->vars = std::move(vars);
    s->name = std::move(name);
    return s;
  }

  bool at_quantifier() const {
    return peek().kind == Tok::Ident && (peek().text == "forall" || peek().text == "exists");
  }

  SyntaxPtr formula() {
    if (at_quantifier()) return quantifier();
    return iff();
  }

  SyntaxPtr quantifier() {
    Token q = take();
    Token var = expect(Tok::Ident);
    if (var.text == "forall" || var.text == "exists") {
      --pos_;
      fail({"variable name"});
    }
    SyntaxPtr body = formula();
    return node(q.text == "forall" ? Syntax::Kind::Forall : Syntax::Kind::Exists, q.pos, {body}, {var.text});
  }

  SyntaxPtr iff() {
    SyntaxPtr lhs = impl();
    if (peek().kind == Tok::Iff) {
      std::size_t at = take().pos;
      return node(Syntax::Kind::Iff, at, {lhs, iff_or_quant()});
    }
    return lhs;
  }

  SyntaxPtr iff_or_quant() { return at_quantifier() ? quantifier() : iff(); }

  SyntaxPtr impl() {
    SyntaxPtr lhs = disj();
    if (peek().kind == Tok::Implies) {
      std::size_t at = take().pos;
      SyntaxPtr rhs = at_quantifier() ? quantifier() : impl();
      return node(Syntax::Kind::Implies, at, {lhs, rhs});
    }
    return lhs;
  }

  SyntaxPtr disj() {
    std::vector<SyntaxPtr> parts{conj()};
    std::size_t at = peek().pos;
    while (peek().kind == Tok::Or) {
      take();
      if (at_quantifier()) {
        parts.push_back(quantifier());
        break;
      }
      parts.push_back(conj());
    }
    return parts.size() == 1 ? parts[0] : node(Syntax::Kind::Or, at, std::move(parts));
  }

  SyntaxPtr conj() {
    std::vector<SyntaxPtr> parts{negation()};
    std::size_t at = peek().pos;
    while (peek().kind == Tok::And) {
      take();
      parts.push_back(negation());
      // A quantifier swallows everything to its right.
      if (parts.back()->kind == Syntax::Kind::Forall || parts.back()->kind == Syntax::Kind::Exists) break;
    }
    return parts.size() == 1 ? parts[0] : node(Syntax::Kind::And, at, std::move(parts));
  }

  SyntaxPtr negation() {
    if (peek().kind == Tok::Not) {
      std::size_t at = take().pos;
      return node(Syntax::Kind::Not, at, {negation()});
    }
    if (at_quantifier()) return quantifier();
    return atom();
  }

  std::vector<std::string> term_list() {
    std::vector<std::string> out;
    expect(Tok::LParen);
    if (peek().kind == Tok::RParen) {
      take();
      return out;
    }
    out.push_back(expect(Tok::Ident).text);
    while (peek().kind == Tok::Comma) {
      take();
      out.push_back(expect(Tok::Ident).text);
    }
    if (peek().kind != Tok::RParen) fail({"','", "')'"});
    take();
    return out;
  }

  SyntaxPtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      take();
      SyntaxPtr inner = formula();
      expect(Tok::RParen);
      return inner;
    }
    if (t.kind != Tok::Ident) fail({"identifier", "'('", "'!'", "'forall'", "'exists'"});
    Token id = take();
    if (peek().kind == Tok::LParen) {
      std::size_t args_at = peek().pos;
      std::vector<std::string> args = term_list();
      if (id.text == "B" || id.text == "E") {
        std::size_t want = id.text == "B" ? 3 : 2;
        if (args.size() != want)
          throw ArityMismatch(id.text + " takes " + std::to_string(want) + " arguments, got " +
                                  std::to_string(args.size()),
                              args_at);
        return node(id.text == "B" ? Syntax::Kind::Between : Syntax::Kind::Edge, id.pos, {}, std::move(args));
      }
      return node(Syntax::Kind::Call, id.pos, {}, std::move(args), id.text);
    }
    if (peek().kind == Tok::Eq || peek().kind == Tok::Neq) {
      bool eq = take().kind == Tok::Eq;
      Token rhs = expect(Tok::Ident);
      return node(eq ? Syntax::Kind::Equal : Syntax::Kind::NotEqual, id.pos, {}, {id.text, rhs.text});
    }
    // Bare identifier: a macro without parameters.
    return node(Syntax::Kind::Call, id.pos, {}, {}, id.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void free_names_rec(const Syntax& s, std::vector<std::string>& bound, std::vector<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end() && std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  };
  switch (s.kind) {
    case Syntax::Kind::Forall:
    case Syntax::Kind::Exists:
      bound.push_back(s.vars[0]);
      free_names_rec(*s.kids[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& v : s.vars) note(v);
      for (const auto& k : s.kids) free_names_rec(*k, bound, out);
  }
}

}  // namespace

SyntaxPtr parse_syntax(const std::string& text) { return Parser(tokenize(text)).parse_all(); }

std::vector<std::string> free_names(const Syntax& s) {
  std::vector<std::string> bound, out;
  free_names_rec(s, bound, out);
  return out;
}

void collect_calls(const Syntax& s, std::vector<CallSite>& out) {
  if (s.kind == Syntax::Kind::Call) out.push_back({s.name, s.vars.size(), s.pos});
  for (const auto& k : s.kids) collect_calls(*k, out);
}

}  // namespace folb
