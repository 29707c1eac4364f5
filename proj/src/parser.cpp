#include "luk/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>
#include <vector>

namespace luk {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(position)), kind_(kind), position_(position) {}

namespace {

enum class Tok {
  Ident, Element, LParen, RParen, LBracket, RBracket, Comma, Dot,
  Not, Implies, Iff, And, Or, StrictAnd, StrictOr, Forall, Exists, True, False, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || c == '\''; }

std::vector<Token> tokenize(std::string_view s) {
  static const std::array<std::pair<std::string_view, Tok>, 22> kSymbols{{
      {"<->", Tok::Iff},    {"|+|", Tok::StrictOr}, {"->", Tok::Implies}, {"/\\", Tok::And},
      {"\\/", Tok::Or},     {"~", Tok::Not},        {"&", Tok::StrictAnd}, {"(", Tok::LParen},
      {")", Tok::RParen},   {"[", Tok::LBracket},   {"]", Tok::RBracket}, {",", Tok::Comma},
      {".", Tok::Dot},      {"¬", Tok::Not},   {"→", Tok::Implies}, {"↔", Tok::Iff},
      {"∧", Tok::And}, {"∨", Tok::Or},    {"⊕", Tok::StrictOr}, {"⊙", Tok::StrictAnd},
      {"∀", Tok::Forall}, {"∃", Tok::Exists},
  }};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ParseError(ParseError::Kind::Syntax, i, "expected digits after '#'");
      out.push_back({Tok::Element, std::string(s.substr(i + 1, j - i - 1)), i});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "forall") kind = Tok::Forall;
      else if (word == "exists") kind = Tok::Exists;
      else if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      out.push_back({kind, std::move(word), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [sym, kind] : kSymbols) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({kind, std::string(sym), i});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError(ParseError::Kind::Syntax, i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig) : tokens_(tokenize(text)), sig_(sig) {}

  Formula run() {
    Formula f = iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, peek().pos, msg);
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail(std::string("expected ") + what);
  }

  Formula iff() {
    Formula f = implication();
    while (accept(Tok::Iff)) f = make_iff(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = weak();
    if (accept(Tok::Implies)) return make_implies(f, implication());
    return f;
  }

  Formula weak() {
    Formula f = strict();
    for (;;) {
      if (accept(Tok::And)) f = make_and(f, strict());
      else if (accept(Tok::Or)) f = make_or(f, strict());
      else return f;
    }
  }

  Formula strict() {
    Formula f = unary();
    for (;;) {
      if (accept(Tok::StrictAnd)) f = make_strict_and(f, unary());
      else if (accept(Tok::StrictOr)) f = make_strict_or(f, unary());
      else return f;
    }
  }

  Formula unary() {
    if (accept(Tok::Not)) return make_not(unary());
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) return quantified();
    return primary();
  }

  Formula quantified() {
    const Quantifier q = next().kind == Tok::Forall ? Quantifier::Forall : Quantifier::Exists;
    std::vector<std::string> vars;
    while (peek().kind == Tok::Ident) vars.push_back(next().text);
    if (vars.empty()) fail("expected variable after quantifier");
    expect(Tok::Dot, "'.' after quantified variables");
    for (const auto& v : vars) bound_.push_back(v);
    Formula body = iff();
    bound_.resize(bound_.size() - vars.size());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = make_quantified(q, *it, body);
    return body;
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: ++pos_; return make_true();
      case Tok::False: ++pos_; return make_false();
      case Tok::LParen: {
        ++pos_;
        Formula f = iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::LBracket: {
        ++pos_;
        Formula f = iff();
        expect(Tok::RBracket, "']'");
        return f;
      }
      case Tok::Ident: return atom();
      default: fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  Formula atom() {
    const Token name = next();
    std::vector<Term> args;
    if (accept(Tok::LParen)) {
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')' after arguments");
    }
    const int k = static_cast<int>(args.size());
    if (sig_) {
      auto declared = sig_->relation_arity(name.text);
      if (!declared) {
        throw ParseError(ParseError::Kind::UnknownSymbol, name.pos, "unknown relation '" + name.text + "'");
      }
      if (*declared != k) {
        throw ParseError(ParseError::Kind::ArityMismatch, name.pos,
                         "relation '" + name.text + "' expects " + std::to_string(*declared) + " arguments, got " +
                             std::to_string(k));
      }
    } else {
      auto [it, fresh] = seen_.try_emplace(name.text, k);
      if (!fresh && it->second != k) {
        throw ParseError(ParseError::Kind::ArityMismatch, name.pos,
                         "relation '" + name.text + "' used with " + std::to_string(it->second) + " and " +
                             std::to_string(k) + " arguments");
      }
    }
    return make_atom(name.text, std::move(args));
  }

  Term term() {
    const Token t = peek();
    if (accept(Tok::Element)) return Term::element_of(std::stoi(t.text));
    if (!accept(Tok::Ident)) fail("expected a term");
    if (accept(Tok::LParen)) {
      std::vector<Term> args;
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')' after function arguments");
      if (sig_) {
        auto k = sig_->function_arity(t.text);
        if (!k) throw ParseError(ParseError::Kind::UnknownSymbol, t.pos, "unknown function '" + t.text + "'");
        if (*k != static_cast<int>(args.size())) {
          throw ParseError(ParseError::Kind::ArityMismatch, t.pos, "function '" + t.text + "' arity mismatch");
        }
      }
      return Term::apply(t.text, std::move(args));
    }
    if (std::find(bound_.begin(), bound_.end(), t.text) != bound_.end()) return Term::variable(t.text);
    if (!sig_ || sig_->has_constant(t.text)) return Term::constant(t.text);
    return Term::variable(t.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* sig_;
  std::vector<std::string> bound_;
  std::map<std::string, int> seen_;
};

}  // namespace

Formula parse(std::string_view text, const Signature& sig) { return Parser(text, &sig).run(); }

Formula parse(std::string_view text) { return Parser(text, nullptr).run(); }

}  // namespace luk
