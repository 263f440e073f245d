#include "albo/parse.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace albo {

namespace {

enum class Tok : std::uint8_t {
  Ident,
  KwSat,
  KwUna,
  KwSome,
  KwAll,
  KwNot,
  KwOr,
  KwAnd,
  KwInv,
  KwId,
  KwTop,
  KwBot,
  KwBox,
  KwWin,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Dot,
  Colon,
  Semi,
  Comma,
  Leq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    int tl = line, tc = col;
    if (c == '$') throw ParseError(tl, tc, "identifiers starting with '$' are reserved");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      bump(j - i);
      Tok k = Tok::Ident;
      if (word == "sat") k = Tok::KwSat;
      else if (word == "una") k = Tok::KwUna;
      else if (word == "some") k = Tok::KwSome;
      else if (word == "all") k = Tok::KwAll;
      else if (word == "not") k = Tok::KwNot;
      else if (word == "or") k = Tok::KwOr;
      else if (word == "and") k = Tok::KwAnd;
      else if (word == "inv") k = Tok::KwInv;
      else if (word == "id") k = Tok::KwId;
      else if (word == "top") k = Tok::KwTop;
      else if (word == "bot") k = Tok::KwBot;
      else if (word == "box") k = Tok::KwBox;
      else if (word == "win") k = Tok::KwWin;
      out.push_back({k, std::move(word), tl, tc});
      continue;
    }
    switch (c) {
      case '{': out.push_back({Tok::LBrace, "{", tl, tc}); bump(1); continue;
      case '}': out.push_back({Tok::RBrace, "}", tl, tc}); bump(1); continue;
      case '(': out.push_back({Tok::LParen, "(", tl, tc}); bump(1); continue;
      case ')': out.push_back({Tok::RParen, ")", tl, tc}); bump(1); continue;
      case '.': out.push_back({Tok::Dot, ".", tl, tc}); bump(1); continue;
      case ':': out.push_back({Tok::Colon, ":", tl, tc}); bump(1); continue;
      case ';': out.push_back({Tok::Semi, ";", tl, tc}); bump(1); continue;
      case ',': out.push_back({Tok::Comma, ",", tl, tc}); bump(1); continue;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          out.push_back({Tok::Leq, "<=", tl, tc});
          bump(2);
          continue;
        }
        throw ParseError(tl, tc, "stray '<' (did you mean '<='?)");
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Kind-neutral expression used to disambiguate `X <= Y` statements, where a
// bare identifier could denote either a concept or a role symbol.
struct GTerm {
  enum Kind { Ident, Not, Or, And, Conc, Role } kind;
  Token tok;                 // Ident: the identifier; others: the operator token
  std::unique_ptr<GTerm> lhs, rhs;
  ConceptId concept_id;      // Conc
  RoleId role_id;            // Role
};

class Parser {
 public:
  Parser(TermStore& store, std::string_view text) : store_(store), toks_(lex(text)) {}

  Problem parse_problem() {
    Problem p;
    while (peek().kind != Tok::End) {
      parse_stmt(p);
      expect(Tok::Semi, "';' after statement");
    }
    return p;
  }

  ConceptId parse_whole_concept() {
    ConceptId c = parse_concept();
    expect(Tok::End, "end of input after concept");
    return c;
  }

  RoleId parse_whole_role() {
    RoleId r = parse_role();
    expect(Tok::End, "end of input after role");
    return r;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) throw ParseError(t.line, t.col, "expected " + what + ", found " + describe(t));
    return next();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  SymbolId sym(const Token& t, SymbolKind kind) {
    try {
      return store_.symbol(t.text, kind);
    } catch (const AlphabetClash& e) {
      throw AlphabetClash("at " + std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + e.what());
    }
  }

  void parse_stmt(Problem& p) {
    const Token& t = peek();
    if (t.kind == Tok::KwUna) {
      next();
      p.una = true;
      return;
    }
    if (t.kind == Tok::KwSat) {
      next();
      p.goals.push_back(parse_concept());
      return;
    }
    // (a, b) : R
    if (t.kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Comma) {
      next();
      SymbolId a = sym(expect(Tok::Ident, "individual"), SymbolKind::Individual);
      expect(Tok::Comma, "','");
      SymbolId b = sym(expect(Tok::Ident, "individual"), SymbolKind::Individual);
      expect(Tok::RParen, "')'");
      expect(Tok::Colon, "':'");
      p.abox.push_back(store_.role_assertion(a, b, parse_role()));
      return;
    }
    // a : C
    if (t.kind == Tok::Ident && peek(1).kind == Tok::Colon) {
      SymbolId a = sym(next(), SymbolKind::Individual);
      next();  // ':'
      p.abox.push_back(store_.assertion(a, parse_concept()));
      return;
    }
    // inclusion: lhs <= rhs, where both sides are concepts or both roles
    auto lhs = parse_gterm();
    expect(Tok::Leq, "'<=' in inclusion statement");
    auto rhs = parse_gterm();
    bool conc = contains(*lhs, GTerm::Conc) || contains(*rhs, GTerm::Conc);
    bool role = contains(*lhs, GTerm::Role) || contains(*rhs, GTerm::Role);
    if (conc && role) {
      throw ParseError(t.line, t.col, "inclusion mixes concept and role expressions");
    }
    if (!conc && !role) {
      // Both sides are built from bare identifiers; fall back to the kinds
      // those identifiers carry elsewhere in the input, concepts otherwise.
      role = mentions_known_role(*lhs) || mentions_known_role(*rhs);
    }
    if (role) {
      p.rbox.push_back(store_.rincl(to_role(*lhs), to_role(*rhs)));
    } else {
      p.tbox.push_back(store_.incl(to_concept(*lhs), to_concept(*rhs)));
    }
  }

  ConceptId parse_concept() {
    NestingGuard guard(*this);
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: return store_.atom(sym(next(), SymbolKind::Concept));
      case Tok::LBrace: {
        next();
        SymbolId a = sym(expect(Tok::Ident, "individual inside '{...}'"), SymbolKind::Individual);
        expect(Tok::RBrace, "'}'");
        return store_.singleton(a);
      }
      case Tok::KwTop: next(); return store_.top();
      case Tok::KwBot: next(); return store_.bottom();
      case Tok::KwNot: next(); return store_.not_(parse_concept());
      case Tok::KwBox: next(); return store_.box(parse_concept());
      case Tok::KwSome:
      case Tok::KwAll:
      case Tok::KwWin: {
        Tok k = next().kind;
        RoleId r = parse_role();
        expect(Tok::Dot, "'.' between role and filler");
        ConceptId c = parse_concept();
        if (k == Tok::KwSome) return store_.exists(r, c);
        if (k == Tok::KwAll) return store_.forall(r, c);
        return store_.window(r, c);
      }
      case Tok::LParen: {
        next();
        ConceptId a = parse_concept();
        const Token& op = peek();
        if (op.kind != Tok::KwOr && op.kind != Tok::KwAnd) {
          throw ParseError(op.line, op.col, "expected 'or' or 'and', found " + describe(op));
        }
        next();
        ConceptId b = parse_concept();
        expect(Tok::RParen, "')'");
        return op.kind == Tok::KwOr ? store_.or_(a, b) : store_.and_(a, b);
      }
      default:
        throw ParseError(t.line, t.col, "expected a concept, found " + describe(t));
    }
  }

  RoleId parse_role() {
    NestingGuard guard(*this);
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: return store_.role(sym(next(), SymbolKind::Role));
      case Tok::KwId: next(); return store_.id_role();
      case Tok::KwNot: next(); return store_.role_not(parse_role());
      case Tok::KwInv: {
        next();
        expect(Tok::LParen, "'(' after 'inv'");
        RoleId r = parse_role();
        expect(Tok::RParen, "')'");
        return store_.inverse(r);
      }
      case Tok::LParen: {
        next();
        RoleId a = parse_role();
        const Token& op = peek();
        if (op.kind != Tok::KwOr && op.kind != Tok::KwAnd) {
          throw ParseError(op.line, op.col, "expected 'or' or 'and', found " + describe(op));
        }
        next();
        RoleId b = parse_role();
        expect(Tok::RParen, "')'");
        return op.kind == Tok::KwOr ? store_.role_or(a, b) : store_.role_and(a, b);
      }
      default:
        throw ParseError(t.line, t.col, "expected a role, found " + describe(t));
    }
  }

  std::unique_ptr<GTerm> parse_gterm() {
    NestingGuard guard(*this);
    const Token& t = peek();
    auto mk = [&](GTerm::Kind k) {
      auto g = std::make_unique<GTerm>();
      g->kind = k;
      g->tok = t;
      return g;
    };
    switch (t.kind) {
      case Tok::Ident: {
        auto g = mk(GTerm::Ident);
        next();
        return g;
      }
      case Tok::KwNot: {
        auto g = mk(GTerm::Not);
        next();
        g->lhs = parse_gterm();
        return g;
      }
      case Tok::LParen: {
        next();
        auto lhs = parse_gterm();
        const Token& op = peek();
        if (op.kind != Tok::KwOr && op.kind != Tok::KwAnd) {
          throw ParseError(op.line, op.col, "expected 'or' or 'and', found " + describe(op));
        }
        next();
        auto g = std::make_unique<GTerm>();
        g->kind = op.kind == Tok::KwOr ? GTerm::Or : GTerm::And;
        g->tok = op;
        g->lhs = std::move(lhs);
        g->rhs = parse_gterm();
        expect(Tok::RParen, "')'");
        return g;
      }
      case Tok::KwId:
      case Tok::KwInv: {
        auto g = mk(GTerm::Role);
        g->role_id = parse_role();
        return g;
      }
      default: {
        auto g = mk(GTerm::Conc);
        g->concept_id = parse_concept();
        return g;
      }
    }
  }

  static bool contains(const GTerm& g, GTerm::Kind k) {
    if (g.kind == k) return true;
    if (g.lhs && contains(*g.lhs, k)) return true;
    if (g.rhs && contains(*g.rhs, k)) return true;
    return false;
  }

  bool mentions_known_role(const GTerm& g) const {
    if (g.kind == GTerm::Ident) {
      auto s = store_.find_symbol(g.tok.text);
      return s && store_.kind(*s) == SymbolKind::Role;
    }
    if (g.lhs && mentions_known_role(*g.lhs)) return true;
    if (g.rhs && mentions_known_role(*g.rhs)) return true;
    return false;
  }

  ConceptId to_concept(const GTerm& g) {
    switch (g.kind) {
      case GTerm::Ident: return store_.atom(sym(g.tok, SymbolKind::Concept));
      case GTerm::Not: return store_.not_(to_concept(*g.lhs));
      case GTerm::Or: return store_.or_(to_concept(*g.lhs), to_concept(*g.rhs));
      case GTerm::And: return store_.and_(to_concept(*g.lhs), to_concept(*g.rhs));
      case GTerm::Conc: return g.concept_id;
      case GTerm::Role: break;
    }
    throw ParseError(g.tok.line, g.tok.col, "role expression where a concept is required");
  }

  RoleId to_role(const GTerm& g) {
    switch (g.kind) {
      case GTerm::Ident: return store_.role(sym(g.tok, SymbolKind::Role));
      case GTerm::Not: return store_.role_not(to_role(*g.lhs));
      case GTerm::Or: return store_.role_or(to_role(*g.lhs), to_role(*g.rhs));
      case GTerm::And: return store_.role_and(to_role(*g.lhs), to_role(*g.rhs));
      case GTerm::Role: return g.role_id;
      case GTerm::Conc: break;
    }
    throw ParseError(g.tok.line, g.tok.col, "concept expression where a role is required");
  }

  struct NestingGuard {
    explicit NestingGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) {
        const Token& t = parser.peek();
        throw ParseError(t.line, t.col, "expression nesting exceeds the supported depth");
      }
    }
    ~NestingGuard() { --parser.depth_; }
    Parser& parser;
  };
  static constexpr int kMaxNesting = 4000;

  TermStore& store_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Problem parse_problem(TermStore& store, std::string_view text) {
  return Parser(store, text).parse_problem();
}

ConceptId parse_concept(TermStore& store, std::string_view text) {
  return Parser(store, text).parse_whole_concept();
}

RoleId parse_role(TermStore& store, std::string_view text) {
  return Parser(store, text).parse_whole_role();
}

}  // namespace albo
