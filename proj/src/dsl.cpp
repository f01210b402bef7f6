#include "khc/dsl.hpp"

#include "khc/bilinear.hpp"
#include "khc/conv.hpp"
#include "khc/core.hpp"
#include "khc/errors.hpp"
#include "khc/render.hpp"
#include "khc/twist.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace khc::dsl {

namespace {

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Slash,
  Dot,
  Eq,
  BangEq,
  Minus,
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Slash: return "'/'";
    case Tok::Dot: return "'.'";
    case Tok::Eq: return "'='";
    case Tok::BangEq: return "'!='";
    case Tok::Minus: return "'-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourceLoc loc;
  std::size_t i = 0;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++loc.line;
      loc.col = 1;
    } else {
      ++loc.col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(c);
      ++i;
      continue;
    }
    SourceLoc start = loc;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        word += text[i];
        bump(text[i++]);
      }
      out.push_back({Tok::Ident, word, start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i];
        bump(text[i++]);
      }
      out.push_back({Tok::Int, digits, start});
      continue;
    }
    auto single = [&](Tok kind) {
      out.push_back({kind, std::string(1, c), start});
      bump(c);
      ++i;
    };
    switch (c) {
      case '(': single(Tok::LParen); break;
      case ')': single(Tok::RParen); break;
      case '{': single(Tok::LBrace); break;
      case '}': single(Tok::RBrace); break;
      case '[': single(Tok::LBracket); break;
      case ']': single(Tok::RBracket); break;
      case ',': single(Tok::Comma); break;
      case ';': single(Tok::Semi); break;
      case ':': single(Tok::Colon); break;
      case '/': single(Tok::Slash); break;
      case '.': single(Tok::Dot); break;
      case '=': single(Tok::Eq); break;
      case '-': single(Tok::Minus); break;
      case '!':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          out.push_back({Tok::BangEq, "!=", start});
          bump(text[i++]);
          bump(text[i++]);
          break;
        }
        throw ParseError(start, "unexpected character '!'");
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", loc});
  return out;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"points", "let",     "emit", "check", "line",
                                              "mc",     "tensor",  "sym2", "wedge2",
                                              "wedge2t", "dual",   "tate", "katz",  "chi"};
  return words;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Program parse() {
    Program program;
    expect_keyword("points");
    program.points.push_back(expect_plain_ident("point name"));
    while (peek().kind == Tok::Comma) {
      advance();
      program.points.push_back(expect_plain_ident("point name"));
    }
    expect(Tok::Semi, "';' after the points declaration");
    for (const auto& p : program.points)
      if (std::count(program.points.begin(), program.points.end(), p) > 1)
        throw ParseError(tokens_.front().loc, "duplicate point '" + p + "'");

    while (peek().kind != Tok::End) program.statements.push_back(parse_stmt());
    return program;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError(peek().loc, "expected " + what + ", got " +
                                       (peek().kind == Tok::Ident || peek().kind == Tok::Int
                                            ? "'" + peek().text + "'"
                                            : tok_name(peek().kind)));
    return advance();
  }

  void expect_keyword(const std::string& word) {
    Token t = expect(Tok::Ident, "'" + word + "'");
    if (t.text != word) throw ParseError(t.loc, "expected '" + word + "', got '" + t.text + "'");
  }

  std::string expect_plain_ident(const std::string& what) {
    Token t = expect(Tok::Ident, what);
    if (reserved_words().count(t.text))
      throw ParseError(t.loc, "'" + t.text + "' is a reserved word");
    return t.text;
  }

  long long parse_sint() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      advance();
      neg = true;
    }
    Token t = expect(Tok::Int, "integer");
    long long v = std::stoll(t.text);
    return neg ? -v : v;
  }

  Angle parse_rational_angle() {
    SourceLoc loc = peek().loc;
    long long num = parse_sint();
    long long den = 1;
    if (peek().kind == Tok::Slash) {
      advance();
      den = std::stoll(expect(Tok::Int, "denominator").text);
    }
    if (den == 0) throw ParseError(loc, "zero denominator");
    return Angle(num, den);
  }

  Stmt parse_stmt() {
    Token t = expect(Tok::Ident, "'let', 'emit' or 'check'");
    Stmt stmt;
    stmt.loc = t.loc;
    if (t.text == "let") {
      stmt.kind = Stmt::Kind::Let;
      stmt.name = expect_plain_ident("binding name");
      expect(Tok::Eq, "'='");
      stmt.expr = parse_expr();
      expect(Tok::Semi, "';'");
      return stmt;
    }
    if (t.text == "emit") {
      stmt.kind = Stmt::Kind::Emit;
      stmt.name = expect_plain_ident("identifier");
      expect(Tok::Semi, "';'");
      return stmt;
    }
    if (t.text == "check") {
      stmt.kind = Stmt::Kind::Check;
      stmt.name = expect_plain_ident("identifier");
      expect(Tok::Dot, "'.'");
      Token field = expect(Tok::Ident, "field (rank, rigidity, h, delta, mu, infinity, pairing)");
      stmt.literal.field = parse_field(field);
      if (peek().kind == Tok::BangEq) {
        advance();
        stmt.negated = true;
      } else {
        expect(Tok::Eq, "'=' or '!='");
      }
      parse_literal(stmt.literal);
      expect(Tok::Semi, "';'");
      return stmt;
    }
    throw ParseError(t.loc, "expected 'let', 'emit' or 'check', got '" + t.text + "'");
  }

  CheckField parse_field(const Token& t) {
    if (t.text == "rank") return CheckField::Rank;
    if (t.text == "rigidity") return CheckField::Rigidity;
    if (t.text == "h") return CheckField::H;
    if (t.text == "delta") return CheckField::Delta;
    if (t.text == "mu") return CheckField::Mu;
    if (t.text == "infinity") return CheckField::Infinity;
    if (t.text == "pairing") return CheckField::Pairing;
    throw ParseError(t.loc, "unknown field '" + t.text +
                                "' (expected rank, rigidity, h, delta, mu, infinity, pairing)");
  }

  std::vector<MuEntryLit> parse_entry_list() {
    std::vector<MuEntryLit> entries;
    expect(Tok::LBracket, "'['");
    while (peek().kind != Tok::RBracket) {
      if (!entries.empty()) expect(Tok::Comma, "','");
      expect(Tok::LParen, "'('");
      MuEntryLit e;
      e.p = static_cast<int>(parse_sint());
      expect(Tok::Comma, "','");
      e.alpha = parse_rational_angle();
      expect(Tok::Comma, "','");
      e.ell = static_cast<int>(std::stoll(expect(Tok::Int, "ell").text));
      expect(Tok::Comma, "','");
      e.mult = static_cast<int>(std::stoll(expect(Tok::Int, "multiplicity").text));
      expect(Tok::RParen, "')'");
      entries.push_back(e);
    }
    advance();
    return entries;
  }

  void parse_literal(CheckLiteral& lit) {
    switch (lit.field) {
      case CheckField::Rank:
      case CheckField::Rigidity:
        lit.int_value = parse_sint();
        return;
      case CheckField::H:
      case CheckField::Delta: {
        expect(Tok::LBrace, "'{'");
        while (peek().kind != Tok::RBrace) {
          if (!lit.map_value.empty()) expect(Tok::Comma, "','");
          long long level = parse_sint();
          expect(Tok::Colon, "':'");
          lit.map_value.emplace_back(level, parse_sint());
        }
        advance();
        return;
      }
      case CheckField::Mu: {
        expect(Tok::LBrace, "'{'");
        while (peek().kind != Tok::RBrace) {
          if (!lit.mu_value.empty()) expect(Tok::Comma, "','");
          std::string point = expect_plain_ident("point name");
          expect(Tok::Colon, "':'");
          lit.mu_value.emplace_back(point, parse_entry_list());
        }
        advance();
        return;
      }
      case CheckField::Infinity:
        lit.entries_value = parse_entry_list();
        return;
      case CheckField::Pairing: {
        Token t = expect(Tok::Ident, "pairing (none, symmetric, skew, unknown)");
        auto pairing = pairing_from_string(t.text);
        if (!pairing) throw ParseError(t.loc, "unknown pairing '" + t.text + "'");
        lit.pairing_value = *pairing;
        return;
      }
    }
  }

  ExprPtr parse_expr() {
    Token t = expect(Tok::Ident, "expression");
    auto node = std::make_shared<Expr>();
    node->loc = t.loc;

    auto finish_unary = [&](Expr::Kind kind) {
      node->kind = kind;
      expect(Tok::LParen, "'('");
      node->args.push_back(parse_expr());
      expect(Tok::RParen, "')'");
    };

    if (t.text == "line") {
      node->kind = Expr::Kind::Line;
      expect(Tok::LParen, "'('");
      while (peek().kind != Tok::RParen) {
        if (!node->line_angles.empty()) expect(Tok::Comma, "','");
        std::string point = expect_plain_ident("point name");
        expect(Tok::Colon, "':'");
        node->line_angles.emplace_back(point, parse_rational_angle());
      }
      advance();
    } else if (t.text == "mc") {
      node->kind = Expr::Kind::Mc;
      expect(Tok::LParen, "'('");
      node->args.push_back(parse_expr());
      if (peek().kind == Tok::Comma) {
        advance();
        expect_keyword("chi");
        expect(Tok::Eq, "'='");
        node->chi = parse_rational_angle();
      }
      expect(Tok::RParen, "')'");
    } else if (t.text == "tensor") {
      node->kind = Expr::Kind::Tensor;
      expect(Tok::LParen, "'('");
      node->args.push_back(parse_expr());
      expect(Tok::Comma, "','");
      node->args.push_back(parse_expr());
      expect(Tok::RParen, "')'");
    } else if (t.text == "tate") {
      node->kind = Expr::Kind::Tate;
      expect(Tok::LParen, "'('");
      node->tate_k = parse_sint();
      expect(Tok::Comma, "','");
      node->args.push_back(parse_expr());
      expect(Tok::RParen, "')'");
    } else if (t.text == "sym2") {
      finish_unary(Expr::Kind::Sym2);
    } else if (t.text == "wedge2") {
      finish_unary(Expr::Kind::Wedge2);
    } else if (t.text == "wedge2t") {
      finish_unary(Expr::Kind::Wedge2t);
    } else if (t.text == "dual") {
      finish_unary(Expr::Kind::Dual);
    } else if (t.text == "katz") {
      finish_unary(Expr::Kind::Katz);
    } else if (reserved_words().count(t.text)) {
      throw ParseError(t.loc, "'" + t.text + "' cannot be used here");
    } else {
      node->kind = Expr::Kind::Ident;
      node->name = t.text;
    }
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string rational_str(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

std::string angle_str(const Angle& a) { return rational_str(a.value()); }

void format_expr(std::ostringstream& os, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Line: {
      os << "line(";
      bool first = true;
      for (const auto& [point, a] : e->line_angles) {
        if (!first) os << ", ";
        first = false;
        os << point << ": " << angle_str(a);
      }
      os << ")";
      return;
    }
    case Expr::Kind::Mc:
      os << "mc(";
      format_expr(os, e->args[0]);
      if (e->chi) os << ", chi = " << angle_str(*e->chi);
      os << ")";
      return;
    case Expr::Kind::Tensor:
      os << "tensor(";
      format_expr(os, e->args[0]);
      os << ", ";
      format_expr(os, e->args[1]);
      os << ")";
      return;
    case Expr::Kind::Tate:
      os << "tate(" << e->tate_k << ", ";
      format_expr(os, e->args[0]);
      os << ")";
      return;
    case Expr::Kind::Sym2:
    case Expr::Kind::Wedge2:
    case Expr::Kind::Wedge2t:
    case Expr::Kind::Dual:
    case Expr::Kind::Katz: {
      const char* name = e->kind == Expr::Kind::Sym2      ? "sym2"
                         : e->kind == Expr::Kind::Wedge2  ? "wedge2"
                         : e->kind == Expr::Kind::Wedge2t ? "wedge2t"
                         : e->kind == Expr::Kind::Dual    ? "dual"
                                                          : "katz";
      os << name << "(";
      format_expr(os, e->args[0]);
      os << ")";
      return;
    }
    case Expr::Kind::Ident:
      os << e->name;
      return;
  }
}

void format_entries(std::ostringstream& os, const std::vector<MuEntryLit>& entries) {
  os << "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << "(" << entries[i].p << ", " << angle_str(entries[i].alpha) << ", " << entries[i].ell
       << ", " << entries[i].mult << ")";
  }
  os << "]";
}

std::string format_stmt(const Stmt& stmt) {
  std::ostringstream os;
  switch (stmt.kind) {
    case Stmt::Kind::Let:
      os << "let " << stmt.name << " = ";
      format_expr(os, stmt.expr);
      break;
    case Stmt::Kind::Emit:
      os << "emit " << stmt.name;
      break;
    case Stmt::Kind::Check: {
      static const char* fields[] = {"rank", "rigidity", "h", "delta", "mu", "infinity",
                                     "pairing"};
      os << "check " << stmt.name << "." << fields[static_cast<int>(stmt.literal.field)] << " "
         << (stmt.negated ? "!=" : "=") << " ";
      switch (stmt.literal.field) {
        case CheckField::Rank:
        case CheckField::Rigidity:
          os << stmt.literal.int_value;
          break;
        case CheckField::H:
        case CheckField::Delta: {
          os << "{";
          for (std::size_t i = 0; i < stmt.literal.map_value.size(); ++i) {
            if (i) os << ", ";
            os << stmt.literal.map_value[i].first << ": " << stmt.literal.map_value[i].second;
          }
          os << "}";
          break;
        }
        case CheckField::Mu: {
          os << "{";
          for (std::size_t i = 0; i < stmt.literal.mu_value.size(); ++i) {
            if (i) os << ", ";
            os << stmt.literal.mu_value[i].first << ": ";
            format_entries(os, stmt.literal.mu_value[i].second);
          }
          os << "}";
          break;
        }
        case CheckField::Infinity:
          format_entries(os, stmt.literal.entries_value);
          break;
        case CheckField::Pairing:
          os << to_string(stmt.literal.pairing_value);
          break;
      }
      break;
    }
  }
  os << ";";
  return os.str();
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

std::string format_program(const Program& program) {
  std::ostringstream os;
  os << "points";
  for (std::size_t i = 0; i < program.points.size(); ++i)
    os << (i ? ", " : " ") << program.points[i];
  os << ";\n";
  for (const Stmt& stmt : program.statements) os << format_stmt(stmt) << "\n";
  return os.str();
}

bool EvalResult::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

namespace {

class Evaluator {
public:
  explicit Evaluator(const Program& program) : program_(program) {}

  EvalResult run() {
    for (const Stmt& stmt : program_.statements) {
      try {
        exec(stmt);
      } catch (const EvalError&) {
        throw;
      } catch (const CalcError& e) {
        throw EvalError(stmt.loc, e.what(), e.internal());
      }
    }
    return std::move(result_);
  }

private:
  void exec(const Stmt& stmt) {
    switch (stmt.kind) {
      case Stmt::Kind::Let: {
        if (result_.bindings.count(stmt.name))
          throw EvalError(stmt.loc, "'" + stmt.name + "' is already bound", false);
        Value v = eval(stmt.expr, stmt.name);
        validate(v);
        result_.binding_order.push_back(stmt.name);
        result_.bindings.emplace(stmt.name, std::move(v));
        return;
      }
      case Stmt::Kind::Emit:
        lookup(stmt.name, stmt.loc);
        result_.emissions.push_back(stmt.name);
        return;
      case Stmt::Kind::Check:
        run_check(stmt);
        return;
    }
  }

  const Value& lookup(const std::string& name, SourceLoc loc) const {
    auto it = result_.bindings.find(name);
    if (it == result_.bindings.end())
      throw EvalError(loc, "'" + name + "' is not bound", false);
    return it->second;
  }

  const HodgeSystem& as_hodge(const Value& v, SourceLoc loc, const char* op) const {
    if (const auto* h = std::get_if<HodgeSystem>(&v)) return *h;
    throw EvalError(loc, std::string(op) + " needs Hodge-level data, not a bare monodromy system",
                    false);
  }

  Value eval(const ExprPtr& e, const std::string& label) {
    switch (e->kind) {
      case Expr::Kind::Line: {
        std::map<std::string, Angle> angles;
        for (const auto& [point, a] : e->line_angles) {
          if (angles.count(point))
            throw EvalError(e->loc, "duplicate angle for point '" + point + "'", false);
          angles.emplace(point, a);
        }
        return make_line(program_.points, angles, 0);
      }
      case Expr::Kind::Ident:
        return lookup(e->name, e->loc);
      case Expr::Kind::Mc: {
        Value v = eval(e->args[0], label);
        if (const auto* h = std::get_if<HodgeSystem>(&v)) return mc_hodge(*h, e->chi);
        const auto& mono = std::get<MonodromySystem>(v);
        auto scalar = mono.infinity_scalar();
        if (scalar && !scalar->is_zero()) {
          if (e->chi && *e->chi != *scalar)
            throw CalcError(ErrC::ChiMismatch, "chi = " + e->chi->str() +
                                                   " but the infinity scalar is " + scalar->str());
          return mc_local(mono, *scalar);
        }
        if (!e->chi)
          throw CalcError(ErrC::NotScalarAtInfinity,
                          "no scalar infinity to infer chi from; pass chi = ...");
        return mc_local(mono, *e->chi);
      }
      case Expr::Kind::Tensor: {
        RankOneLine line;
        if (e->args[0]->kind == Expr::Kind::Line) {
          for (const auto& [point, a] : e->args[0]->line_angles)
            if (!a.is_zero()) line.finite_angles.emplace(point, a);
        } else {
          Value lv = eval(e->args[0], label);
          line = std::holds_alternative<HodgeSystem>(lv)
                     ? line_of(std::get<HodgeSystem>(lv))
                     : line_of(std::get<MonodromySystem>(lv));
        }
        Value v = eval(e->args[1], label);
        if (const auto* h = std::get_if<HodgeSystem>(&v)) return tensor_line(line, *h);
        return tensor_line(line, std::get<MonodromySystem>(v));
      }
      case Expr::Kind::Sym2:
        return sym2(as_hodge(eval(e->args[0], label), e->loc, "sym2"));
      case Expr::Kind::Wedge2:
        return wedge2(as_hodge(eval(e->args[0], label), e->loc, "wedge2"));
      case Expr::Kind::Wedge2t:
        return wedge2_reduced(as_hodge(eval(e->args[0], label), e->loc, "wedge2t"));
      case Expr::Kind::Dual: {
        Value v = eval(e->args[0], label);
        if (const auto* h = std::get_if<HodgeSystem>(&v)) return dual_monodromy(forget_hodge(*h));
        return dual_monodromy(std::get<MonodromySystem>(v));
      }
      case Expr::Kind::Tate:
        return tate_twist(as_hodge(eval(e->args[0], label), e->loc, "tate"),
                          static_cast<int>(e->tate_k));
      case Expr::Kind::Katz: {
        Value v = eval(e->args[0], label);
        KatzTrace trace = katz_reduce(v);
        Value terminal = trace.terminal;
        result_.traces.emplace_back(label, std::move(trace));
        return terminal;
      }
    }
    throw EvalError(e->loc, "unhandled expression", true);
  }

  static std::string entries_str(const HodgeBlockData& data) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [key, mult] : data.entries()) {
      if (!first) os << ", ";
      first = false;
      os << "(" << key.level << ", " << angle_str(key.angle) << ", " << key.ell << ", " << mult
         << ")";
    }
    os << "]";
    return os.str();
  }

  void run_check(const Stmt& stmt) {
    const Value& v = lookup(stmt.name, stmt.loc);
    bool equal = false;
    std::string actual;
    switch (stmt.literal.field) {
      case CheckField::Rank: {
        long long r = rank_of(v);
        equal = r == stmt.literal.int_value;
        actual = std::to_string(r);
        break;
      }
      case CheckField::Rigidity: {
        long long idx = std::holds_alternative<HodgeSystem>(v)
                            ? rigidity_index(std::get<HodgeSystem>(v))
                            : rigidity_index(std::get<MonodromySystem>(v));
        equal = idx == stmt.literal.int_value;
        actual = std::to_string(idx);
        break;
      }
      case CheckField::H:
      case CheckField::Delta: {
        const HodgeSystem& s = as_hodge(v, stmt.loc, "this check");
        std::map<long long, long long> expected(stmt.literal.map_value.begin(),
                                                stmt.literal.map_value.end());
        std::map<long long, long long> got;
        if (stmt.literal.field == CheckField::H) {
          for (const auto& [p, hp] : s.hodge) got[p] = hp;
        } else {
          for (const auto& [p, d] : s.degrees) got[p] = d;
        }
        equal = expected == got;
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& [p, x] : got) {
          if (!first) os << ", ";
          first = false;
          os << p << ": " << x;
        }
        os << "}";
        actual = os.str();
        break;
      }
      case CheckField::Mu: {
        const HodgeSystem& s = as_hodge(v, stmt.loc, "this check");
        std::map<std::string, HodgeBlockData> expected;
        for (const auto& [point, entries] : stmt.literal.mu_value) {
          if (std::find(s.points.begin(), s.points.end(), point) == s.points.end())
            throw EvalError(stmt.loc, "unknown point '" + point + "' in the literal", false);
          HodgeBlockData store(StoreKind::Mu);
          for (const MuEntryLit& e : entries) store.add({e.p, e.alpha, e.ell}, e.mult);
          expected.emplace(point, std::move(store));
        }
        equal = true;
        std::ostringstream os;
        for (const auto& point : s.points) {
          auto it = expected.find(point);
          const HodgeBlockData want = it == expected.end() ? HodgeBlockData(StoreKind::Mu)
                                                           : it->second;
          if (!(s.local_at(point) == want)) equal = false;
          os << (point == s.points.front() ? "" : ", ") << point << ": "
             << entries_str(s.local_at(point));
        }
        actual = os.str();
        break;
      }
      case CheckField::Infinity: {
        const HodgeSystem& s = as_hodge(v, stmt.loc, "this check");
        HodgeBlockData want(StoreKind::Nu);
        for (const MuEntryLit& e : stmt.literal.entries_value)
          want.add({e.p, e.alpha, e.ell}, e.mult);
        equal = s.infinity == want;
        actual = entries_str(s.infinity);
        break;
      }
      case CheckField::Pairing: {
        const HodgeSystem& s = as_hodge(v, stmt.loc, "this check");
        equal = s.pairing == stmt.literal.pairing_value;
        actual = to_string(s.pairing);
        break;
      }
    }
    bool passed = stmt.negated ? !equal : equal;
    result_.checks.push_back(
        {stmt.loc, format_stmt(stmt), passed, passed ? "" : "got " + actual});
  }

  const Program& program_;
  EvalResult result_;
};

}  // namespace

EvalResult eval_program(const Program& program) { return Evaluator(program).run(); }

}  // namespace khc::dsl
