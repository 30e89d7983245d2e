/*
 * Copyright (c) 2026, the cspauto authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cspauto/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>

#include "cspauto/error.hpp"
#include "cspauto/step.hpp"

namespace cspauto {

std::string_view to_string(DiagCode code) {
  switch (code) {
    case DiagCode::Syntax: return "syntax error";
    case DiagCode::UnknownChannel: return "unknown channel";
    case DiagCode::ArityMismatch: return "arity mismatch";
    case DiagCode::DomainMismatch: return "domain mismatch";
    case DiagCode::UnboundReference: return "unbound reference";
    case DiagCode::UnguardedRecursion: return "unguarded recursion";
  }
  return "error";
}

std::string Diagnostic::to_string() const {
  return std::to_string(span.begin.line) + ":" +
         std::to_string(span.begin.column) + ": " +
         std::string(cspauto::to_string(code)) + ": " + message;
}

namespace {

enum class Tok {
  LName,
  UName,
  Int,
  KwStop,
  KwSkip,
  KwChannel,
  KwSet,
  Equals,
  Comma,
  Colon,
  Dot,
  DotDot,
  Question,
  Bang,
  Arrow,
  ExtChoice,   // []
  IntChoice,   // |~|
  SyncPar,     // ||
  Interleave,  // |||
  GenOpen,     // [|
  GenClose,    // |]
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  LParen,
  RParen,
  End,
  Bad,
};

struct Token {
  Tok kind;
  std::string text;
  std::int64_t number = 0;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    for (;;) {
      skip_blank_and_comments();
      SourcePos begin = pos();
      if (at_end()) {
        out.push_back({Tok::End, "", 0, {begin, begin}});
        return out;
      }
      char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c))) {
        out.push_back(identifier(begin));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number(begin, false));
      } else {
        out.push_back(symbol(begin, diags));
      }
    }
  }

 private:
  bool at_end() const { return index_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return index_ + ahead < text_.size() ? text_[index_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[index_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  SourcePos pos() const { return {line_, column_}; }

  void skip_blank_and_comments() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
        advance();
      if (peek() == '-' && peek(1) == '-') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }

  Token identifier(SourcePos begin) {
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_'))
      name += advance();
    Tok kind;
    if (name == "STOP") kind = Tok::KwStop;
    else if (name == "SKIP") kind = Tok::KwSkip;
    else if (name == "channel") kind = Tok::KwChannel;
    else if (name == "set") kind = Tok::KwSet;
    else if (std::isupper(static_cast<unsigned char>(name[0]))) kind = Tok::UName;
    else kind = Tok::LName;
    return {kind, std::move(name), 0, {begin, pos()}};
  }

  Token number(SourcePos begin, bool negative) {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += advance();
    std::int64_t v = 0;
    bool overflow = false;
    for (char d : digits) {
      v = v * 10 + (d - '0');
      if (v > (std::int64_t{1} << 40)) {  // clamp early, report below
        overflow = true;
        break;
      }
    }
    if (negative) v = -v;
    Token t{Tok::Int, (negative ? "-" : "") + digits, v, {begin, pos()}};
    if (overflow || v < INT32_MIN || v > INT32_MAX) t.kind = Tok::Bad;
    return t;
  }

  Token symbol(SourcePos begin, std::vector<Diagnostic>& diags) {
    char c = advance();
    auto tok = [&](Tok kind, std::string text) -> Token {
      return {kind, std::move(text), 0, {begin, pos()}};
    };
    switch (c) {
      case '=': return tok(Tok::Equals, "=");
      case ',': return tok(Tok::Comma, ",");
      case ':': return tok(Tok::Colon, ":");
      case '?': return tok(Tok::Question, "?");
      case '!': return tok(Tok::Bang, "!");
      case '{': return tok(Tok::LBrace, "{");
      case '}': return tok(Tok::RBrace, "}");
      case '(': return tok(Tok::LParen, "(");
      case ')': return tok(Tok::RParen, ")");
      case ']': return tok(Tok::RBracket, "]");
      case '.':
        if (peek() == '.') {
          advance();
          return tok(Tok::DotDot, "..");
        }
        return tok(Tok::Dot, ".");
      case '-':
        if (peek() == '>') {
          advance();
          return tok(Tok::Arrow, "->");
        }
        if (std::isdigit(static_cast<unsigned char>(peek())))
          return number(begin, true);
        break;
      case '[':
        if (peek() == ']') {
          advance();
          return tok(Tok::ExtChoice, "[]");
        }
        if (peek() == '|') {
          advance();
          return tok(Tok::GenOpen, "[|");
        }
        return tok(Tok::LBracket, "[");
      case '|':
        if (peek() == '~' && peek(1) == '|') {
          advance();
          advance();
          return tok(Tok::IntChoice, "|~|");
        }
        if (peek() == ']') {
          advance();
          return tok(Tok::GenClose, "|]");
        }
        if (peek() == '|') {
          advance();
          if (peek() == '|') {
            advance();
            return tok(Tok::Interleave, "|||");
          }
          return tok(Tok::SyncPar, "||");
        }
        break;
      default:
        break;
    }
    Token bad = tok(Tok::Bad, std::string(1, c));
    (void)diags;
    return bad;
  }

  std::string_view text_;
  std::size_t index_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Thrown to abandon the current declaration after a syntax diagnostic has
// been recorded; the driver resynchronizes at the next declaration.
struct SyntaxAbort {};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    tokens_ = Lexer(text).run(diags_);
  }

  ParseResult run() {
    while (!at(Tok::End)) {
      try {
        declaration();
      } catch (const SyntaxAbort&) {
        synchronize();
      }
    }
    resolve_references();
    check_guardedness();

    ParseResult result;
    std::stable_sort(diags_.begin(), diags_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       return a.span.begin < b.span.begin;
                     });
    result.diagnostics = std::move(diags_);
    if (result.diagnostics.empty()) result.env = std::move(env_);
    return result;
  }

 private:
  // --- token access ----------------------------------------------------
  const Token& cur() const { return tokens_[pos_]; }
  const Token& next() const {
    return tokens_[std::min(pos_ + 1, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return cur().kind == kind; }
  Token eat() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  Token expect(Tok kind, const std::string& what) {
    if (!at(kind)) {
      error_here("expected " + what);
      throw SyntaxAbort{};
    }
    return eat();
  }

  void diag(DiagCode code, SourceSpan span, std::string message) {
    diags_.push_back({code, span, std::move(message)});
  }

  void error_here(std::string message) {
    std::string got = at(Tok::End) ? "end of input" : "'" + cur().text + "'";
    diag(DiagCode::Syntax, cur().span, std::move(message) + ", got " + got);
  }

  void synchronize() {
    while (!at(Tok::End)) {
      if (at(Tok::KwChannel) || at(Tok::KwSet)) return;
      if (at(Tok::UName) && next().kind == Tok::Equals) return;
      eat();
    }
  }

  // --- declarations -----------------------------------------------------
  void declaration() {
    if (at(Tok::KwChannel)) {
      channel_decl();
    } else if (at(Tok::KwSet)) {
      set_decl();
    } else if (at(Tok::UName)) {
      process_def();
    } else {
      error_here("expected 'channel', 'set', or a process definition");
      throw SyntaxAbort{};
    }
  }

  void set_decl() {
    eat();  // set
    Token name = expect(Tok::UName, "a set name");
    expect(Tok::Equals, "'='");
    std::vector<Value> values = value_set();
    if (sets_.count(name.text))
      diag(DiagCode::Syntax, name.span, "set " + name.text + " redefined");
    else
      sets_.emplace(name.text, std::move(values));
  }

  void channel_decl() {
    eat();  // channel
    Token name = expect(Tok::LName, "a channel name");
    std::vector<std::vector<Value>> domains;
    while (at(Tok::Colon)) {
      eat();
      std::vector<Value> domain = value_set();
      if (domain.empty())
        diag(DiagCode::DomainMismatch, name.span,
             "channel '" + name.text + "' declares an empty domain");
      domains.push_back(std::move(domain));
    }
    if (env_.has_channel(name.text)) {
      diag(DiagCode::Syntax, name.span,
           "channel '" + name.text + "' redeclared");
      return;
    }
    for (auto& d : domains)
      if (d.empty()) d.push_back(Value::integer(0));  // placeholder; error above
    env_.declare_channel(name.text, std::move(domains));
  }

  void process_def() {
    Token name = eat();
    expect(Tok::Equals, "'='");
    TermRef body = proc();
    if (env_.has_definition(name.text)) {
      diag(DiagCode::Syntax, name.span, "process " + name.text + " redefined");
      return;
    }
    env_.define(name.text, body);
    def_spans_.emplace(name.text, name.span);
  }

  // --- processes ---------------------------------------------------------
  TermRef proc() { return choice(); }

  TermRef choice() {
    std::vector<TermRef> branches = {ichoice()};
    while (at(Tok::ExtChoice)) {
      eat();
      branches.push_back(ichoice());
    }
    return Term::ext_choice_all(branches);
  }

  TermRef ichoice() {
    std::vector<TermRef> branches = {par()};
    while (at(Tok::IntChoice)) {
      eat();
      branches.push_back(par());
    }
    return Term::int_choice_all(branches);
  }

  struct ParOp {
    Tok kind;
    EventSet sync;        // GenOpen
    EventSet left_alpha;  // LBracket
    EventSet right_alpha;
  };

  TermRef par() {
    std::vector<TermRef> operands = {prefix()};
    std::vector<ParOp> ops;
    for (;;) {
      if (at(Tok::SyncPar) || at(Tok::Interleave)) {
        ops.push_back({eat().kind, {}, {}, {}});
      } else if (at(Tok::GenOpen)) {
        eat();
        EventSet sync = event_set();
        expect(Tok::GenClose, "'|]'");
        ops.push_back({Tok::GenOpen, std::move(sync), {}, {}});
      } else if (at(Tok::LBracket)) {
        eat();
        EventSet left = event_set();
        expect(Tok::SyncPar, "'||'");
        EventSet right = event_set();
        expect(Tok::RBracket, "']'");
        ops.push_back({Tok::LBracket, {}, std::move(left), std::move(right)});
      } else {
        break;
      }
      operands.push_back(prefix());
    }
    // right-associative fold
    TermRef acc = operands.back();
    for (std::size_t i = ops.size(); i-- > 0;) {
      const ParOp& op = ops[i];
      switch (op.kind) {
        case Tok::SyncPar:
          acc = Term::sync_par(operands[i], acc);
          break;
        case Tok::Interleave:
          acc = Term::interleave(operands[i], acc);
          break;
        case Tok::GenOpen:
          acc = Term::gen_par(operands[i], op.sync, acc);
          break;
        default:
          acc = Term::alpha_par(operands[i], op.left_alpha, op.right_alpha,
                                acc);
          break;
      }
    }
    return acc;
  }

  TermRef prefix() {
    if (at(Tok::LName)) {
      std::size_t scope_mark = scopes_.size();
      auto [channel, comps] = event();
      expect(Tok::Arrow, "'->'");
      TermRef cont = prefix();
      scopes_.resize(scope_mark);
      bool has_binder = std::any_of(
          comps.begin(), comps.end(),
          [](const EventComp& c) { return std::holds_alternative<Binder>(c); });
      if (has_binder) return Term::input(channel, std::move(comps), cont);
      std::vector<ValueExpr> plain;
      plain.reserve(comps.size());
      for (EventComp& c : comps)
        plain.push_back(std::move(std::get<ValueExpr>(c)));
      return Term::prefix(channel, std::move(plain), cont);
    }
    return atom();
  }

  TermRef atom() {
    if (at(Tok::KwStop)) {
      eat();
      return Term::stop();
    }
    if (at(Tok::KwSkip)) {
      eat();
      return Term::skip();
    }
    if (at(Tok::UName)) {
      Token name = eat();
      ref_sites_.emplace_back(name.text, name.span);
      return Term::ref(name.text);
    }
    if (at(Tok::LParen)) {
      eat();
      TermRef inner = proc();
      expect(Tok::RParen, "')'");
      return inner;
    }
    error_here("expected a process");
    throw SyntaxAbort{};
  }

  // --- events -------------------------------------------------------------
  std::pair<std::string, std::vector<EventComp>> event() {
    Token channel = expect(Tok::LName, "a channel name");
    const ChannelDecl* decl = nullptr;
    if (env_.has_channel(channel.text)) {
      decl = &env_.channel(channel.text);
    } else {
      diag(DiagCode::UnknownChannel, channel.span,
           "channel '" + channel.text + "' is not declared");
    }

    std::vector<EventComp> comps;
    for (;;) {
      const std::vector<Value>* domain = nullptr;
      if (decl && comps.size() < decl->domains.size())
        domain = &decl->domains[comps.size()];
      if (at(Tok::Dot) || at(Tok::Bang)) {
        eat();
        comps.emplace_back(component_value(channel.text, domain));
      } else if (at(Tok::Question)) {
        eat();
        Token var = expect(Tok::LName, "a variable name");
        expect(Tok::Colon, "':'");
        SourceSpan set_span = cur().span;
        std::vector<Value> values = value_set();
        if (values.empty()) {
          diag(DiagCode::DomainMismatch, set_span, "binder domain is empty");
          values.push_back(Value::integer(0));  // placeholder; env is discarded
        }
        if (domain && !std::includes(domain->begin(), domain->end(),
                                     values.begin(), values.end()))
          diag(DiagCode::DomainMismatch, set_span,
               "binder '" + var.text +
                   "' ranges outside the declared domain of channel '" +
                   channel.text + "'");
        scopes_.push_back({var.text, values});
        comps.emplace_back(Binder{var.text, std::move(values)});
      } else {
        break;
      }
    }
    if (decl && comps.size() != decl->domains.size())
      diag(DiagCode::ArityMismatch, channel.span,
           "channel '" + channel.text + "' used with " +
               std::to_string(comps.size()) + " components, declared with " +
               std::to_string(decl->domains.size()));
    return {channel.text, std::move(comps)};
  }

  ValueExpr component_value(const std::string& channel,
                            const std::vector<Value>* domain) {
    if (at(Tok::Int)) {
      Token t = eat();
      Value v = Value::integer(static_cast<std::int32_t>(t.number));
      if (domain && !std::binary_search(domain->begin(), domain->end(), v))
        diag(DiagCode::DomainMismatch, t.span,
             "value " + t.text + " is outside the declared domain of '" +
                 channel + "'");
      return ValueExpr(v);
    }
    Token t = expect(Tok::LName, "a value");
    // a name bound by an enclosing binder is a variable reference
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->first == t.text) {
        if (domain && !std::includes(domain->begin(), domain->end(),
                                     it->second.begin(), it->second.end()))
          diag(DiagCode::DomainMismatch, t.span,
               "variable '" + t.text +
                   "' ranges outside the declared domain of '" + channel + "'");
        return ValueExpr(VarName{t.text});
      }
    }
    Value v = Value::atom(t.text);
    if (domain && !std::binary_search(domain->begin(), domain->end(), v))
      diag(DiagCode::DomainMismatch, t.span,
           "value " + t.text + " is outside the declared domain of '" +
               channel + "'");
    return ValueExpr(v);
  }

  // --- value and event sets ------------------------------------------------
  std::vector<Value> value_set() {
    if (at(Tok::UName)) {
      Token name = eat();
      auto it = sets_.find(name.text);
      if (it == sets_.end()) {
        diag(DiagCode::Syntax, name.span, "unknown set " + name.text);
        return {};
      }
      return it->second;
    }
    expect(Tok::LBrace, "a value set");
    std::vector<Value> values;
    if (at(Tok::RBrace)) {
      eat();
      return values;
    }
    // range {lo..hi}
    if (at(Tok::Int) && next().kind == Tok::DotDot) {
      Token lo = eat();
      eat();  // ..
      Token hi = expect(Tok::Int, "the range upper bound");
      expect(Tok::RBrace, "'}'");
      if (lo.number > hi.number) {
        diag(DiagCode::Syntax, lo.span, "range is empty");
        return {};
      }
      for (std::int64_t v = lo.number; v <= hi.number; ++v)
        values.push_back(Value::integer(static_cast<std::int32_t>(v)));
      return values;
    }
    for (;;) {
      if (at(Tok::Int)) {
        values.push_back(Value::integer(static_cast<std::int32_t>(eat().number)));
      } else if (at(Tok::LName)) {
        values.push_back(Value::atom(eat().text));
      } else {
        error_here("expected a value");
        throw SyntaxAbort{};
      }
      if (at(Tok::Comma)) {
        eat();
        continue;
      }
      break;
    }
    expect(Tok::RBrace, "'}'");
    normalize_value_set(values);
    return values;
  }

  // An event set names plain events or whole channels; a channel name with
  // declared components stands for every event of that channel.
  EventSet event_set() {
    SourceSpan span = cur().span;
    std::vector<Value> names = value_set();
    EventSet events;
    for (const Value& v : names) {
      if (!v.is_atom()) {
        diag(DiagCode::Syntax, span,
             "event sets name events or channels, not integers");
        continue;
      }
      if (!env_.has_channel(v.atom_name())) {
        diag(DiagCode::UnknownChannel, span,
             "channel '" + v.atom_name() + "' is not declared");
        continue;
      }
      for (Event& e : env_.channel_events(v.atom_name()))
        events.insert(std::move(e));
    }
    return events;
  }

  // --- post passes ----------------------------------------------------------
  void resolve_references() {
    for (const auto& [name, span] : ref_sites_) {
      if (!env_.has_definition(name))
        diag(DiagCode::UnboundReference, span,
             "process '" + name + "' is not defined");
    }
  }

  void check_guardedness() {
    if (!diags_.empty()) return;  // only meaningful on a resolved script
    GuardednessResult result = check_guarded(env_);
    if (result.ok) return;
    std::string cycle;
    for (const std::string& n : result.cycle) {
      if (!cycle.empty()) cycle += " -> ";
      cycle += n;
    }
    cycle += " -> " + result.cycle.front();
    SourceSpan span;
    auto it = def_spans_.find(result.cycle.front());
    if (it != def_spans_.end()) span = it->second;
    diag(DiagCode::UnguardedRecursion, span,
         "recursion " + cycle + " never passes a prefix");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diags_;
  Environment env_;
  std::map<std::string, std::vector<Value>> sets_;
  std::map<std::string, SourceSpan> def_spans_;
  std::vector<std::pair<std::string, std::vector<Value>>> scopes_;
  std::vector<std::pair<std::string, SourceSpan>> ref_sites_;
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

}  // namespace cspauto
