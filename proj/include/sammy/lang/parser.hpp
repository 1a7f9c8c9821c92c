#pragma once

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "sammy/lang/program.hpp"

namespace sammy::lang {

namespace detail {

struct Token {
  enum Type { Ident, Assign, Colon, LParen, RParen, Comma, Equal, End } type;
  std::string text;
  int column;
};

[[noreturn]] inline void syntaxError(int line, int column, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

inline std::vector<Token> lex(const std::string& text, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (text.compare(i, 2, ":=") == 0) {
      out.push_back({Token::Assign, ":=", col});
      i += 2;
    } else if (text.compare(i, 2, "==") == 0) {
      out.push_back({Token::Equal, "==", col});
      i += 2;
    } else if (c == ':') {
      out.push_back({Token::Colon, ":", col}), ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", col}), ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", col}), ++i;
    } else if (c == ',') {
      out.push_back({Token::Comma, ",", col}), ++i;
    } else {
      syntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(text.size()) + 1});
  return out;
}

inline bool isKeyword(const std::string& s) { return s == "IF" || s == "GOTO" || s == "INPUT" || s == "RETURN"; }

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}

  Instruction parse() {
    Instruction in;
    in.line = line_;
    if (peek().type == Token::Ident && peek(1).type == Token::Colon && !isKeyword(peek().text)) {
      in.label = take().text;
      take();
    }
    const Token& head = peek();
    if (head.type != Token::Ident) fail("expected a statement");
    if (head.text == "IF") {
      take();
      in.kind = InstrKind::If;
      in.args.push_back(variable());
      expect(Token::Equal, "'=='");
      in.args.push_back(variable());
      if (peek().type != Token::Ident || peek().text != "GOTO") fail("expected GOTO");
      take();
      in.jump = variable();
    } else if (head.text == "INPUT") {
      take();
      in.kind = InstrKind::Input;
      in.targets.push_back(variable());
      expect(Token::Colon, "':'");
      const Token& k = expect(Token::Ident, "an input kind");
      bool found = false;
      for (std::size_t i = 0; i < kInputKindNames.size(); ++i)
        if (kInputKindNames[i] == k.text) {
          in.inputKind = static_cast<InputKind>(i);
          found = true;
        }
      if (!found) syntaxError(line_, k.column, "unknown input kind '" + k.text + "'");
    } else if (head.text == "RETURN") {
      take();
      in.kind = InstrKind::Return;
      expect(Token::LParen, "'('");
      in.args.push_back(variable());
      while (peek().type == Token::Comma) {
        take();
        in.args.push_back(variable());
      }
      expect(Token::RParen, "')'");
      if (in.args.size() > 3) fail("RETURN takes at most three variables");
    } else {
      in.targets.push_back(variable());
      if (peek().type == Token::Comma) {
        take();
        in.targets.push_back(variable());
      }
      expect(Token::Assign, "':='");
      const Token& name = expect(Token::Ident, "an operation or constant");
      if (peek().type == Token::LParen) {
        auto op = opByName(name.text);
        if (!op)
          throw Error(ErrorKind::UnknownOperation, "line " + std::to_string(line_) + ", column " +
                                                      std::to_string(name.column) + ": '" + name.text + "'");
        in.kind = InstrKind::Assign;
        in.op = *op;
        take();
        if (peek().type != Token::RParen) {
          in.args.push_back(variable());
          while (peek().type == Token::Comma) {
            take();
            in.args.push_back(variable());
          }
        }
        expect(Token::RParen, "')'");
        if (static_cast<int>(in.args.size()) != opInfo(*op).arity)
          syntaxError(line_, name.column, name.text + " takes " + std::to_string(opInfo(*op).arity) + " argument(s)");
        if (in.targets.size() == 2 && !opInfo(*op).twoResults)
          syntaxError(line_, name.column, name.text + " has a single result");
      } else {
        auto c = constantByName(name.text);
        if (!c) {
          if (opByName(name.text)) syntaxError(line_, name.column, "operation '" + name.text + "' needs arguments");
          syntaxError(line_, name.column, "unknown constant '" + name.text + "'");
        }
        if (in.targets.size() != 1) syntaxError(line_, name.column, "a constant binds one variable");
        in.kind = InstrKind::Const;
        in.constant = *c;
      }
    }
    if (peek().type != Token::End) fail("unexpected '" + peek().text + "'");
    return in;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { syntaxError(line_, peek().column, msg); }
  const Token& expect(Token::Type t, const std::string& what) {
    if (peek().type != t) fail("expected " + what);
    return take();
  }
  std::string variable() {
    const Token& t = peek();
    if (t.type != Token::Ident || isKeyword(t.text)) fail("expected a name");
    return take().text;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace detail

/// Parses program text; blank and comment-only lines are skipped.
inline Program parse(const std::string& text) {
  Program p;
  p.source = text;
  int lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++lineNo;
    auto toks = detail::lex(line, lineNo);
    if (toks.size() > 1) p.instructions.push_back(detail::LineParser(std::move(toks), lineNo).parse());
    start = end + 1;
  }
  std::set<std::string> labels;
  for (const auto& in : p.instructions)
    if (in.label && !labels.insert(*in.label).second)
      throw Error(ErrorKind::DuplicateLabel, "line " + std::to_string(in.line) + ": label '" + *in.label + "'");
  for (std::size_t i = 0; i + 1 < p.instructions.size(); ++i)
    if (p.instructions[i].kind == InstrKind::Return)
      throw Error(ErrorKind::ReturnNotLast, "line " + std::to_string(p.instructions[i].line));
  for (const auto& in : p.instructions)
    if (in.kind == InstrKind::If && !labels.count(in.jump))
      throw Error(ErrorKind::UndefinedLabel, "line " + std::to_string(in.line) + ": label '" + in.jump + "'");
  return p;
}

}  // namespace sammy::lang
