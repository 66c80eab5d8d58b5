#pragma once

#include <cctype>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "io.hpp"
#include "quintet.hpp"
#include "xmod.hpp"

// Line-oriented text format for rectangular arrays of quintets:
//
//   # comment
//   use "xm1.json"               crossed module, relative to this file
//   elem a = 1                   alias; the value is an index or a name
//   sq A = (a, 0, a, 0 ; 1)      (left, top, right, bottom ; face)
//   grid:
//   A A
//   A A
//
// Labels are integers, aliases, identifier-shaped element names, or quoted
// element names such as "(1 2 3)". Edges resolve in G, faces in H. The grid
// section runs to the end of the file.

namespace xmodcat {

/// A label as written: an index, or a name to resolve.
struct Label {
  bool is_index = true;
  Index index = 0;
  std::string name;
  bool quoted = false;

  bool operator==(const Label&) const = default;
};

struct SquareDecl {
  std::string name;
  Label labels[5];  // left, top, right, bottom, face
  Quintet square;

  bool operator==(const SquareDecl& o) const {
    for (int i = 0; i < 5; ++i)
      if (!(labels[i] == o.labels[i])) return false;
    return name == o.name && square == o.square;
  }
};

struct ParsedGrid {
  std::shared_ptr<const CrossedModule> xm;
  std::string use_path;
  std::vector<std::pair<std::string, Label>> aliases;
  std::vector<SquareDecl> squares;
  std::vector<std::vector<std::string>> rows;
  QuintetGrid grid;

  /// Structural equality; the crossed modules are compared by table.
  bool operator==(const ParsedGrid& o) const {
    return use_path == o.use_path && aliases == o.aliases && squares == o.squares && rows == o.rows &&
           ((xm && o.xm && *xm == *o.xm) || (!xm && !o.xm)) && grid.rows == o.grid.rows &&
           grid.cols == o.grid.cols && grid.cells == o.grid.cells;
  }
};

namespace detail {

struct Token {
  enum Kind { Ident, Int, String, Punct } kind;
  std::string text;
  std::size_t column;  // 1-based
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

inline std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::Ident, std::string(line.substr(i, j - i)), i + 1});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && ident_char(line[j]))
        throw ParseError(ErrorKind::SyntaxError, lineno, i + 1, "malformed number");
      if (j - i > 9) throw ParseError(ErrorKind::SyntaxError, lineno, i + 1, "number too large");
      out.push_back({Token::Int, std::string(line.substr(i, j - i)), i + 1});
      i = j;
    } else if (c == '"') {
      const std::size_t j = line.find('"', i + 1);
      if (j == std::string_view::npos) throw ParseError(ErrorKind::SyntaxError, lineno, i + 1, "unterminated string");
      out.push_back({Token::String, std::string(line.substr(i + 1, j - i - 1)), i + 1});
      i = j + 1;
    } else if (c == '(' || c == ')' || c == ',' || c == ';' || c == '=' || c == ':') {
      out.push_back({Token::Punct, std::string(1, c), i + 1});
      ++i;
    } else {
      throw ParseError(ErrorKind::SyntaxError, lineno, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

class LineCursor {
 public:
  LineCursor(const std::vector<Token>& toks, std::size_t lineno, std::size_t eol)
      : toks_(toks), line_(lineno), eol_(eol) {}

  bool done() const { return pos_ >= toks_.size(); }
  const Token* peek() const { return done() ? nullptr : &toks_[pos_]; }
  std::size_t column() const { return done() ? eol_ : toks_[pos_].column; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorKind::SyntaxError, line_, column(), what);
  }

  const Token& take(Token::Kind kind, const char* what) {
    if (done() || toks_[pos_].kind != kind) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }
  void punct(char c) {
    if (done() || toks_[pos_].kind != Token::Punct || toks_[pos_].text[0] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void end() {
    if (!done()) fail("unexpected trailing input");
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t line_;
  std::size_t eol_;
  std::size_t pos_ = 0;
};

/// The message of a library error without its "Kind: " prefix.
inline std::string bare_message(const Error& e) {
  const std::string w = e.what();
  const auto k = w.find(": ");
  return k == std::string::npos ? w : w.substr(k + 2);
}

inline Label read_label(LineCursor& cur) {
  const Token* t = cur.peek();
  if (!t || t->kind == Token::Punct) cur.fail("expected a label");
  const Token tok = *t;
  cur.take(tok.kind, "a label");
  if (tok.kind == Token::Int) return {true, static_cast<Index>(std::stoul(tok.text)), {}, false};
  return {false, 0, tok.text, tok.kind == Token::String};
}

}  // namespace detail

/// Parses the grid format. Relative `use` paths resolve against `base_dir`.
/// Throws ParseError with kind SyntaxError, UnknownName, BoundaryViolation
/// or AdjacencyViolation, positioned at the offending token. A `use` file
/// that cannot be loaded surfaces as Io or Format.
inline ParsedGrid parse_grid(std::string_view text, const fs::path& base_dir = ".") {
  ParsedGrid out;
  std::map<std::string, Label> alias;
  std::map<std::string, std::size_t> square_of;
  struct RowRef {
    std::size_t line;
    std::vector<std::size_t> cols;
  };
  std::vector<RowRef> row_pos;
  bool in_grid = false;
  std::size_t grid_line = 0;

  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  // Resolves a label in G (edge) or H (face).
  auto resolve = [&](const Label& l, bool face, std::size_t line, std::size_t col) -> Index {
    const FiniteGroup& grp = face ? out.xm->H() : out.xm->G();
    Label cur = l;
    for (int depth = 0; !cur.is_index && !cur.quoted && alias.count(cur.name) && depth < 64; ++depth)
      cur = alias.at(cur.name);
    Index v;
    if (cur.is_index) {
      v = cur.index;
    } else {
      v = grp.find(cur.name);
      if (v == kNone && !cur.quoted && cur.name == "e") v = grp.identity();
      if (v == kNone)
        throw ParseError(ErrorKind::UnknownName, line, col,
                         "'" + l.name + "' is neither an alias nor an element of " + (face ? "H" : "G"));
    }
    if (v >= grp.order())
      throw ParseError(ErrorKind::SyntaxError, line, col,
                       "index " + std::to_string(v) + " out of range for " + (face ? "H" : "G"));
    return v;
  };

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    const auto toks = detail::tokenize(line, lineno);
    start = nl + 1;
    if (toks.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    detail::LineCursor cur(toks, lineno, line.size() + 1);

    if (in_grid) {
      RowRef pos{lineno, {}};
      std::vector<std::string> names;
      while (!cur.done()) {
        pos.cols.push_back(cur.column());
        names.push_back(cur.take(detail::Token::Ident, "a square name").text);
      }
      if (!out.rows.empty() && names.size() != out.rows.front().size())
        throw ParseError(ErrorKind::SyntaxError, lineno, 1,
                         "row has " + std::to_string(names.size()) + " squares, expected " +
                             std::to_string(out.rows.front().size()));
      for (std::size_t j = 0; j < names.size(); ++j)
        if (!square_of.count(names[j]))
          throw ParseError(ErrorKind::UnknownName, lineno, pos.cols[j], "undeclared square '" + names[j] + "'");
      out.rows.push_back(std::move(names));
      row_pos.push_back(std::move(pos));
      if (nl == text.size()) break;
      continue;
    }

    const auto& kw = cur.take(detail::Token::Ident, "a keyword (use, elem, sq, grid)");
    if (kw.text == "use") {
      if (out.xm) throw ParseError(ErrorKind::SyntaxError, lineno, kw.column, "crossed module already chosen");
      out.use_path = cur.take(detail::Token::String, "a quoted path").text;
      cur.end();
      out.xm = std::make_shared<const CrossedModule>(load_xmod(base_dir / out.use_path));
    } else if (kw.text == "elem") {
      const auto& name = cur.take(detail::Token::Ident, "an alias name");
      if (alias.count(name.text)) throw ParseError(ErrorKind::SyntaxError, lineno, name.column, "alias redefined");
      cur.punct('=');
      const Label l = detail::read_label(cur);
      cur.end();
      alias[name.text] = l;
      out.aliases.emplace_back(name.text, l);
    } else if (kw.text == "sq") {
      if (!out.xm) throw ParseError(ErrorKind::SyntaxError, lineno, kw.column, "'use' must come before squares");
      const auto& name = cur.take(detail::Token::Ident, "a square name");
      if (square_of.count(name.text))
        throw ParseError(ErrorKind::SyntaxError, lineno, name.column, "square '" + name.text + "' redefined");
      cur.punct('=');
      cur.punct('(');
      SquareDecl decl;
      decl.name = name.text;
      Index v[5];
      for (int k = 0; k < 5; ++k) {
        if (k == 4) cur.punct(';');
        else if (k > 0) cur.punct(',');
        const std::size_t col = cur.column();
        decl.labels[k] = detail::read_label(cur);
        v[k] = resolve(decl.labels[k], k == 4, lineno, col);
      }
      cur.punct(')');
      cur.end();
      try {
        decl.square = make_square(*out.xm, v[0], v[1], v[2], v[3], v[4]);
      } catch (const Error& e) {
        throw ParseError(ErrorKind::BoundaryViolation, lineno, name.column,
                         "square '" + name.text + "': " + detail::bare_message(e));
      }
      square_of[name.text] = out.squares.size();
      out.squares.push_back(std::move(decl));
    } else if (kw.text == "grid") {
      cur.punct(':');
      cur.end();
      in_grid = true;
      grid_line = lineno;
    } else {
      throw ParseError(ErrorKind::SyntaxError, lineno, kw.column, "unknown keyword '" + kw.text + "'");
    }
    if (nl == text.size()) break;
  }

  if (!out.xm) throw ParseError(ErrorKind::SyntaxError, lineno == 0 ? 1 : lineno, 1, "missing 'use' line");
  if (!in_grid) throw ParseError(ErrorKind::SyntaxError, lineno == 0 ? 1 : lineno, 1, "missing 'grid:' section");
  if (out.rows.empty()) throw ParseError(ErrorKind::SyntaxError, grid_line, 1, "grid has no rows");

  out.grid.rows = static_cast<Index>(out.rows.size());
  out.grid.cols = static_cast<Index>(out.rows.front().size());
  for (const auto& row : out.rows)
    for (const auto& n : row) out.grid.cells.push_back(out.squares[square_of.at(n)].square);
  try {
    check_grid(out.grid);
  } catch (const Error& e) {
    const auto i = static_cast<std::size_t>(e.witness().at(0));
    const auto j = static_cast<std::size_t>(e.witness().at(1));
    throw ParseError(ErrorKind::AdjacencyViolation, row_pos[i].line, row_pos[i].cols[j],
                     detail::bare_message(e));
  }
  return out;
}

inline ParsedGrid parse_grid_file(const fs::path& path) {
  return parse_grid(read_text_file(path), detail::dir_of(path));
}

/// Canonical text for a parsed grid; parse_grid of the result reproduces it.
inline std::string serialize_grid(const ParsedGrid& g) {
  auto label = [](const Label& l) {
    if (l.is_index) return std::to_string(l.index);
    return l.quoted ? "\"" + l.name + "\"" : l.name;
  };
  std::string s = "use \"" + g.use_path + "\"\n";
  for (const auto& [name, l] : g.aliases) s += "elem " + name + " = " + label(l) + "\n";
  for (const auto& d : g.squares) {
    s += "sq " + d.name + " = (" + label(d.labels[0]) + ", " + label(d.labels[1]) + ", " + label(d.labels[2]) +
         ", " + label(d.labels[3]) + " ; " + label(d.labels[4]) + ")\n";
  }
  s += "grid:\n";
  for (const auto& row : g.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j];
    s += "\n";
  }
  return s;
}

/// JSON alternative: {"xmod": path, "cells": [[{"l","t","r","b","e"}, ...], ...]}.
/// Cells are named c<i>_<j>.
inline ParsedGrid grid_from_json(const json& j, const fs::path& base_dir = ".") {
  ParsedGrid out;
  const json& x = detail::field(j, "xmod");
  if (x.is_string()) {
    out.use_path = x.get<std::string>();
    out.xm = std::make_shared<const CrossedModule>(load_xmod(base_dir / out.use_path));
  } else {
    out.xm = std::make_shared<const CrossedModule>(xmod_from_json(x, base_dir));
  }
  const json& cells = detail::field(j, "cells");
  if (!cells.is_array() || cells.empty()) detail::bad_format("cells must be a non-empty array of rows");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].is_array() || cells[i].size() != cells[0].size() || cells[i].empty())
      detail::bad_format("cells rows must be non-empty and of equal length");
    out.rows.emplace_back();
    for (std::size_t k = 0; k < cells[i].size(); ++k) {
      const json& c = cells[i][k];
      SquareDecl d;
      d.name = "c" + std::to_string(i) + "_" + std::to_string(k);
      const char* keys[5] = {"l", "t", "r", "b", "e"};
      Index v[5];
      for (int m = 0; m < 5; ++m) {
        v[m] = detail::index_of(detail::field(c, keys[m]), keys[m]);
        d.labels[m] = {true, v[m], {}, false};
      }
      d.square = make_square(*out.xm, v[0], v[1], v[2], v[3], v[4]);
      out.rows.back().push_back(d.name);
      out.grid.cells.push_back(d.square);
      out.squares.push_back(std::move(d));
    }
  }
  out.grid.rows = static_cast<Index>(out.rows.size());
  out.grid.cols = static_cast<Index>(out.rows.front().size());
  check_grid(out.grid);
  return out;
}

}  // namespace xmodcat
