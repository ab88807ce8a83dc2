#include "nashseq/parse.hpp"

#include <cctype>

namespace nashseq {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& names, Field field, std::size_t base_offset,
         std::string_view full)
      : text_(text), names_(names), field_(field), base_(base_offset), full_(full) {}

  Polynomial parse_all() {
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    Polynomial p = sum();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t abs = base_ + pos_, line = 1, col = 1;
    for (std::size_t i = 0; i < abs && i < full_.size(); ++i) {
      if (full_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    Polynomial acc(field_, names_.size());
    bool negate = false;
    skip();
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial first = product();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc = acc.scaled(d.initial_coefficient().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(field_, names_.size(), FieldElement(field_, mpq_class(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == ident) return Polynomial::variable(field_, names_.size(), i);
      pos_ = start;
      fail("unknown variable '" + std::string(ident) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  Field field_;
  std::size_t base_;
  std::string_view full_;
  std::size_t pos_ = 0;
};

Polynomial parse_at(std::string_view full, std::size_t offset, std::size_t length,
                    const std::vector<std::string>& names, Field field) {
  return Parser(full.substr(offset, length), names, field, offset, full).parse_all();
}

struct Piece {
  std::size_t offset;
  std::size_t length;
};

std::vector<Piece> split_pieces(std::string_view text, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == sep && depth == 0) {
      out.push_back({start, i - start});
      start = i + 1;
    }
  }
  out.push_back({start, text.size() - start});
  return out;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// Offsets of the outer parentheses of a tuple.
std::pair<std::size_t, std::size_t> tuple_bounds(std::string_view text) {
  std::size_t open = text.find_first_not_of(" \t\r\n");
  if (open == std::string_view::npos) throw ParseError("empty tuple", 1, 1);
  auto position = [&](std::size_t at) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return std::make_pair(line, col);
  };
  if (text[open] != '(') {
    auto [l, c] = position(open);
    throw ParseError("expected '('", l, c);
  }
  std::size_t close = text.find_last_not_of(" \t\r\n");
  if (text[close] != ')' || close == open) {
    auto [l, c] = position(close);
    throw ParseError("expected ')'", l, c);
  }
  return {open, close};
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names, Field field) {
  return parse_at(text, 0, text.size(), names, field);
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const std::vector<std::string>& names,
                                              Field field) {
  std::vector<Polynomial> out;
  for (const auto& piece : split_pieces(text, ';')) {
    if (blank(text.substr(piece.offset, piece.length))) {
      // A trailing separator is tolerated.
      if (piece.offset + piece.length == text.size() && !out.empty()) continue;
      Parser(text.substr(piece.offset, piece.length), names, field, piece.offset, text).parse_all();
    }
    out.push_back(parse_at(text, piece.offset, piece.length, names, field));
  }
  return out;
}

Arc parse_arc(std::string_view text, Field field) {
  auto [open, close] = tuple_bounds(text);
  std::string_view inner = text.substr(open + 1, close - open - 1);
  std::vector<Polynomial> coords;
  const std::vector<std::string> names{"t"};
  for (const auto& piece : split_pieces(inner, ','))
    coords.push_back(parse_at(text, open + 1 + piece.offset, piece.length, names, field));
  return Arc::from_coordinates(field, coords);
}

std::vector<FieldElement> parse_vector(std::string_view text, Field field) {
  auto [open, close] = tuple_bounds(text);
  std::string_view inner = text.substr(open + 1, close - open - 1);
  std::vector<FieldElement> out;
  const std::vector<std::string> names;
  for (const auto& piece : split_pieces(inner, ',')) {
    Polynomial p = parse_at(text, open + 1 + piece.offset, piece.length, names, field);
    out.push_back(p.is_zero() ? FieldElement::zero(field) : p.initial_coefficient());
  }
  return out;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  for (const auto& piece : split_pieces(text, sep)) out.emplace_back(text.substr(piece.offset, piece.length));
  return out;
}

} // namespace nashseq
