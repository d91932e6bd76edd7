#include "folim/sexpr.hpp"

#include <cctype>

#include "folim/error.hpp"

namespace folim {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    SExpr e;
    e.offset = pos_;
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", pos_);
    if (c == '(') {
      e.is_list = true;
      ++pos_;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unterminated list opened", e.offset);
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      ++pos_;
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const SExpr& e, std::string& out) {
  if (e.is_atom()) {
    out += e.atom;
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    print(e.items[i], out);
  }
  out += ')';
}

}  // namespace

SExpr parse_sexpr(std::string_view text) {
  Reader r(text);
  SExpr e = r.read();
  if (!r.at_end()) throw ParseError("trailing input", r.pos());
  return e;
}

std::vector<SExpr> parse_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<SExpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

std::string to_string(const SExpr& e) {
  std::string s;
  print(e, s);
  return s;
}

}  // namespace folim
