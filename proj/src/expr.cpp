#include "xpg/expr.hpp"

#include <cctype>
#include <memory>

namespace xpg {

parse_error::parse_error(std::size_t position, const std::string& expected)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": expected " + expected),
      position_(position),
      expected_(expected) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GroupExpr parse() {
    auto e = parse_product();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error(pos_, "end of input or 'x'");
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) throw parse_error(pos_, what);
    ++pos_;
  }

  bool eat_word(const char* w) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(w);
    if (text_.compare(pos_, len, w) == 0) {
      pos_ += len;
      return true;
    }
    return false;
  }

  int parse_int(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw parse_error(start, "a smaller integer");
      ++pos_;
    }
    if (pos_ == start) throw parse_error(pos_, what);
    return static_cast<int>(value);
  }

  std::string parse_path(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ')') break;
      ++pos_;
    }
    if (pos_ == start) throw parse_error(pos_, what);
    return text_.substr(start, pos_ - start);
  }

  GroupExpr parse_product() {
    GroupExpr e = parse_atom();
    while (peek_is('x')) {
      ++pos_;
      GroupExpr rhs = parse_atom();
      GroupExpr prod;
      prod.kind = GroupExpr::Kind::kProduct;
      prod.left = std::make_shared<GroupExpr>(std::move(e));
      prod.right = std::make_shared<GroupExpr>(std::move(rhs));
      e = std::move(prod);
    }
    return e;
  }

  GroupExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw parse_error(pos_, "Z<n>, D<2n>, S<n>, A<n>, sdp(...), or file:<path>");
    if (eat_word("sdp")) return parse_sdp();
    if (eat_word("file:")) {
      GroupExpr e;
      e.kind = GroupExpr::Kind::kFile;
      e.path = parse_path("a file path");
      return e;
    }
    char c = text_[pos_];
    if (c == 'Z' || c == 'D' || c == 'S' || c == 'A') {
      ++pos_;
      GroupExpr e;
      if (c == 'Z') {
        e.kind = GroupExpr::Kind::kCyclic;
        e.n = parse_int("an integer after Z");
      } else if (c == 'D') {
        std::size_t numpos = pos_;
        int order = parse_int("an integer after D");
        if (order < 2 || order % 2 != 0)
          throw parse_error(numpos, "an even order of at least 2 after D");
        e.kind = GroupExpr::Kind::kDihedral;
        e.n = order / 2;
      } else if (c == 'S') {
        e.kind = GroupExpr::Kind::kSym;
        e.n = parse_int("an integer after S");
      } else {
        e.kind = GroupExpr::Kind::kAlt;
        e.n = parse_int("an integer after A");
      }
      return e;
    }
    throw parse_error(pos_, "Z<n>, D<2n>, S<n>, A<n>, sdp(...), or file:<path>");
  }

  GroupExpr parse_sdp() {
    expect('(', "'(' after sdp");
    GroupExpr left = parse_product();
    expect(',', "',' after the first sdp argument");
    GroupExpr right = parse_product();
    expect(',', "',' after the second sdp argument");
    GroupExpr e;
    e.kind = GroupExpr::Kind::kSdp;
    e.left = std::make_shared<GroupExpr>(std::move(left));
    e.right = std::make_shared<GroupExpr>(std::move(right));
    skip_ws();
    if (eat_word("mult")) {
      expect('=', "'=' after mult");
      e.action = GroupExpr::Action::kMult;
      e.mult_k = parse_int("an integer after mult=");
    } else if (eat_word("inv")) {
      e.action = GroupExpr::Action::kInv;
    } else if (eat_word("table")) {
      expect('=', "'=' after table");
      e.action = GroupExpr::Action::kTable;
      e.path = parse_path("a file path after table=");
    } else {
      throw parse_error(pos_, "mult=<k>, inv, or table=<path>");
    }
    expect(')', "')' closing sdp");
    return e;
  }
};

}  // namespace

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.kind != b.kind || a.n != b.n || a.action != b.action || a.mult_k != b.mult_k ||
      a.path != b.path)
    return false;
  auto eq_child = [](const std::shared_ptr<const GroupExpr>& x,
                     const std::shared_ptr<const GroupExpr>& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return eq_child(a.left, b.left) && eq_child(a.right, b.right);
}

GroupExpr parse_group(const std::string& text) { return Parser(text).parse(); }

std::string render(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::kCyclic: return "Z" + std::to_string(e.n);
    case GroupExpr::Kind::kDihedral: return "D" + std::to_string(2 * e.n);
    case GroupExpr::Kind::kSym: return "S" + std::to_string(e.n);
    case GroupExpr::Kind::kAlt: return "A" + std::to_string(e.n);
    case GroupExpr::Kind::kProduct: return render(*e.left) + " x " + render(*e.right);
    case GroupExpr::Kind::kSdp: {
      std::string action;
      switch (e.action) {
        case GroupExpr::Action::kMult: action = "mult=" + std::to_string(e.mult_k); break;
        case GroupExpr::Action::kInv: action = "inv"; break;
        case GroupExpr::Action::kTable: action = "table=" + e.path; break;
        case GroupExpr::Action::kNone: action = "?"; break;
      }
      return "sdp(" + render(*e.left) + ", " + render(*e.right) + ", " + action + ")";
    }
    case GroupExpr::Kind::kFile: return "file:" + e.path;
  }
  return "?";
}

FiniteGroup evaluate(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::kCyclic: return make_cyclic(e.n);
    case GroupExpr::Kind::kDihedral: return make_dihedral(e.n);
    case GroupExpr::Kind::kSym: return make_symmetric(e.n);
    case GroupExpr::Kind::kAlt: return make_alternating(e.n);
    case GroupExpr::Kind::kProduct:
      return make_direct_product(evaluate(*e.left), evaluate(*e.right));
    case GroupExpr::Kind::kSdp: {
      FiniteGroup h = evaluate(*e.left);
      FiniteGroup k = evaluate(*e.right);
      switch (e.action) {
        case GroupExpr::Action::kMult:
          if (e.left->kind != GroupExpr::Kind::kCyclic ||
              e.right->kind != GroupExpr::Kind::kCyclic)
            throw std::invalid_argument("mult action needs cyclic groups on both sides: " +
                                        render(e));
          return make_semidirect(h, k, mult_action(h.order(), e.mult_k, k.order())).group;
        case GroupExpr::Action::kInv:
          if (e.right->kind != GroupExpr::Kind::kCyclic)
            throw std::invalid_argument("inv action needs a cyclic acting group: " + render(e));
          return make_semidirect(h, k, inversion_action(h, k.order())).group;
        case GroupExpr::Action::kTable:
          return make_semidirect(h, k, hom_to_aut_from_file(e.path, k, h)).group;
        case GroupExpr::Action::kNone: break;
      }
      throw std::invalid_argument("sdp without an action: " + render(e));
    }
    case GroupExpr::Kind::kFile: return from_cayley_table_file(e.path);
  }
  throw std::invalid_argument("unknown expression");
}

}  // namespace xpg
