#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "xpg/group.hpp"

namespace xpg {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, const std::string& expected);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Group expression syntax (whitespace-insensitive, 'x' left-associative):
//   Z<n> | D<2n> | S<n> | A<n> | e1 x e2
//   | sdp(e1, e2, mult=<k>) | sdp(e1, e2, inv) | sdp(e1, e2, table=<path>)
//   | file:<path>
struct GroupExpr {
  enum class Kind { kCyclic, kDihedral, kSym, kAlt, kProduct, kSdp, kFile };
  enum class Action { kNone, kMult, kInv, kTable };

  Kind kind = Kind::kCyclic;
  int n = 0;  // kCyclic/kSym/kAlt: n; kDihedral: rotation count (written D<2n>)
  std::shared_ptr<const GroupExpr> left;
  std::shared_ptr<const GroupExpr> right;
  Action action = Action::kNone;  // kSdp only
  int mult_k = 0;
  std::string path;  // kFile source, or table action path
};

bool operator==(const GroupExpr& a, const GroupExpr& b);

GroupExpr parse_group(const std::string& text);
std::string render(const GroupExpr& e);

// Builds the group; semantic violations (order cap, invalid actions) throw
// std::invalid_argument with the offending subexpression in the message.
FiniteGroup evaluate(const GroupExpr& e);

}  // namespace xpg
