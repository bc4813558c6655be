#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cyc/construct.hpp"
#include "cyc/group.hpp"

namespace cyc {

// Action clause of an sdp(...) expression as written: cycles stay symbolic
// until evaluation, because the acted-on group's order is only known then.
struct ActionExpr {
  bool inversion = false;  // "inv"
  bool trivial = false;    // "trivial"
  // (H generator index, disjoint cycles with 1-based element entries).
  std::vector<std::pair<std::size_t, std::vector<std::vector<std::size_t>>>> genmaps;
};

// Parsed constructor expression. The grammar (whitespace-insensitive,
// cycles written 1-based; see docs/FORMATS.md):
//
//   expr   := Z(n) | EA(p,k) | D(n) | Dic(n) | Q(n) | M(n) | Heis(p)
//           | prod(expr, expr)
//           | sdp(expr, expr, action)
//           | perm(degree; perm {, perm})
//           | raw(n; n*n table entries)
//   action := "inv" | "trivial" | genmap {, genmap}
//   genmap := "gen" INT "->" perm
//   perm   := "()" | cycle {cycle}            e.g. (1 2 3)(4 5)
struct GroupExpr {
  enum class Kind {
    Cyclic,
    ElemAbelian,
    Dihedral,
    Dicyclic,
    Quaternion,
    Modular,
    Heisenberg,
    Prod,
    Sdp,
    Perm,
    Raw,
  };

  Kind kind = Kind::Cyclic;
  std::vector<std::size_t> params;                   // numeric arguments, in order
  std::vector<std::shared_ptr<GroupExpr>> children;  // prod / sdp operands
  ActionExpr action;                                 // sdp only
  std::size_t perm_degree = 0;                       // perm only
  std::vector<std::vector<elem>> perms;              // perm only (0-based images)
  std::size_t raw_order = 0;                         // raw only
  std::vector<elem> raw_table;                       // raw only

  bool is_raw() const;  // true if this node or any child is a raw table
};

// Parses `text` or throws ParseError naming the byte offset of the problem.
GroupExpr parse_expr(const std::string& text);

// Canonical text form; parse_expr(serialize_expr(e)) reproduces e, and the
// shipped catalog stores expressions exactly in this form.
std::string serialize_expr(const GroupExpr& expr);

// Builds the group an expression denotes. Any (sub)result whose order would
// exceed `order_cap` raises ClosureTooLarge; constructor errors pass through.
Group eval_expr(const GroupExpr& expr, std::size_t order_cap = kDefaultOrderCap);
Group eval_expr(const std::string& text, std::size_t order_cap = kDefaultOrderCap);

}  // namespace cyc
