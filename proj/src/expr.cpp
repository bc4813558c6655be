#include "cyc/expr.hpp"

#include <cctype>
#include <cstring>

#include "cyc/error.hpp"

namespace cyc {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  std::size_t integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    unsigned long long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + static_cast<unsigned long long>(text_[i] - '0');
      if (value > 1'000'000) fail("number too large");
    }
    return static_cast<std::size_t>(value);
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& message) {
    throw Error(ErrorKind::ParseError,
                "at offset " + std::to_string(pos_) + ": " + message);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// One parenthesized cycle sequence, e.g. "(1 2 3)(4 5)" or "()".
std::vector<std::vector<std::size_t>> parse_cycles(Scanner& s) {
  std::vector<std::vector<std::size_t>> cycles;
  if (s.peek() != '(') s.fail("expected a cycle");
  while (s.peek() == '(') {
    s.expect('(');
    std::vector<std::size_t> cycle;
    while (s.at_digit()) {
      std::size_t point = s.integer();
      if (point == 0) s.fail("cycle entries are 1-based");
      cycle.push_back(point);
    }
    s.expect(')');
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Expands cycles into an image vector on 0..degree-1; (a b c) maps a -> b.
std::vector<elem> cycles_to_image(const std::vector<std::vector<std::size_t>>& cycles,
                                  std::size_t degree, ErrorKind out_of_range_kind) {
  std::vector<elem> image(degree);
  for (std::size_t x = 0; x < degree; ++x) image[x] = static_cast<elem>(x);
  std::vector<char> moved(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t from = cycle[i] - 1;
      std::size_t to = cycle[(i + 1) % cycle.size()] - 1;
      if (from >= degree || to >= degree) {
        throw Error(out_of_range_kind,
                    "cycle entry " + std::to_string(std::max(cycle[i], cycle[(i + 1) % cycle.size()])) +
                        " outside 1.." + std::to_string(degree));
      }
      if (moved[from]) {
        throw Error(ErrorKind::NotAPermutation,
                    "point " + std::to_string(from + 1) + " appears in two cycles");
      }
      moved[from] = 1;
      image[from] = static_cast<elem>(to);
    }
  }
  return image;
}

GroupExpr parse_node(Scanner& s) {
  GroupExpr node;
  std::string name = s.ident();
  s.expect('(');

  auto one_int = [&](GroupExpr::Kind kind) {
    node.kind = kind;
    node.params.push_back(s.integer());
    s.expect(')');
  };

  if (name == "Z") {
    one_int(GroupExpr::Kind::Cyclic);
  } else if (name == "EA") {
    node.kind = GroupExpr::Kind::ElemAbelian;
    node.params.push_back(s.integer());
    s.expect(',');
    node.params.push_back(s.integer());
    s.expect(')');
  } else if (name == "D") {
    one_int(GroupExpr::Kind::Dihedral);
  } else if (name == "Dic") {
    one_int(GroupExpr::Kind::Dicyclic);
  } else if (name == "Q") {
    one_int(GroupExpr::Kind::Quaternion);
  } else if (name == "M") {
    one_int(GroupExpr::Kind::Modular);
  } else if (name == "Heis") {
    one_int(GroupExpr::Kind::Heisenberg);
  } else if (name == "prod") {
    node.kind = GroupExpr::Kind::Prod;
    node.children.push_back(std::make_shared<GroupExpr>(parse_node(s)));
    s.expect(',');
    node.children.push_back(std::make_shared<GroupExpr>(parse_node(s)));
    s.expect(')');
  } else if (name == "sdp") {
    node.kind = GroupExpr::Kind::Sdp;
    node.children.push_back(std::make_shared<GroupExpr>(parse_node(s)));
    s.expect(',');
    node.children.push_back(std::make_shared<GroupExpr>(parse_node(s)));
    s.expect(',');
    if (s.peek() == 'i' || s.peek() == 't') {
      std::string word = s.ident();
      if (word == "inv") {
        node.action.inversion = true;
      } else if (word == "trivial") {
        node.action.trivial = true;
      } else {
        s.fail("expected \"inv\", \"trivial\", or \"gen\" clauses, got \"" + word + "\"");
      }
    } else {
      for (;;) {
        std::string word = s.ident();
        if (word != "gen") s.fail("expected \"gen\", got \"" + word + "\"");
        std::size_t gen_index = s.integer();
        s.expect('-');
        s.expect('>');
        node.action.genmaps.emplace_back(gen_index, parse_cycles(s));
        if (!s.consume(',')) break;
      }
    }
    s.expect(')');
  } else if (name == "perm") {
    node.kind = GroupExpr::Kind::Perm;
    node.perm_degree = s.integer();
    if (node.perm_degree == 0) s.fail("perm degree must be positive");
    s.expect(';');
    for (;;) {
      node.perms.push_back(
          cycles_to_image(parse_cycles(s), node.perm_degree, ErrorKind::ParseError));
      if (!s.consume(',')) break;
    }
    s.expect(')');
  } else if (name == "raw") {
    node.kind = GroupExpr::Kind::Raw;
    node.raw_order = s.integer();
    if (node.raw_order == 0) s.fail("raw order must be positive");
    s.expect(';');
    while (s.at_digit()) {
      std::size_t v = s.integer();
      if (v > 65535) s.fail("raw entry too large");
      node.raw_table.push_back(static_cast<elem>(v));
    }
    s.expect(')');
    if (node.raw_table.size() != node.raw_order * node.raw_order) {
      s.fail("raw table needs " + std::to_string(node.raw_order * node.raw_order) +
             " entries, got " + std::to_string(node.raw_table.size()));
    }
  } else {
    s.fail("unknown constructor \"" + name + "\"");
  }
  return node;
}

std::string cycles_text(const std::vector<std::vector<std::size_t>>& cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += " ";
      out += std::to_string(cycle[i]);
    }
    out += ")";
  }
  return out;
}

// Image vector back to 1-based cycle text (least element starts each cycle,
// cycles ordered by least element).
std::string image_cycles_text(const std::vector<elem>& image) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<char> visited(image.size(), 0);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (visited[start] || image[start] == start) continue;
    std::vector<std::size_t> cycle;
    std::size_t x = start;
    while (!visited[x]) {
      visited[x] = 1;
      cycle.push_back(x + 1);
      x = image[x];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles_text(cycles);
}

}  // namespace

bool GroupExpr::is_raw() const {
  if (kind == Kind::Raw) return true;
  for (const auto& child : children) {
    if (child->is_raw()) return true;
  }
  return false;
}

GroupExpr parse_expr(const std::string& text) {
  Scanner s(text);
  GroupExpr node = parse_node(s);
  s.expect_end();
  return node;
}

std::string serialize_expr(const GroupExpr& expr) {
  switch (expr.kind) {
    case GroupExpr::Kind::Cyclic:
      return "Z(" + std::to_string(expr.params[0]) + ")";
    case GroupExpr::Kind::ElemAbelian:
      return "EA(" + std::to_string(expr.params[0]) + "," + std::to_string(expr.params[1]) + ")";
    case GroupExpr::Kind::Dihedral:
      return "D(" + std::to_string(expr.params[0]) + ")";
    case GroupExpr::Kind::Dicyclic:
      return "Dic(" + std::to_string(expr.params[0]) + ")";
    case GroupExpr::Kind::Quaternion:
      return "Q(" + std::to_string(expr.params[0]) + ")";
    case GroupExpr::Kind::Modular:
      return "M(" + std::to_string(expr.params[0]) + ")";
    case GroupExpr::Kind::Heisenberg:
      return "Heis(" + std::to_string(expr.params[0]) + ")";
    case GroupExpr::Kind::Prod:
      return "prod(" + serialize_expr(*expr.children[0]) + "," +
             serialize_expr(*expr.children[1]) + ")";
    case GroupExpr::Kind::Sdp: {
      std::string action;
      if (expr.action.inversion) {
        action = "inv";
      } else if (expr.action.trivial) {
        action = "trivial";
      } else {
        for (std::size_t i = 0; i < expr.action.genmaps.size(); ++i) {
          if (i > 0) action += ", ";
          action += "gen " + std::to_string(expr.action.genmaps[i].first) + " -> " +
                    cycles_text(expr.action.genmaps[i].second);
        }
      }
      return "sdp(" + serialize_expr(*expr.children[0]) + "," +
             serialize_expr(*expr.children[1]) + "," + action + ")";
    }
    case GroupExpr::Kind::Perm: {
      std::string out = "perm(" + std::to_string(expr.perm_degree) + ";";
      for (std::size_t i = 0; i < expr.perms.size(); ++i) {
        out += (i == 0 ? " " : ", ") + image_cycles_text(expr.perms[i]);
      }
      return out + ")";
    }
    case GroupExpr::Kind::Raw: {
      std::string out = "raw(" + std::to_string(expr.raw_order) + ";";
      for (elem v : expr.raw_table) out += " " + std::to_string(v);
      return out + ")";
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "unhandled expression kind");
}

Group eval_expr(const GroupExpr& expr, std::size_t order_cap) {
  auto capped = [&](Group g) {
    if (g.order() > order_cap) {
      throw Error(ErrorKind::ClosureTooLarge,
                  g.label() + ": order " + std::to_string(g.order()) +
                      " exceeds the order cap " + std::to_string(order_cap));
    }
    return g;
  };

  switch (expr.kind) {
    case GroupExpr::Kind::Cyclic:
      return capped(cyclic(expr.params[0]));
    case GroupExpr::Kind::ElemAbelian:
      return capped(elem_abelian(expr.params[0], expr.params[1]));
    case GroupExpr::Kind::Dihedral:
      return capped(dihedral(expr.params[0]));
    case GroupExpr::Kind::Dicyclic:
      return capped(dicyclic(expr.params[0]));
    case GroupExpr::Kind::Quaternion:
      return capped(quaternion_generalized(expr.params[0]));
    case GroupExpr::Kind::Modular:
      return capped(modular_maximal_cyclic(expr.params[0]));
    case GroupExpr::Kind::Heisenberg:
      return capped(heisenberg_mod_p(expr.params[0]));
    case GroupExpr::Kind::Prod: {
      Group a = eval_expr(*expr.children[0], order_cap);
      Group b = eval_expr(*expr.children[1], order_cap);
      if (a.order() * b.order() > order_cap) {
        throw Error(ErrorKind::ClosureTooLarge,
                    "prod(" + a.label() + "," + b.label() + "): order " +
                        std::to_string(a.order() * b.order()) + " exceeds the order cap " +
                        std::to_string(order_cap));
      }
      return direct_product(a, b);
    }
    case GroupExpr::Kind::Sdp: {
      Group n = eval_expr(*expr.children[0], order_cap);
      Group h = eval_expr(*expr.children[1], order_cap);
      if (n.order() * h.order() > order_cap) {
        throw Error(ErrorKind::ClosureTooLarge,
                    "sdp(" + n.label() + "," + h.label() + ",...): order " +
                        std::to_string(n.order() * h.order()) + " exceeds the order cap " +
                        std::to_string(order_cap));
      }
      ActionSpec spec;
      spec.inversion = expr.action.inversion;
      spec.trivial = expr.action.trivial;
      for (const auto& [gen_index, cycles] : expr.action.genmaps) {
        if (gen_index > 65535) {
          throw Error(ErrorKind::BadParameter, "generator index too large");
        }
        spec.generator_images.emplace_back(
            static_cast<elem>(gen_index),
            cycles_to_image(cycles, n.order(), ErrorKind::ActionNotAutomorphism));
      }
      return semidirect(n, h, spec);
    }
    case GroupExpr::Kind::Perm:
      return from_permutations(expr.perm_degree, expr.perms, order_cap);
    case GroupExpr::Kind::Raw: {
      if (expr.raw_order > order_cap) {
        throw Error(ErrorKind::ClosureTooLarge,
                    "raw table order " + std::to_string(expr.raw_order) +
                        " exceeds the order cap " + std::to_string(order_cap));
      }
      return validate_table(expr.raw_order, expr.raw_table, serialize_expr(expr));
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "unhandled expression kind");
}

Group eval_expr(const std::string& text, std::size_t order_cap) {
  return eval_expr(parse_expr(text), order_cap);
}

}  // namespace cyc
