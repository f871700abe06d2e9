#include "setopt/expr.hpp"

#include <cctype>
#include <string>

#include "setopt/error.hpp"
#include "setopt/vectoropt.hpp"

namespace setopt {

namespace {

class Parser {
 public:
  Parser(const Workspace& ws, std::string_view s) : ws_(ws), s_(s) {}

  UpperSet parse() {
    UpperSet r = infimum();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return r;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ValidationError,
                what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool at_number() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '-' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
  }

  Q number() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    auto digits = [&] {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ > b;
    };
    if (!digits()) fail("expected a number");
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      digits();
    } else if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::string ident() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  Vec coords() {
    Vec v{number()};
    while (accept(",")) v.push_back(number());
    if (static_cast<int>(v.size()) != ws_.dim()) fail("expected " + std::to_string(ws_.dim()) + " coordinates");
    return v;
  }

  Vec tuple() {
    expect("(");
    Vec v = coords();
    expect(")");
    return v;
  }

  UpperSet infimum() {
    UpperSet a = supremum();
    while (accept("|")) a = inf_family(ws_, {a, supremum()});
    return a;
  }

  UpperSet supremum() {
    UpperSet a = sum();
    while (accept("&")) a = sup_family(ws_, {a, sum()});
    return a;
  }

  UpperSet sum() {
    UpperSet a = scaled();
    for (;;) {
      if (accept("+")) a = add(ws_, a, scaled());
      else if (accept("-:") || accept("÷")) a = residual_diff(ws_, a, scaled());
      else return a;
    }
  }

  UpperSet scaled() {
    if (at_number()) {
      Q t = number();
      expect("*");
      if (t < 0) fail("negative scaling factor");
      return scale(ws_, t, scaled());
    }
    return atom();
  }

  UpperSet atom() {
    if (accept("(")) {
      UpperSet a = infimum();
      expect(")");
      return a;
    }
    std::size_t at = pos_;
    std::string id = ident();
    if (id == "C") return cone_set(ws_);
    if (id == "Z") return all_set(ws_);
    if (id == "Empty") return empty_set(ws_);
    if (id == "pt") return point_plus_cone(ws_, tuple());
    if (id == "infdir") return infdir_plus_cone(ws_, tuple());
    if (id == "rec") {
      expect("(");
      UpperSet a = infimum();
      expect(")");
      return recession(ws_, a);
    }
    if (id == "half") {
      expect("(");
      Vec n = coords();
      expect(":");
      Q b = number();
      expect(")");
      return canonicalize(ws_, {Halfspace{n, b}});
    }
    if (id == "hull") {
      expect("(");
      std::vector<Vec> pts{tuple()}, rays;
      while (accept(",")) pts.push_back(tuple());
      if (accept(";")) {
        rays.push_back(tuple());
        while (accept(",")) rays.push_back(tuple());
      }
      expect(")");
      return hull(ws_, pts, rays);
    }
    pos_ = at;
    fail(id.empty() ? "expected a set" : "unknown name '" + id + "'");
  }

 private:
  const Workspace& ws_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

UpperSet eval_expr(const Workspace& ws, std::string_view text) { return Parser(ws, text).parse(); }

OrderCone parse_cone(std::string_view text) {
  std::vector<Vec> gens;
  std::size_t start = 0;
  int dim = -1;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    Vec g;
    std::size_t s = 0;
    while (s <= part.size()) {
      std::size_t e = part.find(',', s);
      if (e == std::string_view::npos) e = part.size();
      try {
        g.push_back(parse_rational(part.substr(s, e - s)));
      } catch (const std::invalid_argument& ex) {
        throw Error(ErrorCode::ValidationError, "bad cone generator '" + std::string(part) + "': " + ex.what());
      }
      s = e + 1;
    }
    if (dim >= 0 && static_cast<int>(g.size()) != dim) throw Error(ErrorCode::ValidationError, "cone generators differ in length");
    dim = static_cast<int>(g.size());
    gens.push_back(g);
    start = end + 1;
  }
  return OrderCone::make(dim, gens);
}

}  // namespace setopt
