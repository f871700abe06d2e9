#include "setopt/extreal.hpp"

#include <stdexcept>

namespace setopt {

const Q& ExtReal::value() const {
  if (tag_ != Tag::Finite) throw std::logic_error("value() of an infinite ExtReal");
  return v_;
}

ExtReal ExtReal::operator-() const {
  switch (tag_) {
    case Tag::PlusInf: return minus_inf();
    case Tag::MinusInf: return plus_inf();
    default: return ExtReal(Q(-v_));
  }
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.tag_ != b.tag_) return false;
  return a.tag_ != ExtReal::Tag::Finite || a.v_ == b.v_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  auto rank = [](ExtReal::Tag t) { return t == ExtReal::Tag::MinusInf ? 0 : t == ExtReal::Tag::Finite ? 1 : 2; };
  int ra = rank(a.tag_), rb = rank(b.tag_);
  if (ra != rb) return ra <=> rb;
  if (ra != 1) return std::strong_ordering::equal;
  int c = cmp(a.v_, b.v_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string ExtReal::str() const {
  switch (tag_) {
    case Tag::PlusInf: return "+inf";
    case Tag::MinusInf: return "-inf";
    default: return v_.get_str();
  }
}

ExtReal inf_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_plus_inf() || b.is_plus_inf()) return ExtReal::plus_inf();
  if (a.is_minus_inf() || b.is_minus_inf()) return ExtReal::minus_inf();
  return ExtReal(Q(a.value() + b.value()));
}

ExtReal residual(const ExtReal& r, const ExtReal& s) {
  if (r.is_minus_inf()) return ExtReal::minus_inf();
  if (s.is_plus_inf()) return ExtReal::minus_inf();
  if (r.is_plus_inf()) return ExtReal::plus_inf();
  if (s.is_minus_inf()) return ExtReal::plus_inf();
  return ExtReal(Q(r.value() - s.value()));
}

ExtReal scale(const Q& s, const ExtReal& a) {
  if (s <= 0) throw std::invalid_argument("scale of ExtReal needs s > 0");
  if (!a.finite()) return a;
  return ExtReal(Q(s * a.value()));
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

}  // namespace setopt
