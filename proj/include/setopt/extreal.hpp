#pragma once

#include <compare>
#include <string>

#include "setopt/rational.hpp"

namespace setopt {

// Element of R ∪ {+inf, -inf}. Addition is the inf-addition: +inf absorbs everything.
class ExtReal {
 public:
  enum class Tag { Finite, PlusInf, MinusInf };

  ExtReal() : tag_(Tag::Finite), v_(0) {}
  ExtReal(const Q& v) : tag_(Tag::Finite), v_(v) {}  // NOLINT: implicit on purpose
  ExtReal(long v) : tag_(Tag::Finite), v_(v) {}      // NOLINT
  ExtReal(int v) : tag_(Tag::Finite), v_(v) {}       // NOLINT

  static ExtReal plus_inf() { return ExtReal(Tag::PlusInf); }
  static ExtReal minus_inf() { return ExtReal(Tag::MinusInf); }

  Tag tag() const { return tag_; }
  bool finite() const { return tag_ == Tag::Finite; }
  bool is_plus_inf() const { return tag_ == Tag::PlusInf; }
  bool is_minus_inf() const { return tag_ == Tag::MinusInf; }
  // Only meaningful when finite().
  const Q& value() const;

  ExtReal operator-() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  std::string str() const;

 private:
  explicit ExtReal(Tag t) : tag_(t), v_(0) {}
  Tag tag_;
  Q v_;
};

ExtReal inf_add(const ExtReal& a, const ExtReal& b);
// r ÷ s = inf{t in R : r <= s ⊞ t}.
ExtReal residual(const ExtReal& r, const ExtReal& s);
// Multiplication by a rational s > 0.
ExtReal scale(const Q& s, const ExtReal& a);

ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);

}  // namespace setopt
