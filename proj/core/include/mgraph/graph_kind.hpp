#pragma once

#include <string>
#include <string_view>

#include "mgraph/rational.hpp"

namespace mgraph {

class GraphKind {
 public:
  enum class Tag { Young, Jack, Kingman, Schur };

  static GraphKind young() { return GraphKind(Tag::Young, 1); }
  static GraphKind jack(const Rational& theta);
  static GraphKind kingman() { return GraphKind(Tag::Kingman, 0); }
  static GraphKind schur() { return GraphKind(Tag::Schur, 1); }
  // "young", "kingman", "schur", "jack:theta=1/2" or "jack(1/2)".
  static GraphKind parse(std::string_view s);

  Tag tag() const { return tag_; }
  // Only meaningful for Jack.
  const Rational& theta() const { return theta_; }
  bool strict() const { return tag_ == Tag::Schur; }
  std::string str() const;

  friend bool operator==(const GraphKind&, const GraphKind&) = default;

 private:
  GraphKind(Tag t, Rational theta) : tag_(t), theta_(std::move(theta)) {}
  Tag tag_;
  Rational theta_;
};

}  // namespace mgraph
