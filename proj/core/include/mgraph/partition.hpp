#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mgraph/rational.hpp"

namespace mgraph {

// 1-based (row, column) of a box.
struct Box {
  int row;
  int col;
  friend bool operator==(const Box&, const Box&) = default;
};

class Partition {
 public:
  Partition() = default;
  // Parts must be nonincreasing and nonnegative; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "3+2+1", "[3,2,1]", "3,2,1"; the empty partition is "()", "[]", "0" or "".
  static Partition parse(std::string_view s);
  std::string str() const;
  std::string json() const;

  const std::vector<int>& parts() const { return p_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(p_.size()); }
  bool empty() const { return p_.empty(); }
  // 1-based part, 0 beyond the length.
  int operator[](int i) const { return i >= 1 && i <= length() ? p_[i - 1] : 0; }

  Partition conjugate() const;
  int multiplicity(int k) const;
  bool is_strict() const;
  bool contains(const Partition& mu) const;
  bool contains(const Box& b) const;
  int depth() const;

  std::vector<Box> boxes() const;
  int content(const Box& b) const { return b.col - b.row; }
  int arm(const Box& b) const;
  int leg(const Box& b) const;
  int hook(const Box& b) const { return arm(b) + leg(b) + 1; }
  Rational theta_content(const Box& b, const Rational& theta) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.p_ <=> b.p_;
  }

 private:
  std::vector<int> p_;
  int size_ = 0;
};

// Partition with pairwise distinct parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(Partition p);
  StrictPartition(std::initializer_list<int> parts) : StrictPartition(Partition(parts)) {}
  static StrictPartition parse(std::string_view s) { return StrictPartition(Partition::parse(s)); }

  const Partition& partition() const { return p_; }
  const std::vector<int>& parts() const { return p_.parts(); }
  int size() const { return p_.size(); }
  int length() const { return p_.length(); }
  int operator[](int i) const { return p_[i]; }
  std::string str() const { return p_.str(); }

  // Boxes of the shifted diagram: row i occupies columns i..i+mu_i-1.
  std::vector<Box> shifted_boxes() const;

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) { return a.p_ <=> b.p_; }

 private:
  Partition p_;
};

// (p_1,...,p_d | q_1,...,q_d) with p_i = mu_i - i and q_i = mu'_i - i.
struct FrobeniusCoords {
  std::vector<int> p;
  std::vector<int> q;

  FrobeniusCoords() = default;
  FrobeniusCoords(std::vector<int> p_, std::vector<int> q_);

  static FrobeniusCoords of(const Partition& mu);
  // "(2,1|2,0)"
  static FrobeniusCoords parse(std::string_view s);
  Partition to_partition() const;
  int depth() const { return static_cast<int>(p.size()); }
  std::string str() const;
  friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

}  // namespace mgraph

template <>
struct std::hash<mgraph::Partition> {
  std::size_t operator()(const mgraph::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
