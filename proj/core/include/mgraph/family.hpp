#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mgraph/graph_kind.hpp"
#include "mgraph/partition.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

// Young graph, z + z' = e and zz' = t.
struct YoungZZ {
  Rational e, t;
};
// Jack graph; zz is the product zz', the denominator parameter is zz/theta.
struct JackZZ {
  Rational e, zz, theta;
  Rational t() const { return zz / theta; }
};
struct KingmanTA {
  Rational t, alpha;
};
struct SchurT {
  Rational t;
};
struct TruncYoung {
  Partition lambda;
};
struct GammaShaped {
  FrobeniusCoords fc;
  int cap = 8;
};
struct TruncKingman {
  Partition lambda;
};
struct TruncSchur {
  StrictPartition lambda;
};

class HarmonicFamily {
 public:
  using Params = std::variant<YoungZZ, JackZZ, KingmanTA, SchurT, TruncYoung, GammaShaped, TruncKingman, TruncSchur>;

  // Validates the parameters; throws ParameterError.
  explicit HarmonicFamily(Params p);

  // "young-zz:e=3,t=2", "jack:e=3,t=2,theta=1/2", "kingman:t=1,alpha=1/2",
  // "schur:t=3", "trunc-young:lambda=2+1", "gamma-shaped:lambda=3+2+2,cap=8"
  // (or frobenius=(2,1|2,0)), "trunc-kingman:lambda=1+1",
  // "trunc-schur:lambda=3+1".
  static HarmonicFamily parse(std::string_view spec);
  std::string str() const;

  const Params& params() const { return p_; }
  GraphKind graph() const;
  // Support bound on the length for truncated families.
  std::optional<int> max_length() const;
  // Largest |mu| phi can be evaluated at, if bounded.
  std::optional<int> degree_cap() const;
  bool is_truncated() const;

  Rational phi(const Partition& mu) const;

 private:
  struct State;
  Params p_;
  std::shared_ptr<State> state_;
};

inline Rational phi(const HarmonicFamily& f, const Partition& mu) { return f.phi(mu); }

}  // namespace mgraph
