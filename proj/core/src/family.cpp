#include "mgraph/family.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "mgraph/errors.hpp"
#include "mgraph/functional.hpp"
#include "mgraph/poly.hpp"
#include "mgraph/pstar.hpp"
#include "mgraph/special.hpp"
#include "mgraph/symmetric.hpp"

namespace mgraph {

struct HarmonicFamily::State {
  Point point;                             // evaluation point of a truncated family
  std::optional<FunctionalSpec> gamma;     // super evaluation for GammaShaped
  std::mutex mu;
  std::shared_ptr<const TwoRowTable> table;  // TruncSchur, grown on demand
};

namespace {

bool forbidden_denominator(const Rational& t) {
  return t.is_integer() && t.sign() <= 0;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational sign_power(int n) { return n % 2 ? Rational(-1) : Rational(1); }

}  // namespace

HarmonicFamily::HarmonicFamily(Params p) : p_(std::move(p)), state_(std::make_shared<State>()) {
  std::visit(overloaded{
                 [](const YoungZZ& f) {
                   if (forbidden_denominator(f.t))
                     throw ParameterError("young-zz: t = " + f.t.str() + " is forbidden (t must avoid 0,-1,-2,...)");
                 },
                 [](const JackZZ& f) {
                   if (f.theta.sign() <= 0) throw ParameterError("jack: theta must be positive");
                   if (forbidden_denominator(f.t()))
                     throw ParameterError("jack: zz'/theta = " + f.t().str() + " is forbidden (must avoid 0,-1,-2,...)");
                 },
                 [](const KingmanTA&) {},  // poles at t = -1,-2,... surface in phi
                 [](const SchurT&) {},
                 [this](const TruncYoung& f) {
                   const int l = f.lambda.length();
                   if (l < 2) throw ParameterError("trunc-young needs l(lambda) >= 2");
                   for (int i = 1; i <= l; ++i) state_->point.emplace_back(-f.lambda[i] - 2 * (l - i) - 1);
                 },
                 [this](const GammaShaped& f) {
                   if (f.fc.depth() < 1) throw ParameterError("gamma-shaped needs a nonempty diagram");
                   if (f.cap < 1) throw ParameterError("gamma-shaped: degree cap must be positive");
                   SuperPoint sp;
                   for (int p : f.fc.p) sp.x.push_back(Rational(-2 * p - 1, 2));
                   for (int q : f.fc.q) sp.y.push_back(Rational(-2 * q - 1, 2));
                   state_->gamma = FunctionalSpec::super_evaluation(sp, f.cap);
                 },
                 [this](const TruncKingman& f) {
                   if (f.lambda.empty()) throw ParameterError("trunc-kingman needs a nonempty lambda");
                   for (int x : f.lambda.parts()) state_->point.emplace_back(-x - 1);
                 },
                 [this](const TruncSchur& f) {
                   if (f.lambda.length() == 0) throw ParameterError("trunc-schur needs a nonempty lambda");
                   for (int x : f.lambda.parts()) state_->point.emplace_back(-x - 1);
                 },
             },
             p_);
}

GraphKind HarmonicFamily::graph() const {
  return std::visit(overloaded{
                        [](const YoungZZ&) { return GraphKind::young(); },
                        [](const JackZZ& f) { return GraphKind::jack(f.theta); },
                        [](const KingmanTA&) { return GraphKind::kingman(); },
                        [](const SchurT&) { return GraphKind::schur(); },
                        [](const TruncYoung&) { return GraphKind::young(); },
                        [](const GammaShaped&) { return GraphKind::young(); },
                        [](const TruncKingman&) { return GraphKind::kingman(); },
                        [](const TruncSchur&) { return GraphKind::schur(); },
                    },
                    p_);
}

std::optional<int> HarmonicFamily::max_length() const {
  if (auto* f = std::get_if<TruncYoung>(&p_)) return f->lambda.length();
  if (auto* f = std::get_if<TruncKingman>(&p_)) return f->lambda.length();
  if (auto* f = std::get_if<TruncSchur>(&p_)) return f->lambda.length();
  return std::nullopt;
}

std::optional<int> HarmonicFamily::degree_cap() const {
  if (auto* f = std::get_if<GammaShaped>(&p_)) return f->cap;
  return std::nullopt;
}

bool HarmonicFamily::is_truncated() const {
  return std::holds_alternative<TruncYoung>(p_) || std::holds_alternative<GammaShaped>(p_) ||
         std::holds_alternative<TruncKingman>(p_) || std::holds_alternative<TruncSchur>(p_);
}

namespace {

Rational young_zz_phi(const YoungZZ& f, const Partition& mu) {
  Rational r = 1;
  for (const Box& b : mu.boxes()) {
    const Rational c = mu.content(b);
    r *= (f.t + c * f.e + c * c) / Rational(mu.hook(b));
  }
  return r / pochhammer(f.t, mu.size());
}

Rational jack_zz_phi(const JackZZ& f, const Partition& mu) {
  Rational r = 1;
  for (const Box& b : mu.boxes()) {
    const Rational c = mu.theta_content(b, f.theta);
    r *= (f.zz + c * f.e + c * c) / (Rational(mu.arm(b)) + f.theta * mu.leg(b) + f.theta);
  }
  return r / pochhammer(f.t(), mu.size());
}

Rational kingman_phi(const KingmanTA& f, const Partition& mu) {
  if (mu.empty()) return 1;
  const int n = mu.size(), l = mu.length();
  Rational r = 1;
  for (int x : mu.parts()) r *= factorial(x - 1);
  for (int k = 1; k <= mu[1]; ++k) r /= factorial(mu.multiplicity(k));
  for (int i = 1; i < l; ++i) r *= f.t + i * f.alpha;
  const Rational den = pochhammer(f.t + 1, n - 1);
  if (den.is_zero()) throw ParameterError("kingman family: phi(" + mu.str() + ") has a pole at t = " + f.t.str());
  r /= den;
  for (int x : mu.parts())
    for (int j = 2; j <= x; ++j) r *= 1 - f.alpha / Rational(j - 1);
  return r;
}

Rational schur_t_phi(const SchurT& f, const Partition& mu) {
  if (!mu.is_strict()) throw std::invalid_argument("schur family: " + mu.str() + " is not strict");
  const int n = mu.size(), l = mu.length();
  Rational c = 1;  // t-independent factor
  for (int x : mu.parts()) c /= 2 * factorial(x);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) c *= Rational(mu[i] - mu[j], mu[i] + mu[j]);
  Rational den = pochhammer(f.t, n);
  if (!den.is_zero()) {
    Rational num = 1;
    for (int x : mu.parts())
      for (int j = 1; j <= x; ++j) num *= 2 * f.t + Rational((j - 1) * j);
    return c * num / den;
  }
  // (t)_n vanishes: evaluate the reduced rational function of t instead.
  Polynomial num(Rational(1)), dp(Rational(1));
  for (int x : mu.parts())
    for (int j = 1; j <= x; ++j) num *= Polynomial(std::vector<Rational>{Rational((j - 1) * j), 2});
  for (int i = 0; i < n; ++i) dp *= Polynomial::linear_root(-i);
  RationalFunction q(num, dp);
  if (q.has_pole_at(f.t))
    throw ParameterError("schur family: phi(" + mu.str() + ") has a pole at t = " + f.t.str());
  return c * q(f.t);
}

}  // namespace

Rational HarmonicFamily::phi(const Partition& mu) const {
  const int n = mu.size();
  return std::visit(
      overloaded{
          [&](const YoungZZ& f) { return young_zz_phi(f, mu); },
          [&](const JackZZ& f) { return jack_zz_phi(f, mu); },
          [&](const KingmanTA& f) { return kingman_phi(f, mu); },
          [&](const SchurT& f) { return schur_t_phi(f, mu); },
          [&](const TruncYoung& f) {
            const int l = f.lambda.length();
            if (mu.length() > l) return Rational();
            return sign_power(n) * shifted_schur_eval(mu, state_->point) / pochhammer(f.lambda.size() + l * l, n);
          },
          [&](const GammaShaped& f) {
            if (mu.depth() > f.fc.depth()) return Rational();
            if (n > f.cap)
              throw std::out_of_range("gamma-shaped: |mu| = " + std::to_string(n) + " exceeds the degree cap " +
                                      std::to_string(f.cap));
            auto basis = GeneratorBasis::get(f.cap);
            Rational v = apply_functional(basis->shifted_schur(mu), *state_->gamma);
            return sign_power(n) * v / pochhammer(f.fc.to_partition().size(), n);
          },
          [&](const TruncKingman& f) {
            const int l = f.lambda.length();
            if (mu.length() > l) return Rational();
            return sign_power(n) * factorial_monomial_eval(mu, state_->point) / pochhammer(f.lambda.size() + l, n);
          },
          [&](const TruncSchur& f) {
            if (!mu.is_strict()) throw std::invalid_argument("trunc-schur: " + mu.str() + " is not strict");
            if (mu.empty()) return Rational(1);
            std::shared_ptr<const TwoRowTable> table;
            {
              std::lock_guard lock(state_->mu);
              if (!state_->table || state_->table->max_sum() < n) {
                int s = std::max(n, state_->table ? 2 * state_->table->max_sum() : 12);
                state_->table = std::make_shared<const TwoRowTable>(pstar_one_row_values(state_->point, s));
              }
              table = state_->table;
            }
            const int l = f.lambda.length();
            return sign_power(n) * pstar_eval(StrictPartition(mu), *table) / pochhammer(f.lambda.size() + l, n);
          },
      },
      p_);
}

namespace {

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

class KeyValues {
 public:
  KeyValues(std::string kind, std::string_view body) : kind_(std::move(kind)) {
    for (const std::string& item : split_top_level(body)) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError(kind_ + ": expected key=value, got '" + item + "'");
      kv_[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  bool has(const std::string& k) const { return kv_.count(k) != 0; }
  std::string take(const std::string& k) {
    auto it = kv_.find(k);
    if (it == kv_.end()) throw ParseError(kind_ + ": missing parameter '" + k + "'");
    std::string v = it->second;
    kv_.erase(it);
    return v;
  }
  Rational rational(const std::string& k) { return Rational::parse(take(k)); }
  void done() const {
    if (!kv_.empty()) throw ParseError(kind_ + ": unknown parameter '" + kv_.begin()->first + "'");
  }

 private:
  std::string kind_;
  std::map<std::string, std::string> kv_;
};

}  // namespace

HarmonicFamily HarmonicFamily::parse(std::string_view spec) {
  auto colon = spec.find(':');
  std::string kind(spec.substr(0, colon));
  KeyValues kv(kind, colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1));
  Params p;
  if (kind == "young-zz") {
    p = YoungZZ{kv.rational("e"), kv.rational("t")};
  } else if (kind == "jack") {
    Rational e = kv.rational("e");
    Rational zz = kv.has("zz") ? kv.rational("zz") : kv.rational("t");
    p = JackZZ{e, zz, kv.rational("theta")};
  } else if (kind == "kingman") {
    p = KingmanTA{kv.rational("t"), kv.rational("alpha")};
  } else if (kind == "schur") {
    p = SchurT{kv.rational("t")};
  } else if (kind == "trunc-young") {
    p = TruncYoung{Partition::parse(kv.take("lambda"))};
  } else if (kind == "gamma-shaped" || kind == "gamma") {
    GammaShaped g;
    if (kv.has("frobenius"))
      g.fc = FrobeniusCoords::parse(kv.take("frobenius"));
    else
      g.fc = FrobeniusCoords::of(Partition::parse(kv.take("lambda")));
    if (kv.has("cap")) g.cap = std::stoi(kv.take("cap"));
    p = g;
  } else if (kind == "trunc-kingman") {
    p = TruncKingman{Partition::parse(kv.take("lambda"))};
  } else if (kind == "trunc-schur") {
    Partition lam = Partition::parse(kv.take("lambda"));
    if (!lam.is_strict()) throw ParseError("trunc-schur: lambda must be strict");
    p = TruncSchur{StrictPartition(lam)};
  } else {
    throw ParseError("unknown family '" + kind +
                     "' (young-zz, jack, kingman, schur, trunc-young, gamma-shaped, trunc-kingman, trunc-schur)");
  }
  kv.done();
  return HarmonicFamily(std::move(p));
}

std::string HarmonicFamily::str() const {
  return std::visit(overloaded{
                        [](const YoungZZ& f) { return "young-zz:e=" + f.e.str() + ",t=" + f.t.str(); },
                        [](const JackZZ& f) {
                          return "jack:e=" + f.e.str() + ",t=" + f.zz.str() + ",theta=" + f.theta.str();
                        },
                        [](const KingmanTA& f) { return "kingman:t=" + f.t.str() + ",alpha=" + f.alpha.str(); },
                        [](const SchurT& f) { return "schur:t=" + f.t.str(); },
                        [](const TruncYoung& f) { return "trunc-young:lambda=" + f.lambda.str(); },
                        [](const GammaShaped& f) {
                          return "gamma-shaped:lambda=" + f.fc.to_partition().str() + ",cap=" + std::to_string(f.cap);
                        },
                        [](const TruncKingman& f) { return "trunc-kingman:lambda=" + f.lambda.str(); },
                        [](const TruncSchur& f) { return "trunc-schur:lambda=" + f.lambda.str(); },
                    },
                    p_);
}

}  // namespace mgraph
