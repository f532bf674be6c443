#include "mgraph/enumerate.hpp"

#include <stdexcept>

#include "mgraph/errors.hpp"

namespace mgraph {

GraphKind GraphKind::jack(const Rational& theta) {
  if (theta.sign() <= 0) throw ParameterError("Jack parameter theta must be positive");
  return GraphKind(Tag::Jack, theta);
}

GraphKind GraphKind::parse(std::string_view s) {
  if (s == "young") return young();
  if (s == "kingman") return kingman();
  if (s == "schur") return schur();
  for (std::string_view prefix : {"jack:theta=", "jack("}) {
    if (s.substr(0, prefix.size()) == prefix) {
      std::string_view rest = s.substr(prefix.size());
      if (prefix == "jack(") {
        if (rest.empty() || rest.back() != ')') break;
        rest.remove_suffix(1);
      }
      return jack(Rational::parse(rest));
    }
  }
  if (s == "jack") return jack(1);
  throw ParseError("unknown graph '" + std::string(s) + "' (young, jack:theta=..., kingman, schur)");
}

std::string GraphKind::str() const {
  switch (tag_) {
    case Tag::Young: return "young";
    case Tag::Jack: return "jack(" + theta_.str() + ")";
    case Tag::Kingman: return "kingman";
    case Tag::Schur: return "schur";
  }
  return "?";
}

std::vector<Partition> covers_up(const Partition& mu, const GraphKind& kind) {
  if (kind.strict() && !mu.is_strict())
    throw std::invalid_argument("covers_up: " + mu.str() + " is not strict");
  std::vector<Partition> out;
  const auto& p = mu.parts();
  for (int i = 0; i <= mu.length(); ++i) {
    if (i > 0 && mu[i + 1] + 1 > mu[i]) continue;
    std::vector<int> q = p;
    if (i == mu.length())
      q.push_back(1);
    else
      ++q[i];
    Partition lam(std::move(q));
    if (kind.strict() && !lam.is_strict()) continue;
    out.push_back(std::move(lam));
  }
  return out;
}

std::vector<Partition> covers_down(const Partition& lambda, const GraphKind& kind) {
  if (kind.strict() && !lambda.is_strict())
    throw std::invalid_argument("covers_down: " + lambda.str() + " is not strict");
  std::vector<Partition> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda[i] - 1 < lambda[i + 1]) continue;
    std::vector<int> q = lambda.parts();
    --q[i - 1];
    Partition mu(std::move(q));
    if (kind.strict() && !mu.is_strict()) continue;
    out.push_back(std::move(mu));
  }
  return out;
}

namespace {

void gen(int n, int maxpart, int slots, bool strict, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen(n - k, strict ? k - 1 : k, slots - 1, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> level(int n, const GraphKind& kind, std::optional<int> max_length) {
  if (n < 0) throw std::invalid_argument("level: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, max_length.value_or(n + 1), kind.strict(), cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n, const GraphKind& kind, std::optional<int> max_length) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto l = level(k, kind, max_length);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

namespace {

void fill(const Partition& mu, int k, std::size_t idx, const std::vector<Box>& boxes, Filling& t,
          const std::function<void(const Filling&)>& f) {
  if (idx == boxes.size()) {
    f(t);
    return;
  }
  const Box b = boxes[idx];
  int hi = k;
  if (b.col > 1) hi = std::min(hi, t[b.row - 1][b.col - 2]);
  if (b.row > 1) hi = std::min(hi, t[b.row - 2][b.col - 1] - 1);
  for (int v = 1; v <= hi; ++v) {
    t[b.row - 1][b.col - 1] = v;
    fill(mu, k, idx + 1, boxes, t, f);
  }
}

}  // namespace

void for_each_reverse_tableau(const Partition& mu, int k, const std::function<void(const Filling&)>& f) {
  if (k < 1) throw std::invalid_argument("reverse_tableaux: k must be positive");
  Filling t;
  for (int x : mu.parts()) t.emplace_back(x, 0);
  fill(mu, k, 0, mu.boxes(), t, f);
}

std::vector<Filling> reverse_tableaux(const Partition& mu, int k) {
  std::vector<Filling> out;
  for_each_reverse_tableau(mu, k, [&](const Filling& t) { out.push_back(t); });
  return out;
}

}  // namespace mgraph
