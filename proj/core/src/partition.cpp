#include "mgraph/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mgraph/errors.hpp"

namespace mgraph {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && p_[i] > p_[i - 1]) throw std::invalid_argument("partition parts must be nonincreasing");
    size_ += p_[i];
  }
}

namespace {

std::vector<int> parse_int_list(std::string_view s, char sep, std::string_view whole) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty entry in '" + std::string(whole) + "'");
    for (char c : cur)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad entry '" + cur + "' in '" + std::string(whole) + "'");
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ' ' || c == '\t') continue;
    if (c == sep)
      flush();
    else
      cur.push_back(c);
  }
  if (!cur.empty() || !out.empty()) flush();
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty() || s == "()" || s == "[]" || s == "0") return Partition();
  char sep = '+';
  if (s.front() == '[' || s.front() == '(') {
    char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    sep = ',';
  } else if (s.find(',') != std::string_view::npos) {
    sep = ',';
  }
  std::vector<int> parts = parse_int_list(s, sep, text);
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

std::string Partition::str() const {
  if (p_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(p_[i]);
  }
  return s;
}

std::string Partition::json() const {
  std::string s = "[";
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p_[i]);
  }
  return s + "]";
}

Partition Partition::conjugate() const {
  std::vector<int> c(p_.empty() ? 0 : p_[0]);
  for (int j = 1; j <= static_cast<int>(c.size()); ++j) {
    int n = 0;
    for (int x : p_)
      if (x >= j) ++n;
    c[j - 1] = n;
  }
  return Partition(std::move(c));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(p_.begin(), p_.end(), k));
}

bool Partition::is_strict() const {
  return std::adjacent_find(p_.begin(), p_.end()) == p_.end();
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

bool Partition::contains(const Box& b) const {
  return b.row >= 1 && b.col >= 1 && b.col <= (*this)[b.row];
}

int Partition::depth() const {
  int d = 0;
  while (d < length() && p_[d] > d) ++d;
  return d;
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= p_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

int Partition::arm(const Box& b) const { return (*this)[b.row] - b.col; }

int Partition::leg(const Box& b) const {
  int l = 0;
  while ((*this)[b.row + l + 1] >= b.col) ++l;
  return l;
}

Rational Partition::theta_content(const Box& b, const Rational& theta) const {
  return Rational(b.col - 1) - theta * Rational(b.row - 1);
}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p)) {
  if (!p_.is_strict()) throw std::invalid_argument("not a strict partition: " + p_.str());
}

std::vector<Box> StrictPartition::shifted_boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = i; j < i + p_[i]; ++j) out.push_back({i, j});
  return out;
}

FrobeniusCoords::FrobeniusCoords(std::vector<int> p_, std::vector<int> q_)
    : p(std::move(p_)), q(std::move(q_)) {
  if (p.size() != q.size()) throw std::invalid_argument("Frobenius coordinates: lengths differ");
  for (const auto* v : {&p, &q})
    for (std::size_t i = 0; i < v->size(); ++i) {
      if ((*v)[i] < 0) throw std::invalid_argument("Frobenius coordinates must be nonnegative");
      if (i > 0 && (*v)[i] >= (*v)[i - 1])
        throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
    }
}

FrobeniusCoords FrobeniusCoords::of(const Partition& mu) {
  Partition c = mu.conjugate();
  int d = mu.depth();
  std::vector<int> p(d), q(d);
  for (int i = 1; i <= d; ++i) {
    p[i - 1] = mu[i] - i;
    q[i - 1] = c[i] - i;
  }
  return FrobeniusCoords(std::move(p), std::move(q));
}

FrobeniusCoords FrobeniusCoords::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw ParseError("Frobenius form is (p1,...|q1,...): '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  auto bar = s.find('|');
  if (bar == std::string_view::npos) throw ParseError("missing '|' in '" + std::string(text) + "'");
  try {
    return FrobeniusCoords(parse_int_list(s.substr(0, bar), ',', text),
                           parse_int_list(s.substr(bar + 1), ',', text));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

Partition FrobeniusCoords::to_partition() const {
  const int d = depth();
  if (d == 0) return Partition();
  // Rows 1..d from p; rows below the diagonal block from the column lengths q.
  int rows = d + q[0];
  std::vector<int> parts(rows, 0);
  for (int i = 1; i <= d; ++i) parts[i - 1] = p[i - 1] + i;
  for (int r = d + 1; r <= rows; ++r) {
    int n = 0;
    for (int j = 1; j <= d; ++j)
      if (q[j - 1] + j >= r) ++n;
    parts[r - 1] = n;
  }
  return Partition(std::move(parts));
}

std::string FrobeniusCoords::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << '|';
  for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
  os << ')';
  return os.str();
}

}  // namespace mgraph
