#include "overtwist/pattern.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "overtwist/error.h"

namespace overtwist {

namespace {

std::string join(std::span<const int> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  return out.str();
}

std::vector<int> parse_integers(std::string_view body, std::string_view original) {
  std::vector<int> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r'; };
  while (i < body.size()) {
    if (is_sep(body[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && !is_sep(body[j])) ++j;
    std::string_view token = body.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed pattern '" + std::string(original) + "': bad token '" +
                       std::string(token) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Pattern::Pattern(std::vector<int> images) : images_(std::move(images)) {
  const int n = period();
  if (n < 2) throw InvalidPattern("pattern needs at least 2 points");
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw InvalidPattern("not a permutation of {1.." + std::to_string(n) + "}: " + join(images_));
    seen[static_cast<std::size_t>(v)] = true;
  }
  int length = 0;
  int x = 1;
  do {
    x = image(x);
    ++length;
  } while (x != 1);
  if (length != n)
    throw InvalidPattern("not a single " + std::to_string(n) + "-cycle: " + join(images_));
}

std::string Pattern::str() const { return join(images_); }

Pattern parse_pattern(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty pattern text");
  if (t.front() != '(') {
    if (t.find_first_of("()") != std::string_view::npos)
      throw ParseError("malformed pattern '" + std::string(text) + "'");
    return Pattern(parse_integers(t, text));
  }
  if (t.back() != ')' || t.find_first_of("()", 1) != t.size() - 1)
    throw ParseError("malformed cycle notation '" + std::string(text) + "'");
  std::vector<int> cycle = parse_integers(t.substr(1, t.size() - 2), text);
  if (cycle.size() >= 2 && cycle.front() == cycle.back()) cycle.pop_back();
  const int n = static_cast<int>(cycle.size());
  if (n < 2) throw InvalidPattern("pattern needs at least 2 points");
  std::vector<int> images(cycle.size(), 0);
  for (int i = 0; i < n; ++i) {
    int from = cycle[static_cast<std::size_t>(i)];
    int to = cycle[static_cast<std::size_t>((i + 1) % n)];
    if (from < 1 || from > n || images[static_cast<std::size_t>(from - 1)] != 0)
      throw InvalidPattern("cycle '" + std::string(text) + "' is not a permutation of {1.." +
                           std::to_string(n) + "}");
    images[static_cast<std::size_t>(from - 1)] = to;
  }
  return Pattern(std::move(images));
}

Pattern pattern_of_orbit(std::span<const Rational> orbit) {
  const std::size_t n = orbit.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return orbit[a] < orbit[b]; });
  std::vector<int> rank(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && orbit[order[r]] == orbit[order[r - 1]])
      throw InvalidPattern("orbit points are not distinct");
    rank[order[r]] = static_cast<int>(r) + 1;
  }
  std::vector<int> images(n);
  for (std::size_t j = 0; j < n; ++j)
    images[static_cast<std::size_t>(rank[j] - 1)] = rank[(j + 1) % n];
  return Pattern(std::move(images));
}

bool OverRotationPair::coprime() const { return std::gcd(p, q) == 1; }

OverRotationPair over_rotation_pair(const Pattern& pattern) {
  const int n = pattern.period();
  int switches = 0;
  for (int x = 1; x <= n; ++x) {
    int fx = pattern.image(x);
    int ffx = pattern.image(fx);
    if ((fx > x) != (ffx > fx)) ++switches;
  }
  return {switches / 2, n};
}

bool is_convergent(const Pattern& pattern) {
  bool seen_fall = false;
  for (int x = 1; x <= pattern.period(); ++x) {
    if (pattern.image(x) < x)
      seen_fall = true;
    else if (seen_fall)
      return false;
  }
  return true;
}

void require_convergent(const Pattern& pattern) {
  if (!is_convergent(pattern))
    throw DivergentPattern("pattern " + pattern.str() + " is divergent");
}

int turning_interval(const Pattern& pattern) {
  require_convergent(pattern);
  int i = 1;
  while (pattern.image(i + 1) > i + 1) ++i;
  return i;
}

Rational fixed_point(const Pattern& pattern) {
  const int i = turning_interval(pattern);
  const int fi = pattern.image(i);
  const int slope = pattern.image(i + 1) - fi;
  // x = f(i) + slope * (x - i)  =>  x = (f(i) - slope * i) / (1 - slope); slope < 0 here.
  return Rational(fi - static_cast<std::int64_t>(slope) * i, 1 - slope);
}

CodeTable code(const Pattern& pattern) {
  const int n = pattern.period();
  CodeTable table;
  table.fixed_point = fixed_point(pattern);
  const Rational rho = over_rotation_pair(pattern).rho();
  table.side.resize(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    table.side[static_cast<std::size_t>(x - 1)] = Rational(x) < table.fixed_point ? Side::left : Side::right;
  auto side_of = [&](int x) { return table.side[static_cast<std::size_t>(x - 1)]; };

  table.values.assign(static_cast<std::size_t>(n), Rational(0));
  int y = 1;
  Rational value(0);
  int phi_sum = 0;
  for (int step = 0; step < n; ++step) {
    table.values[static_cast<std::size_t>(y - 1)] = value;
    const int fy = pattern.image(y);
    const int phi = (side_of(y) == Side::right && side_of(fy) == Side::left) ? 1 : 0;
    phi_sum += phi;
    value += rho - phi;
    y = fy;
  }
  if (!value.is_zero() || Rational(phi_sum) != rho * n)
    throw InternalError("code recursion does not close on " + pattern.str());
  return table;
}

CodeClass code_class(const CodeTable& table) {
  const int n = static_cast<int>(table.values.size());
  bool tie = false;
  bool violation = false;
  // Compare each point with its spatial neighbour one step closer to a.
  for (int x = 1; x < n; ++x) {
    const Side sx = table.side[static_cast<std::size_t>(x - 1)];
    const Side sy = table.side[static_cast<std::size_t>(x)];
    if (sx != sy) continue;
    const Rational& farther = sx == Side::left ? table.at(x) : table.at(x + 1);
    const Rational& nearer = sx == Side::left ? table.at(x + 1) : table.at(x);
    if (farther == nearer) tie = true;
    if (farther > nearer) violation = true;
  }
  if (violation) return CodeClass::not_nondecreasing;
  return tie ? CodeClass::nondecreasing_not_monotone : CodeClass::strictly_monotone;
}

CodeClass code_class(const Pattern& pattern) { return code_class(code(pattern)); }

std::string to_string(CodeClass c) {
  switch (c) {
    case CodeClass::strictly_monotone: return "strictly_monotone";
    case CodeClass::nondecreasing_not_monotone: return "nondecreasing_not_monotone";
    case CodeClass::not_nondecreasing: return "not_nondecreasing";
  }
  return "unknown";
}

std::vector<BlockDecomposition> block_decompositions(const Pattern& pattern) {
  const int n = pattern.period();
  std::vector<BlockDecomposition> out;
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    const int blocks = n / d;
    std::vector<int> quotient(static_cast<std::size_t>(blocks));
    bool ok = true;
    for (int b = 0; b < blocks && ok; ++b) {
      const int target = (pattern.image(b * d + 1) - 1) / d;
      for (int x = b * d + 1; x <= (b + 1) * d; ++x) {
        if ((pattern.image(x) - 1) / d != target) {
          ok = false;
          break;
        }
      }
      quotient[static_cast<std::size_t>(b)] = target + 1;
    }
    if (ok) out.push_back({d, Pattern(std::move(quotient))});
  }
  return out;
}

namespace {

std::optional<int> unimodal_peak(const Pattern& pattern) {
  const int n = pattern.period();
  int m = 1;
  while (m < n && pattern.image(m + 1) > pattern.image(m)) ++m;
  for (int x = m; x < n; ++x)
    if (pattern.image(x + 1) > pattern.image(x)) return std::nullopt;
  return m;
}

}  // namespace

bool is_unimodal(const Pattern& pattern) { return unimodal_peak(pattern).has_value(); }

int max_point(const Pattern& pattern) {
  auto m = unimodal_peak(pattern);
  if (!m) throw NotUnimodal("pattern " + pattern.str() + " is not unimodal");
  return *m;
}

}  // namespace overtwist
