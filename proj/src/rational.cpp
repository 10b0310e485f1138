#include "jvoa/rational.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "jvoa/errors.hpp"

namespace jvoa {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + s + "'");
  Integer n(strip_plus(num)), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

// Rows of the extended Pascal triangle, keyed by upper index m.
class PascalTable {
 public:
  Integer get(long m, long i) {
    if (i < 0) return 0;
    if (i == 0) return 1;
    std::lock_guard lock(mutex_);
    const auto& row = row_for(m, i);
    return row[static_cast<std::size_t>(i)];
  }

 private:
  const std::vector<Integer>& row_for(long m, long width) {
    auto& row = rows_[m];
    if (static_cast<long>(row.size()) > width) return row;
    if (m == 0) {
      row.assign(static_cast<std::size_t>(width) + 1, 0);
      row[0] = 1;
      return row;
    }
    std::vector<Integer> fresh(static_cast<std::size_t>(width) + 1);
    fresh[0] = 1;
    if (m > 0) {
      // C(m, i) = C(m-1, i-1) + C(m-1, i)
      const auto prev = row_for(m - 1, width);
      for (long i = 1; i <= width; ++i)
        fresh[i] = prev[i - 1] + prev[i];
    } else {
      // C(m, i) = C(m+1, i) - C(m, i-1)
      const auto next = row_for(m + 1, width);
      for (long i = 1; i <= width; ++i)
        fresh[i] = next[i] - fresh[i - 1];
    }
    auto& slot = rows_[m];
    slot = std::move(fresh);
    return slot;
  }

  std::mutex mutex_;
  std::map<long, std::vector<Integer>> rows_;
};

PascalTable& pascal() {
  static PascalTable table;
  return table;
}

}  // namespace

Integer binomial(long m, long i) { return pascal().get(m, i); }

}  // namespace jvoa
