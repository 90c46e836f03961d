#include "tentlim/kneading.hpp"

#include <algorithm>
#include <limits>

namespace tentlim {

KneadingMap::KneadingMap(Kind kind, int d, int k_max, std::vector<int> values)
    : kind_(kind), d_(d), k_max_(k_max), values_(std::move(values)) {}

KneadingMap KneadingMap::explicit_values(std::vector<int> values) {
  if (values.empty()) throw InvalidInput("kneading map needs at least Q(1)");
  if (values[0] != 0) throw InvalidInput("kneading map must have Q(1) = 0");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    if (values[i] < 0) throw InvalidInput("Q(" + std::to_string(k) + ") is negative");
    if (values[i] >= k)
      throw InvalidInput("Q(" + std::to_string(k) + ") >= " + std::to_string(k) +
                         " makes the cutting-time recursion circular");
  }
  const int k_max = static_cast<int>(values.size());
  return KneadingMap(Kind::explicit_list, 0, k_max, std::move(values));
}

KneadingMap KneadingMap::fibonacci(int k_max) {
  if (k_max < 1) throw InvalidInput("k_max must be positive");
  return KneadingMap(Kind::fibonacci, 2, k_max, {});
}

KneadingMap KneadingMap::offset(int d, int k_max) {
  if (d < 1) throw InvalidInput("offset map needs d >= 1 so that Q(k) < k");
  if (k_max < 1) throw InvalidInput("k_max must be positive");
  return KneadingMap(d == 2 ? Kind::fibonacci : Kind::offset, d, k_max, {});
}

bool KneadingMap::defined_at(int k) const {
  if (k < 0) return false;
  return kind_ != Kind::explicit_list || k <= k_max_;
}

int KneadingMap::operator()(int k) const {
  if (k < 0) throw RangeError("Q(k) needs k >= 0");
  if (k == 0) return 0;
  if (kind_ == Kind::explicit_list) {
    if (k > k_max_) throw RangeError("Q(" + std::to_string(k) + ") beyond stored k_max");
    return values_[k - 1];
  }
  return std::max(k - d_, 0);
}

std::vector<int> KneadingMap::values() const {
  std::vector<int> out;
  out.reserve(k_max_);
  for (int k = 1; k <= k_max_; ++k) out.push_back((*this)(k));
  return out;
}

CuttingTimes::CuttingTimes(std::vector<BigInt> values) : values_(std::move(values)) {
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  for (const auto& v : values_) {
    if (v > limit) break;
    small_.push_back(static_cast<std::int64_t>(v));
  }
}

const BigInt& CuttingTimes::operator[](int k) const {
  if (k < 0 || k > k_max()) throw RangeError("cutting time index out of range");
  return values_[k];
}

std::int64_t CuttingTimes::small(int k) const {
  if (k < 0 || k > k_max()) throw RangeError("cutting time index out of range");
  if (k >= static_cast<int>(small_.size())) throw RangeError("cutting time exceeds int64");
  return small_[k];
}

int CuttingTimes::index_below(std::int64_t n) const {
  if (small_.empty() || n <= small_.front()) throw RangeError("no cutting time below n");
  // must see a cutting time >= n to know the largest one below n
  if (static_cast<int>(small_.size()) == static_cast<int>(values_.size()) && n > small_.back())
    throw RangeError("n = " + std::to_string(n) + " exceeds the stored cutting times");
  auto it = std::lower_bound(small_.begin(), small_.end(), n);
  return static_cast<int>(it - small_.begin()) - 1;
}

std::int64_t CuttingTimes::beta(std::int64_t n) const {
  if (n < 2) throw RangeError("beta(n) needs n >= 2");
  return n - small_[index_below(n)];
}

bool CuttingTimes::is_cutting(std::int64_t n) const {
  if (!small_.empty() && static_cast<int>(small_.size()) == static_cast<int>(values_.size()) &&
      n > small_.back())
    throw RangeError("n = " + std::to_string(n) + " exceeds the stored cutting times");
  return std::binary_search(small_.begin(), small_.end(), n);
}

CuttingTimes cutting_times(const KneadingMap& q, int k_max) {
  if (k_max < 0) throw InvalidInput("k_max must be non-negative");
  if (!q.defined_at(k_max)) throw RangeError("k_max exceeds the stored kneading map");
  std::vector<BigInt> s;
  s.reserve(k_max + 1);
  s.emplace_back(1);
  for (int k = 1; k <= k_max; ++k) {
    const int qk = q(k);
    if (qk >= k) throw InvalidInput("Q(k) >= k makes the recursion circular");
    s.push_back(s[k - 1] + s[qk]);
  }
  return CuttingTimes(std::move(s));
}

Admissibility is_admissible(const KneadingMap& q, int k_max) {
  if (!q.defined_at(k_max)) throw RangeError("k_max exceeds the stored kneading map");
  for (int k = 1; k <= k_max; ++k) {
    const int base = q(q(k));
    for (int j = 1; k + j <= k_max; ++j) {
      const int lhs = q(k + j);
      const int rhs = q(base + j);
      if (lhs > rhs) break;
      if (lhs < rhs) return {false, k};
    }
  }
  return {};
}

bool is_fibonacci_like(const KneadingMap& q, int k_max, int k0) {
  if (!q.defined_at(k_max)) throw RangeError("k_max exceeds the stored kneading map");
  for (int k = std::max(k0, 1); k < k_max; ++k) {
    if (q(k + 1) < q(k)) return false;
    if (q(k) + 1 > k_max) throw RangeError("Q(k)+1 beyond k_max");
    if (!(q(k + 1) > q(q(k) + 1))) return false;
  }
  return true;
}

KneadingSequence::KneadingSequence(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  for (auto v : symbols_)
    if (v > 1) throw InvalidInput("kneading symbols must be 0 or 1");
}

int KneadingSequence::operator[](int j) const {
  if (j < 1 || j > size()) throw RangeError("kneading symbol index out of range");
  return symbols_[j - 1];
}

std::string KneadingSequence::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (auto v : symbols_) out.push_back(v ? '1' : '0');
  return out;
}

KneadingSequence kneading_sequence(const KneadingMap& q, int n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be positive");
  std::vector<std::uint8_t> nu{1};
  std::vector<std::int64_t> s{1};
  int k = 0;
  while (static_cast<int>(nu.size()) < n_max) {
    ++k;
    if (!q.defined_at(k))
      throw RangeError("kneading map too short for " + std::to_string(n_max) + " symbols");
    const std::int64_t len = s[q(k)];
    s.push_back(s.back() + len);
    for (std::int64_t i = 0; i < len; ++i) nu.push_back(nu[i]);
    nu.back() ^= 1;
  }
  auto adm = is_admissible(q, std::max(k, 1));
  if (!adm.admissible)
    throw InvalidInput("kneading map is not admissible at k = " + std::to_string(*adm.first_violation));
  nu.resize(n_max);
  return KneadingSequence(std::move(nu));
}

PointOrder compare_points(int m, int n, const KneadingSequence& nu) {
  if (m == n) throw InvalidInput("compare_points needs distinct indices");
  if (m < 1 || n < 1) throw InvalidInput("compare_points needs indices >= 1");
  int ones = 0;
  for (int j = 0; m + j <= nu.size() && n + j <= nu.size(); ++j) {
    const int a = nu[m + j];
    const int b = nu[n + j];
    if (a != b) {
      bool less = a < b;
      if (ones % 2) less = !less;
      return less ? PointOrder::less : PointOrder::greater;
    }
    ones += a;
  }
  return PointOrder::undecided;
}

PointOrder compare_distance_to_critical(int a, int b, const KneadingSequence& nu) {
  // T(x) = s/2 - s|x - c|, so the closer point has the larger image
  switch (compare_points(a + 1, b + 1, nu)) {
    case PointOrder::greater: return PointOrder::less;
    case PointOrder::less: return PointOrder::greater;
    default: return PointOrder::undecided;
  }
}

HofbauerLevel hofbauer_level(std::int64_t n, const CuttingTimes& s) {
  return {n, n == 1 ? 0 : s.beta(n)};
}

int lowest_precritical_order(int k, const KneadingMap& q, const CuttingTimes& s) {
  if (k < 0 || k + 1 > s.k_max() || !q.defined_at(k + 1))
    throw RangeError("lowest_precritical_order needs k+1 within the stored range");
  return q(k + 1);
}

bool KappaData::in_lambda(std::int64_t n) const {
  if (n < 1) return false;
  return !(n % 2 == 1 && n <= kappa - 4);
}

KappaData kappa_data(const KneadingSequence& nu) {
  for (int j = 3; j <= nu.size(); ++j) {
    if (nu[j] == 0) return {j};
  }
  throw RangeError("no c_j < c with j > 2 within the kneading horizon");
}

}  // namespace tentlim
