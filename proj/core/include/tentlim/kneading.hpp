#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tentlim {

using BigInt = boost::multiprecision::cpp_int;

// Requested index lies outside what the stored data can answer.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Input violates a documented invariant or precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KneadingMap {
 public:
  enum class Kind { explicit_list, fibonacci, offset };

  // values[k-1] = Q(k)
  static KneadingMap explicit_values(std::vector<int> values);
  static KneadingMap fibonacci(int k_max);
  // Q(k) = max(k - d, 0)
  static KneadingMap offset(int d, int k_max);

  // Q(0) = 0 by convention so that Q^2(1) is defined.
  int operator()(int k) const;

  int k_max() const { return k_max_; }
  Kind kind() const { return kind_; }
  int offset_d() const { return d_; }
  // closed-form maps answer past k_max, explicit lists do not
  bool defined_at(int k) const;
  std::vector<int> values() const;

 private:
  KneadingMap(Kind kind, int d, int k_max, std::vector<int> values);
  Kind kind_;
  int d_ = 0;
  int k_max_ = 0;
  std::vector<int> values_;
};

class CuttingTimes {
 public:
  CuttingTimes() = default;
  explicit CuttingTimes(std::vector<BigInt> values);

  int k_max() const { return static_cast<int>(values_.size()) - 1; }
  const BigInt& operator[](int k) const;
  const std::vector<BigInt>& values() const { return values_; }

  // S_k as a machine integer; RangeError when it does not fit
  std::int64_t small(int k) const;

  // n minus the largest S_k strictly below n, for 2 <= n <= S_kmax
  std::int64_t beta(std::int64_t n) const;
  bool is_cutting(std::int64_t n) const;
  // largest k with S_k < n
  int index_below(std::int64_t n) const;

 private:
  std::vector<BigInt> values_;
  std::vector<std::int64_t> small_;  // prefix of values_ that fits in int64
};

CuttingTimes cutting_times(const KneadingMap& q, int k_max);

struct Admissibility {
  bool admissible = true;
  std::optional<int> first_violation;
};

// {Q(k+j)}_j >=_lex {Q(Q^2(k)+j)}_j for 1 <= k <= k_max, compared while k+j <= k_max
Admissibility is_admissible(const KneadingMap& q, int k_max);

// eventually non-decreasing and Q(k+1) > Q(Q(k)+1), both checked on k0 <= k < k_max
bool is_fibonacci_like(const KneadingMap& q, int k_max, int k0 = 3);

class KneadingSequence {
 public:
  KneadingSequence() = default;
  explicit KneadingSequence(std::vector<std::uint8_t> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  // 1-based: nu_j, the side of c_j (1 = right of c)
  int operator[](int j) const;
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> symbols_;
};

// Block rule: nu_1 = 1, then nu_{S_{k-1}+1..S_k} copies nu_{1..S_{Q(k)}} with the last symbol flipped.
KneadingSequence kneading_sequence(const KneadingMap& q, int n_max);

enum class PointOrder { less, greater, undecided };

// Parity-lex order of c_m against c_n (m, n >= 1).
PointOrder compare_points(int m, int n, const KneadingSequence& nu);

// |c_a - c| < |c_b - c| expressed through the order of c_{a+1} and c_{b+1}
PointOrder compare_distance_to_critical(int a, int b, const KneadingSequence& nu);

struct HofbauerLevel {
  std::int64_t n = 0;
  std::int64_t beta_n = 0;
};

HofbauerLevel hofbauer_level(std::int64_t n, const CuttingTimes& s);

// Q(k+1): order of the closest precritical point between c and c_{S_k}
int lowest_precritical_order(int k, const KneadingMap& q, const CuttingTimes& s);

struct KappaData {
  int kappa = 0;
  // Lambda_kappa = N minus {1, 3, ..., kappa - 4}
  bool in_lambda(std::int64_t n) const;
};

KappaData kappa_data(const KneadingSequence& nu);

}  // namespace tentlim
