#include "hartogs/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

#include "hartogs/error.hpp"

namespace hartogs {
namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": n must be >= 0, got " + std::to_string(n));
}

// Append-only triangular table. Rows are built under the unique lock and
// read under the shared lock; rows are never modified once published.
class TriangleCache {
 public:
  template <class BuildRow>
  std::vector<ExactInt> row(int n, BuildRow&& build) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return rows_[n];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) rows_.push_back(build(static_cast<int>(rows_.size()), rows_));
    return rows_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<ExactInt>> rows_;
};

TriangleCache& eulerian_cache() {
  static TriangleCache cache;
  return cache;
}

TriangleCache& stirling_cache() {
  static TriangleCache cache;
  return cache;
}

// Row n holds A(n, 0..n); row 0 is a placeholder.
std::vector<ExactInt> build_eulerian_row(int n, const std::vector<std::vector<ExactInt>>&) {
  std::vector<ExactInt> row(n + 1);
  for (int m = 1; m <= n; ++m) {
    ExactInt sum = 0;
    for (int l = 0; l <= m; ++l) {
      ExactInt term = binomial(n + 1, l) * boost::multiprecision::pow(ExactInt(m - l), static_cast<unsigned>(n));
      if (l % 2) sum -= term;
      else sum += term;
    }
    row[m] = sum;
  }
  return row;
}

std::vector<ExactInt> build_stirling_row(int n, const std::vector<std::vector<ExactInt>>& rows) {
  std::vector<ExactInt> row(n + 1);
  if (n == 0) {
    row[0] = 1;
    return row;
  }
  const auto& prev = rows[n - 1];
  for (int k = 1; k <= n; ++k) {
    ExactInt stay = k < n ? ExactInt(k) * prev[k] : ExactInt(0);
    row[k] = stay + prev[k - 1];
  }
  return row;
}

}  // namespace

ExactInt factorial(int n) {
  require_nonnegative(n, "factorial");
  ExactInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

ExactInt binomial(int n, int k) {
  require_nonnegative(n, "binomial");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

ExactInt pochhammer(const ExactInt& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "pochhammer: k must be >= 0");
  ExactInt out = 1;
  for (int i = 0; i < k; ++i) out *= a + i;
  return out;
}

ExactInt eulerian_number(int n, int m) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "eulerian_number: n must be >= 1");
  if (m <= 0 || m > n) return 0;
  return eulerian_cache().row(n, build_eulerian_row)[m];
}

std::vector<ExactInt> eulerian_row(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "eulerian_row: n must be >= 1");
  auto row = eulerian_cache().row(n, build_eulerian_row);
  return {row.begin() + 1, row.end()};
}

IntPolynomial eulerian_polynomial(int n) {
  return IntPolynomial(eulerian_row(n));
}

ExactInt stirling2(int n, int k) {
  require_nonnegative(n, "stirling2");
  if (k < 0 || k > n) return 0;
  return stirling_cache().row(n, build_stirling_row)[k];
}

std::vector<ExactInt> stirling2_row(int n) {
  require_nonnegative(n, "stirling2_row");
  return stirling_cache().row(n, build_stirling_row);
}

}  // namespace hartogs
