#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "pmf/rational.hpp"

namespace pmf {

/// Fourier coefficient table of a Jacobi form of weight k and index N.
/// Files store c(n, r) for r >= 0 only; r < 0 follows from the parity
/// symmetry c(n, -r) = (-1)^k c(n, r), and general (n, r) reduce to a
/// representative via the elliptic transformation law: c(n, r) depends
/// only on (4Nn - r^2, r mod 2N).
class JacobiFormData {
 public:
  JacobiFormData(long weight, long index, std::string source);

  long weight() const { return weight_; }
  long index() const { return index_; }
  long max_n() const { return max_n_; }
  const std::string& source() const { return source_; }
  const std::map<std::pair<long, long>, Rational>& table() const { return table_; }

  /// Inserts a stored entry (r >= 0); validates Koecher support, parity,
  /// and class consistency against earlier entries.
  void insert(long n, long r, const Rational& value);

  /// Raises the trust bound: all coefficients with n <= bound are complete.
  void trust_to(long bound);

  /// c(n, r) for arbitrary integers, by reduction into the table.
  /// TruncationError when the reduced row exceeds max_n.
  Rational c(long n, long r) const;

 private:
  long weight_, index_, max_n_;
  std::string source_;
  std::map<std::pair<long, long>, Rational> table_;
};

JacobiFormData parse_jacobi(std::istream& in);
JacobiFormData parse_jacobi_file(const std::string& path);

}  // namespace pmf
