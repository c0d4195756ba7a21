#include "pmf/jacobi.hpp"

#include <fstream>
#include <sstream>

namespace pmf {

namespace {

// Representative of the class of (n, r): r0 in (-N, N] with r0 = r mod 2N,
// n0 = (D + r0^2)/4N for the invariant D = 4Nn - r^2.
std::pair<long, long> reduce(long index, long n, long r) {
  long two_n = 2 * index;
  long r0 = r % two_n;
  if (r0 <= -index) r0 += two_n;
  if (r0 > index) r0 -= two_n;
  long d = 4 * index * n - r * r;
  long n0 = (d + r0 * r0) / (4 * index);
  return {n0, r0};
}

}  // namespace

JacobiFormData::JacobiFormData(long weight, long index, std::string source)
    : weight_(weight), index_(index), max_n_(0), source_(std::move(source)) {
  if (index_ < 1) throw DataError("Jacobi index must be positive");
}

void JacobiFormData::insert(long n, long r, const Rational& value) {
  if (r < 0) throw DataError("stored rows must have r >= 0");
  if (n < 0) throw DataError("stored rows must have n >= 0");
  if (value == 0) return;
  if (r * r > 4 * index_ * n)
    throw DataError("support violation at (" + std::to_string(n) + "," +
                    std::to_string(r) + "): r^2 > 4Nn");
  auto [n0, r0] = reduce(index_, n, r);
  if (weight_ % 2 != 0 && (r0 == 0 || r0 == index_))
    throw DataError("parity conflict at (" + std::to_string(n) + "," +
                    std::to_string(r) + "): odd weight forces zero");
  auto [it, fresh] = table_.emplace(std::make_pair(n, r), value);
  if (!fresh && it->second != value)
    throw DataError("conflicting entries at (" + std::to_string(n) + "," +
                    std::to_string(r) + ")");
}

void JacobiFormData::trust_to(long bound) {
  if (bound < max_n_) throw DataError("trust bound cannot shrink");
  max_n_ = bound;
  // Every pair in the trusted range must agree with its representative.
  for (long n = 0; n <= max_n_; ++n) {
    long rmax = static_cast<long>(isqrt(Integer(4 * index_ * n)).get_si());
    for (long r = 0; r <= rmax; ++r) {
      auto [n0, r0] = reduce(index_, n, r);
      if (n0 > max_n_) continue;
      Rational direct(0);
      if (auto it = table_.find({n, r}); it != table_.end()) direct = it->second;
      if (direct != c(n, r))
        throw DataError("class inconsistency at (" + std::to_string(n) + "," +
                        std::to_string(r) + ")");
    }
  }
}

Rational JacobiFormData::c(long n, long r) const {
  long d = 4 * index_ * n;
  // Guard r*r against overflow-free comparison; |r| beyond 2 sqrt(Nn) is zero.
  if (n < 0) return Rational(0);
  if (r > d || -r > d) return Rational(0);
  if (r * r > d) return Rational(0);
  auto [n0, r0] = reduce(index_, n, r);
  if (n0 > max_n_)
    throw TruncationError("Jacobi coefficient (" + std::to_string(n) + "," +
                          std::to_string(r) + ") reduces to row " +
                          std::to_string(n0) + " beyond trusted " +
                          std::to_string(max_n_));
  bool flip = r0 < 0 && weight_ % 2 != 0;
  long rr = r0 < 0 ? -r0 : r0;
  auto it = table_.find({n0, rr});
  if (it == table_.end()) return Rational(0);
  return flip ? Rational(-it->second) : it->second;
}

JacobiFormData parse_jacobi(std::istream& in) {
  long weight = 0, index = 0;
  bool have_weight = false, have_index = false;
  std::string source;
  std::vector<std::tuple<long, long, Rational>> rows;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "weight") {
      if (!(ls >> weight)) throw DataError("malformed weight header");
      have_weight = true;
    } else if (first == "index") {
      if (!(ls >> index)) throw DataError("malformed index header");
      have_index = true;
    } else if (first == "source") {
      std::getline(ls, source);
      if (!source.empty() && source.front() == ' ') source.erase(0, 1);
    } else {
      long n, r;
      std::string coeff;
      std::istringstream body(line);
      if (!(body >> n >> r >> coeff))
        throw DataError("malformed body line " + std::to_string(lineno) + ": '" +
                        line + "'");
      std::string extra;
      if (body >> extra)
        throw DataError("trailing data on line " + std::to_string(lineno));
      rows.emplace_back(n, r, parse_rational(coeff));
    }
  }
  if (!have_weight || !have_index)
    throw DataError("missing weight or index header");
  JacobiFormData out(weight, index, source);
  long max_n = 0;
  for (const auto& [n, r, v] : rows) {
    out.insert(n, r, v);
    if (n > max_n) max_n = n;
  }
  out.trust_to(max_n);
  return out;
}

JacobiFormData parse_jacobi_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return parse_jacobi(in);
}

}  // namespace pmf
