#pragma once

#include <string>

#include "pmf/biexp.hpp"
#include "pmf/paramodular.hpp"
#include "pmf/quadpair.hpp"
#include "pmf/suites.hpp"

namespace pmf {

/// Deterministic JSON with exact rational strings throughout; coefficient
/// lists are sorted by exponent so repeated runs are byte-identical.
std::string to_json(const QExp& x);
std::string to_json(const BiExp& x);
std::string to_json(const QuadPairExp& x);
std::string to_json(const ParamodularSeries& x);
std::string to_json(const SuiteResult& x);

QExp qexp_from_json(const std::string& text);
BiExp biexp_from_json(const std::string& text);
QuadPairExp quadpair_from_json(const std::string& text);
ParamodularSeries paramodular_from_json(const std::string& text);

}  // namespace pmf
