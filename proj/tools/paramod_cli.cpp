// Command-line front end: expansion dumps, pullbacks, verification
// suites, and graded-ring dimension/relation tables.
//
// Exit codes: 0 success, 1 verification failure, 2 input/environment error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pmf/classical.hpp"
#include "pmf/deghilb.hpp"
#include "pmf/grading.hpp"
#include "pmf/json_io.hpp"
#include "pmf/pullbacks.hpp"
#include "pmf/suites.hpp"

namespace {

using Json = nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw pmf::DataError("cannot open output file " + out_path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pmf::DataError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string default_data_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("PARAMOD_DATA")) return env;
  return "data";
}

int cmd_lift(long level, const std::string& jacobi_path, long amax, long cmax,
             const std::string& out_path) {
  pmf::JacobiFormData phi = pmf::parse_jacobi_file(jacobi_path);
  if (phi.index() != level)
    throw pmf::DataError("level " + std::to_string(level) +
                         " does not match file index " +
                         std::to_string(phi.index()));
  pmf::ParamodularSeries f = pmf::gritsenko_lift(phi, amax, cmax);
  write_output(pmf::to_json(f), out_path);
  return 0;
}

int cmd_pullback(const std::string& op, const std::string& series_path,
                 const std::string& jacobi_path, long level, long amax,
                 long cmax, const std::string& trunc1,
                 const std::string& trunc2, const std::string& out_path) {
  std::optional<pmf::ParamodularSeries> series;
  std::optional<pmf::JacobiFormData> phi;
  if (!series_path.empty()) {
    series = pmf::paramodular_from_json(read_file(series_path));
  } else if (!jacobi_path.empty()) {
    phi = pmf::parse_jacobi_file(jacobi_path);
    if (level != 0 && phi->index() != level)
      throw pmf::DataError("--level does not match the file index");
  } else {
    throw pmf::DataError("need either --series or --jacobi");
  }
  if (series && level != 0 && series->level() != level)
    throw pmf::DataError("--level does not match the series level");

  if (op == "P4" && phi) {
    // Straight from Jacobi data: class reduction reaches fibers beyond
    // any finite lift box.
    pmf::Rational t1 = pmf::parse_rational(trunc1);
    pmf::Rational t2 = pmf::parse_rational(trunc2);
    write_output(pmf::to_json(pmf::pullback_P4_lift(*phi, t1, t2)), out_path);
    return 0;
  }
  if (!series) series = pmf::gritsenko_lift(*phi, amax, cmax);
  if (op == "P1") {
    write_output(pmf::to_json(pmf::witt_P1(*series)), out_path);
  } else if (op == "P4") {
    write_output(pmf::to_json(pmf::pullback_P4(*series)), out_path);
  } else if (op == "P5") {
    if (series->level() != 5) throw pmf::DataError("P5 requires level 5");
    write_output(pmf::to_json(pmf::pullback_P5(*series)), out_path);
  } else if (op == "P8") {
    if (series->level() != 7) throw pmf::DataError("P8 requires level 7");
    write_output(pmf::to_json(pmf::pullback_P8(*series)), out_path);
  } else {
    throw pmf::DataError("unknown pullback operator " + op);
  }
  return 0;
}

const char* status_text(pmf::CheckStatus s) {
  switch (s) {
    case pmf::CheckStatus::pass:
      return "pass";
    case pmf::CheckStatus::fail:
      return "FAIL";
    default:
      return "undecided";
  }
}

int cmd_verify(const std::string& suite, const std::string& data_dir) {
  std::vector<pmf::SuiteResult> results = pmf::run_suites(suite, data_dir);
  for (const auto& r : results) {
    std::cout << "suite " << r.name << "\n";
    for (const auto& c : r.checks) {
      std::cout << "  " << c.id << ": " << status_text(c.status);
      if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
      std::cout << "\n";
    }
  }
  for (const auto& r : results) std::cout << pmf::to_json(r);
  return pmf::suites_exit_code(results);
}

template <class S>
Json relations_table(const std::vector<pmf::LabeledSeries<S>>& gens,
                     long weight_max) {
  Json rows = Json::array();
  for (long k = 0; k <= weight_max; ++k) {
    std::vector<long> weights;
    for (const auto& g : gens) weights.push_back(g.weight);
    if (pmf::monomials_of_weight(weights, k).empty()) continue;
    pmf::Relation rel = pmf::relations_in_weight(gens, k);
    Json row;
    row["weight"] = k;
    row["monomials"] = rel.monomials;
    row["dimension"] =
        static_cast<long>(rel.monomials.size() - rel.kernel.size());
    Json kernel = Json::array();
    for (const auto& vec : rel.kernel) {
      Json entries = Json::array();
      for (std::size_t i = 0; i < vec.size(); ++i)
        if (vec[i] != 0)
          entries.push_back(
              Json::array({rel.monomials[i], pmf::to_string(vec[i])}));
      kernel.push_back(std::move(entries));
    }
    row["kernel"] = std::move(kernel);
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_relations(const std::string& preset, long weight_max,
                  const std::string& out_path) {
  Json j;
  j["preset"] = preset;
  if (preset == "MG" || preset == "Astar") {
    pmf::Rational t(8);
    std::vector<pmf::LabeledSeries<pmf::BiExp>> gens;
    if (preset == "MG") {
      gens = {{"X2", 2, pmf::X2(t).expansion},
              {"X4", 4, pmf::X4(t).expansion},
              {"Delta6", 6, pmf::Delta6(t).expansion},
              {"X8", 8, pmf::X8(t).expansion}};
    } else {
      const long weights[] = {4, 6, 6, 8, 10, 12, 14, 16};
      auto named = pmf::a_star_generators(t);
      for (std::size_t i = 0; i < named.size(); ++i)
        gens.push_back({named[i].first, weights[i], named[i].second.expansion});
    }
    j["weights"] = relations_table(gens, weight_max);
  } else if (preset == "gamma2") {
    pmf::Rational t(24);
    std::vector<pmf::LabeledSeries<pmf::QExp>> gens = {
        {"e1", 2, pmf::gamma2_e1(t).expansion},
        {"e2", 2, pmf::gamma2_e2(t).expansion}};
    j["weights"] = relations_table(gens, weight_max);
  } else {
    throw pmf::DataError("unknown preset " + preset);
  }
  write_output(j.dump(2) + "\n", out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for paramodular form expansions"};
  app.require_subcommand(1);

  auto* lift = app.add_subcommand("lift", "Gritsenko lift of a Jacobi form");
  long lift_level = 0, lift_amax = 1, lift_cmax = 1;
  std::string lift_jacobi, lift_out;
  lift->add_option("--level", lift_level, "paramodular level")->required();
  lift->add_option("--jacobi", lift_jacobi, "Jacobi coefficient file")
      ->required();
  lift->add_option("--amax", lift_amax, "a-box bound");
  lift->add_option("--cmax", lift_cmax, "c-box bound");
  lift->add_option("--out", lift_out, "output path (default stdout)");

  auto* pull = app.add_subcommand("pullback", "Humbert surface pullbacks");
  std::string pull_op, pull_series, pull_jacobi, pull_out;
  std::string pull_t1 = "2", pull_t2 = "1";
  long pull_level = 0, pull_amax = 1, pull_cmax = 1;
  pull->add_option("--op", pull_op, "one of P1, P4, P5, P8")->required();
  pull->add_option("--series", pull_series, "paramodular series JSON file");
  pull->add_option("--jacobi", pull_jacobi, "Jacobi coefficient file");
  pull->add_option("--level", pull_level, "expected level (checked)");
  pull->add_option("--amax", pull_amax, "lift a-box bound");
  pull->add_option("--cmax", pull_cmax, "lift c-box bound");
  pull->add_option("--trunc1", pull_t1, "P4-from-data window in q1");
  pull->add_option("--trunc2", pull_t2, "P4-from-data window in q2");
  pull->add_option("--out", pull_out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite = "all", verify_data;
  verify->add_option("--suite", verify_suite,
                     "classical|deghilb|paramod|sympcheck|hilbert|all");
  verify->add_option("--data", verify_data,
                     "data directory (default $PARAMOD_DATA or ./data)");

  auto* rel = app.add_subcommand("relations", "dimension and relation tables");
  std::string rel_preset, rel_out;
  long rel_wmax = 16;
  rel->add_option("--preset", rel_preset, "MG|Astar|gamma2")->required();
  rel->add_option("--weight-max", rel_wmax, "largest weight");
  rel->add_option("--out", rel_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lift)
      return cmd_lift(lift_level, lift_jacobi, lift_amax, lift_cmax, lift_out);
    if (*pull)
      return cmd_pullback(pull_op, pull_series, pull_jacobi, pull_level,
                          pull_amax, pull_cmax, pull_t1, pull_t2, pull_out);
    if (*verify)
      return cmd_verify(verify_suite, default_data_dir(verify_data));
    if (*rel) return cmd_relations(rel_preset, rel_wmax, rel_out);
  } catch (const pmf::TruncationError& e) {
    if (*rel) {
      // Window stability could not be reached: a verification failure,
      // not an input error.
      std::cerr << "undecided: " << e.what() << "\n";
      return 1;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
