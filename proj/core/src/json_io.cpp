#include "pmf/json_io.hpp"

#include <json.hpp>

namespace pmf {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DataError("malformed JSON");
  return j;
}

Rational rat(const Json& j) {
  if (!j.is_string()) throw DataError("expected a rational string");
  return parse_rational(j.get<std::string>());
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "undecided-at-truncation";
  }
}

}  // namespace

std::string to_json(const QExp& x) {
  Json j;
  j["grain"] = x.grain();
  j["trunc"] = to_string(x.trunc());
  Json coeffs = Json::array();
  for (const auto& [e, c] : x.terms())
    coeffs.push_back(Json::array({to_string(e), to_string(c)}));
  j["coeffs"] = std::move(coeffs);
  return dump(j);
}

QExp qexp_from_json(const std::string& text) {
  Json j = parse(text);
  try {
    QExp out(j.at("grain").get<long>(), rat(j.at("trunc")));
    for (const auto& term : j.at("coeffs"))
      out.set(rat(term.at(0)), rat(term.at(1)));
    return out;
  } catch (const Json::exception& e) {
    throw DataError(std::string("bad series JSON: ") + e.what());
  }
}

std::string to_json(const BiExp& x) {
  Json j;
  j["grain"] = Json::array({x.grain1(), x.grain2()});
  j["trunc"] = Json::array({to_string(x.trunc1()), to_string(x.trunc2())});
  Json coeffs = Json::array();
  for (const auto& [k, c] : x.terms())
    coeffs.push_back(Json::array({to_string(k.e1), to_string(k.e2), to_string(c)}));
  j["coeffs"] = std::move(coeffs);
  return dump(j);
}

BiExp biexp_from_json(const std::string& text) {
  Json j = parse(text);
  try {
    BiExp out(j.at("grain").at(0).get<long>(), j.at("grain").at(1).get<long>(),
              rat(j.at("trunc").at(0)), rat(j.at("trunc").at(1)));
    for (const auto& term : j.at("coeffs"))
      out.set(rat(term.at(0)), rat(term.at(1)), rat(term.at(2)));
    return out;
  } catch (const Json::exception& e) {
    throw DataError(std::string("bad series JSON: ") + e.what());
  }
}

std::string to_json(const QuadPairExp& x) {
  Json j;
  j["disc"] = x.disc();
  j["trunc"] = to_string(x.trunc());
  Json coeffs = Json::array();
  for (const auto& [e, c] : x.terms())
    coeffs.push_back(Json::array({e.str(), to_string(c)}));
  j["coeffs"] = std::move(coeffs);
  return dump(j);
}

QuadPairExp quadpair_from_json(const std::string& text) {
  Json j = parse(text);
  try {
    long disc = j.at("disc").get<long>();
    QuadPairExp out(disc, rat(j.at("trunc")));
    for (const auto& term : j.at("coeffs"))
      out.set(QuadRational::parse(term.at(0).get<std::string>(), disc),
              rat(term.at(1)));
    return out;
  } catch (const Json::exception& e) {
    throw DataError(std::string("bad series JSON: ") + e.what());
  }
}

std::string to_json(const ParamodularSeries& x) {
  Json j;
  j["level"] = x.level();
  j["weight"] = x.weight();
  j["box"] = Json::array({x.amax(), x.cmax()});
  Json coeffs = Json::array();
  for (const auto& [key, v] : x.terms()) {
    auto [a, c, b] = key;
    coeffs.push_back(Json::array({a, b, c, to_string(v)}));
  }
  j["coeffs"] = std::move(coeffs);
  return dump(j);
}

ParamodularSeries paramodular_from_json(const std::string& text) {
  Json j = parse(text);
  try {
    ParamodularSeries out(j.at("level").get<long>(), j.at("weight").get<long>(),
                          j.at("box").at(0).get<long>(),
                          j.at("box").at(1).get<long>());
    for (const auto& term : j.at("coeffs"))
      out.set(term.at(0).get<long>(), term.at(1).get<long>(),
              term.at(2).get<long>(), rat(term.at(3)));
    return out;
  } catch (const Json::exception& e) {
    throw DataError(std::string("bad series JSON: ") + e.what());
  }
}

std::string to_json(const SuiteResult& x) {
  Json j;
  j["suite"] = x.name;
  Json checks = Json::array();
  for (const auto& c : x.checks) {
    Json row;
    row["id"] = c.id;
    row["status"] = status_name(c.status);
    row["witness"] = c.witness;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  return dump(j);
}

}  // namespace pmf
