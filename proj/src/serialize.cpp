#include "thompson/serialize.hpp"

#include <cctype>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

Json exponent_list(const std::vector<Pow2Exp>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.exponent().to_string());
  return out;
}

Rational fraction(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a fraction string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Json to_json(const PLMap& f) {
  Json pts = Json::array();
  for (const Point& p : f.points()) pts.push_back({p.x.to_string(), p.y.to_string()});
  return {{"breakpoints", std::move(pts)}};
}

PLMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.at("breakpoints").is_array()) {
    throw ParseError("element JSON needs a \"breakpoints\" array");
  }
  std::vector<Point> pts;
  for (const Json& p : j.at("breakpoints")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("breakpoint must be a pair, got " + p.dump());
    pts.push_back({fraction(p[0]), fraction(p[1])});
  }
  return PLMap::unit(std::move(pts));
}

PLMap parse_map(std::string_view text) {
  text = trim(text);
  if (text.starts_with("word:")) {
    auto word = parse_word(text.substr(5));
    return word_to_element(word).map();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed element JSON: ") + e.what());
  }
  return map_from_json(j);
}

FElement parse_element(std::string_view text) { return FElement(parse_map(text)); }

Json to_json(const FCheck& c) {
  Json out{{"in_F", c.valid}};
  if (!c.valid) {
    out["diagnosis"] = c.message();
    out["where"] = c.where.to_string();
    out["value"] = c.value.to_string();
  }
  return out;
}

Json to_json(const FiniteFunction& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back({p.position.to_string(), p.value.to_string()});
  return {{"period", c.period.to_string()}, {"points", std::move(pts)}};
}

Json to_json(const SigmaInvariant& s) {
  Json slopes = Json::array();
  for (const auto& r : s.slopes) slopes.push_back(r.to_string());
  Json classes = Json::array();
  for (const auto& c : s.classes) classes.push_back(to_json(c));
  return {{"sigma1", s.sign_seq}, {"sigma2", std::move(slopes)}, {"sigma3", std::move(classes)}};
}

Json to_json(const DeltaInvariant& d) {
  Json chains = Json::array();
  for (const auto& c : d.chains) {
    Json entries = Json::array();
    for (const auto& e : c.entries) entries.push_back(e.to_string());
    chains.push_back({{"entries", std::move(entries)},
                      {"lambda_exponents", exponent_list(c.lambdas)},
                      {"mu_exponents", exponent_list(c.mus)}});
  }
  return {{"chains", std::move(chains)}};
}

Json to_json(const CentralizerStructure& c) {
  Json intervals = Json::array();
  for (const auto& iv : c.fixed_intervals) intervals.push_back({iv.lo.to_string(), iv.hi.to_string()});
  Json gens = Json::array();
  for (const auto& g : c.chain_generators) gens.push_back(to_json(g));
  return {{"fixed_components", c.fixed_components},
          {"chains", c.chains},
          {"fixed_intervals", std::move(intervals)},
          {"chain_generators", std::move(gens)}};
}

}  // namespace thompson
