#include "forest/json_io.hpp"

#include <cmath>

#include "forest/error.hpp"

namespace forest {

Json to_json(const ForestDistribution& d) {
  Json probs = Json::object();
  for (const auto& [k, p] : d.probs) {
    probs[std::to_string(k)] = format_rational(p);
  }
  return Json{{"n", d.n}, {"m", d.m}, {"probs", std::move(probs)}};
}

ForestDistribution distribution_from_json(const Json& j) {
  try {
    ForestDistribution d;
    d.n = j.at("n").get<int>();
    d.m = j.at("m").get<int>();
    for (const auto& [k, v] : j.at("probs").items()) {
      d.probs.emplace(std::stoi(k), parse_rational(v.get<std::string>()));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("distribution JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::MalformedInput, "distribution JSON: non-integer key");
  }
}

std::string to_hex(const CanonicalKey& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.bytes.size());
  for (unsigned char c : key.bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

Json to_json(const PairReport& r) {
  return Json{{"graph6_a", r.graph6_a},
              {"graph6_b", r.graph6_b},
              {"key_a", to_hex(r.key_a)},
              {"key_b", to_hex(r.key_b)},
              {"shared_polynomial", to_json(r.shared_polynomial)},
              {"explained_by_edge_transitivity", r.explained_by_edge_transitivity}};
}

Json to_json(const TwinReport& r) {
  return Json{{"graph6_a", r.graph6_a},
              {"graph6_b", r.graph6_b},
              {"key_a", to_hex(r.key_a)},
              {"key_b", to_hex(r.key_b)},
              {"expectation", format_rational(r.expectation)},
              {"polynomial_a", to_json(r.polynomial_a)},
              {"polynomial_b", to_json(r.polynomial_b)}};
}

Json to_json(const EstimatedDistribution& d) {
  Json counts = Json::object();
  for (const auto& [k, c] : d.counts) {
    counts[std::to_string(k)] = c;
  }
  return Json{{"trials", d.trials},
              {"seed", d.seed},
              {"counts", std::move(counts)},
              {"mean_kappa", d.mean_kappa},
              {"stderr_kappa", d.stderr_kappa}};
}

Json to_json(const DecayRow& row) {
  Json j{{"n", row.n},
         {"graph6", row.graph6},
         {"trials", row.trials},
         {"hits", row.hits},
         {"p1_hat", row.p1_hat}};
  // JSON has no infinity; a run without hits reports null.
  if (std::isfinite(row.neg_log_p1_over_n)) {
    j["neg_log_p1_over_n"] = row.neg_log_p1_over_n;
  } else {
    j["neg_log_p1_over_n"] = nullptr;
  }
  if (row.cheeger) {
    j["cheeger"] = format_rational(*row.cheeger);
  } else {
    j["cheeger"] = nullptr;
  }
  return j;
}

}  // namespace forest
