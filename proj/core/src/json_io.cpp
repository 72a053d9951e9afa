#include "arbor/json_io.hpp"

namespace arbor {

using nlohmann::json;

json rational_to_json(const Rational& r) {
  return json{{"num", r.num_str()}, {"den", r.den_str()}, {"approx", r.approx()}};
}

Rational rational_from_json(const json& j) {
  return Rational::parse(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

json tree_to_json(const Tree& t) {
  json edges = json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
  return json{{"n", t.order()}, {"edges", std::move(edges)}};
}

namespace {

json prob_list(const std::vector<Prob>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(rational_to_json(x));
  return a;
}

}  // namespace

json bundle_to_json(const Tree& t, const ValueBundle& b, const StoppingDist& stopping) {
  return json{
      {"tree", tree_to_json(t)},
      {"oo", {{"value", rational_to_json(b.oo_value)}, {"moves", b.oo_moves}, {"by_vertex", prob_list(b.oo_by_vertex)}}},
      {"semirandom_first",
       {{"value", rational_to_json(b.p_first)},
        {"moves", b.p_first_moves},
        {"by_vertex", prob_list(b.p_first_by_vertex)}}},
      {"semirandom_second",
       {{"value", rational_to_json(b.q_second)}, {"by_vertex", prob_list(b.q_second_by_vertex)}}},
      {"random_random", {{"value", rational_to_json(b.rr_value)}, {"by_vertex", prob_list(b.rr_by_vertex)}}},
      {"stopping_time",
       {{"probs", prob_list(stopping.probs)},
        {"odd_mass", rational_to_json(stopping.odd_mass())},
        {"expectation", rational_to_json(stopping.expectation())}}},
  };
}

}  // namespace arbor
