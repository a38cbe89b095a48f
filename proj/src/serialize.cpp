#include "crossings/serialize.hpp"

namespace crossings {

using nlohmann::json;

json rational_json(const Rational& r) {
  return json{{"num", numerator(r).str()},
              {"den", denominator(r).str()},
              {"decimal", to_double(r)}};
}

json census_json(const SubgraphCensus& c) {
  return json{{"n", c.n},
              {"delta", c.delta},
              {"m", std::to_string(c.m)},
              {"m2", std::to_string(c.m2)},
              {"m3", std::to_string(c.m3)},
              {"m4", std::to_string(c.m4)},
              {"s2", std::to_string(c.s2)},
              {"s4", std::to_string(c.s4)},
              {"s5", std::to_string(c.s5)},
              {"s6", std::to_string(c.s6)},
              {"s7", std::to_string(c.s7)}};
}

json pmf_json(const Pmf& pmf) {
  json list = json::array();
  for (const auto& e : pmf.entries) {
    list.push_back(json{{"k", e.k},
                        {"numerator", numerator(e.p).str()},
                        {"denominator", denominator(e.p).str()}});
  }
  return list;
}

json moment_report_json(const MomentReport& r) {
  return json{{"mean", rational_json(r.mean)},
              {"second_moment", rational_json(r.second_moment)},
              {"variance", rational_json(r.variance)},
              {"sigma", r.sigma},
              {"census", census_json(r.census)}};
}

json empirical_report_json(const EmpiricalReport& r) {
  return json{{"samples", r.samples},
              {"mean", r.mean},
              {"sd", r.sd},
              {"dk_empirical", r.dk_empirical},
              {"seed", r.seed},
              {"graph_descriptor", r.graph_descriptor}};
}

json family_reference_json(const FamilyReference& ref) {
  json j{{"family", std::string(family_name(ref.id.family))},
         {"size", ref.id.size},
         {"mean", rational_json(ref.mean)},
         {"variance", rational_json(ref.variance)},
         {"constants_guaranteed", ref.constants_guaranteed}};
  if (ref.dk_constant) {
    j["dk_constant"] = *ref.dk_constant;
    j["dk_over_sqrt_size"] = static_cast<double>(*ref.dk_constant) /
                             std::sqrt(static_cast<double>(ref.id.size));
  } else {
    j["dk_constant"] = nullptr;
  }
  return j;
}

}  // namespace crossings
