#include "nsbox/json_io.hpp"

#include "nsbox/errors.hpp"

namespace nsbox {

namespace {

Rational rational_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path, "expected a rational string or integer");
}

}  // namespace

Json box_to_json(const Box& box) {
  Json p = Json::array();
  for (int x = 0; x < 2; ++x) {
    Json jy = Json::array();
    for (int y = 0; y < 2; ++y) {
      Json ja = Json::array();
      for (int a = 0; a < 2; ++a) {
        Json jb = Json::array();
        for (int b = 0; b < 2; ++b) jb.push_back(box.at(x, y, a, b).str());
        ja.push_back(std::move(jb));
      }
      jy.push_back(std::move(ja));
    }
    p.push_back(std::move(jy));
  }
  return Json{{"P", std::move(p)}};
}

Box box_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("P")) throw ParseError("P", "missing box table");
  const Json& p = j.at("P");
  Box box;
  std::string path = "P";
  if (!p.is_array() || p.size() != 2) throw ParseError(path, "expected 2 entries");
  for (int x = 0; x < 2; ++x) {
    const Json& jx = p.at(x);
    std::string px = path + "[" + std::to_string(x) + "]";
    if (!jx.is_array() || jx.size() != 2) throw ParseError(px, "expected 2 entries");
    for (int y = 0; y < 2; ++y) {
      const Json& jy = jx.at(y);
      std::string py = px + "[" + std::to_string(y) + "]";
      if (!jy.is_array() || jy.size() != 2) throw ParseError(py, "expected 2 entries");
      for (int a = 0; a < 2; ++a) {
        const Json& ja = jy.at(a);
        std::string pa = py + "[" + std::to_string(a) + "]";
        if (!ja.is_array() || ja.size() != 2) throw ParseError(pa, "expected 2 entries");
        for (int b = 0; b < 2; ++b) {
          std::string pb = pa + "[" + std::to_string(b) + "]";
          box.at(x, y, a, b) = rational_from_json(ja.at(b), pb);
        }
      }
    }
  }
  return box;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const CorrelationSummary& s) {
  Json j;
  j["correlators"] = {s.correlator[0].str(), s.correlator[1].str(), s.correlator[2].str(),
                      s.correlator[3].str()};
  j["marginals_a"] = {s.marginal_a[0].str(), s.marginal_a[1].str()};
  j["marginals_b"] = {s.marginal_b[0].str(), s.marginal_b[1].str()};
  j["covariances"] = {s.covariance[0].str(), s.covariance[1].str(), s.covariance[2].str(),
                      s.covariance[3].str()};
  return j;
}

Json to_json(const FprReport& r) {
  Json j;
  j["cov_chsh"] = {r.cov_chsh[0].str(), r.cov_chsh[1].str(), r.cov_chsh[2].str(),
                   r.cov_chsh[3].str()};
  j["gamma"] = {r.gamma[0].str(), r.gamma[1].str(), r.gamma[2].str()};
  j["f_pr"] = r.f_pr.str();
  return j;
}

Json to_json(const LocalityCertificate& c, const VertexSet& vset) {
  Json j;
  j["verdict"] = c.member ? "member" : "non-member";
  if (c.member) {
    Json weights = Json::array();
    for (const auto& [index, w] : c.weights)
      weights.push_back(Json{{"vertex", vset.label(index)}, {"w", w.str()}});
    j["weights"] = std::move(weights);
  }
  if (c.witness) {
    j["witness"] = Json{{"chsh",
                         {static_cast<int>(c.witness->label.alpha),
                          static_cast<int>(c.witness->label.beta),
                          static_cast<int>(c.witness->label.gamma)}},
                        {"value", c.witness->value.str()}};
  }
  return j;
}

Json to_json(const Relabeling& r) {
  Json j;
  j["party_swap"] = static_cast<int>(r.party_swap);
  j["input_flip"] = {static_cast<int>(r.input_flip[0]), static_cast<int>(r.input_flip[1])};
  j["output_flip_a"] = {static_cast<int>(r.output_flip[0][0]),
                        static_cast<int>(r.output_flip[0][1])};
  j["output_flip_b"] = {static_cast<int>(r.output_flip[1][0]),
                        static_cast<int>(r.output_flip[1][1])};
  return j;
}

Json to_json(const PrDecomposition& d) {
  Json j;
  j["p_pr"] = d.p_pr.str();
  j["pr_label"] = {static_cast<int>(d.pr_label.alpha), static_cast<int>(d.pr_label.beta),
                   static_cast<int>(d.pr_label.gamma)};
  j["residual"] = d.residual ? box_to_json(*d.residual) : Json(nullptr);
  j["validated"] = Json{{"residual_nonnegative", d.residual_nonnegative},
                        {"residual_bell_local", d.residual_bell_local},
                        {"residual_fpr_zero", d.residual_fpr_zero}};
  return j;
}

Json to_json(const HardyReport& r) {
  Json j;
  j["satisfies_conditions"] = r.satisfies_conditions;
  j["p_h"] = r.p_h.str();
  j["variant"] = to_json(r.variant);
  return j;
}

Json to_json(const WitnessVerdict& v) {
  Json j;
  j["bell_local"] = v.bell_local;
  j["f_pr_positive"] = v.f_pr_positive;
  j["beyond_tsirelson"] = v.beyond_tsirelson;
  j["ic_verdict"] = ic_verdict_name(v.ic_verdict);
  if (v.quantum_model_known == QuantumModel::unknown)
    j["quantum_model_known"] = "unknown";
  else
    j["quantum_model_known"] = v.quantum_model_known == QuantumModel::yes;
  return j;
}

Json to_json(const ReproFailure& f) {
  return Json{{"params", f.params}, {"expected", f.expected}, {"actual", f.actual}};
}

Json to_json(const ReproReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["run"] = r.run;
  j["passed"] = r.passed;
  j["failure"] = r.failure ? to_json(*r.failure) : Json(nullptr);
  if (!r.table.empty()) {
    Json table = Json::array();
    for (const TheoremRow& row : r.table)
      table.push_back(Json{{"theory", row.theory},
                           {"bell_local_cases", row.bell_local_cases},
                           {"fpr_zero", row.fpr_zero},
                           {"fpr_positive", row.fpr_positive}});
    j["table"] = std::move(table);
  }
  return j;
}

Json to_json(const FamilyPoint& p) {
  Json j;
  j["family"] = family_id(p);
  Json params;
  Json local_part;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GnstpqPoint>) {
          params["c0"] = v.c0.str();
          local_part = Json::array();
          for (const auto& [label, w] : v.local_part)
            local_part.push_back(Json{{"label",
                                       {static_cast<int>(label.alpha),
                                        static_cast<int>(label.beta),
                                        static_cast<int>(label.gamma),
                                        static_cast<int>(label.epsilon)}},
                                      {"w", w.str()}});
        } else if constexpr (std::is_same_v<T, Gnstpq1Point>) {
          params["c0"] = v.c0.str();
          params["c1"] = v.c1.str();
        } else if constexpr (std::is_same_v<T, HardyPoint>) {
          params["h_pr"] = v.h_pr.str();
          params["h"] = {v.h[0].str(), v.h[1].str(), v.h[2].str(), v.h[3].str(), v.h[4].str()};
        } else if constexpr (std::is_same_v<T, NoisyPrPoint>) {
          params["q"] = noise_vertex_name(v.q);
          params["eps"] = v.eps.str();
          params["nu"] = v.nu.str();
        } else if constexpr (std::is_same_v<T, IsotropicPoint>) {
          params["eps"] = v.eps.str();
        } else {
          static_assert(std::is_same_v<T, NoisePoint>);
          params["q"] = noise_vertex_name(v.q);
          params["nu"] = v.nu.str();
        }
      },
      p);
  j["params"] = std::move(params);
  if (!local_part.is_null()) j["local_part"] = std::move(local_part);
  return j;
}

}  // namespace nsbox
