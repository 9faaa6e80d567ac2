#include "dyckhankel/report.hpp"

namespace dyckhankel {

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const std::vector<Rational>& seq) {
  Json out = Json::array();
  for (const auto& q : seq) out.push_back(q.to_string());
  return out;
}

Json to_json(const std::vector<int>& seq) {
  Json out = Json::array();
  for (int v : seq) out.push_back(std::to_string(v));
  return out;
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

Json to_json(const RatFun& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const QuadEq& eq) {
  return Json{{"d", std::to_string(eq.d)}, {"k", std::to_string(eq.k)}, {"u", to_json(eq.u)}, {"v", to_json(eq.v)}};
}

std::string case_label(TauCase c) {
  switch (c) {
    case TauCase::rescale:
      return "rescale";
    case TauCase::unit_k1:
      return "unit_k1";
    case TauCase::unit_k_ge2:
      return "unit_k_ge2";
  }
  return "unknown";
}

std::string mode_label(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::direct:
      return "direct";
    case VerifyMode::tau:
      return "tau";
    case VerifyMode::both:
      return "both";
  }
  return "unknown";
}

Json to_json(const StepRelation& rel) {
  return Json{{"case", case_label(rel.tau_case)},
              {"drop", std::to_string(rel.drop)},
              {"sign", std::to_string(rel.sign)},
              {"scale", rel.scale.to_string()}};
}

Json to_json(const PeriodReport& rep) {
  Json out{{"status", rep.confirmed() ? "confirmed" : "inconclusive"}};
  if (rep.confirmed()) {
    out["preperiod"] = std::to_string(rep.preperiod);
    out["period"] = std::to_string(rep.period);
    out["prefix"] = to_json(rep.prefix);
    out["word"] = to_json(rep.word);
    out["star"] = rep.star();
  }
  return out;
}

Json to_json(const CheckReport& rep) {
  return Json{{"name", rep.name},
              {"status", rep.passed ? "pass" : "fail"},
              {"checked", std::to_string(rep.checked)},
              {"failures", rep.failures}};
}

Json chain_json(const ChainReport& chain) {
  Json out;
  if (chain.cycle) {
    out["delta"] = std::to_string(chain.cycle->drop);
    out["sigma"] = std::to_string(chain.cycle->sign);
    out["cycle_start"] = std::to_string(chain.cycle->start);
  } else {
    out["delta"] = nullptr;
    out["sigma"] = nullptr;
    out["cycle_start"] = nullptr;
  }
  Json steps = Json::array();
  for (std::size_t i = 0; i < chain.equations.size(); ++i) {
    Json s{{"index", std::to_string(i)}};
    s.update(to_json(chain.equations[i]));
    s["relation"] = i < chain.relations.size() ? to_json(chain.relations[i]) : Json(nullptr);
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  return out;
}

Json to_json(const CaseRecord& rec) {
  Json out{{"m", std::to_string(rec.m)},
           {"r", std::to_string(rec.r)},
           {"n_max", std::to_string(rec.n_max)},
           {"order", std::to_string(rec.order)},
           {"mode", mode_label(rec.mode)},
           {"predicted", to_json(rec.predicted)},
           {"computed", to_json(rec.computed)},
           {"tau_derived", to_json(rec.tau_derived)}};
  out["tau_chain"] = rec.chain.equations.empty() ? Json(nullptr) : chain_json(rec.chain);
  out["period"] = to_json(rec.period);
  out["first_mismatch"] = rec.first_mismatch ? Json(std::to_string(*rec.first_mismatch)) : Json(nullptr);
  out["status"] = rec.passed() ? "pass" : "fail";
  out["failures"] = rec.failures;
  out["warnings"] = rec.warnings;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_terms(const std::vector<Rational>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? " " : "") + seq[i].to_string();
  return out;
}

}  // namespace dyckhankel
