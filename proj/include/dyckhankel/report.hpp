#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dyckhankel/hankel.hpp"
#include "dyckhankel/quadeq.hpp"
#include "dyckhankel/tau.hpp"
#include "dyckhankel/verify.hpp"

namespace dyckhankel {

/// Key order follows insertion so output is stable.
using Json = nlohmann::ordered_json;

// Integers and rationals are emitted as decimal strings.
Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& seq);
Json to_json(const std::vector<int>& seq);
Json to_json(const Poly& p);
/// {"num": [...], "den": [...]} with coefficient lists from x^0 upward.
Json to_json(const RatFun& f);
Json to_json(const QuadEq& eq);
Json to_json(const StepRelation& rel);
Json to_json(const PeriodReport& rep);
Json to_json(const CheckReport& rep);
/// {"delta", "sigma", "cycle_start", "steps": [{index, d, k, u, v, relation}]}.
Json chain_json(const ChainReport& chain);
/// {"m", "r", "n_max", "predicted", "computed", "tau_chain", "status", ...}.
Json to_json(const CaseRecord& rec);

std::string case_label(TauCase c);
std::string mode_label(VerifyMode mode);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// Space-separated terms.
std::string join_terms(const std::vector<Rational>& seq);

}  // namespace dyckhankel
