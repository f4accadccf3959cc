#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "entax/asymptotic.hpp"
#include "entax/catalysis.hpp"
#include "entax/majorization.hpp"
#include "entax/multipartite.hpp"
#include "entax/schmidt.hpp"

namespace entax {

/// Malformed or unreadable input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State file: {"label": ..., "probs": [...]} or {"amps": [[{"re","im"},...],...]}.
/// Probabilities may be unsorted; construction sorts and validates.
SchmidtVector parse_state(const nlohmann::json& j);
SchmidtVector load_state(const std::string& path);

nlohmann::json state_to_json(const SchmidtVector& v);
void save_state(const SchmidtVector& v, const std::string& path);

/// Multipartite file: {"dims": [d1..dk], "amps": [{"index": [i1..ik], "re", "im"}, ...]}
/// (sparse; omitted entries are zero).
MultipartiteState parse_multipartite(const nlohmann::json& j);
MultipartiteState load_multipartite(const std::string& path);

nlohmann::json verdict_to_json(const ConvertibilityVerdict& v);
nlohmann::json catalyst_search_to_json(const CatalystSearchResult& r);
nlohmann::json rate_estimate_to_json(const RateEstimate& e);
nlohmann::json tripartite_report_to_json(const TripartiteReport& r);

/// Party list (1-based) for a cut mask, e.g. mask 0b100 -> [3].
std::vector<int> mask_to_parties(CutMask mask);

/// CSV columns: n, m, m_over_n, direction, epsilon, entropy_ref,
/// budget_exceeded. '.' decimal, LF line endings.
void frontier_to_csv(const RateFrontier& frontier, std::ostream& out);

}  // namespace entax
