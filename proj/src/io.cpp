#include "entax/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace entax {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SchmidtVector parse_state(const json& j) {
  try {
    std::string label = j.value("label", std::string{});
    if (j.contains("probs")) {
      return SchmidtVector(j.at("probs").get<std::vector<double>>(),
                           std::move(label));
    }
    if (j.contains("amps")) {
      std::vector<std::vector<std::complex<double>>> amps;
      for (const auto& row : j.at("amps")) {
        std::vector<std::complex<double>> r;
        for (const auto& cell : row) {
          r.emplace_back(cell.value("re", 0.0), cell.value("im", 0.0));
        }
        amps.push_back(std::move(r));
      }
      return schmidt_from_amplitudes(amps, std::move(label));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed state: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid state: ") + e.what());
  }
  throw ParseError("state file needs a 'probs' or 'amps' field");
}

SchmidtVector load_state(const std::string& path) {
  return parse_state(load_json(path));
}

json state_to_json(const SchmidtVector& v) {
  json j{{"probs", v.probs()}};
  if (!v.label().empty()) j["label"] = v.label();
  return j;
}

void save_state(const SchmidtVector& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << state_to_json(v).dump(2) << "\n";
}

MultipartiteState parse_multipartite(const json& j) {
  try {
    const auto dims = j.at("dims").get<std::vector<int>>();
    std::size_t total = 1;
    for (int d : dims) {
      if (d < 1) throw ParseError("multipartite: dimension < 1");
      total *= static_cast<std::size_t>(d);
    }
    std::vector<std::complex<double>> amps(total, 0.0);
    for (const auto& entry : j.at("amps")) {
      const auto index = entry.at("index").get<std::vector<int>>();
      if (index.size() != dims.size()) {
        throw ParseError("multipartite: index arity mismatch");
      }
      std::size_t flat = 0;
      for (std::size_t p = 0; p < dims.size(); ++p) {
        if (index[p] < 0 || index[p] >= dims[p]) {
          throw ParseError("multipartite: index out of range");
        }
        flat = flat * static_cast<std::size_t>(dims[p]) +
               static_cast<std::size_t>(index[p]);
      }
      amps[flat] = {entry.value("re", 0.0), entry.value("im", 0.0)};
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
    return MultipartiteState(dims, std::move(amps), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed multipartite state: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid multipartite state: ") + e.what());
  }
}

MultipartiteState load_multipartite(const std::string& path) {
  return parse_multipartite(load_json(path));
}

json verdict_to_json(const ConvertibilityVerdict& v) {
  return json{{"convertible", v.convertible},
              {"failing_prefix", v.failing_prefix
                                     ? json(*v.failing_prefix)
                                     : json(nullptr)},
              {"margin", v.margin}};
}

json catalyst_search_to_json(const CatalystSearchResult& r) {
  json j{{"found", r.catalyst.has_value()},
         {"margin", r.margin},
         {"evaluations", r.evaluations}};
  j["spectrum"] = r.catalyst ? json(r.catalyst->spectrum.probs()) : json(nullptr);
  return j;
}

json rate_estimate_to_json(const RateEstimate& e) {
  return json{{"m", e.m},
              {"n", e.n},
              {"m_over_n", e.ratio},
              {"entropy_ref", e.reference_entropy_ratio}};
}

std::vector<int> mask_to_parties(CutMask mask) {
  std::vector<int> parties;
  for (int p = 0; mask != 0; ++p, mask >>= 1) {
    if (mask & 1) parties.push_back(p + 1);
  }
  return parties;
}

json tripartite_report_to_json(const TripartiteReport& r) {
  auto mask_json = [](const std::optional<CutMask>& m) {
    return m ? json(mask_to_parties(*m)) : json(nullptr);
  };
  return json{{"b_to_c_obstructed", r.b_to_c_obstructed},
              {"b_to_c_cut", mask_json(r.b_to_c_mask)},
              {"c_to_b_obstructed", r.c_to_b_obstructed},
              {"c_to_b_cut", mask_json(r.c_to_b_mask)},
              {"ghz_to_b_obstructed", r.ghz_to_b_obstructed},
              {"ghz_to_c_obstructed", r.ghz_to_c_obstructed},
              {"ghz_cut_entropies", r.ghz_cut_entropies}};
}

void frontier_to_csv(const RateFrontier& frontier, std::ostream& out) {
  out << "n,m,m_over_n,direction,epsilon,entropy_ref,budget_exceeded\n";
  const char* dir = frontier.direction == RateDirection::kDilution
                        ? "dilution"
                        : "distillation";
  for (const auto& pt : frontier.points) {
    out << pt.n << ',';
    if (pt.feasible) {
      out << pt.m << ',' << format_double(pt.ratio());
    } else {
      out << "-1,-1";
    }
    out << ',' << dir << ',' << format_double(pt.epsilon) << ','
        << format_double(frontier.reference_entropy_ratio) << ','
        << (pt.budget_exceeded ? 1 : 0) << '\n';
  }
}

}  // namespace entax
