#include "joinscout/pipeline.hpp"

namespace joinscout {

Discovery discover(const Catalog& catalog, const MatchConfig& config, const SemanticProvider& provider,
                   std::size_t jobs) {
  config.validate();
  Discovery d;
  d.candidates = match_columns(catalog, config, provider, jobs);
  d.validations = validate_all(d.candidates, catalog, config, jobs);
  for (const auto& v : d.validations) {
    if (const auto* ok = std::get_if<ValidationResult>(&v)) d.accepted.push_back(*ok);
  }
  d.graph = build_graph(catalog, d.accepted, config);
  return d;
}

}  // namespace joinscout
