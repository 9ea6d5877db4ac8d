#pragma once

// Reproduction checks for the published examples, driven by an embedded
// corpus of expected values.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "motivic/subring.hpp"

namespace motive {

struct CaseResult {
  std::string id;
  std::string anchor;
  std::string origin;
  bool passed = false;
  std::vector<std::string> details;
  double elapsed_ms = 0;
};

/// The corpus compiled into the binary.
const nlohmann::json& builtin_corpus();

class VerifySuite {
 public:
  explicit VerifySuite(nlohmann::json corpus = builtin_corpus(), int threads = 1);
  ~VerifySuite();

  std::vector<std::string> case_ids() const;
  bool has_case(const std::string& id) const;
  /// Never throws for a known id: failures and exceptions become a failed result.
  CaseResult run(const std::string& id);
  std::vector<CaseResult> run_all();

 private:
  struct Cached;
  /// Rational-cycle spans of a geometry up to a codegree, shared between cases.
  const motivic::GradedSpan& spans(const motivic::GeometrySpec& spec, int max_codegree);
  void run_case(const nlohmann::json& c, CaseResult& result);

  nlohmann::json corpus_;
  int threads_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<Cached>> cache_;
};

nlohmann::ordered_json to_json(const std::vector<CaseResult>& results, bool timing);
std::string to_text(const std::vector<CaseResult>& results, bool timing);

/// Expands a piecewise multiplicity table: b_i from [from, to, value] pieces,
/// b_i = b_(range - i) above mirror_above, then +1 at each bump.
std::vector<std::int64_t> expand_rule(const nlohmann::json& rule);

}  // namespace motive
