#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lrk/puzzles.hpp"
#include "lrk/shapes.hpp"

namespace lrk {

/// c: K-theoretic product constants; cbar: constants of G_lambda*(1-G_1);
/// d: coproduct constants; dtilde: the mirrored coproduct family.
enum class Family { C, CBar, D, DTilde };

std::string_view family_name(Family f);
/// Accepts c, cbar, d, dtilde; throws RuleError otherwise.
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

/// Method ids computing a family, reference method last:
/// c: k-skew k-oplus K-puzzle oracle
/// cbar: tri-skew tri-oplus tri-puzzle identity oracle
/// d: hex-skew hex-oplus hex-puzzle buch
/// dtilde: hexR-skew hexR-oplus hexR-puzzle d-transpose
const std::vector<std::string>& family_methods(Family f);
/// Puzzle mode of the family.
Mode family_mode(Family f);

struct Route {
  std::string method;
  std::uint64_t count = 0;
};

struct CoefficientReport {
  Family family = Family::C;
  Partition lambda, mu, nu;
  std::uint64_t value = 0;  // count of the reference route (or the first one computed)
  int sign = 1;             // (-1)^(|nu| - |lambda| - |mu|)
  std::vector<Route> routes;
  std::optional<AmbientRectangle> ambient;  // only when a puzzle route ran
  std::vector<std::string> disagreeing;     // methods whose count differs from `value`

  bool agree() const { return disagreeing.empty(); }
};

/// Runs the requested methods (all when empty). The ambient rectangle is the
/// mode's minimal one unless given; throws AmbientError if it is too small
/// and RuleError on unknown methods.
CoefficientReport compute(Family f, const Partition& lambda, const Partition& mu, const Partition& nu,
                          const std::vector<std::string>& methods = {},
                          std::optional<AmbientRectangle> amb = std::nullopt);

nlohmann::json to_json(const CoefficientReport& r);

struct CrosscheckOptions {
  int rows = 2;
  int cols = 2;
  std::vector<Family> families = {Family::C, Family::CBar, Family::D, Family::DTilde};
  /// 0 selects LRK_THREADS or the hardware concurrency.
  unsigned threads = 0;
  /// Failure examples kept per matrix row.
  std::size_t max_examples = 5;
};

/// One row of the pass/fail matrix: a method compared against its family's
/// reference, or an identity.
struct CrosscheckRow {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> examples;

  bool pass() const { return failed == 0; }
};

struct CrosscheckSummary {
  int rows = 0;
  int cols = 0;
  std::uint64_t triples = 0;
  std::vector<CrosscheckRow> matrix;

  bool all_pass() const;
  std::string to_text() const;
};

/// Every (lambda, mu, nu) inside the rows x cols box, compared per family
/// and against the identities relating the families.
CrosscheckSummary crosscheck(const CrosscheckOptions& opts);

nlohmann::json to_json(const CrosscheckSummary& s);

}  // namespace lrk
