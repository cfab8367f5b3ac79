// Acceptance checks: prints one PASS/FAIL line per criterion. With arguments,
// runs only the listed criteria. Exit status 0 iff every run criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lrk/bijection.hpp"
#include "lrk/error.hpp"
#include "lrk/oracle.hpp"
#include "lrk/puzzles.hpp"
#include "lrk/report.hpp"
#include "lrk/tableaux.hpp"

using namespace lrk;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint64_t puzzles(Mode mode, const Partition& l, const Partition& m, const Partition& n, AmbientRectangle amb) {
  return count_tilings(build_boundary(l, m, n, amb, mode), catalog(mode));
}

std::string counts(const std::vector<std::pair<std::string, std::uint64_t>>& routes) {
  std::string out;
  for (const auto& [name, c] : routes) out += (out.empty() ? "" : ", ") + name + "=" + std::to_string(c);
  return out;
}

bool all_equal(const std::vector<std::pair<std::string, std::uint64_t>>& routes, std::uint64_t expected) {
  for (const auto& r : routes) {
    if (r.second != expected) return false;
  }
  return true;
}

const CrosscheckSummary& box3() {
  static const CrosscheckSummary s = [] {
    CrosscheckOptions o;
    o.rows = 3;
    o.cols = 3;
    return crosscheck(o);
  }();
  return s;
}

Outcome matrix_rows(const std::function<bool(const std::string&)>& wanted) {
  const CrosscheckSummary& s = box3();
  Outcome out{true, ""};
  std::uint64_t checked = 0;
  std::ostringstream failures;
  for (const CrosscheckRow& row : s.matrix) {
    if (!wanted(row.name)) continue;
    checked += row.checked;
    if (!row.pass()) {
      out.pass = false;
      failures << "; " << row.name << ": " << row.failed << "/" << row.checked << " disagree";
      if (!row.examples.empty()) failures << ", e.g. " << row.examples.front();
    }
  }
  out.detail = std::to_string(s.triples) + " triples, " + std::to_string(checked) + " comparisons" + failures.str();
  return out;
}

bool is_identity(const std::string& name) { return name.find(':') == std::string::npos; }

Outcome classical_agreement() {
  const Partition l{2, 1}, m{3, 2}, n{4, 3, 1};
  const std::vector<std::pair<std::string, std::uint64_t>> r = {
      {"lr-skew", count_tableaux(RuleId::LrSkew, l, m, n)},
      {"lr-oplus", count_tableaux(RuleId::LrOplus, l, m, n)},
      {"classical-puzzle", puzzles(Mode::Classical, l, m, n, {9, 3})},
  };
  return {all_equal(r, 2), counts(r)};
}

Outcome k_agreement() {
  const Partition l{2, 1}, m{2, 1}, n{4, 2, 1};
  const auto circles = enumerate_tableaux(RuleId::KSkew, l, m, n);
  std::set<Tableau> genomic;
  bool roundtrip = true;
  for (const Tableau& t : circles) {
    const Tableau g = circle_to_genomic(t);
    genomic.insert(g);
    roundtrip = roundtrip && genomic_to_circle(g) == t;
  }
  const auto oracle = product_constants(l, m, n.size());
  const std::vector<std::pair<std::string, std::uint64_t>> r = {
      {"k-skew", circles.size()},
      {"genomic", genomic.size()},
      {"k-oplus", count_tableaux(RuleId::KOplus, l, m, n)},
      {"K-puzzle", puzzles(Mode::K, l, m, n, minimal_ambient(Mode::K, l, m, n))},
      {"oracle", oracle.contains(n) ? oracle.at(n) : 0},
  };
  return {all_equal(r, 3) && roundtrip, counts(r) + (roundtrip ? "" : ", genomic roundtrip broken")};
}

Outcome exhaustive_crosscheck() {
  return matrix_rows([](const std::string& name) { return !is_identity(name); });
}

Outcome identities() { return matrix_rows(is_identity); }

Outcome bijection_roundtrips() {
  std::uint64_t puzzles_seen = 0;
  std::uint64_t failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) first = what;
  };
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= std::min(3, n - 1); ++k) {
      const AmbientRectangle amb(n, k);
      const auto parts = partitions_in_box(k, n - k - 1);
      for (const Partition& l : parts) {
        for (const Partition& m : parts) {
          for (const Partition& nu : parts) {
            const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " (" + l.to_string() +
                                      ") (" + m.to_string() + ") (" + nu.to_string() + ")";
            std::set<Tableau> skews;
            std::set<Tableau> opluses;
            for (const Puzzle& p : enumerate_tilings(build_boundary(l, m, nu, amb, Mode::Hex), catalog(Mode::Hex))) {
              ++puzzles_seen;
              try {
                const Tableau ts = puzzle_to_skew_tableau(p);
                const Tableau to = puzzle_to_oplus_tableau(p);
                if (!(skew_tableau_to_puzzle(ts, l, amb) == p)) fail(where + ": skew roundtrip");
                if (!(oplus_tableau_to_puzzle(to, amb) == p)) fail(where + ": oplus roundtrip");
                skews.insert(ts);
                opluses.insert(to);
              } catch (const Error& e) {
                fail(where + ": " + e.what());
              }
            }
            const auto hs = enumerate_tableaux(RuleId::HexSkew, l, m, nu);
            const auto ho = enumerate_tableaux(RuleId::HexOplus, l, m, nu);
            if (skews != std::set<Tableau>(hs.begin(), hs.end())) fail(where + ": skew images differ from hex-skew");
            if (opluses != std::set<Tableau>(ho.begin(), ho.end())) fail(where + ": oplus images differ from hex-oplus");
          }
        }
      }
    }
  }
  std::string detail = std::to_string(puzzles_seen) + " hex puzzles, " + std::to_string(failures) + " failures";
  if (failures) detail += "; first: " + first;
  return {failures == 0 && puzzles_seen > 0, detail};
}

Outcome mirror_involution() {
  std::uint64_t seen = 0;
  std::uint64_t count_pairs = 0;
  std::uint64_t failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) first = what;
  };
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const AmbientRectangle amb(n, k);
      for (Mode mode : {Mode::Hex, Mode::HexR}) {
        const auto [rows, cols] = mode_box(mode, amb);
        if (rows < 0 || cols < 0) continue;
        const auto parts = partitions_in_box(rows, cols);
        for (const Partition& l : parts) {
          for (const Partition& m : parts) {
            for (const Partition& nu : parts) {
              const std::string where = std::string(mode_name(mode)) + " n=" + std::to_string(n) + " k=" +
                                        std::to_string(k) + " (" + l.to_string() + ") (" + m.to_string() + ") (" +
                                        nu.to_string() + ")";
              const auto list = enumerate_tilings(build_boundary(l, m, nu, amb, mode), catalog(mode));
              for (const Puzzle& p : list) {
                ++seen;
                const Puzzle q = mirror(p);
                if (check_puzzle(q) || !(mirror(q) == p)) fail(where);
              }
              if (mode == Mode::Hex) {
                // Mirroring swaps and transposes lambda and mu and uses k' = n-k.
                ++count_pairs;
                const std::uint64_t other =
                    puzzles(Mode::HexR, transpose(m), transpose(l), transpose(nu), {n, n - k});
                if (other != list.size()) fail(where + ": hexR count " + std::to_string(other));
              }
            }
          }
        }
      }
    }
  }
  std::string detail = std::to_string(seen) + " puzzles, " + std::to_string(count_pairs) + " count pairs, " +
                       std::to_string(failures) + " failures";
  if (failures) detail += "; first: " + first;
  return {failures == 0, detail};
}

Outcome protrusion_variant() {
  std::uint64_t compared = 0;
  std::uint64_t nonzero = 0;
  std::uint64_t mismatches = 0;
  std::string first;
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto parts = partitions_in_box(k, n - k);
      for (const Partition& l : parts) {
        for (const Partition& m : parts) {
          for (const Partition& nu : parts) {
            const std::uint64_t ext = puzzles(Mode::HexExtended, l, m, nu, {n, k});
            const std::uint64_t hex = puzzles(Mode::Hex, l, m, nu, {n + 1, k});
            ++compared;
            if (ext) ++nonzero;
            if (ext != hex && mismatches++ == 0) {
              first = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " (" + l.to_string() + ") (" +
                      m.to_string() + ") (" + nu.to_string() + "): " + std::to_string(ext) + " vs " + std::to_string(hex);
            }
          }
        }
      }
    }
  }
  std::string detail = std::to_string(compared) + " triples (" + std::to_string(nonzero) + " nonzero), " +
                       std::to_string(mismatches) + " mismatches";
  if (mismatches) detail += "; first: " + first;
  return {mismatches == 0 && compared >= 20, detail};
}

Outcome oracle_sanity() {
  const SparsePoly g1 = grothendieck_poly({1}, 3, 3);
  const GExpansion e = expand_in_G_basis(g1 * g1, 3);
  const std::map<Partition, std::int64_t> expected{{{2}, 1}, {{1, 1}, 1}, {{2, 1}, -1}};
  // Independent derivation: set-valued tableaux of shape (1)+(1) with
  // content nu, signed by the degree.
  std::map<Partition, std::int64_t> brute;
  for (const Partition& nu : partitions_in_box(3, 3)) {
    if (nu.size() < 2 || nu.size() > 3) continue;
    const auto c = static_cast<std::int64_t>(count_tableaux(RuleId::KOplus, {1}, {1}, nu));
    if (c) brute[nu] = (nu.size() % 2 == 0 ? 1 : -1) * c;
  }
  const auto d = coproduct_constants({1});
  const std::uint64_t d111 = d.contains({{1}, {1}}) ? d.at({{1}, {1}}) : 0;
  std::ostringstream detail;
  detail << "G1*G1 =";
  for (const auto& [nu, a] : e.coefficients) detail << " " << (a < 0 ? "-" : "+") << std::abs(a) << "*G(" << nu.to_string() << ")";
  detail << "; d^(1)_(1),(1) = " << d111;
  return {e.coefficients == expected && brute == expected && d111 == 1, detail.str()};
}

struct Criterion {
  int id;
  std::string name;
  double seconds_limit;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "classical agreement", 1, classical_agreement},
      {2, "K-theory agreement", 5, k_agreement},
      {3, "exhaustive cross-check, 3x3 box", 600, exhaustive_crosscheck},
      {4, "identities, 3x3 box", 600, identities},
      {5, "bijection roundtrips, n <= 8, k <= 3", 0, bijection_roundtrips},
      {6, "mirror involution, n <= 6", 0, mirror_involution},
      {7, "protrusion variant, n <= 7", 0, protrusion_variant},
      {8, "oracle sanity", 0, oracle_sanity},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0 && secs > c.seconds_limit) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.seconds_limit)) + " s limit";
    }
    all = all && o.pass;
    std::printf("%s criterion %d: %s (%.2f s) -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
