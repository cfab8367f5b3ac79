#include "lrk/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "lrk/error.hpp"
#include "lrk/json.hpp"
#include "lrk/oracle.hpp"
#include "lrk/tableaux.hpp"

namespace lrk {

namespace {

const std::vector<std::pair<Family, std::string_view>> kFamilyNames = {
    {Family::C, "c"}, {Family::CBar, "cbar"}, {Family::D, "d"}, {Family::DTilde, "dtilde"}};

using PairKey = std::pair<Partition, Partition>;

/// Memoized oracle tables shared across triples. Coefficients of degree at
/// most the stored cap do not depend on the cap, so one table serves every
/// nu up to it.
class OracleCache {
 public:
  explicit OracleCache(int cap_floor) : cap_floor_(cap_floor) {}

  std::uint64_t product(const Partition& l, const Partition& m, const Partition& n) {
    return lookup(products_, l, m, n, product_constants);
  }
  std::uint64_t script_g(const Partition& l, const Partition& m, const Partition& n) {
    return lookup(script_gs_, l, m, n, script_g_constants);
  }
  std::uint64_t coproduct(const Partition& l, const Partition& m, const Partition& n) {
    std::map<PairKey, std::uint64_t> table;
    {
      std::lock_guard lock(mu_);
      auto it = coproducts_.find(n);
      if (it != coproducts_.end()) table = it->second;
    }
    if (table.empty()) {
      table = coproduct_constants(n);
      std::lock_guard lock(mu_);
      coproducts_.emplace(n, table);
    }
    auto it = table.find({l, m});
    return it == table.end() ? 0 : it->second;
  }

 private:
  using Table = std::map<Partition, std::uint64_t>;
  using Fn = Table (*)(const Partition&, const Partition&, int);

  std::uint64_t lookup(std::map<PairKey, std::pair<int, Table>>& cache, const Partition& l, const Partition& m,
                       const Partition& n, Fn fn) {
    const PairKey key{l, m};
    std::pair<int, Table> entry{-1, {}};
    {
      std::lock_guard lock(mu_);
      auto it = cache.find(key);
      if (it != cache.end()) entry = it->second;
    }
    if (entry.first < n.size()) {
      const int cap = std::max(n.size(), cap_floor_);
      entry = {cap, fn(l, m, cap)};
      std::lock_guard lock(mu_);
      auto& slot = cache[key];
      if (slot.first < cap) slot = entry;
    }
    auto it = entry.second.find(n);
    return it == entry.second.end() ? 0 : it->second;
  }

  int cap_floor_;
  std::mutex mu_;
  std::map<PairKey, std::pair<int, Table>> products_;
  std::map<PairKey, std::pair<int, Table>> script_gs_;
  std::map<Partition, std::map<PairKey, std::uint64_t>> coproducts_;
};

std::uint64_t run_method(Family f, const std::string& method, const Partition& l, const Partition& m,
                         const Partition& n, const AmbientRectangle* amb, OracleCache& cache) {
  if (method == "oracle") {
    return f == Family::C ? cache.product(l, m, n) : cache.script_g(l, m, n);
  }
  if (method == "buch") return cache.coproduct(l, m, n);
  if (method == "d-transpose") return cache.coproduct(transpose(l), transpose(m), transpose(n));
  if (method == "identity") {
    std::uint64_t total = 0;
    for (const Partition& bigger : shape_variants_plus(m)) total += cache.product(l, bigger, n);
    return total;
  }
  if (method.ends_with("-puzzle")) {
    return count_tilings(build_boundary(l, m, n, *amb, family_mode(f)), catalog(family_mode(f)));
  }
  return count_tableaux(parse_rule(method), l, m, n);
}

CoefficientReport compute_with(Family f, const Partition& lambda, const Partition& mu, const Partition& nu,
                               const std::vector<std::string>& methods, std::optional<AmbientRectangle> amb,
                               OracleCache& cache) {
  const std::vector<std::string>& known = family_methods(f);
  std::vector<std::string> chosen;
  if (methods.empty()) {
    chosen = known;
  } else {
    for (const std::string& m : methods) {
      if (std::find(known.begin(), known.end(), m) == known.end()) {
        throw RuleError("method \"" + m + "\" does not compute " + std::string(family_name(f)));
      }
    }
    // Keep the family's order so the reference method comes last.
    for (const std::string& m : known) {
      if (std::find(methods.begin(), methods.end(), m) != methods.end()) chosen.push_back(m);
    }
  }

  CoefficientReport r;
  r.family = f;
  r.lambda = lambda;
  r.mu = mu;
  r.nu = nu;
  r.sign = (nu.size() - lambda.size() - mu.size()) % 2 == 0 ? 1 : -1;
  for (const std::string& m : chosen) {
    if (m.ends_with("-puzzle") && !r.ambient) {
      r.ambient = amb ? *amb : minimal_ambient(family_mode(f), lambda, mu, nu);
    }
  }
  for (const std::string& m : chosen) {
    r.routes.push_back({m, run_method(f, m, lambda, mu, nu, r.ambient ? &*r.ambient : nullptr, cache)});
  }
  if (!r.routes.empty()) r.value = r.routes.back().count;
  for (const Route& route : r.routes) {
    if (route.count != r.value) r.disagreeing.push_back(route.method);
  }
  return r;
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LRK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string triple_text(const Partition& l, const Partition& m, const Partition& n) {
  return "(" + l.to_string() + ") (" + m.to_string() + ") (" + n.to_string() + ")";
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [id, name] : kFamilyNames) {
    if (id == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [id, n] : kFamilyNames) {
    if (n == name) return id;
  }
  throw RuleError("unknown family \"" + std::string(name) + "\" (expected c, cbar, d or dtilde)");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> f = {Family::C, Family::CBar, Family::D, Family::DTilde};
  return f;
}

const std::vector<std::string>& family_methods(Family f) {
  static const std::map<Family, std::vector<std::string>> methods = {
      {Family::C, {"k-skew", "k-oplus", "K-puzzle", "oracle"}},
      {Family::CBar, {"tri-skew", "tri-oplus", "tri-puzzle", "identity", "oracle"}},
      {Family::D, {"hex-skew", "hex-oplus", "hex-puzzle", "buch"}},
      {Family::DTilde, {"hexR-skew", "hexR-oplus", "hexR-puzzle", "d-transpose"}},
  };
  return methods.at(f);
}

Mode family_mode(Family f) {
  switch (f) {
    case Family::C:
      return Mode::K;
    case Family::CBar:
      return Mode::Tri;
    case Family::D:
      return Mode::Hex;
    case Family::DTilde:
      return Mode::HexR;
  }
  return Mode::K;
}

CoefficientReport compute(Family f, const Partition& lambda, const Partition& mu, const Partition& nu,
                          const std::vector<std::string>& methods, std::optional<AmbientRectangle> amb) {
  OracleCache cache(0);
  return compute_with(f, lambda, mu, nu, methods, amb, cache);
}

nlohmann::json to_json(const CoefficientReport& r) {
  nlohmann::json j;
  j["family"] = family_name(r.family);
  j["lambda"] = to_json(r.lambda);
  j["mu"] = to_json(r.mu);
  j["nu"] = to_json(r.nu);
  j["value"] = r.value;
  j["sign"] = r.sign;
  j["routes"] = nlohmann::json::array();
  for (const Route& route : r.routes) j["routes"].push_back({{"method", route.method}, {"count", route.count}});
  if (r.ambient) {
    j["ambient"] = {{"n", r.ambient->n}, {"k", r.ambient->k}};
  } else {
    j["ambient"] = nullptr;
  }
  j["agree"] = r.agree();
  j["disagreeing"] = r.disagreeing;
  return j;
}

bool CrosscheckSummary::all_pass() const {
  return std::all_of(matrix.begin(), matrix.end(), [](const CrosscheckRow& r) { return r.pass(); });
}

std::string CrosscheckSummary::to_text() const {
  std::ostringstream out;
  out << "box " << rows << "x" << cols << ", " << triples << " triples\n";
  std::size_t width = 0;
  for (const CrosscheckRow& r : matrix) width = std::max(width, r.name.size());
  for (const CrosscheckRow& r : matrix) {
    out << (r.pass() ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.checked
        << " checked, " << r.failed << " failed\n";
    for (const std::string& e : r.examples) out << "      " << e << "\n";
  }
  out << (all_pass() ? "all pass" : "FAILURES") << "\n";
  return out.str();
}

CrosscheckSummary crosscheck(const CrosscheckOptions& opts) {
  const std::vector<Partition> parts = partitions_in_box(opts.rows, opts.cols);
  struct Triple {
    const Partition* l;
    const Partition* m;
    const Partition* n;
  };
  std::vector<Triple> triples;
  for (const Partition& l : parts) {
    for (const Partition& m : parts) {
      for (const Partition& n : parts) triples.push_back({&l, &m, &n});
    }
  }
  const auto has = [&](Family f) {
    return std::find(opts.families.begin(), opts.families.end(), f) != opts.families.end();
  };

  // One slot per triple and family; an error message replaces the report
  // when a method throws.
  struct Result {
    std::vector<std::optional<CoefficientReport>> reports;
    std::vector<std::string> errors;
    std::uint64_t lr = 0;
  };
  std::vector<Result> results(triples.size());
  OracleCache cache(opts.rows * opts.cols);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) {
      const Triple& t = triples[i];
      Result& res = results[i];
      for (Family f : opts.families) {
        try {
          res.reports.push_back(compute_with(f, *t.l, *t.m, *t.n, {}, std::nullopt, cache));
          res.errors.emplace_back();
        } catch (const Error& e) {
          res.reports.emplace_back();
          res.errors.emplace_back(e.what());
        }
      }
      if (t.n->size() == t.l->size() + t.m->size()) res.lr = count_tableaux(RuleId::LrSkew, *t.l, *t.m, *t.n);
    }
  };
  const unsigned threads = std::min<std::size_t>(thread_count(opts.threads), std::max<std::size_t>(1, triples.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  CrosscheckSummary s;
  s.rows = opts.rows;
  s.cols = opts.cols;
  s.triples = triples.size();
  std::map<std::string, std::size_t> row_of;
  auto row = [&](const std::string& name) -> CrosscheckRow& {
    auto [it, inserted] = row_of.emplace(name, s.matrix.size());
    if (inserted) s.matrix.push_back({name, 0, 0, {}});
    return s.matrix[it->second];
  };
  auto record = [&](CrosscheckRow& r, bool ok, const std::string& example) {
    ++r.checked;
    if (ok) return;
    ++r.failed;
    if (r.examples.size() < opts.max_examples) r.examples.push_back(example);
  };
  for (Family f : opts.families) {
    const auto& methods = family_methods(f);
    for (std::size_t m = 0; m + 1 < methods.size(); ++m) row(std::string(family_name(f)) + ": " + methods[m] + " = " + methods.back());
  }
  if (has(Family::D)) row("d symmetry");
  if (has(Family::D) && has(Family::DTilde)) row("dtilde transpose");
  if (has(Family::C) && has(Family::D)) row("top degree c = d = lr");
  if (has(Family::C)) row("c vanishing below degree");
  if (has(Family::D)) row("d vanishing above degree");

  std::map<std::tuple<Partition, Partition, Partition>, std::size_t> index;
  for (std::size_t i = 0; i < triples.size(); ++i) index[{*triples[i].l, *triples[i].m, *triples[i].n}] = i;
  auto family_slot = [&](Family f) {
    return static_cast<std::size_t>(std::find(opts.families.begin(), opts.families.end(), f) - opts.families.begin());
  };
  auto route_count = [](const CoefficientReport& r, std::string_view method) {
    for (const Route& route : r.routes) {
      if (route.method == method) return route.count;
    }
    return std::uint64_t{0};
  };

  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    const Result& res = results[i];
    const std::string where = triple_text(*t.l, *t.m, *t.n);
    for (std::size_t fi = 0; fi < opts.families.size(); ++fi) {
      const Family f = opts.families[fi];
      const auto& methods = family_methods(f);
      for (std::size_t m = 0; m + 1 < methods.size(); ++m) {
        CrosscheckRow& r = row(std::string(family_name(f)) + ": " + methods[m] + " = " + methods.back());
        if (!res.reports[fi]) {
          record(r, false, where + ": " + res.errors[fi]);
          continue;
        }
        const CoefficientReport& rep = *res.reports[fi];
        const std::uint64_t got = route_count(rep, methods[m]);
        record(r, got == rep.value,
               where + ": " + methods[m] + " " + std::to_string(got) + ", " + methods.back() + " " + std::to_string(rep.value));
      }
    }
    auto value = [&](Family f, std::size_t idx) -> std::optional<std::uint64_t> {
      const auto& rep = results[idx].reports[family_slot(f)];
      if (!rep) return std::nullopt;
      return rep->value;
    };
    if (has(Family::D)) {
      const auto swapped = index.at({*t.m, *t.l, *t.n});
      const auto a = value(Family::D, i);
      const auto b = value(Family::D, swapped);
      record(row("d symmetry"), a && b && *a == *b,
             where + ": " + (a ? std::to_string(*a) : "error") + " vs swapped " + (b ? std::to_string(*b) : "error"));
    }
    if (has(Family::D) && has(Family::DTilde)) {
      // Compare puzzle counts directly when the transposed triple is in range.
      auto it = index.find({transpose(*t.l), transpose(*t.m), transpose(*t.n)});
      const auto& rep = res.reports[family_slot(Family::DTilde)];
      if (it != index.end() && rep) {
        const auto& other = results[it->second].reports[family_slot(Family::D)];
        const std::uint64_t a = route_count(*rep, "hexR-puzzle");
        const std::uint64_t b = other ? route_count(*other, "hex-puzzle") : ~std::uint64_t{0};
        record(row("dtilde transpose"), a == b,
               where + ": hexR-puzzle " + std::to_string(a) + ", hex-puzzle on transposes " + std::to_string(b));
      }
    }
    const int top = t.l->size() + t.m->size();
    if (has(Family::C) && has(Family::D) && t.n->size() == top) {
      const auto c = value(Family::C, i);
      const auto d = value(Family::D, i);
      record(row("top degree c = d = lr"), c && d && *c == res.lr && *d == res.lr,
             where + ": c " + (c ? std::to_string(*c) : "error") + ", d " + (d ? std::to_string(*d) : "error") +
                 ", lr " + std::to_string(res.lr));
    }
    auto all_zero = [&](Family f) {
      const auto& rep = res.reports[family_slot(f)];
      if (!rep) return false;
      return std::all_of(rep->routes.begin(), rep->routes.end(), [](const Route& r) { return r.count == 0; });
    };
    if (has(Family::C) && t.n->size() < top) record(row("c vanishing below degree"), all_zero(Family::C), where + ": c nonzero");
    if (has(Family::D) && t.n->size() > top) record(row("d vanishing above degree"), all_zero(Family::D), where + ": d nonzero");
  }
  return s;
}

nlohmann::json to_json(const CrosscheckSummary& s) {
  nlohmann::json j;
  j["box"] = {{"rows", s.rows}, {"cols", s.cols}};
  j["triples"] = s.triples;
  j["all_pass"] = s.all_pass();
  j["matrix"] = nlohmann::json::array();
  for (const CrosscheckRow& r : s.matrix) {
    j["matrix"].push_back(
        {{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"pass", r.pass()}, {"examples", r.examples}});
  }
  return j;
}

}  // namespace lrk
