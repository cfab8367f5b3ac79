#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lrk/error.hpp"
#include "lrk/json.hpp"
#include "lrk/puzzles.hpp"
#include "lrk/report.hpp"
#include "lrk/tableaux.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kDisagreement = 2;

struct TripleArgs {
  std::string lambda, mu, nu;
  int n = -1;
  int k = -1;
};

void add_triple(CLI::App* cmd, TripleArgs& t) {
  cmd->add_option("--lambda", t.lambda, "partition, e.g. 2,1 (empty for the empty partition)")->required();
  cmd->add_option("--mu", t.mu, "partition")->required();
  cmd->add_option("--nu", t.nu, "partition")->required();
  cmd->add_option("-n", t.n, "ambient side length (puzzles)");
  cmd->add_option("-k", t.k, "ambient number of rows (puzzles)");
}

std::optional<lrk::AmbientRectangle> ambient_of(const TripleArgs& t) {
  if (t.n < 0 && t.k < 0) return std::nullopt;
  if (t.n < 0 || t.k < 0) throw lrk::MalformedInputError("give both -n and -k or neither");
  return lrk::AmbientRectangle(t.n, t.k);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw lrk::MalformedInputError("cannot write " + out_path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson coefficients in K-theory: tableaux, puzzles and cross-checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  TripleArgs compute_args;
  std::string family = "c";
  std::string methods;
  auto* compute = app.add_subcommand("compute", "compute one coefficient by every applicable method");
  compute->add_option("--family", family, "c, cbar, d or dtilde")->required();
  compute->add_option("--methods", methods, "comma-separated method ids (default: all)");
  add_triple(compute, compute_args);

  TripleArgs enum_args;
  std::string object = "tableau";
  std::string rule;
  std::string mode;
  std::string format = "json";
  bool genomic = false;
  auto* enumerate = app.add_subcommand("enumerate", "list every tableau or puzzle for a triple");
  enumerate->add_option("--object", object, "tableau or puzzle")->check(CLI::IsMember({"tableau", "puzzle"}));
  enumerate->add_option("--rule", rule, "tableau rule, e.g. k-skew");
  enumerate->add_option("--mode", mode, "puzzle mode: classical, K, tri, hex, hexR, hex-extended");
  enumerate->add_option("--format", format, "json, ascii, svg or tikz")
      ->check(CLI::IsMember({"json", "ascii", "svg", "tikz"}));
  enumerate->add_flag("--genomic", genomic, "show k-skew circle tableaux as genomic tableaux");
  add_triple(enumerate, enum_args);

  std::string box = "2x2";
  std::string families = "c,cbar,d,dtilde";
  unsigned threads = 0;
  std::string cc_format = "ascii";
  auto* cross = app.add_subcommand("crosscheck", "compare all methods on every triple inside a box");
  cross->add_option("--box", box, "RxC box bounding lambda, mu and nu");
  cross->add_option("--families", families, "comma-separated families");
  cross->add_option("--threads", threads, "worker threads (default: LRK_THREADS or all cores)");
  cross->add_option("--format", cc_format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*compute) {
      const auto& a = compute_args;
      const lrk::CoefficientReport r =
          lrk::compute(lrk::parse_family(family), lrk::Partition::parse(a.lambda), lrk::Partition::parse(a.mu),
                       lrk::Partition::parse(a.nu), split(methods), ambient_of(a));
      emit(lrk::to_json(r).dump(2) + "\n", out_path);
      return r.agree() ? 0 : kDisagreement;
    }

    if (*enumerate) {
      const auto& a = enum_args;
      const lrk::Partition l = lrk::Partition::parse(a.lambda);
      const lrk::Partition m = lrk::Partition::parse(a.mu);
      const lrk::Partition n = lrk::Partition::parse(a.nu);
      std::string text;
      std::size_t count = 0;
      if (object == "tableau") {
        if (rule.empty()) throw lrk::MalformedInputError("--rule is required for tableaux");
        if (format != "json" && format != "ascii") throw lrk::MalformedInputError("tableaux render as json or ascii");
        const lrk::RuleId id = lrk::parse_rule(rule);
        if (genomic && id != lrk::RuleId::KSkew) throw lrk::MalformedInputError("--genomic applies to k-skew");
        for (lrk::Tableau t : lrk::enumerate_tableaux(id, l, m, n)) {
          if (genomic) t = lrk::circle_to_genomic(t);
          text += format == "json" ? lrk::to_json(t).dump() + "\n" : t.to_string() + "\n\n";
          ++count;
        }
      } else {
        if (mode.empty()) throw lrk::MalformedInputError("--mode is required for puzzles");
        const lrk::Mode md = lrk::parse_mode(mode);
        const lrk::AmbientRectangle amb = ambient_of(a).value_or(lrk::minimal_ambient(md, l, m, n));
        const lrk::Boundary b = lrk::build_boundary(l, m, n, amb, md);
        const lrk::RenderFormat rf = lrk::parse_render_format(format);
        for (const lrk::Puzzle& p : lrk::enumerate_tilings(b, lrk::catalog(md))) {
          const std::string r = lrk::render(p, rf);
          text += rf == lrk::RenderFormat::Json ? nlohmann::json::parse(r).dump() + "\n" : r + "\n";
          ++count;
        }
      }
      text += format == "json" ? "{\"count\":" + std::to_string(count) + "}\n" : "count " + std::to_string(count) + "\n";
      emit(text, out_path);
      return 0;
    }

    lrk::CrosscheckOptions opts;
    const auto x = box.find('x');
    if (x == std::string::npos) throw lrk::MalformedInputError("--box expects RxC, e.g. 3x3");
    try {
      opts.rows = std::stoi(box.substr(0, x));
      opts.cols = std::stoi(box.substr(x + 1));
    } catch (const std::exception&) {
      throw lrk::MalformedInputError("--box expects RxC, e.g. 3x3");
    }
    if (opts.rows < 0 || opts.cols < 0) throw lrk::MalformedInputError("--box dimensions must be nonnegative");
    opts.families.clear();
    for (const std::string& f : split(families)) opts.families.push_back(lrk::parse_family(f));
    opts.threads = threads;
    const lrk::CrosscheckSummary s = lrk::crosscheck(opts);
    emit(cc_format == "json" ? lrk::to_json(s).dump(2) + "\n" : s.to_text(), out_path);
    return s.all_pass() ? 0 : kDisagreement;
  } catch (const lrk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
