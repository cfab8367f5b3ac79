#include "lrk/tableaux.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <limits>

#include "lrk/error.hpp"

namespace lrk {

Entry Entry::set(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.empty()) throw MalformedInputError("set-valued entry must be non-empty");
  return {EntryKind::Set, std::move(vs), 0};
}

std::string Entry::to_string() const {
  switch (kind) {
    case EntryKind::Number:
      return std::to_string(value());
    case EntryKind::Circled:
      return "(" + std::to_string(value()) + ")";
    case EntryKind::Genomic:
      return std::to_string(value()) + "_" + std::to_string(gene);
    case EntryKind::Set: {
      std::string out = "{";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
      }
      return out + "}";
    }
  }
  return {};
}

std::string_view to_string(TableauKind kind) {
  switch (kind) {
    case TableauKind::Plain:
      return "plain";
    case TableauKind::SetValued:
      return "set-valued";
    case TableauKind::CircleRight:
      return "circle-right";
    case TableauKind::CircleLeft:
      return "circle-left";
    case TableauKind::Genomic:
      return "genomic";
  }
  return "?";
}

Tableau::Tableau(SkewShape shape, TableauKind kind, std::vector<Entry> entries)
    : shape_kind_(ShapeKind::Skew), kind_(kind), skew_(std::move(shape)), cells_(skew_.cells()),
      entries_(std::move(entries)) {
  if (entries_.size() != cells_.size()) throw MalformedInputError("tableau needs exactly one entry per box");
}

Tableau::Tableau(OplusShape shape, TableauKind kind, std::vector<Entry> entries)
    : shape_kind_(ShapeKind::Oplus), kind_(kind), skew_(shape.as_skew()), oplus_(std::move(shape)),
      cells_(skew_.cells()), entries_(std::move(entries)) {
  if (entries_.size() != cells_.size()) throw MalformedInputError("tableau needs exactly one entry per box");
}

const Entry* Tableau::find(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return nullptr;
  return &entries_[static_cast<std::size_t>(it - cells_.begin())];
}

const Entry& Tableau::at(Cell c) const {
  const Entry* e = find(c);
  if (!e) throw ShapeError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") not in tableau");
  return *e;
}

int Tableau::first_circle_row() const {
  return shape_kind_ == ShapeKind::Oplus ? oplus_.bottom_first_row() : 1;
}

Tableau Tableau::with_entries(TableauKind kind, std::vector<Entry> entries) const {
  Tableau out = *this;
  out.kind_ = kind;
  if (entries.size() != cells_.size()) throw MalformedInputError("tableau needs exactly one entry per box");
  out.entries_ = std::move(entries);
  return out;
}

std::string Tableau::to_string() const {
  std::string out;
  std::size_t i = 0;
  for (int r = 1; r <= number_of_rows(); ++r) {
    const int start = skew_.inner.row(r);
    for (int c = 1; c <= start; ++c) out += shape_kind_ == ShapeKind::Skew ? "# " : ". ";
    while (i < cells_.size() && cells_[i].row == r) {
      out += entries_[i].to_string();
      out += ' ';
      ++i;
    }
    out += '\n';
  }
  return out;
}

bool Tableau::operator==(const Tableau& other) const {
  return shape_kind_ == other.shape_kind_ && kind_ == other.kind_ && skew_ == other.skew_ &&
         oplus_ == other.oplus_ && entries_ == other.entries_;
}

bool Tableau::operator<(const Tableau& other) const {
  if (skew_.outer != other.skew_.outer) return skew_.outer < other.skew_.outer;
  if (skew_.inner != other.skew_.inner) return skew_.inner < other.skew_.inner;
  if (oplus_.bottom != other.oplus_.bottom) return oplus_.bottom < other.oplus_.bottom;
  return entries_ < other.entries_;
}

Word row_word(const Tableau& t) {
  Word w;
  const auto& cells = t.cells();
  const auto& entries = t.entries();
  std::size_t row_begin = 0;
  while (row_begin < cells.size()) {
    std::size_t row_end = row_begin;
    while (row_end < cells.size() && cells[row_end].row == cells[row_begin].row) ++row_end;
    for (std::size_t i = row_end; i-- > row_begin;) {
      const Entry& e = entries[i];
      for (auto v = e.values.rbegin(); v != e.values.rend(); ++v) {
        w.push_back({*v, e.is_circled(), e.gene});
      }
    }
    row_begin = row_end;
  }
  return w;
}

Word plain_word(const std::vector<int>& values) {
  Word w;
  for (int v : values) w.push_back({v, false, 0});
  return w;
}

std::vector<int> content(const Word& w, bool omit_circled) {
  std::vector<int> m;
  for (const Symbol& s : w) {
    if (omit_circled && s.circled) continue;
    if (static_cast<int>(m.size()) < s.value) m.resize(static_cast<std::size_t>(s.value), 0);
    ++m[static_cast<std::size_t>(s.value - 1)];
  }
  return m;
}

std::vector<int> content(const Tableau& t) {
  const bool circles = t.kind() == TableauKind::CircleRight || t.kind() == TableauKind::CircleLeft;
  return content(row_word(t), circles);
}

bool is_ballot(const std::vector<int>& w) {
  std::vector<int> m;
  for (int v : w) {
    if (v < 1) return false;
    if (static_cast<int>(m.size()) < v + 1) m.resize(static_cast<std::size_t>(v + 1), 0);
    ++m[static_cast<std::size_t>(v)];
    if (v > 1 && m[static_cast<std::size_t>(v)] > m[static_cast<std::size_t>(v - 1)]) return false;
  }
  return true;
}

std::vector<int> restrict(const std::vector<int>& w, int a, int b) {
  std::vector<int> out;
  for (int v : w) {
    if (v >= a && v <= b) out.push_back(v - (a - 1));
  }
  return out;
}

std::vector<int> erasure(const Word& prefix, ErasureMode mode) {
  std::vector<int> out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const Symbol& s = prefix[i];
    if (!s.circled) {
      out.push_back(s.value);
    } else if (i + 1 == prefix.size()) {
      out.push_back(mode == ErasureMode::Incremented ? s.value + 1 : s.value);
    }
  }
  return out;
}

bool is_semistandard(const Tableau& t) {
  const auto& cells = t.cells();
  const auto& entries = t.entries();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells[i];
    if (const Entry* right = t.find({c.row, c.col + 1}); right && entries[i].max() > right->min()) return false;
    if (const Entry* below = t.find({c.row + 1, c.col}); below && entries[i].max() >= below->min()) return false;
  }
  return true;
}

bool circle_position_valid(const Tableau& t) {
  const bool right_kind = t.kind() == TableauKind::CircleRight;
  if (!right_kind && t.kind() != TableauKind::CircleLeft) return true;
  const auto& cells = t.cells();
  const auto& entries = t.entries();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!entries[i].is_circled()) continue;
    const Cell c = cells[i];
    if (c.row < t.first_circle_row()) return false;
    const int v = entries[i].value();
    // Within a weakly increasing row, equal values are contiguous.
    const Entry* next = t.find({c.row, right_kind ? c.col + 1 : c.col - 1});
    if (next && next->value() == v) return false;
  }
  return true;
}

bool is_ballot_circle(const Tableau& t) {
  const Word w = row_word(t);
  if (t.kind() != TableauKind::CircleRight && t.kind() != TableauKind::CircleLeft) {
    std::vector<int> plain;
    for (const Symbol& s : w) plain.push_back(s.value);
    return is_ballot(plain);
  }
  const ErasureMode mode = t.kind() == TableauKind::CircleRight ? ErasureMode::Incremented : ErasureMode::Unincremented;
  for (std::size_t len = 1; len <= w.size(); ++len) {
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
    if (!is_ballot(erasure(prefix, mode))) return false;
  }
  return true;
}

bool is_limited(const Tableau& t) {
  if (t.shape_kind() != ShapeKind::Oplus) throw RuleError("limited condition applies to oplus shapes only");
  const int first = t.first_circle_row();
  const auto& cells = t.cells();
  const auto& entries = t.entries();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (entries[i].is_circled() && cells[i].row >= first && entries[i].value() == cells[i].row - first + 1) {
      return false;
    }
  }
  return true;
}

namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 11> kRuleNames{{
    {RuleId::LrSkew, "lr-skew"},
    {RuleId::LrOplus, "lr-oplus"},
    {RuleId::KOplus, "k-oplus"},
    {RuleId::KSkew, "k-skew"},
    {RuleId::TriOplus, "tri-oplus"},
    {RuleId::TriSkew, "tri-skew"},
    {RuleId::HexOplus, "hex-oplus"},
    {RuleId::HexSkew, "hex-skew"},
    {RuleId::HexROplus, "hexR-oplus"},
    {RuleId::HexRSkew, "hexR-skew"},
    {RuleId::BuchCoproduct, "buch-coproduct"},
}};

bool is_oplus_rule(RuleId rule) {
  switch (rule) {
    case RuleId::LrOplus:
    case RuleId::KOplus:
    case RuleId::TriOplus:
    case RuleId::HexOplus:
    case RuleId::HexROplus:
      return true;
    default:
      return false;
  }
}

bool is_circle_kind(TableauKind k) { return k == TableauKind::CircleRight || k == TableauKind::CircleLeft; }

// Board cell in reading order with the neighbours the semistandard check needs.
struct SearchCell {
  Cell cell;
  int right = -1;       // index of the box to the right, already filled
  int up = -1;          // index of the box above, already filled
  int left = -1;        // index of the box to the left, filled later
  bool circle_ok = false;
  int lower_row = 0;    // row within the lower (mu) half; 0 outside it
};

struct SearchSpec {
  TableauKind kind = TableauKind::Plain;
  std::vector<SearchCell> cells;
  int alphabet = 0;
  std::vector<int> target;       // target[v] for v in 1..alphabet
  std::vector<int> block_start;  // first value of the ballot block holding v
  bool limited = false;
};

struct Choice {
  int lo = 0;  // min value (circle ignored)
  int hi = 0;  // max value
  std::uint32_t mask = 0;
  bool circled = false;
};

class Search {
 public:
  using Visit = std::function<void(const std::vector<Choice>&)>;

  Search(const SearchSpec& spec, Visit visit)
      : spec_(spec), visit_(std::move(visit)), choice_(spec.cells.size()),
        count_(static_cast<std::size_t>(spec.alphabet) + 2, 0) {
    for (int v = 1; v <= spec.alphabet; ++v) remaining_ += spec.target[static_cast<std::size_t>(v)];
  }

  void run() { dfs(0); }

 private:
  int cnt(int v) const { return v >= 1 && v <= spec_.alphabet ? count_[static_cast<std::size_t>(v)] : 0; }

  bool push(int v) {
    const auto idx = static_cast<std::size_t>(v);
    if (count_[idx] + 1 > spec_.target[idx]) return false;
    if (v != spec_.block_start[idx] && count_[idx] + 1 > count_[idx - 1]) return false;
    ++count_[idx];
    --remaining_;
    return true;
  }
  void pop(int v) {
    --count_[static_cast<std::size_t>(v)];
    ++remaining_;
  }

  bool circled_ballot(int v) const {
    if (spec_.kind == TableauKind::CircleRight) return cnt(v + 1) + 1 <= cnt(v);
    return v == 1 || cnt(v) + 1 <= cnt(v - 1);
  }

  void dfs(std::size_t idx) {
    const std::size_t left_cells = spec_.cells.size() - idx;
    if (spec_.kind == TableauKind::Plain || spec_.kind == TableauKind::SetValued) {
      if (remaining_ < static_cast<int>(left_cells)) return;
    } else if (remaining_ > static_cast<int>(left_cells)) {
      return;
    }
    if (idx == spec_.cells.size()) {
      if (remaining_ == 0) visit_(choice_);
      return;
    }
    const SearchCell& sc = spec_.cells[idx];
    const int lo = sc.up >= 0 ? choice_[static_cast<std::size_t>(sc.up)].hi + 1 : 1;
    const int hi = sc.right >= 0 ? choice_[static_cast<std::size_t>(sc.right)].lo : spec_.alphabet;
    if (lo > hi) return;
    Choice& ch = choice_[idx];

    if (spec_.kind == TableauKind::SetValued) {
      const int span = hi - lo + 1;
      for (std::uint32_t m = 1; m < (1u << span); ++m) {
        const std::uint32_t mask = m << lo;
        int pushed[32];
        int npushed = 0;
        bool ok = true;
        for (int v = hi; v >= lo; --v) {
          if (!(mask & (1u << v))) continue;
          if (!push(v)) {
            ok = false;
            break;
          }
          pushed[npushed++] = v;
        }
        if (ok) {
          ch = {lo + std::countr_zero(m), 31 - std::countl_zero(mask), mask, false};
          dfs(idx + 1);
        }
        while (npushed > 0) pop(pushed[--npushed]);
      }
      return;
    }

    for (int v = lo; v <= hi; ++v) {
      const Choice* right = sc.right >= 0 ? &choice_[static_cast<std::size_t>(sc.right)] : nullptr;
      // A left circle to our right must stay the leftmost of its value.
      if (spec_.kind == TableauKind::CircleLeft && right && right->circled && right->lo == v) continue;
      if (push(v)) {
        ch = {v, v, 0, false};
        dfs(idx + 1);
        pop(v);
      }
      if (is_circle_kind(spec_.kind) && sc.circle_ok) {
        if (spec_.kind == TableauKind::CircleRight && right && right->lo == v) continue;
        if (spec_.limited && sc.lower_row == v) continue;
        if (!circled_ballot(v)) continue;
        ch = {v, v, 0, true};
        dfs(idx + 1);
      }
    }
  }

  const SearchSpec& spec_;
  Visit visit_;
  std::vector<Choice> choice_;
  std::vector<int> count_;
  int remaining_ = 0;
};

// Reading-order board for a diagram given as a skew shape.
std::vector<SearchCell> reading_cells(const SkewShape& shape, int first_circle_row) {
  std::vector<SearchCell> out;
  std::vector<std::vector<int>> index(static_cast<std::size_t>(shape.outer.length() + 2));
  for (int r = 1; r <= shape.outer.length(); ++r) {
    index[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.outer.row(r) + 2), -1);
  }
  for (int r = 1; r <= shape.outer.length(); ++r) {
    for (int c = shape.outer.row(r); c > shape.inner.row(r); --c) {
      SearchCell sc;
      sc.cell = {r, c};
      index[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(out.size());
      if (c < shape.outer.row(r)) sc.right = static_cast<int>(out.size()) - 1;
      if (r > 1 && c <= shape.outer.row(r - 1)) sc.up = index[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
      sc.circle_ok = r >= first_circle_row;
      sc.lower_row = r >= first_circle_row ? r - first_circle_row + 1 : 0;
      out.push_back(sc);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].right >= 0) out[static_cast<std::size_t>(out[i].right)].left = static_cast<int>(i);
  }
  return out;
}

struct Instance {
  SkewShape skew;
  std::optional<OplusShape> oplus;
  SearchSpec spec;
};

SearchSpec make_spec(TableauKind kind, std::vector<SearchCell> cells, const std::vector<int>& content_parts,
                     int alphabet, std::vector<int> block_bounds) {
  SearchSpec spec;
  spec.kind = kind;
  spec.cells = std::move(cells);
  spec.alphabet = alphabet;
  spec.target.assign(static_cast<std::size_t>(alphabet) + 2, 0);
  for (std::size_t i = 0; i < content_parts.size() && static_cast<int>(i) < alphabet; ++i) {
    spec.target[i + 1] = content_parts[i];
  }
  // Content that does not fit the alphabet can never be met.
  if (static_cast<int>(content_parts.size()) > alphabet) {
    for (std::size_t i = static_cast<std::size_t>(alphabet); i < content_parts.size(); ++i) {
      if (content_parts[i] > 0) spec.target[0] = -1;
    }
  }
  spec.block_start.assign(static_cast<std::size_t>(alphabet) + 2, 1);
  int start = 1;
  for (int v = 1; v <= alphabet + 1; ++v) {
    if (std::find(block_bounds.begin(), block_bounds.end(), v) != block_bounds.end()) start = v;
    spec.block_start[static_cast<std::size_t>(v)] = start;
  }
  return spec;
}

std::vector<Instance> instances(RuleId rule, const Partition& lambda, const Partition& mu, const Partition& nu,
                                const EnumerateOptions& opts) {
  const TableauKind kind = rule_tableau_kind(rule);
  const bool circles = is_circle_kind(kind);
  std::vector<Instance> out;

  auto add_skew = [&](const Partition& outer, const Partition& inner, const Partition& content_p) {
    if (!outer.contains(inner)) return;
    Instance inst;
    inst.skew = SkewShape(outer, inner);
    const int alphabet = opts.alphabet > 0 ? opts.alphabet : content_p.length() + (circles ? 1 : 0);
    inst.spec = make_spec(kind, reading_cells(inst.skew, 1), content_p.parts(), alphabet, {1});
    out.push_back(std::move(inst));
  };
  auto add_oplus = [&](const Partition& top, const Partition& bottom, const Partition& content_p) {
    Instance inst;
    inst.oplus = OplusShape{top, bottom};
    inst.skew = inst.oplus->as_skew();
    const int alphabet = opts.alphabet > 0 ? opts.alphabet : content_p.length() + (circles ? 1 : 0);
    inst.spec = make_spec(kind, reading_cells(inst.skew, inst.oplus->bottom_first_row()), content_p.parts(),
                          alphabet, {1});
    inst.spec.limited = rule == RuleId::HexROplus;
    out.push_back(std::move(inst));
  };

  switch (rule) {
    case RuleId::LrSkew:
    case RuleId::KSkew:
    case RuleId::TriSkew:
    case RuleId::HexRSkew:
      add_skew(nu, lambda, mu);
      break;
    case RuleId::HexSkew:
      // Removed corners of lambda become boxes of the tableau, so they must lie in nu.
      if (!nu.contains(lambda)) break;
      for (const Partition& smaller : shape_variants_minus(lambda)) add_skew(nu, smaller, mu);
      break;
    case RuleId::LrOplus:
    case RuleId::KOplus:
    case RuleId::HexOplus:
    case RuleId::HexROplus:
      add_oplus(lambda, mu, nu);
      break;
    case RuleId::TriOplus:
      for (const Partition& bigger : shape_variants_plus(mu)) add_oplus(lambda, bigger, nu);
      break;
    case RuleId::BuchCoproduct: {
      const int k = std::max({lambda.length(), mu.length(), nu.length(), opts.alphabet});
      std::vector<int> combined(static_cast<std::size_t>(2 * k), 0);
      for (int i = 1; i <= k; ++i) {
        combined[static_cast<std::size_t>(i - 1)] = lambda.row(i);
        combined[static_cast<std::size_t>(k + i - 1)] = mu.row(i);
      }
      Instance inst;
      inst.skew = SkewShape(nu, Partition());
      inst.spec = make_spec(kind, reading_cells(inst.skew, 1), combined, 2 * k, {1, k + 1});
      out.push_back(std::move(inst));
      break;
    }
  }
  // The classical rules are stated for |nu| = |lambda| + |mu|.
  if ((rule == RuleId::LrSkew || rule == RuleId::LrOplus) && nu.size() != lambda.size() + mu.size()) out.clear();
  std::erase_if(out, [](const Instance& i) { return !i.spec.target.empty() && i.spec.target[0] < 0; });
  return out;
}

Entry to_entry(TableauKind kind, const Choice& ch) {
  if (kind == TableauKind::SetValued) {
    std::vector<int> vs;
    for (int v = ch.lo; v <= ch.hi; ++v) {
      if (ch.mask & (1u << v)) vs.push_back(v);
    }
    return {EntryKind::Set, std::move(vs), 0};
  }
  return ch.circled ? Entry::circled(ch.lo) : Entry::number(ch.lo);
}

}  // namespace

std::string_view rule_name(RuleId rule) {
  for (const auto& [id, name] : kRuleNames) {
    if (id == rule) return name;
  }
  return "?";
}

RuleId parse_rule(std::string_view name) {
  for (const auto& [id, n] : kRuleNames) {
    if (n == name) return id;
  }
  throw RuleError("unknown rule \"" + std::string(name) + "\"");
}

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> rules = [] {
    std::vector<RuleId> r;
    for (const auto& [id, name] : kRuleNames) r.push_back(id);
    return r;
  }();
  return rules;
}

TableauKind rule_tableau_kind(RuleId rule) {
  switch (rule) {
    case RuleId::LrSkew:
    case RuleId::LrOplus:
      return TableauKind::Plain;
    case RuleId::KSkew:
    case RuleId::HexOplus:
      return TableauKind::CircleRight;
    case RuleId::TriSkew:
    case RuleId::HexROplus:
      return TableauKind::CircleLeft;
    default:
      return TableauKind::SetValued;
  }
}

std::vector<Tableau> enumerate_tableaux(RuleId rule, const Partition& lambda, const Partition& mu,
                                        const Partition& nu, EnumerateOptions opts) {
  std::vector<Tableau> out;
  const TableauKind kind = rule_tableau_kind(rule);
  for (const Instance& inst : instances(rule, lambda, mu, nu, opts)) {
    // Map reading order back to row-major order.
    const std::vector<Cell> cells = inst.skew.cells();
    std::vector<std::size_t> slot(inst.spec.cells.size());
    for (std::size_t i = 0; i < inst.spec.cells.size(); ++i) {
      slot[i] = static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), inst.spec.cells[i].cell) -
                                         cells.begin());
    }
    Search search(inst.spec, [&](const std::vector<Choice>& choice) {
      std::vector<Entry> entries(choice.size());
      for (std::size_t i = 0; i < choice.size(); ++i) entries[slot[i]] = to_entry(kind, choice[i]);
      if (inst.oplus) {
        out.emplace_back(*inst.oplus, kind, std::move(entries));
      } else {
        out.emplace_back(inst.skew, kind, std::move(entries));
      }
    });
    search.run();
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_tableaux(RuleId rule, const Partition& lambda, const Partition& mu, const Partition& nu,
                             EnumerateOptions opts) {
  std::uint64_t total = 0;
  for (const Instance& inst : instances(rule, lambda, mu, nu, opts)) {
    Search search(inst.spec, [&](const std::vector<Choice>&) {
      if (total == std::numeric_limits<std::uint64_t>::max()) throw OverflowError("tableau count overflow");
      ++total;
    });
    search.run();
  }
  return total;
}

bool satisfies_rule(RuleId rule, const Tableau& t, const Partition& lambda, const Partition& mu,
                    const Partition& nu) {
  if (t.kind() != rule_tableau_kind(rule)) return false;
  const bool oplus = is_oplus_rule(rule);
  if (oplus != (t.shape_kind() == ShapeKind::Oplus)) return false;

  // Shape.
  switch (rule) {
    case RuleId::HexSkew: {
      const auto variants = shape_variants_minus(lambda);
      if (t.skew().outer != nu || !nu.contains(lambda) ||
          std::find(variants.begin(), variants.end(), t.skew().inner) == variants.end()) {
        return false;
      }
      break;
    }
    case RuleId::TriOplus: {
      const auto variants = shape_variants_plus(mu);
      if (t.oplus().top != lambda ||
          std::find(variants.begin(), variants.end(), t.oplus().bottom) == variants.end()) {
        return false;
      }
      break;
    }
    case RuleId::BuchCoproduct:
      if (t.skew().outer != nu || !t.skew().inner.empty()) return false;
      break;
    default:
      if (oplus) {
        if (t.oplus().top != lambda || t.oplus().bottom != mu) return false;
      } else if (t.skew().outer != nu || t.skew().inner != lambda) {
        return false;
      }
  }
  for (const Entry& e : t.entries()) {
    const bool ok = t.kind() == TableauKind::SetValued ? e.kind == EntryKind::Set
                    : is_circle_kind(t.kind())        ? (e.kind == EntryKind::Number || e.kind == EntryKind::Circled)
                                                      : e.kind == EntryKind::Number;
    if (!ok) return false;
  }
  if (!is_semistandard(t)) return false;

  if (rule == RuleId::BuchCoproduct) {
    const int k = std::max({lambda.length(), mu.length(), nu.length()});
    std::vector<int> expected(static_cast<std::size_t>(2 * k), 0);
    for (int i = 1; i <= k; ++i) {
      expected[static_cast<std::size_t>(i - 1)] = lambda.row(i);
      expected[static_cast<std::size_t>(k + i - 1)] = mu.row(i);
    }
    std::vector<int> got = content(t);
    got.resize(expected.size() > got.size() ? expected.size() : got.size(), 0);
    expected.resize(got.size(), 0);
    if (got != expected) return false;
    std::vector<int> w;
    for (const Symbol& s : row_word(t)) w.push_back(s.value);
    return is_ballot(restrict(w, 1, k)) && is_ballot(restrict(w, k + 1, 2 * k));
  }

  const Partition& target = oplus ? nu : mu;
  std::vector<int> got = content(t);
  while (!got.empty() && got.back() == 0) got.pop_back();
  if (got != target.parts()) return false;
  if (rule == RuleId::LrSkew || rule == RuleId::LrOplus) {
    if (nu.size() != lambda.size() + mu.size()) return false;
  }
  if (is_circle_kind(t.kind())) {
    if (!circle_position_valid(t)) return false;
    if (rule == RuleId::HexROplus && !is_limited(t)) return false;
  }
  return is_ballot_circle(t);
}

}  // namespace lrk
