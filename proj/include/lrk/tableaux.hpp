#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrk/shapes.hpp"

namespace lrk {

enum class EntryKind { Number, Set, Circled, Genomic };

/// Content of one box.
struct Entry {
  EntryKind kind = EntryKind::Number;
  std::vector<int> values;  // ascending; a single value unless kind == Set
  int gene = 0;             // Genomic only

  static Entry number(int v) { return {EntryKind::Number, {v}, 0}; }
  static Entry set(std::vector<int> vs);
  static Entry circled(int v) { return {EntryKind::Circled, {v}, 0}; }
  static Entry genomic(int v, int gene) { return {EntryKind::Genomic, {v}, gene}; }

  int value() const { return values.front(); }
  int min() const { return values.front(); }
  int max() const { return values.back(); }
  bool is_circled() const { return kind == EntryKind::Circled; }

  std::string to_string() const;

  auto operator<=>(const Entry&) const = default;
};

enum class TableauKind { Plain, SetValued, CircleRight, CircleLeft, Genomic };
enum class ShapeKind { Skew, Oplus };

std::string_view to_string(TableauKind kind);

/// A filling of a skew or oplus diagram; one Entry per box.
class Tableau {
 public:
  Tableau() = default;
  /// `entries` lists the boxes of `shape` in row-major order.
  Tableau(SkewShape shape, TableauKind kind, std::vector<Entry> entries);
  Tableau(OplusShape shape, TableauKind kind, std::vector<Entry> entries);

  ShapeKind shape_kind() const { return shape_kind_; }
  TableauKind kind() const { return kind_; }
  const SkewShape& skew() const { return skew_; }
  /// Only meaningful when shape_kind() == Oplus.
  const OplusShape& oplus() const { return oplus_; }

  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return cells_.size(); }
  const Entry* find(Cell c) const;
  const Entry& at(Cell c) const;

  /// Rows carrying boxes, 1..number_of_rows().
  int number_of_rows() const { return skew_.outer.length(); }
  /// Row 1 of the lower (mu) diagram for oplus shapes; 1 for skew shapes.
  int first_circle_row() const;

  /// Same boxes, new kind and entries.
  Tableau with_entries(TableauKind kind, std::vector<Entry> entries) const;

  std::string to_string() const;

  bool operator==(const Tableau& other) const;
  bool operator<(const Tableau& other) const;

 private:
  ShapeKind shape_kind_ = ShapeKind::Skew;
  TableauKind kind_ = TableauKind::Plain;
  SkewShape skew_;
  OplusShape oplus_;
  std::vector<Cell> cells_;
  std::vector<Entry> entries_;
};

/// One letter of a reading word.
struct Symbol {
  int value = 0;
  bool circled = false;
  int gene = 0;

  auto operator<=>(const Symbol&) const = default;
};

using Word = std::vector<Symbol>;

/// Rows top to bottom, each row right to left; sets expanded largest first.
Word row_word(const Tableau& t);
/// Wraps a plain integer sequence as an uncircled word.
Word plain_word(const std::vector<int>& values);

/// Multiplicities (m_1, ..., m_k); circled symbols skipped when `omit_circled`.
std::vector<int> content(const Word& w, bool omit_circled);
/// Content of the tableau's word; circled entries are omitted for circle kinds.
std::vector<int> content(const Tableau& t);

bool is_ballot(const std::vector<int>& w);
/// Keeps entries in [a,b] and shifts them down by a-1.
std::vector<int> restrict(const std::vector<int>& w, int a, int b);

enum class ErasureMode { Incremented, Unincremented };
std::vector<int> erasure(const Word& prefix, ErasureMode mode);

/// Rows weakly increase and columns strictly increase; sets compare by
/// max/min and circles are ignored.
bool is_semistandard(const Tableau& t);
/// Circled values are rightmost (CircleRight) or leftmost (CircleLeft) among
/// equal values of their row and lie in the rows allowed to carry circles.
bool circle_position_valid(const Tableau& t);
/// Every erasure of every prefix of the word is ballot.
bool is_ballot_circle(const Tableau& t);
/// No circled i in row i of the lower half; throws RuleError for skew shapes.
bool is_limited(const Tableau& t);

enum class RuleId {
  LrSkew,
  LrOplus,
  KOplus,
  KSkew,
  TriOplus,
  TriSkew,
  HexOplus,
  HexSkew,
  HexROplus,
  HexRSkew,
  BuchCoproduct,
};

std::string_view rule_name(RuleId rule);
/// Throws RuleError on unknown names.
RuleId parse_rule(std::string_view name);
const std::vector<RuleId>& all_rules();
TableauKind rule_tableau_kind(RuleId rule);

struct EnumerateOptions {
  /// Largest value an entry may take; 0 selects the smallest sufficient bound.
  int alphabet = 0;
};

/// Every tableau counted by `rule` for the triple, sorted and duplicate free.
std::vector<Tableau> enumerate_tableaux(RuleId rule, const Partition& lambda, const Partition& mu,
                                        const Partition& nu, EnumerateOptions opts = {});
/// Same count as enumerate_tableaux(...).size() without materializing.
std::uint64_t count_tableaux(RuleId rule, const Partition& lambda, const Partition& mu, const Partition& nu,
                             EnumerateOptions opts = {});

/// Checks every condition of `rule` directly on `t` (independent of the
/// enumerator); used to validate bijection images.
bool satisfies_rule(RuleId rule, const Tableau& t, const Partition& lambda, const Partition& mu,
                    const Partition& nu);

/// Right circle tableau to genomic tableau (gene subscripts per value).
Tableau circle_to_genomic(const Tableau& t);
/// Inverse of circle_to_genomic; throws MalformedInputError on inputs outside
/// its image.
Tableau genomic_to_circle(const Tableau& t);

}  // namespace lrk
