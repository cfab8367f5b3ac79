#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lrk {

/// A box of a Young diagram; 1-indexed, row 1 at the top (English convention).
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

/// Weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Throws ShapeError unless `parts` is weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "4,3,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of boxes.
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Width of the first row (0 for the empty partition).
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  /// Length of row r (1-indexed); 0 past the last part.
  int row(int r) const;

  /// True iff this diagram contains `other` row by row.
  bool contains(const Partition& other) const;
  bool has_cell(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= row(c.row); }

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// The rectangle of k rows of length n-k.
struct AmbientRectangle {
  int n = 0;
  int k = 0;

  AmbientRectangle() = default;
  /// Throws ShapeError unless n >= 0 and 0 <= k <= n.
  AmbientRectangle(int n, int k);

  int width() const { return n - k; }
  bool fits(const Partition& p) const { return p.length() <= k && p.width() <= width(); }

  bool operator==(const AmbientRectangle&) const = default;
};

/// A word over {0,1}: 0 per horizontal and 1 per vertical boundary edge.
class BinaryString {
 public:
  BinaryString() = default;
  /// Throws MalformedInputError on characters other than '0' and '1'.
  explicit BinaryString(std::string bits);

  const std::string& bits() const { return bits_; }
  int length() const { return static_cast<int>(bits_.size()); }
  int ones() const;
  char operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  AmbientRectangle ambient() const { return {length(), ones()}; }

  /// Reverse and exchange 0 and 1; the string of the transposed partition.
  BinaryString reversed_complement() const;

  bool operator==(const BinaryString&) const = default;

 private:
  std::string bits_;
};

/// Boxes of `outer` not in `inner`.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  /// Throws ShapeError unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner);

  int size() const { return outer.size() - inner.size(); }
  /// Cells in row-major order.
  std::vector<Cell> cells() const;
  bool operator==(const SkewShape&) const = default;
};

/// Diagrams of `top` (upper right) and `bottom` (lower left) placed corner to
/// corner. Top occupies rows 1..len(top) shifted right by bottom.width();
/// bottom occupies the rows below with no shift.
struct OplusShape {
  Partition top;
  Partition bottom;

  int size() const { return top.size() + bottom.size(); }
  int column_offset() const { return bottom.width(); }
  /// First row of the bottom diagram.
  int bottom_first_row() const { return top.length() + 1; }
  std::vector<Cell> cells() const;
  /// The same diagram viewed as a skew shape.
  SkewShape as_skew() const;
  bool operator==(const OplusShape&) const = default;
};

BinaryString to_binary_string(const Partition& p, const AmbientRectangle& amb);
Partition from_binary_string(const BinaryString& s);

Partition transpose(const Partition& p);

/// Removable boxes, ordered by row.
std::vector<Cell> inner_corners(const Partition& p);
/// Addable boxes, ordered by row.
std::vector<Cell> outer_corners(const Partition& p);

/// All partitions obtained by removing a subset of inner corners, ordered by
/// subset size and then lexicographically by the removed corners.
std::vector<Partition> shape_variants_minus(const Partition& lambda);
/// All partitions obtained by adding a subset of outer corners, same order.
std::vector<Partition> shape_variants_plus(const Partition& mu);

/// Every partition with at most `rows` parts and first part at most `cols`,
/// ordered by size and then lexicographically.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// Every partition of `total`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int total);

}  // namespace lrk
