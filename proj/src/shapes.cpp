#include "lrk/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lrk/error.hpp"

namespace lrk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ShapeError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trimmed(text);
  if (text.empty() || text == "()" || text == "0") return {};
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trimmed(text.substr(pos, comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw MalformedInputError("cannot parse partition \"" + std::string(text) + "\"");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int r) const {
  if (r < 1 || r > length()) return 0;
  return parts_[static_cast<std::size_t>(r - 1)];
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int r = 1; r <= other.length(); ++r) {
    if (other.row(r) > row(r)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

AmbientRectangle::AmbientRectangle(int n_, int k_) : n(n_), k(k_) {
  if (n < 0 || k < 0 || k > n) throw ShapeError("ambient rectangle needs 0 <= k <= n");
}

BinaryString::BinaryString(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw MalformedInputError("binary string may only contain 0 and 1");
  }
}

int BinaryString::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), '1')); }

BinaryString BinaryString::reversed_complement() const {
  std::string out(bits_.rbegin(), bits_.rend());
  for (char& c : out) c = c == '0' ? '1' : '0';
  return BinaryString(std::move(out));
}

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) {
    throw ShapeError("skew shape " + outer.to_string() + "/" + inner.to_string() + ": inner not contained in outer");
  }
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= outer.length(); ++r) {
    for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) out.push_back({r, c});
  }
  return out;
}

std::vector<Cell> OplusShape::cells() const {
  std::vector<Cell> out;
  const int offset = column_offset();
  for (int r = 1; r <= top.length(); ++r) {
    for (int c = 1; c <= top.row(r); ++c) out.push_back({r, offset + c});
  }
  const int first = bottom_first_row();
  for (int r = 1; r <= bottom.length(); ++r) {
    for (int c = 1; c <= bottom.row(r); ++c) out.push_back({first + r - 1, c});
  }
  return out;
}

SkewShape OplusShape::as_skew() const {
  const int offset = column_offset();
  std::vector<int> outer;
  std::vector<int> inner;
  for (int r = 1; r <= top.length(); ++r) {
    outer.push_back(offset + top.row(r));
    inner.push_back(offset);
  }
  for (int r = 1; r <= bottom.length(); ++r) {
    outer.push_back(bottom.row(r));
    inner.push_back(0);
  }
  return SkewShape(Partition(outer), Partition(inner));
}

BinaryString to_binary_string(const Partition& p, const AmbientRectangle& amb) {
  if (!amb.fits(p)) {
    throw ShapeError("partition (" + p.to_string() + ") does not fit in " + std::to_string(amb.k) + " rows of length " +
                     std::to_string(amb.width()));
  }
  std::string bits;
  bits.reserve(static_cast<std::size_t>(amb.n));
  int previous = amb.width();
  for (int r = 1; r <= amb.k; ++r) {
    bits.append(static_cast<std::size_t>(previous - p.row(r)), '0');
    bits.push_back('1');
    previous = p.row(r);
  }
  bits.append(static_cast<std::size_t>(previous), '0');
  return BinaryString(std::move(bits));
}

Partition from_binary_string(const BinaryString& s) {
  int current = s.length() - s.ones();
  std::vector<int> parts;
  for (char c : s.bits()) {
    if (c == '0') {
      --current;
    } else {
      parts.push_back(current);
    }
  }
  return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
  std::vector<int> parts(static_cast<std::size_t>(p.width()), 0);
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.row(r); ++c) ++parts[static_cast<std::size_t>(c - 1)];
  }
  return Partition(std::move(parts));
}

std::vector<Cell> inner_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length(); ++r) {
    if (p.row(r) > p.row(r + 1)) out.push_back({r, p.row(r)});
  }
  return out;
}

std::vector<Cell> outer_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length() + 1; ++r) {
    if (r == 1 || p.row(r) < p.row(r - 1)) out.push_back({r, p.row(r) + 1});
  }
  return out;
}

namespace {

// Subsets of `corners` by size, then lexicographically on the chosen cells.
std::vector<std::vector<Cell>> ordered_subsets(const std::vector<Cell>& corners) {
  const std::size_t m = corners.size();
  std::vector<std::vector<Cell>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Cell> s;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) s.push_back(corners[i]);
    }
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return subsets;
}

}  // namespace

std::vector<Partition> shape_variants_minus(const Partition& lambda) {
  std::vector<Partition> out;
  for (const auto& subset : ordered_subsets(inner_corners(lambda))) {
    std::vector<int> parts = lambda.parts();
    for (Cell c : subset) --parts[static_cast<std::size_t>(c.row - 1)];
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> shape_variants_plus(const Partition& mu) {
  std::vector<Partition> out;
  for (const auto& subset : ordered_subsets(outer_corners(mu))) {
    std::vector<int> parts = mu.parts();
    parts.resize(static_cast<std::size_t>(mu.length() + 1), 0);
    for (Cell c : subset) ++parts[static_cast<std::size_t>(c.row - 1)];
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int max_part) -> void {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == rows) return;
    for (int v = 1; v <= max_part; ++v) {
      parts.push_back(v);
      self(self, v);
      parts.pop_back();
    }
  };
  rec(rec, cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
  });
  return out;
}

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      parts.push_back(v);
      self(self, remaining - v, v);
      parts.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

}  // namespace lrk
