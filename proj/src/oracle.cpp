#include "lrk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

#include "lrk/error.hpp"

namespace lrk {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in polynomial arithmetic");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in polynomial arithmetic");
  return r;
}

int degree(const SparsePoly::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Set-valued (or ordinary, when `single`) semistandard fillings of a straight
// shape, visited with the filling's exponent vector and size.
void for_each_filling(const Partition& shape, int m, int max_size, bool single,
                      const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<Cell> cells;
  for (int r = 1; r <= shape.length(); ++r) {
    for (int c = 1; c <= shape.row(r); ++c) cells.push_back({r, c});
  }
  std::vector<std::uint32_t> sets(cells.size());
  std::vector<int> exponent(static_cast<std::size_t>(m), 0);
  const auto index = [&](int r, int c) {
    int i = 0;
    for (int rr = 1; rr < r; ++rr) i += shape.row(rr);
    return static_cast<std::size_t>(i + c - 1);
  };
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int size) {
    if (i == cells.size()) {
      visit(exponent, size);
      return;
    }
    const Cell c = cells[i];
    int lo = 1;
    if (c.col > 1) lo = std::max(lo, 31 - std::countl_zero(sets[index(c.row, c.col - 1)]));
    if (c.row > 1) lo = std::max(lo, 31 - std::countl_zero(sets[index(c.row - 1, c.col)]) + 1);
    const int remaining_cells = static_cast<int>(cells.size() - i - 1);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      const std::uint32_t s = mask << 1;
      if (std::countr_zero(s) < lo) continue;
      const int count = std::popcount(s);
      if (single && count > 1) continue;
      if (size + count + remaining_cells > max_size) continue;
      sets[i] = s;
      for (int v = 1; v <= m; ++v) {
        if (s & (1u << v)) ++exponent[static_cast<std::size_t>(v - 1)];
      }
      rec(i + 1, size + count);
      for (int v = 1; v <= m; ++v) {
        if (s & (1u << v)) --exponent[static_cast<std::size_t>(v - 1)];
      }
    }
  };
  rec(0, 0);
}

// Symmetric functions truncated at a degree cap, stored by their monomial
// coefficients at partition exponents.
class PartitionIndex {
 public:
  explicit PartitionIndex(int cap) : cap_(cap) {
    for (int d = 0; d <= cap; ++d) {
      auto ps = partitions_of(d);
      std::sort(ps.begin(), ps.end(), std::greater<>());
      for (auto& p : ps) {
        index_.emplace(p, static_cast<int>(list_.size()));
        list_.push_back(std::move(p));
      }
    }
  }
  int cap() const { return cap_; }
  std::size_t size() const { return list_.size(); }
  const Partition& at(std::size_t i) const { return list_[i]; }
  int find(const Partition& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  int cap_;
  std::vector<Partition> list_;  // by size, lex-largest first within a size
  std::map<Partition, int> index_;
};

using Table = std::vector<std::int64_t>;

const PartitionIndex& partition_index(int cap) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PartitionIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[cap];
  if (!slot) slot = std::make_unique<PartitionIndex>(cap);
  return *slot;
}

Table g_table(const Partition& alpha, const PartitionIndex& idx) {
  Table t(idx.size(), 0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx.at(i).size() >= alpha.size()) t[i] = grothendieck_coefficient(alpha, idx.at(i));
  }
  return t;
}

Table multiply(const Table& p, const Table& q, const PartitionIndex& idx) {
  Table out(idx.size(), 0);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::vector<int>& alpha = idx.at(a).parts();
    std::vector<int> beta(alpha.size(), 0);
    std::int64_t sum = 0;
    while (true) {
      std::vector<int> left = beta, right(alpha.size());
      for (std::size_t i = 0; i < alpha.size(); ++i) right[i] = alpha[i] - beta[i];
      std::sort(left.begin(), left.end(), std::greater<>());
      std::sort(right.begin(), right.end(), std::greater<>());
      const std::int64_t pl = p[static_cast<std::size_t>(idx.find(Partition(left)))];
      if (pl != 0) {
        const std::int64_t qr = q[static_cast<std::size_t>(idx.find(Partition(right)))];
        if (qr != 0) sum = add(sum, mul(pl, qr));
      }
      std::size_t i = 0;
      while (i < beta.size() && beta[i] == alpha[i]) beta[i++] = 0;
      if (i == beta.size()) break;
      ++beta[i];
    }
    out[a] = sum;
  }
  return out;
}

std::map<Partition, std::int64_t> expand(Table residual, const PartitionIndex& idx) {
  std::map<Partition, std::int64_t> out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::int64_t a = residual[i];
    if (a == 0) continue;
    out[idx.at(i)] = a;
    const Table g = g_table(idx.at(i), idx);
    for (std::size_t j = i; j < idx.size(); ++j) residual[j] = add(residual[j], -mul(a, g[j]));
  }
  return out;
}

std::map<Partition, std::uint64_t> unsigned_constants(const std::map<Partition, std::int64_t>& raw, int base_size) {
  std::map<Partition, std::uint64_t> out;
  for (const auto& [nu, a] : raw) {
    const std::int64_t sign = (nu.size() - base_size) % 2 == 0 ? 1 : -1;
    const std::int64_t c = a * sign;
    if (c < 0) {
      throw ExpansionError("coefficient of G_(" + nu.to_string() + ") has the wrong sign");
    }
    out[nu] = static_cast<std::uint64_t>(c);
  }
  return out;
}

Table one_minus_g1(const PartitionIndex& idx) {
  Table t = g_table(Partition({1}), idx);
  for (auto& v : t) v = -v;
  t[static_cast<std::size_t>(idx.find(Partition()))] += 1;
  return t;
}

}  // namespace

SparsePoly::SparsePoly(int variables, int degree_cap) : m_(variables), cap_(degree_cap) {
  if (variables < 0 || degree_cap < 0) throw MalformedInputError("variable count and cap must be nonnegative");
}

SparsePoly SparsePoly::constant(int variables, int degree_cap, std::int64_t c) {
  SparsePoly p(variables, degree_cap);
  p.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
  return p;
}

std::int64_t SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(const Exponent& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != m_) throw MalformedInputError("exponent length must equal the variable count");
  if (c == 0 || degree(e) > cap_) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (o.m_ != m_) throw MalformedInputError("variable counts differ");
  SparsePoly out(m_, std::min(cap_, o.cap_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + o.scaled(-1); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (o.m_ != m_) throw MalformedInputError("variable counts differ");
  SparsePoly out(m_, std::min(cap_, o.cap_));
  Exponent e(static_cast<std::size_t>(m_));
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      if (degree(e) <= out.cap_) out.add_term(e, mul(ca, cb));
    }
  }
  return out;
}

SparsePoly SparsePoly::scaled(std::int64_t c) const {
  SparsePoly out(m_, cap_);
  for (const auto& [e, v] : terms_) out.add_term(e, mul(v, c));
  return out;
}

bool SparsePoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == e[i + 1]) continue;
      Exponent swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (coefficient(swapped) != c) return false;
    }
  }
  return true;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  // Lower degree first, then the usual lexicographic order on monomials.
  std::vector<std::pair<Exponent, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) < degree(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono += (mono.empty() ? "x" : "*x") + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

SparsePoly grothendieck_poly(const Partition& lambda, int m, int degree_cap) {
  if (m < 1) throw MalformedInputError("need at least one variable");
  if (m > 30) throw MalformedInputError("at most 30 variables are supported");
  SparsePoly p(m, degree_cap);
  for_each_filling(lambda, m, degree_cap, false, [&](const std::vector<int>& e, int size) {
    p.add_term(e, (size - lambda.size()) % 2 == 0 ? 1 : -1);
  });
  return p;
}

SparsePoly schur_poly(const Partition& lambda, int m) {
  if (m < 1) throw MalformedInputError("need at least one variable");
  if (m > 30) throw MalformedInputError("at most 30 variables are supported");
  SparsePoly p(m, lambda.size());
  for_each_filling(lambda, m, lambda.size(), true, [&](const std::vector<int>& e, int) { p.add_term(e, 1); });
  return p;
}

std::int64_t grothendieck_coefficient(const Partition& alpha, const Partition& beta) {
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({alpha, beta}); it != cache.end()) return it->second;
  }
  std::int64_t count = 0;
  if (beta.size() >= alpha.size() && beta.length() <= 30) {
    // Fillings of alpha by sets drawn from 1..len(beta) with content exactly beta.
    const int m = beta.length();
    std::vector<Cell> cells;
    for (int r = 1; r <= alpha.length(); ++r) {
      for (int c = 1; c <= alpha.row(r); ++c) cells.push_back({r, c});
    }
    std::vector<int> start(static_cast<std::size_t>(alpha.length()) + 1, 0);
    for (int r = 1; r < alpha.length(); ++r) start[static_cast<std::size_t>(r)] = start[static_cast<std::size_t>(r - 1)] + alpha.row(r);
    std::vector<std::uint32_t> sets(cells.size());
    std::vector<int> left(static_cast<std::size_t>(m) + 1, 0);
    for (int v = 1; v <= m; ++v) left[static_cast<std::size_t>(v)] = beta.row(v);
    int remaining = beta.size();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == cells.size()) {
        if (remaining == 0) ++count;
        return;
      }
      if (remaining < static_cast<int>(cells.size() - i)) return;
      const Cell c = cells[i];
      int lo = 1;
      if (c.col > 1) lo = 31 - std::countl_zero(sets[i - 1]);
      if (c.row > 1) {
        const std::size_t up = static_cast<std::size_t>(start[static_cast<std::size_t>(c.row - 2)] + c.col - 1);
        lo = std::max(lo, 32 - std::countl_zero(sets[up]));
      }
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const std::uint32_t s = mask << 1;
        if (std::countr_zero(s) < lo) continue;
        bool ok = true;
        for (int v = 1; v <= m && ok; ++v) {
          if ((s & (1u << v)) && left[static_cast<std::size_t>(v)] == 0) ok = false;
        }
        if (!ok) continue;
        sets[i] = s;
        for (int v = 1; v <= m; ++v) {
          if (s & (1u << v)) --left[static_cast<std::size_t>(v)];
        }
        remaining -= std::popcount(s);
        rec(i + 1);
        remaining += std::popcount(s);
        for (int v = 1; v <= m; ++v) {
          if (s & (1u << v)) ++left[static_cast<std::size_t>(v)];
        }
      }
    };
    rec(0);
    if ((beta.size() - alpha.size()) % 2 != 0) count = -count;
  }
  std::lock_guard lock(mu);
  cache[{alpha, beta}] = count;
  return count;
}

SparsePoly GExpansion::reconstruct(int m) const {
  SparsePoly out(m, degree_cap);
  for (const auto& [nu, a] : coefficients) out = out + grothendieck_poly(nu, m, degree_cap).scaled(a);
  return out;
}

GExpansion expand_in_G_basis(const SparsePoly& p, int degree_cap) {
  if (degree_cap > p.degree_cap()) throw ExpansionError("cap exceeds the polynomial's own truncation");
  if (p.variables() < degree_cap) {
    throw ExpansionError("need at least " + std::to_string(degree_cap) + " variables to expand up to that degree");
  }
  if (!p.is_symmetric()) throw ExpansionError("polynomial is not symmetric");
  const PartitionIndex& idx = partition_index(degree_cap);
  Table t(idx.size(), 0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    SparsePoly::Exponent e(static_cast<std::size_t>(p.variables()), 0);
    std::copy(idx.at(i).parts().begin(), idx.at(i).parts().end(), e.begin());
    t[i] = p.coefficient(e);
  }
  return {expand(std::move(t), idx), degree_cap};
}

std::map<Partition, std::uint64_t> product_constants(const Partition& lambda, const Partition& mu, int degree_cap) {
  // Every term of the product has degree >= |lambda|+|mu|.
  if (degree_cap < lambda.size() + mu.size()) return {};
  const PartitionIndex& idx = partition_index(degree_cap);
  const Table product = multiply(g_table(lambda, idx), g_table(mu, idx), idx);
  return unsigned_constants(expand(product, idx), lambda.size() + mu.size());
}

std::map<Partition, std::uint64_t> script_g_constants(const Partition& lambda, const Partition& mu, int degree_cap) {
  // Every term of the product has degree >= |lambda|+|mu|.
  if (degree_cap < lambda.size() + mu.size()) return {};
  const PartitionIndex& idx = partition_index(degree_cap);
  const Table factor = one_minus_g1(idx);
  const Table p = multiply(multiply(multiply(g_table(lambda, idx), g_table(mu, idx), idx), factor, idx), factor, idx);
  Table residual(idx.size(), 0);
  for (const auto& [nu, a] : expand(p, idx)) residual[static_cast<std::size_t>(idx.find(nu))] = a;

  // Rewrite in the basis G_nu * (1 - G_1) = G_nu + (terms of higher degree).
  std::map<Partition, std::int64_t> raw;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::int64_t b = residual[i];
    if (b == 0) continue;
    raw[idx.at(i)] = b;
    Table basis(idx.size(), 0);
    for (const auto& [rho, a] : expand(multiply(g_table(idx.at(i), idx), factor, idx), idx)) {
      basis[static_cast<std::size_t>(idx.find(rho))] = a;
    }
    for (std::size_t j = i; j < idx.size(); ++j) residual[j] = add(residual[j], -mul(b, basis[j]));
  }
  return unsigned_constants(raw, lambda.size() + mu.size());
}

std::map<std::pair<Partition, Partition>, std::uint64_t> coproduct_constants(const Partition& nu) {
  // Set-valued tableaux of shape nu over 1..2k whose words restricted to
  // 1..k and to k+1..2k are both ballot; k = len(nu) suffices because d
  // vanishes unless lambda and mu fit inside nu.
  const int k = nu.length();
  std::map<std::pair<Partition, Partition>, std::uint64_t> out;
  if (k == 0) {
    out[{Partition(), Partition()}] = 1;
    return out;
  }
  struct Box {
    int row, col, right, up;
  };
  std::vector<Box> boxes;  // reading order: rows top to bottom, right to left
  std::map<std::pair<int, int>, int> where;
  for (int r = 1; r <= k; ++r) {
    for (int c = nu.row(r); c >= 1; --c) {
      const int id = static_cast<int>(boxes.size());
      where[{r, c}] = id;
      Box b{r, c, -1, -1};
      if (auto it = where.find({r, c + 1}); it != where.end()) b.right = it->second;
      if (auto it = where.find({r - 1, c}); it != where.end()) b.up = it->second;
      boxes.push_back(b);
    }
  }
  const int values = 2 * k;
  std::vector<std::uint32_t> sets(boxes.size());
  std::vector<int> count(static_cast<std::size_t>(values) + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == boxes.size()) {
      std::vector<int> a, b;
      for (int v = 1; v <= k; ++v) a.push_back(count[static_cast<std::size_t>(v)]);
      for (int v = k + 1; v <= values; ++v) b.push_back(count[static_cast<std::size_t>(v)]);
      while (!a.empty() && a.back() == 0) a.pop_back();
      while (!b.empty() && b.back() == 0) b.pop_back();
      ++out[{Partition(a), Partition(b)}];
      return;
    }
    const Box& bx = boxes[i];
    const int lo = bx.up >= 0 ? 32 - std::countl_zero(sets[static_cast<std::size_t>(bx.up)]) : 1;
    const int hi = bx.right >= 0 ? std::countr_zero(sets[static_cast<std::size_t>(bx.right)]) : values;
    for (std::uint32_t s = 2; s < (1u << (values + 1)); s += 2) {
      if (std::countr_zero(s) < lo || 31 - std::countl_zero(s) > hi) continue;
      // Append the set's values largest first and keep both blocks ballot.
      int pushed = 0;
      bool ok = true;
      for (int v = values; v >= 1; --v) {
        if (!(s & (1u << v))) continue;
        const bool block_start = v == 1 || v == k + 1;
        if (!block_start && count[static_cast<std::size_t>(v)] + 1 > count[static_cast<std::size_t>(v - 1)]) {
          ok = false;
          break;
        }
        ++count[static_cast<std::size_t>(v)];
        pushed |= 1 << v;
      }
      if (ok) {
        sets[i] = s;
        rec(i + 1);
      }
      for (int v = 1; v <= values; ++v) {
        if (pushed & (1 << v)) --count[static_cast<std::size_t>(v)];
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace lrk
