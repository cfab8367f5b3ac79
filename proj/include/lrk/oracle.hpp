#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrk/shapes.hpp"

namespace lrk {

/// Polynomial in x_1..x_m with integer coefficients, truncated above a total
/// degree cap. Arithmetic throws OverflowError instead of wrapping.
class SparsePoly {
 public:
  using Exponent = std::vector<int>;

  SparsePoly(int variables, int degree_cap);
  static SparsePoly constant(int variables, int degree_cap, std::int64_t c);

  int variables() const { return m_; }
  int degree_cap() const { return cap_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Exponent& e) const;

  /// Adds c*x^e; terms above the cap are dropped.
  void add_term(const Exponent& e, std::int64_t c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  /// Truncated at the smaller of the two caps.
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(std::int64_t c) const;

  bool is_symmetric() const;
  bool operator==(const SparsePoly& o) const = default;
  /// e.g. "x1 + x2 - x1*x2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  int m_;
  int cap_;
  std::map<Exponent, std::int64_t> terms_;
};

/// Signed sum over semistandard set-valued tableaux of shape lambda with
/// entries <= m and at most degree_cap entries in total.
SparsePoly grothendieck_poly(const Partition& lambda, int m, int degree_cap);
/// Sum over semistandard tableaux of shape lambda with entries <= m.
SparsePoly schur_poly(const Partition& lambda, int m);

/// Coefficients a_nu with P = sum a_nu G_nu modulo degree > cap.
struct GExpansion {
  std::map<Partition, std::int64_t> coefficients;
  int degree_cap = 0;

  SparsePoly reconstruct(int m) const;
};

/// Throws ExpansionError for non-symmetric input or too few variables
/// (m < degree_cap).
GExpansion expand_in_G_basis(const SparsePoly& p, int degree_cap);

/// Unsigned c^nu_{lambda,mu} for every |nu| <= degree_cap with nonzero value;
/// empty when degree_cap < |lambda|+|mu|.
std::map<Partition, std::uint64_t> product_constants(const Partition& lambda, const Partition& mu, int degree_cap);
/// Unsigned structure constants of the basis G_lambda * (1 - G_1).
std::map<Partition, std::uint64_t> script_g_constants(const Partition& lambda, const Partition& mu, int degree_cap);
/// Unsigned d^nu_{lambda,mu} for all (lambda, mu) from the coproduct of G_nu.
std::map<std::pair<Partition, Partition>, std::uint64_t> coproduct_constants(const Partition& nu);

/// Coefficient of x^beta in G_alpha for partitions beta (monomial
/// coefficients of a symmetric function are determined by these).
std::int64_t grothendieck_coefficient(const Partition& alpha, const Partition& beta);

}  // namespace lrk
