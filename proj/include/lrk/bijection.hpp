#pragma once

#include <vector>

#include "lrk/puzzles.hpp"
#include "lrk/tableaux.hpp"

namespace lrk {

/// Beam structure of a hex or hexR puzzle. Beam (i,j), 1 <= j <= i <= k,
/// carries value j in row i of the skew fill plan; its length is the number
/// of stacked rhombi. A beam is flagged when it is capped by a hexagon (hex)
/// or fed by a hexR piece (hexR); its primed length is then one more.
struct BeamDecomposition {
  Mode mode = Mode::Hex;
  int k = 0;
  std::vector<std::vector<int>> lengths;  // lengths[i-1][j-1]
  std::vector<std::vector<bool>> flags;   // flags[i-1][j-1]
  std::vector<int> lambda_gaps;           // lambda_i - lambda_{i+1}, i = 1..k
  std::vector<int> nu_gaps;               // nu_i - nu_{i+1}, i = 1..k

  explicit BeamDecomposition(Mode mode = Mode::Hex, int k = 0);

  int length(int i, int j) const { return lengths[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  bool flag(int i, int j) const { return flags[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  int primed(int i, int j) const { return length(i, j) + (flag(i, j) ? 1 : 0); }
  int flag_count() const;

  bool operator==(const BeamDecomposition&) const = default;
};

/// Traces the beams of a hex or hexR puzzle; throws StructureError for
/// other modes or if the puzzle does not have the beam structure.
BeamDecomposition decompose(const Puzzle& p);
/// Rebuilds the unique puzzle with these beams and boundary; throws
/// InvalidTableauError if the pieces would overlap, leave the board, or miss
/// the boundary.
Puzzle assemble(const BeamDecomposition& d, const Boundary& b);

/// Fill plans. The hex skew plan returns a set-valued tableau of shape
/// nu/lambda^-; the hexR skew plan one of shape nu/lambda and throws
/// StructureError when an extra entry would fall outside nu.
Tableau skew_tableau_from_beams(const BeamDecomposition& d, const Partition& lambda, const Partition& nu);
/// Right circle tableau (hex) or limited left circle tableau (hexR) of shape
/// mu (+) lambda.
Tableau oplus_tableau_from_beams(const BeamDecomposition& d, const Partition& lambda, const Partition& mu);

/// Inverse readings of the fill plans; throw InvalidTableauError when the
/// tableau is not in their image.
BeamDecomposition beams_from_skew_tableau(const Tableau& t, const Partition& lambda, int k, Mode mode = Mode::Hex);
BeamDecomposition beams_from_oplus_tableau(const Tableau& t, int k, Mode mode = Mode::Hex);

Tableau puzzle_to_skew_tableau(const Puzzle& p);
Puzzle skew_tableau_to_puzzle(const Tableau& t, const Partition& lambda, const AmbientRectangle& amb,
                              Mode mode = Mode::Hex);
Tableau puzzle_to_oplus_tableau(const Puzzle& p);
Puzzle oplus_tableau_to_puzzle(const Tableau& t, const AmbientRectangle& amb, Mode mode = Mode::Hex);

}  // namespace lrk
