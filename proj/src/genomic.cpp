#include <algorithm>
#include <map>

#include "lrk/error.hpp"
#include "lrk/tableaux.hpp"

namespace lrk {

namespace {

// Indices of the boxes holding value v, left to right by column.
std::map<int, std::vector<std::size_t>> strips(const Tableau& t) {
  std::map<int, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < t.size(); ++i) out[t.entries()[i].value()].push_back(i);
  for (auto& [v, idx] : out) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return t.cells()[a].col < t.cells()[b].col; });
    for (std::size_t j = 1; j < idx.size(); ++j) {
      if (t.cells()[idx[j]].col == t.cells()[idx[j - 1]].col) {
        throw MalformedInputError("value " + std::to_string(v) + " is not a horizontal strip");
      }
    }
  }
  return out;
}

}  // namespace

Tableau circle_to_genomic(const Tableau& t) {
  if (t.kind() != TableauKind::CircleRight) throw MalformedInputError("expected a right circle tableau");
  std::vector<Entry> entries(t.size());
  for (const auto& [v, idx] : strips(t)) {
    int gene = 1;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j > 0 && !t.entries()[idx[j - 1]].is_circled()) ++gene;
      entries[idx[j]] = Entry::genomic(v, gene);
    }
    if (t.entries()[idx.back()].is_circled()) {
      throw MalformedInputError("circled " + std::to_string(v) + " has no later box to share its gene");
    }
  }
  return t.with_entries(TableauKind::Genomic, std::move(entries));
}

Tableau genomic_to_circle(const Tableau& t) {
  if (t.kind() != TableauKind::Genomic) throw MalformedInputError("expected a genomic tableau");
  for (const Entry& e : t.entries()) {
    if (e.kind != EntryKind::Genomic) throw MalformedInputError("genomic tableau holds a non-genomic entry");
  }
  std::vector<Entry> entries(t.size());
  for (const auto& [v, idx] : strips(t)) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const int gene = t.entries()[idx[j]].gene;
      if (j == 0 && gene != 1) throw MalformedInputError("genes of " + std::to_string(v) + " must start at 1");
      if (j > 0) {
        const int step = gene - t.entries()[idx[j - 1]].gene;
        if (step != 0 && step != 1) throw MalformedInputError("genes of " + std::to_string(v) + " skip or decrease");
      }
      const bool shared = j + 1 < idx.size() && t.entries()[idx[j + 1]].gene == gene;
      entries[idx[j]] = shared ? Entry::circled(v) : Entry::number(v);
    }
  }
  return t.with_entries(TableauKind::CircleRight, std::move(entries));
}

}  // namespace lrk
