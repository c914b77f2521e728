#include "superteich/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace superteich {

Gf2Elimination::Gf2Elimination(std::size_t width) : width_(width) {}

bool Gf2Elimination::insert(const Gf2Row& row) {
  if (row.size() != width_) throw std::invalid_argument("GF(2) row width mismatch");
  const std::size_t index = inserted_++;
  for (auto& entry : rows_) entry.tag.resize(inserted_);

  Gf2Row tag(inserted_);
  tag.set(index);
  Gf2Row reduced = row;
  for (const auto& entry : rows_) {
    if (reduced.test(entry.pivot)) {
      reduced ^= entry.row;
      tag ^= entry.tag;
    }
  }
  const std::size_t pivot = reduced.find_first();
  if (pivot == Gf2Row::npos) return false;

  // Clear the new pivot column from the existing rows to stay fully reduced.
  for (auto& entry : rows_) {
    if (entry.row.test(pivot)) {
      entry.row ^= reduced;
      entry.tag ^= tag;
    }
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Entry& e, std::size_t p) { return e.pivot < p; });
  rows_.insert(pos, Entry{pivot, std::move(reduced), std::move(tag)});
  return true;
}

Gf2Row Gf2Elimination::reduce(Gf2Row v) const {
  Gf2Row unused;
  return reduce(std::move(v), unused);
}

Gf2Row Gf2Elimination::reduce(Gf2Row v, Gf2Row& combination) const {
  if (v.size() != width_) throw std::invalid_argument("GF(2) row width mismatch");
  combination = Gf2Row(inserted_);
  for (const auto& entry : rows_) {
    if (v.test(entry.pivot)) {
      v ^= entry.row;
      combination ^= entry.tag;
    }
  }
  return v;
}

std::vector<std::size_t> Gf2Elimination::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& entry : rows_) out.push_back(entry.pivot);
  return out;
}

}  // namespace superteich
