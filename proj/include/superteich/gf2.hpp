#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace superteich {

using Gf2Row = boost::dynamic_bitset<>;

// Incrementally maintained reduced row echelon form over GF(2). The pivot
// of a row is its lowest set index, so reducing a vector against the basis
// yields the lexicographically smallest element of its coset (index 0 is
// the most significant position).
//
// Every basis row carries a tag recording which inserted rows it is the sum
// of, so membership tests can also return a witness combination.
class Gf2Elimination {
 public:
  explicit Gf2Elimination(std::size_t width);

  // Inserts the next row; its tag is bit `insert_count()` of the tag vector.
  // Returns true when the row was independent of the current span.
  bool insert(const Gf2Row& row);

  // Coset minimum of v.
  Gf2Row reduce(Gf2Row v) const;

  // Reduces v and also reports which inserted rows were added to it. If the
  // result is zero, the returned tag is a combination summing to v.
  Gf2Row reduce(Gf2Row v, Gf2Row& combination) const;

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t insert_count() const { return inserted_; }
  std::vector<std::size_t> pivots() const;

 private:
  struct Entry {
    std::size_t pivot;
    Gf2Row row;
    Gf2Row tag;
  };
  std::size_t width_;
  std::size_t inserted_ = 0;
  std::vector<Entry> rows_;  // sorted by pivot
};

}  // namespace superteich
