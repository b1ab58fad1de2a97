#pragma once

// Sparse exact linear algebra over cyclotomic fields.

#include "primehopf/cyclotomic.hpp"

#include <map>
#include <vector>

namespace primehopf {

using SparseVector = std::map<int, Cyclotomic>;

void axpy(SparseVector& y, const Cyclotomic& a, const SparseVector& x);

/// Incrementally built echelon basis.  Each stored row has leading index
/// (its smallest key) normalized to coefficient 1.
class EchelonBasis {
 public:
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Adds v to the span; returns true when the rank grew.
  bool insert(const SparseVector& v);
  std::size_t rank() const { return rows_.size(); }
  /// Fully reduced rows, sorted by leading index.
  std::vector<SparseVector> reduced_rows() const;

 private:
  std::map<int, SparseVector> rows_;
};

/// Reduced row echelon basis of the span of the given vectors.
std::vector<SparseVector> reduced_basis(const std::vector<SparseVector>& vectors);

/// Basis (in reduced row echelon form) of {c : sum_j c_j * columns[j] = 0}.
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& columns);

/// Dense-free rank of a family of vectors.
std::size_t rank_of(const std::vector<SparseVector>& vectors);

/// Bidirectional map between keys and consecutive integers.
template <class Key>
class Indexer {
 public:
  int index(const Key& k) {
    auto [it, inserted] = ids_.emplace(k, static_cast<int>(keys_.size()));
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  int find(const Key& k) const {
    auto it = ids_.find(k);
    return it == ids_.end() ? -1 : it->second;
  }
  const Key& key(int i) const { return keys_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<Key, int> ids_;
  std::vector<Key> keys_;
};

}  // namespace primehopf
