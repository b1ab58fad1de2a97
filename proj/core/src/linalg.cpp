#include "primehopf/linalg.hpp"

namespace primehopf {

void axpy(SparseVector& y, const Cyclotomic& a, const SparseVector& x) {
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int key = it->first;
    const Cyclotomic c = -it->second;
    axpy(v, c, row->second);
    it = v.upper_bound(key);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const Cyclotomic lead = r.begin()->second.inverse();
  for (auto& [k, c] : r) c *= lead;
  const int pivot = r.begin()->first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
  std::map<int, SparseVector> rows = rows_;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    const int pivot = it->first;
    for (auto& [p, row] : rows) {
      if (p >= pivot) break;
      auto hit = row.find(pivot);
      if (hit == row.end()) continue;
      const Cyclotomic c = -hit->second;
      axpy(row, c, it->second);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(rows.size());
  for (auto& [p, row] : rows) out.push_back(std::move(row));
  return out;
}

std::vector<SparseVector> reduced_basis(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.reduced_rows();
}

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& columns) {
  struct Row {
    SparseVector image;
    SparseVector tag;
  };
  std::map<int, Row> pivots;
  std::vector<SparseVector> kernel;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVector image = columns[j];
    SparseVector tag{{static_cast<int>(j), Cyclotomic(1L)}};
    auto it = image.begin();
    while (it != image.end()) {
      auto row = pivots.find(it->first);
      if (row == pivots.end()) {
        ++it;
        continue;
      }
      const int key = it->first;
      const Cyclotomic c = -it->second;
      axpy(image, c, row->second.image);
      axpy(tag, c, row->second.tag);
      it = image.upper_bound(key);
    }
    if (image.empty()) {
      kernel.push_back(std::move(tag));
      continue;
    }
    const Cyclotomic lead = image.begin()->second.inverse();
    for (auto& [k, c] : image) c *= lead;
    for (auto& [k, c] : tag) c *= lead;
    const int pivot = image.begin()->first;
    pivots.emplace(pivot, Row{std::move(image), std::move(tag)});
  }
  return reduced_basis(kernel);
}

}  // namespace primehopf
