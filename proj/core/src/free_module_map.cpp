#include "d2/free_module_map.hpp"

#include "d2/errors.hpp"
#include "d2/normal_form.hpp"

namespace d2 {

FreeModuleMap::FreeModuleMap(DihedralGroup group, std::size_t cod_rank, std::size_t dom_rank)
    : group_(std::move(group)), cod_rank_(cod_rank), dom_rank_(dom_rank), entries_(cod_rank * dom_rank, RingElement(group_)) {}

FreeModuleMap::FreeModuleMap(DihedralGroup group, std::vector<std::vector<RingElement>> rows, std::size_t dom_rank)
    : group_(std::move(group)), cod_rank_(rows.size()), dom_rank_(dom_rank) {
  entries_.reserve(cod_rank_ * dom_rank_);
  for (auto& row : rows) {
    if (row.size() != dom_rank_) throw DimensionMismatch("ragged free-module map");
    for (auto& x : row) {
      if (!(x.group() == group_)) throw GroupMismatch();
      entries_.push_back(std::move(x));
    }
  }
}

FreeModuleMap FreeModuleMap::identity(const DihedralGroup& group, std::size_t rank) {
  FreeModuleMap m(group, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) m.at(i, i) = RingElement::one(group);
  return m;
}

FreeModuleMap FreeModuleMap::diagonal(const DihedralGroup& group, const std::vector<RingElement>& entries) {
  FreeModuleMap m(group, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].group() == group)) throw GroupMismatch();
    m.at(i, i) = entries[i];
  }
  return m;
}

bool FreeModuleMap::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

FreeModuleMap FreeModuleMap::with_zero_columns(std::size_t count) const {
  FreeModuleMap out(group_, cod_rank_, dom_rank_ + count);
  for (std::size_t i = 0; i < cod_rank_; ++i)
    for (std::size_t j = 0; j < dom_rank_; ++j) out.at(i, j) = at(i, j);
  return out;
}

FreeModuleMap FreeModuleMap::without_column(std::size_t col) const {
  if (col >= dom_rank_) throw DimensionMismatch("column index out of range");
  FreeModuleMap out(group_, cod_rank_, dom_rank_ - 1);
  for (std::size_t i = 0; i < cod_rank_; ++i)
    for (std::size_t j = 0, k = 0; j < dom_rank_; ++j)
      if (j != col) out.at(i, k++) = at(i, j);
  return out;
}

bool operator==(const FreeModuleMap& x, const FreeModuleMap& y) {
  return x.group_ == y.group_ && x.cod_rank_ == y.cod_rank_ && x.dom_rank_ == y.dom_rank_ && x.entries_ == y.entries_;
}

FreeModuleMap operator+(const FreeModuleMap& x, const FreeModuleMap& y) {
  if (x.cod_rank_ != y.cod_rank_ || x.dom_rank_ != y.dom_rank_) throw DimensionMismatch("sum of maps with different ranks");
  FreeModuleMap out = x;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += y.entries_[k];
  return out;
}

FreeModuleMap operator-(const FreeModuleMap& x) {
  FreeModuleMap out = x;
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::string FreeModuleMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < cod_rank_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < dom_rank_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
  }
  return s + "]";
}

FreeModuleMap compose(const FreeModuleMap& f, const FreeModuleMap& g) {
  if (!(f.group() == g.group())) throw GroupMismatch();
  if (f.dom_rank() != g.cod_rank()) throw DimensionMismatch("composition of maps with incompatible ranks");
  FreeModuleMap out(f.group(), f.cod_rank(), g.dom_rank());
  for (std::size_t i = 0; i < f.cod_rank(); ++i)
    for (std::size_t k = 0; k < g.dom_rank(); ++k)
      for (std::size_t j = 0; j < f.dom_rank(); ++j)
        if (!f.at(i, j).is_zero() && !g.at(j, k).is_zero()) out.at(i, k) += f.at(i, j) * g.at(j, k);
  return out;
}

IntMatrix to_integer_matrix(const FreeModuleMap& f, BasisOrder order) {
  const auto size = static_cast<std::size_t>(f.group().order());
  IntMatrix out(f.cod_rank() * size, f.dom_rank() * size);
  check_dimension(out, "to_integer_matrix");
  for (std::size_t i = 0; i < f.cod_rank(); ++i)
    for (std::size_t j = 0; j < f.dom_rank(); ++j)
      if (!f.at(i, j).is_zero()) out.set_block(i * size, j * size, regular_rep(f.at(i, j), order));
  return out;
}

IntMatrix right_action_matrix(const DihedralGroup& group, std::size_t rank, GroupElement g, BasisOrder order) {
  const auto block = right_regular_rep(RingElement::of(group, g), order);
  std::vector<IntMatrix> blocks(rank, block);
  return block_diagonal(blocks);
}

std::optional<Integer> block_triangular_det(const FreeModuleMap& f) {
  if (f.cod_rank() != f.dom_rank()) throw DimensionMismatch("determinant of a non-square map");
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < f.cod_rank(); ++i)
    for (std::size_t j = 0; j < f.dom_rank(); ++j) {
      if (f.at(i, j).is_zero()) continue;
      if (i > j) upper = false;
      if (i < j) lower = false;
    }
  if (!upper && !lower) return std::nullopt;
  Integer d = 1;
  for (std::size_t i = 0; i < f.cod_rank(); ++i) d *= det(regular_rep(f.at(i, i)));
  return d;
}

}  // namespace d2
