#include "semspace/types.hpp"

#include <algorithm>
#include <cmath>

namespace semspace {

void require(bool cond, const std::string& message) {
  if (!cond) throw DataError(message);
}

Vocabulary::Vocabulary(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    require(!labels_[i].empty(), "vocabulary: empty label at index " + std::to_string(i));
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<std::uint32_t>(i));
    require(inserted, "vocabulary: duplicate label '" + labels_[i] + "'");
  }
}

std::optional<std::uint32_t> Vocabulary::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_row_ids(const std::vector<std::string>& ids, std::size_t n_rows,
                   const char* what) {
  require(ids.size() == n_rows,
          std::string(what) + ": row_ids count does not match row count");
  std::unordered_map<std::string, std::size_t> seen;
  seen.reserve(ids.size());
  for (const auto& id : ids) {
    require(!id.empty(), std::string(what) + ": empty row id");
    require(seen.emplace(id, 0).second, std::string(what) + ": duplicate row id '" + id + "'");
  }
}

}  // namespace

FeatureMatrix::FeatureMatrix(std::size_t n_rows, std::size_t n_cols,
                             std::vector<double> values, std::vector<std::string> row_ids)
    : n_rows_(n_rows), n_cols_(n_cols), values_(std::move(values)), row_ids_(std::move(row_ids)) {
  require(values_.size() == n_rows_ * n_cols_, "feature matrix: value count mismatch");
  check_row_ids(row_ids_, n_rows_, "feature matrix");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("feature matrix: non-finite value at row " +
                      std::to_string(i / std::max<std::size_t>(n_cols_, 1)) + ", col " +
                      std::to_string(n_cols_ ? i % n_cols_ : 0));
    }
  }
}

FeatureMatrix FeatureMatrix::take_rows(std::span<const std::size_t> indices) const {
  std::vector<double> values;
  values.reserve(indices.size() * n_cols_);
  std::vector<std::string> ids;
  ids.reserve(indices.size());
  for (std::size_t idx : indices) {
    require(idx < n_rows_, "feature matrix: row index out of range");
    auto r = row(idx);
    values.insert(values.end(), r.begin(), r.end());
    ids.push_back(row_ids_[idx]);
  }
  return FeatureMatrix(indices.size(), n_cols_, std::move(values), std::move(ids));
}

AnnotationSet::AnnotationSet(Vocabulary vocab, std::vector<std::vector<Annotation>> rows,
                             std::vector<std::string> row_ids)
    : vocab_(std::move(vocab)), rows_(std::move(rows)), row_ids_(std::move(row_ids)) {
  check_row_ids(row_ids_, rows_.size(), "annotation set");
  binary_ = true;
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(),
              [](const Annotation& a, const Annotation& b) { return a.label < b.label; });
    std::uint32_t prev = 0;
    bool first = true;
    for (const auto& e : row) {
      require(e.label < vocab_.size(), "annotation set: label index out of range");
      require(first || e.label != prev, "annotation set: duplicate label index in row");
      require(std::isfinite(e.weight) && e.weight >= 0.0,
              "annotation set: weights must be finite and non-negative");
      if (e.weight != 0.0 && e.weight != 1.0) binary_ = false;
      prev = e.label;
      first = false;
    }
  }
}

std::vector<double> AnnotationSet::dense_row(std::size_t i) const {
  std::vector<double> out(vocab_.size(), 0.0);
  for (const auto& e : rows_[i]) out[e.label] = e.weight;
  return out;
}

bool AnnotationSet::has_label(std::size_t i, std::uint32_t label) const {
  const auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), label,
                             [](const Annotation& a, std::uint32_t l) { return a.label < l; });
  return it != row.end() && it->label == label && it->weight > 0.0;
}

std::vector<std::size_t> AnnotationSet::images_per_label() const {
  std::vector<std::size_t> counts(vocab_.size(), 0);
  for (const auto& row : rows_) {
    for (const auto& e : row) {
      if (e.weight > 0.0) ++counts[e.label];
    }
  }
  return counts;
}

AnnotationSet AnnotationSet::take_rows(std::span<const std::size_t> indices) const {
  std::vector<std::vector<Annotation>> rows;
  rows.reserve(indices.size());
  std::vector<std::string> ids;
  ids.reserve(indices.size());
  for (std::size_t idx : indices) {
    require(idx < rows_.size(), "annotation set: row index out of range");
    rows.push_back(rows_[idx]);
    ids.push_back(row_ids_[idx]);
  }
  return AnnotationSet(vocab_, std::move(rows), std::move(ids));
}

GramMatrix::GramMatrix(std::size_t n, std::vector<double> values, std::string kernel_id,
                       std::vector<std::string> row_ids)
    : n_(n), values_(std::move(values)), kernel_id_(std::move(kernel_id)),
      row_ids_(std::move(row_ids)) {
  require(values_.size() == n_ * n_, "gram matrix: value count mismatch");
  check_row_ids(row_ids_, n_, "gram matrix");
  // Mirror the upper triangle so symmetry is bit-exact whatever the source.
  for (std::size_t i = 0; i < n_; ++i) {
    const double d = values_[i * n_ + i];
    require(std::isfinite(d), "gram matrix: non-finite diagonal entry");
    require(d >= 0.0, "gram matrix: negative diagonal entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n_; ++j) {
      require(std::isfinite(values_[i * n_ + j]), "gram matrix: non-finite entry");
      values_[j * n_ + i] = values_[i * n_ + j];
    }
  }
}

double GramMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

GramMatrix GramMatrix::take(std::span<const std::size_t> indices) const {
  std::vector<double> values(indices.size() * indices.size());
  std::vector<std::string> ids;
  ids.reserve(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    require(indices[a] < n_, "gram matrix: index out of range");
    ids.push_back(row_ids_[indices[a]]);
    for (std::size_t b = 0; b < indices.size(); ++b) {
      values[a * indices.size() + b] = at(indices[a], indices[b]);
    }
  }
  return GramMatrix(indices.size(), std::move(values), kernel_id_, std::move(ids));
}

WordVectorTable::WordVectorTable(std::size_t dim,
                                 std::map<std::string, std::vector<double>> entries)
    : dim_(dim), entries_(std::move(entries)) {
  require(dim_ > 0, "word vectors: dimension must be positive");
  for (const auto& [label, vec] : entries_) {
    require(vec.size() == dim_, "word vectors: inconsistent vector length for '" + label + "'");
    for (double v : vec) require(std::isfinite(v), "word vectors: non-finite value");
  }
}

const std::vector<double>* WordVectorTable::find(const std::string& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? nullptr : &it->second;
}

SimilarityMatrix::SimilarityMatrix(Vocabulary vocab, std::vector<double> values)
    : vocab_(std::move(vocab)), values_(std::move(values)) {
  const std::size_t d = vocab_.size();
  require(values_.size() == d * d, "similarity matrix: must be square with side = vocabulary size");
  for (double v : values_) require(std::isfinite(v), "similarity matrix: non-finite value");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double s = 0.5 * (values_[i * d + j] + values_[j * d + i]);
      values_[i * d + j] = s;
      values_[j * d + i] = s;
    }
  }
}

SemanticProjector::SemanticProjector(std::size_t n_train, std::size_t m_dims,
                                     std::vector<double> dual_basis,
                                     std::vector<double> correlations,
                                     std::vector<std::string> train_row_ids,
                                     std::string kernel_id)
    : n_train_(n_train), m_dims_(m_dims), dual_basis_(std::move(dual_basis)),
      correlations_(std::move(correlations)), train_row_ids_(std::move(train_row_ids)),
      kernel_id_(std::move(kernel_id)) {
  require(m_dims_ >= 1, "projector: needs at least one component");
  require(dual_basis_.size() == n_train_ * m_dims_, "projector: dual basis shape mismatch");
  require(correlations_.size() == m_dims_, "projector: correlation count mismatch");
  check_row_ids(train_row_ids_, n_train_, "projector");
  for (std::size_t j = 0; j < m_dims_; ++j) {
    const double r = correlations_[j];
    require(std::isfinite(r) && r > 0.0 && r <= 1.0 + 1e-9,
            "projector: correlation " + std::to_string(j) + " outside (0, 1]");
    require(j == 0 || correlations_[j - 1] >= r,
            "projector: correlations not sorted non-increasing");
  }
  for (double v : dual_basis_) require(std::isfinite(v), "projector: non-finite basis value");
}

}  // namespace semspace
