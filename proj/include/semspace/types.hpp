#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "semspace/errors.hpp"

namespace semspace {

// Ordered label dictionary. Position in `labels()` is the label index used
// by every sparse annotation row and every score-matrix column.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::uint32_t i) const { return labels_.at(i); }
  std::optional<std::uint32_t> index_of(const std::string& label) const;

  bool operator==(const Vocabulary& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Dense row-major real matrix with one row per image. Used for raw visual
// features, pooled word-vector rows, rectangular kernel blocks and
// projected embeddings. Values are 64-bit internally regardless of the
// on-disk dtype.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t n_rows, std::size_t n_cols,
                std::vector<double> values, std::vector<std::string> row_ids);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_cols_ + j]; }
  double& at(std::size_t i, std::size_t j) { return values_[i * n_cols_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * n_cols_, n_cols_};
  }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  const std::vector<std::string>& row_ids() const { return row_ids_; }
  const std::string& row_id(std::size_t i) const { return row_ids_[i]; }

  FeatureMatrix take_rows(std::span<const std::size_t> indices) const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<double> values_;
  std::vector<std::string> row_ids_;
};

struct Annotation {
  std::uint32_t label;
  double weight;
};

// Sparse image x label incidence. Binary sets carry expert labels or raw
// user tags (all weights exactly 0/1); real-valued sets carry denoised tag
// mass in [0, 1]. Rows are sorted by label index with no duplicates.
class AnnotationSet {
 public:
  AnnotationSet() = default;
  AnnotationSet(Vocabulary vocab, std::vector<std::vector<Annotation>> rows,
                std::vector<std::string> row_ids);

  std::size_t n_rows() const { return rows_.size(); }
  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<Annotation>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::string>& row_ids() const { return row_ids_; }
  bool binary() const { return binary_; }

  // Dense D-vector of one row (weights at label positions, 0 elsewhere).
  std::vector<double> dense_row(std::size_t i) const;
  bool has_label(std::size_t i, std::uint32_t label) const;
  std::size_t label_count(std::size_t i) const { return rows_[i].size(); }

  // Per-label number of images carrying the label (weight > 0).
  std::vector<std::size_t> images_per_label() const;

  AnnotationSet take_rows(std::span<const std::size_t> indices) const;

 private:
  Vocabulary vocab_;
  std::vector<std::vector<Annotation>> rows_;
  std::vector<std::string> row_ids_;
  bool binary_ = true;
};

// Symmetric kernel matrix over one image set. Symmetry is exact by
// construction (upper triangle mirrored); `kernel_id` names the producing
// kernel and its resolved parameters.
class GramMatrix {
 public:
  GramMatrix() = default;
  GramMatrix(std::size_t n, std::vector<double> values, std::string kernel_id,
             std::vector<std::string> row_ids);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  const std::vector<double>& values() const { return values_; }
  const std::string& kernel_id() const { return kernel_id_; }
  const std::vector<std::string>& row_ids() const { return row_ids_; }
  double trace() const;

  GramMatrix take(std::span<const std::size_t> indices) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  std::string kernel_id_;
  std::vector<std::string> row_ids_;
};

// label -> embedding vector, all of identical length.
class WordVectorTable {
 public:
  WordVectorTable() = default;
  WordVectorTable(std::size_t dim, std::map<std::string, std::vector<double>> entries);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<double>* find(const std::string& label) const;

 private:
  std::size_t dim_ = 0;
  std::map<std::string, std::vector<double>> entries_;
};

// D x D label-to-label similarity, symmetrized on construction.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(Vocabulary vocab, std::vector<double> values);

  const Vocabulary& vocab() const { return vocab_; }
  std::size_t size() const { return vocab_.size(); }
  double at(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
  const std::vector<double>& values() const { return values_; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * size(), size()};
  }

  // Replaces S with its nearest PSD approximation (negative eigenvalues
  // clipped to zero). Optional repair for users requiring a certified
  // PSD textual kernel.
  void clip_to_psd();

 private:
  Vocabulary vocab_;
  std::vector<double> values_;
};

// Trained semantic-space model: dual basis over the N training images plus
// per-component correlation weights. Embedding a Q-row kernel block B is
// (B * A) * diag(correlations).
class SemanticProjector {
 public:
  SemanticProjector() = default;
  SemanticProjector(std::size_t n_train, std::size_t m_dims,
                    std::vector<double> dual_basis, std::vector<double> correlations,
                    std::vector<std::string> train_row_ids, std::string kernel_id);

  std::size_t n_train() const { return n_train_; }
  std::size_t m_dims() const { return m_dims_; }
  // Row-major N x M.
  const std::vector<double>& dual_basis() const { return dual_basis_; }
  double basis_at(std::size_t i, std::size_t j) const { return dual_basis_[i * m_dims_ + j]; }
  const std::vector<double>& correlations() const { return correlations_; }
  const std::vector<std::string>& train_row_ids() const { return train_row_ids_; }
  const std::string& kernel_id() const { return kernel_id_; }

 private:
  std::size_t n_train_ = 0;
  std::size_t m_dims_ = 0;
  std::vector<double> dual_basis_;
  std::vector<double> correlations_;
  std::vector<std::string> train_row_ids_;
  std::string kernel_id_;
};

// Q x D relevance matrix: one row per query image, one column per label.
struct RelevanceScores {
  Vocabulary vocab;
  std::vector<std::string> row_ids;
  std::vector<double> values;  // row-major Q x D

  std::size_t n_rows() const { return row_ids.size(); }
  double at(std::size_t q, std::size_t t) const { return values[q * vocab.size() + t]; }
  double& at(std::size_t q, std::size_t t) { return values[q * vocab.size() + t]; }
};

void require(bool cond, const std::string& message);

}  // namespace semspace
