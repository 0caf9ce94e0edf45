#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "semspace/types.hpp"

namespace semspace::io {

enum class MatrixFormat { binary, csv };
enum class Dtype : std::uint8_t { f32 = 0, f64 = 1 };

// FMAT container: magic "FMAT", u32 version, u8 dtype, u64 rows, u64 cols,
// row-major little-endian values, then a u64 byte length followed by the
// newline-separated row-id block. Loaders reject NaN/Inf and truncation.
struct FmatData {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Dtype dtype = Dtype::f64;
  std::vector<double> values;
  std::vector<std::string> row_ids;  // empty when the file carries no ids
};

void save_fmat(const std::filesystem::path& path, std::size_t rows, std::size_t cols,
               const std::vector<double>& values, const std::vector<std::string>& row_ids,
               Dtype dtype);
FmatData load_fmat(const std::filesystem::path& path);

FeatureMatrix load_feature_matrix(const std::filesystem::path& path, MatrixFormat format);
void save_feature_matrix(const std::filesystem::path& path, const FeatureMatrix& m,
                         Dtype dtype = Dtype::f64);

// Annotation text: one image per line, "id<TAB>label1,label2,...".
// Out-of-vocabulary labels are dropped and counted, not fatal.
struct AnnotationLoadResult {
  AnnotationSet set;
  std::size_t unknown_labels_dropped = 0;
};
AnnotationLoadResult load_annotations(const std::filesystem::path& path, const Vocabulary& vocab);
void save_annotations(const std::filesystem::path& path, const AnnotationSet& ann);

// Real-valued annotation rows stored as a dense FMAT block (one column per
// vocabulary label).
void save_annotation_matrix(const std::filesystem::path& path, const AnnotationSet& ann);
AnnotationSet load_annotation_matrix(const std::filesystem::path& path, const Vocabulary& vocab);

Vocabulary load_vocabulary(const std::filesystem::path& path);
void save_vocabulary(const std::filesystem::path& path, const Vocabulary& vocab);

// Text format: "label v1 v2 ... vP", space-separated, one label per line.
WordVectorTable load_word_vectors(const std::filesystem::path& path);

SimilarityMatrix load_similarity_matrix(const std::filesystem::path& path,
                                        const Vocabulary& vocab, MatrixFormat format);

GramMatrix load_gram(const std::filesystem::path& path, const std::string& kernel_id);
void save_gram(const std::filesystem::path& path, const GramMatrix& gram);

void save_projector(const std::filesystem::path& path, const SemanticProjector& p);
SemanticProjector load_projector(const std::filesystem::path& path);

void save_scores(const std::filesystem::path& path, const RelevanceScores& scores);

// 64-bit FNV-1a over the file bytes; cache keys and sidecar provenance.
std::uint64_t hash_file(const std::filesystem::path& path);

}  // namespace semspace::io
