#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "islrec/features.hpp"

namespace islrec {

struct Template {
    std::string label;
    FeatureVector features;
    std::string source_id;

    friend bool operator==(const Template&, const Template&) = default;
};

/// Enrolled templates in enrollment order. Labels may repeat.
struct TemplateDb {
    std::vector<Template> templates;

    bool empty() const noexcept { return templates.empty(); }
    std::size_t size() const noexcept { return templates.size(); }

    friend bool operator==(const TemplateDb&, const TemplateDb&) = default;
};

struct TemplateScore {
    std::string source_id;
    std::string label;
    double score = 0.0;
    std::vector<double> terms;
};

struct RecognitionResult {
    std::string label;
    double best_score = 0.0;
    std::size_t best_index = 0;
    /// Set only when a rejection threshold is configured and exceeded; the
    /// label then still names the nearest template.
    bool rejected = false;
    std::vector<TemplateScore> per_template;
};

struct WeightedScore {
    double score = 0.0;
    std::vector<double> terms;
};

struct ClassifyOptions {
    std::optional<double> max_score;
};

/// Euclidean distance between two eigenvectors of equal length.
double eigvec_distance(std::span<const double> test, std::span<const double> db);

/// term_i = |lambda_test_i - lambda_db_i| * eigvec_distance(v_test_i, v_db_i);
/// the score is the sum of the terms, accumulated in index order.
WeightedScore weighted_score(const FeatureVector& test, const FeatureVector& db);

/// Sum of precomputed per-eigenvector terms, in index order.
double sum_terms(std::span<const double> terms) noexcept;

/// Index of the smallest score; the lowest index wins ties. Requires a
/// non-empty range.
std::size_t argmin_score(std::span<const double> scores);

/// Nearest template under weighted_score. Throws PipelineError on an empty
/// database.
RecognitionResult classify(const FeatureVector& test, const TemplateDb& db,
                           const ClassifyOptions& options = {});

}  // namespace islrec
