#include "islrec/classifier.hpp"

#include <cmath>

namespace islrec {

double eigvec_distance(std::span<const double> test, std::span<const double> db) {
    if (test.size() != db.size()) throw InvalidArgument("eigenvector lengths differ");
    double sum = 0.0;
    for (std::size_t j = 0; j < test.size(); ++j) {
        const double d = test[j] - db[j];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double sum_terms(std::span<const double> terms) noexcept {
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

WeightedScore weighted_score(const FeatureVector& test, const FeatureVector& db) {
    if (test.count() != db.count())
        throw InvalidArgument("feature vectors hold different numbers of eigenpairs");
    WeightedScore out;
    out.terms.reserve(test.count());
    for (std::size_t i = 0; i < test.count(); ++i) {
        const double weight = std::abs(test.eigenvalues[i] - db.eigenvalues[i]);
        out.terms.push_back(weight * eigvec_distance(test.eigenvectors[i], db.eigenvectors[i]));
    }
    out.score = sum_terms(out.terms);
    return out;
}

std::size_t argmin_score(std::span<const double> scores) {
    if (scores.empty()) throw InvalidArgument("argmin of an empty score list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] < scores[best]) best = i;
    return best;
}

RecognitionResult classify(const FeatureVector& test, const TemplateDb& db,
                           const ClassifyOptions& options) {
    if (db.empty()) throw PipelineError("cannot classify against an empty template database");

    RecognitionResult result;
    result.per_template.reserve(db.size());
    std::vector<double> scores;
    scores.reserve(db.size());
    for (const Template& t : db.templates) {
        WeightedScore ws = weighted_score(test, t.features);
        scores.push_back(ws.score);
        result.per_template.push_back({t.source_id, t.label, ws.score, std::move(ws.terms)});
    }

    result.best_index = argmin_score(scores);
    result.best_score = scores[result.best_index];
    result.label = db.templates[result.best_index].label;
    result.rejected = options.max_score && result.best_score > *options.max_score;
    return result;
}

}  // namespace islrec
