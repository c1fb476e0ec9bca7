#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "islrec/imaging.hpp"
#include "islrec/temporal.hpp"

namespace islrec {

struct PipelineConfig {
    SkinThresholds skin;
    int morph_radius = 1;
    int hist_bins = kHistogramBins;
    double tau_hist = 0.05;
    int n_trigger = 17;
    int resize_to = 70;
    int top_k = 5;
    SimilaritySense similarity_sense = SimilaritySense::Below;
    /// Optional rejection threshold on the best template score.
    std::optional<double> max_score;

    void validate() const;
    DetectorState detector() const;
};

/// Applies one `key = value` setting. Throws ConfigError for unknown keys
/// or unparsable values.
void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Parses `key = value` lines; blank lines and '#' comments are ignored.
/// Settings are applied on top of `base`.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});

/// Renders every setting in the file syntax accepted by parse_config.
std::string to_config_text(const PipelineConfig& cfg);

SimilaritySense parse_similarity_sense(std::string_view text);
std::string_view to_string(SimilaritySense sense) noexcept;

}  // namespace islrec
