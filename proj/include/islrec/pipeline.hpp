#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "islrec/classifier.hpp"
#include "islrec/config.hpp"

namespace islrec {

/// Image files of one recording; lexicographic path order is time order.
struct FrameSequence {
    std::vector<std::filesystem::path> frames;

    /// All .ppm/.pgm files directly inside `dir`, sorted. Throws IoError if
    /// the directory cannot be listed and InvalidArgument if it holds no
    /// frames.
    static FrameSequence from_directory(const std::filesystem::path& dir);

    bool empty() const noexcept { return frames.empty(); }
    std::size_t size() const noexcept { return frames.size(); }
};

using LabeledSequences = std::map<std::string, FrameSequence>;

/// One FrameSequence per immediate subdirectory of `root`, keyed by the
/// subdirectory name.
LabeledSequences labeled_sequences(const std::filesystem::path& root);

/// Skin filtering chain: HSV -> skin mask -> smoothing -> largest
/// component -> masked gray. Output keeps the input size.
GrayFrame run_pipeline_frame(const RgbFrame& frame, const PipelineConfig& cfg);

/// Resize of a filtered frame followed by eigen feature extraction.
FeatureVector features_of_filtered(const GrayFrame& filtered, const PipelineConfig& cfg);

/// run_pipeline_frame followed by features_of_filtered.
FeatureVector featurize(const RgbFrame& frame, const PipelineConfig& cfg);

struct WatchEvent {
    std::size_t frame_index = 0;
    RecognitionResult result;
};

/// Streams frames through the detector and classifies the frame that
/// completes each run of `n_trigger` similar pairs. Frames of a sequence
/// must share dimensions.
std::vector<WatchEvent> watch(const FrameSequence& seq, const TemplateDb& db, const PipelineConfig& cfg);

/// In-memory variant of watch for already decoded frames.
std::vector<WatchEvent> watch_frames(const std::vector<RgbFrame>& frames, const TemplateDb& db,
                                     const PipelineConfig& cfg);

/// Collapses consecutive events with the same label.
std::vector<std::string> distinct_labels(const std::vector<WatchEvent>& events);

/// One template per image, ordered by label and then by frame order.
TemplateDb enroll(const LabeledSequences& labeled, const PipelineConfig& cfg);

struct EvalRow {
    std::string symbol;
    std::size_t attempted = 0;
    std::size_t correct = 0;

    double success_rate() const noexcept;
};

struct EvalReport {
    std::vector<EvalRow> rows;

    std::size_t attempted() const noexcept;
    std::size_t correct() const noexcept;
    /// 100 * total correct / total attempted; 0 for an empty report.
    double overall() const noexcept;
};

/// Classifies every image of the test set on its own (no temporal
/// segmentation) and tallies per-symbol success.
EvalReport evaluate(const LabeledSequences& test_set, const TemplateDb& db, const PipelineConfig& cfg);

/// Fixed-width table: symbol, images, correct, success rate, plus an
/// overall line.
std::string render_report(const EvalReport& report);
std::string render_csv(const EvalReport& report);

}  // namespace islrec
