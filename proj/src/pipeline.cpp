#include "islrec/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <system_error>

#include "islrec/features.hpp"
#include "islrec/imaging.hpp"
#include "islrec/netpbm.hpp"
#include "islrec/temporal.hpp"

namespace fs = std::filesystem;

namespace islrec {

namespace {

bool is_frame_file(const fs::path& p) {
    std::string ext = p.extension().string();
    std::ranges::transform(ext, ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".ppm" || ext == ".pgm";
}

}  // namespace

FrameSequence FrameSequence::from_directory(const fs::path& dir) {
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) throw IoError(dir.string(), "cannot list directory: " + ec.message());

    FrameSequence seq;
    for (const auto& entry : it)
        if (entry.is_regular_file() && is_frame_file(entry.path())) seq.frames.push_back(entry.path());
    if (seq.frames.empty()) throw InvalidArgument(dir.string() + ": no .ppm/.pgm frames");
    std::ranges::sort(seq.frames);
    return seq;
}

LabeledSequences labeled_sequences(const fs::path& root) {
    std::error_code ec;
    fs::directory_iterator it(root, ec);
    if (ec) throw IoError(root.string(), "cannot list directory: " + ec.message());

    LabeledSequences out;
    for (const auto& entry : it)
        if (entry.is_directory()) out.emplace(entry.path().filename().string(), FrameSequence::from_directory(entry.path()));
    if (out.empty()) throw InvalidArgument(root.string() + ": no label subdirectories");
    return out;
}

GrayFrame run_pipeline_frame(const RgbFrame& frame, const PipelineConfig& cfg) {
    const BinaryMask skin = skin_mask(rgb_to_hsv(frame), cfg.skin);
    const BinaryMask hand = largest_component(smooth_mask(skin, cfg.morph_radius));
    return masked_gray(frame, hand);
}

FeatureVector features_of_filtered(const GrayFrame& filtered, const PipelineConfig& cfg) {
    return extract_features(resize_bilinear(filtered, cfg.resize_to, cfg.resize_to), cfg.top_k);
}

FeatureVector featurize(const RgbFrame& frame, const PipelineConfig& cfg) {
    return features_of_filtered(run_pipeline_frame(frame, cfg), cfg);
}

namespace {

ClassifyOptions classify_options(const PipelineConfig& cfg) {
    return ClassifyOptions{cfg.max_score};
}

// Shared by the file-backed and in-memory watch entry points; `frame_at`
// yields frame i.
template <typename FrameAt>
std::vector<WatchEvent> watch_impl(std::size_t count, FrameAt frame_at, const TemplateDb& db,
                                   const PipelineConfig& cfg) {
    cfg.validate();
    if (db.empty()) throw PipelineError("watch requires a non-empty template database");

    std::vector<WatchEvent> events;
    DetectorState state = cfg.detector();
    int width = 0, height = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const RgbFrame frame = frame_at(i);
        if (i == 0) {
            width = frame.width();
            height = frame.height();
        } else if (frame.width() != width || frame.height() != height) {
            throw InvalidArgument("frame " + std::to_string(i) + " is " + std::to_string(frame.width()) + "x" +
                                  std::to_string(frame.height()) + ", sequence is " + std::to_string(width) +
                                  "x" + std::to_string(height));
        }
        GrayFrame filtered = run_pipeline_frame(frame, cfg);
        DetectorStep step = detector_step(std::move(state), filtered);
        state = std::move(step.state);
        if (!step.triggered) continue;
        events.push_back({i, classify(features_of_filtered(filtered, cfg), db, classify_options(cfg))});
    }
    return events;
}

}  // namespace

std::vector<WatchEvent> watch(const FrameSequence& seq, const TemplateDb& db, const PipelineConfig& cfg) {
    return watch_impl(seq.size(), [&](std::size_t i) { return decode_image(seq.frames[i]); }, db, cfg);
}

std::vector<WatchEvent> watch_frames(const std::vector<RgbFrame>& frames, const TemplateDb& db,
                                     const PipelineConfig& cfg) {
    return watch_impl(frames.size(), [&](std::size_t i) { return frames[i]; }, db, cfg);
}

std::vector<std::string> distinct_labels(const std::vector<WatchEvent>& events) {
    std::vector<std::string> out;
    for (const WatchEvent& e : events)
        if (out.empty() || out.back() != e.result.label) out.push_back(e.result.label);
    return out;
}

TemplateDb enroll(const LabeledSequences& labeled, const PipelineConfig& cfg) {
    cfg.validate();
    TemplateDb db;
    // std::map iterates labels in sorted order.
    for (const auto& [label, seq] : labeled) {
        if (label.empty() || label.find_first_of(" \t\r\n") != std::string::npos)
            throw InvalidArgument("label '" + label + "' must be non-empty and free of whitespace");
        if (seq.empty()) throw InvalidArgument("label '" + label + "' has no frames");
        for (const fs::path& path : seq.frames)
            db.templates.push_back({label, featurize(decode_image(path), cfg), path.generic_string()});
    }
    return db;
}

double EvalRow::success_rate() const noexcept {
    return attempted == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(attempted);
}

std::size_t EvalReport::attempted() const noexcept {
    std::size_t n = 0;
    for (const EvalRow& r : rows) n += r.attempted;
    return n;
}

std::size_t EvalReport::correct() const noexcept {
    std::size_t n = 0;
    for (const EvalRow& r : rows) n += r.correct;
    return n;
}

double EvalReport::overall() const noexcept {
    const std::size_t n = attempted();
    return n == 0 ? 0.0 : 100.0 * static_cast<double>(correct()) / static_cast<double>(n);
}

EvalReport evaluate(const LabeledSequences& test_set, const TemplateDb& db, const PipelineConfig& cfg) {
    cfg.validate();
    if (db.empty()) throw PipelineError("evaluation requires a non-empty template database");

    EvalReport report;
    for (const auto& [label, seq] : test_set) {
        EvalRow row{label, 0, 0};
        for (const fs::path& path : seq.frames) {
            const RecognitionResult r = classify(featurize(decode_image(path), cfg), db, classify_options(cfg));
            ++row.attempted;
            if (!r.rejected && r.label == label) ++row.correct;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

std::string percent(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", v);
    return buf;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_report(const EvalReport& report) {
    const std::string h_symbol = "Symbol";
    const std::string h_images = "Number of images experimented";
    const std::string h_correct = "Number of correct recognition";
    const std::string h_rate = "Success rate";

    std::size_t symbol_w = std::max<std::size_t>(h_symbol.size(), 7);  // "Overall"
    for (const EvalRow& r : report.rows) symbol_w = std::max(symbol_w, r.symbol.size());

    auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        return pad_right(a, symbol_w) + "  " + pad_left(b, h_images.size()) + "  " +
               pad_left(c, h_correct.size()) + "  " + pad_left(d, h_rate.size()) + "\n";
    };

    std::string out = line(h_symbol, h_images, h_correct, h_rate);
    out += std::string(out.size() - 1, '-') + "\n";
    for (const EvalRow& r : report.rows)
        out += line(r.symbol, std::to_string(r.attempted), std::to_string(r.correct), percent(r.success_rate()));
    out += std::string(out.find('\n'), '-') + "\n";
    out += line("Overall", std::to_string(report.attempted()), std::to_string(report.correct()),
                percent(report.overall()));
    return out;
}

std::string render_csv(const EvalReport& report) {
    std::string out = "symbol,attempted,correct,success_rate\n";
    auto row = [&](const std::string& s, std::size_t a, std::size_t c, double rate) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", rate);
        out += s + "," + std::to_string(a) + "," + std::to_string(c) + "," + buf + "\n";
    };
    for (const EvalRow& r : report.rows) row(r.symbol, r.attempted, r.correct, r.success_rate());
    row("overall", report.attempted(), report.correct(), report.overall());
    return out;
}

}  // namespace islrec
