#include "islrec/config.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "islrec/features.hpp"
#include "islrec/netpbm.hpp"
#include "islrec/number_format.hpp"

namespace islrec {

void PipelineConfig::validate() const {
    skin.validate();
    if (morph_radius < 1) throw ConfigError("morph_radius must be at least 1");
    if (hist_bins != kHistogramBins)
        throw ConfigError("hist_bins is fixed at " + std::to_string(kHistogramBins));
    if (!(tau_hist > 0.0)) throw ConfigError("tau_hist must be positive");
    if (n_trigger < 1) throw ConfigError("n_trigger must be at least 1");
    if (resize_to < 2) throw ConfigError("resize_to must be at least 2");
    if (top_k != kTopEigenpairs)
        throw ConfigError("top_k is fixed at " + std::to_string(kTopEigenpairs));
    if (max_score && !(*max_score >= 0.0)) throw ConfigError("max_score must be non-negative");
}

DetectorState PipelineConfig::detector() const {
    DetectorState s;
    s.n = n_trigger;
    s.tau_hist = tau_hist;
    s.sense = similarity_sense;
    return s;
}

SimilaritySense parse_similarity_sense(std::string_view text) {
    if (text == "below") return SimilaritySense::Below;
    if (text == "above") return SimilaritySense::Above;
    throw ConfigError("similarity_sense must be 'below' or 'above', got '" + std::string(text) + "'");
}

std::string_view to_string(SimilaritySense sense) noexcept {
    return sense == SimilaritySense::Below ? "below" : "above";
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double real_value(std::string_view key, std::string_view value) {
    if (auto v = parse_real(value)) return *v;
    throw ConfigError("setting '" + std::string(key) + "' expects a real number, got '" +
                      std::string(value) + "'");
}

int int_value(std::string_view key, std::string_view value) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("setting '" + std::string(key) + "' expects an integer, got '" +
                          std::string(value) + "'");
    return out;
}

}  // namespace

void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value) {
    if (key == "skin.h_min") cfg.skin.h_min = real_value(key, value);
    else if (key == "skin.h_max") cfg.skin.h_max = real_value(key, value);
    else if (key == "skin.s_min") cfg.skin.s_min = real_value(key, value);
    else if (key == "skin.s_max") cfg.skin.s_max = real_value(key, value);
    else if (key == "skin.v_min") cfg.skin.v_min = real_value(key, value);
    else if (key == "skin.v_max") cfg.skin.v_max = real_value(key, value);
    else if (key == "morph_radius") cfg.morph_radius = int_value(key, value);
    else if (key == "hist_bins") cfg.hist_bins = int_value(key, value);
    else if (key == "tau_hist") cfg.tau_hist = real_value(key, value);
    else if (key == "n_trigger") cfg.n_trigger = int_value(key, value);
    else if (key == "resize_to") cfg.resize_to = int_value(key, value);
    else if (key == "top_k") cfg.top_k = int_value(key, value);
    else if (key == "similarity_sense") cfg.similarity_sense = parse_similarity_sense(value);
    else if (key == "max_score") {
        if (value == "none") cfg.max_score.reset();
        else cfg.max_score = real_value(key, value);
    } else
        throw ConfigError("unknown setting '" + std::string(key) + "'");
}

PipelineConfig parse_config(std::string_view text, PipelineConfig base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        try {
            apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    base.validate();
    return base;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base) {
    const auto bytes = read_file(path);
    return parse_config(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()),
                        std::move(base));
}

std::string to_config_text(const PipelineConfig& cfg) {
    std::ostringstream out;
    out << "skin.h_min = " << format_real(cfg.skin.h_min) << '\n'
        << "skin.h_max = " << format_real(cfg.skin.h_max) << '\n'
        << "skin.s_min = " << format_real(cfg.skin.s_min) << '\n'
        << "skin.s_max = " << format_real(cfg.skin.s_max) << '\n'
        << "skin.v_min = " << format_real(cfg.skin.v_min) << '\n'
        << "skin.v_max = " << format_real(cfg.skin.v_max) << '\n'
        << "morph_radius = " << cfg.morph_radius << '\n'
        << "hist_bins = " << cfg.hist_bins << '\n'
        << "tau_hist = " << format_real(cfg.tau_hist) << '\n'
        << "n_trigger = " << cfg.n_trigger << '\n'
        << "resize_to = " << cfg.resize_to << '\n'
        << "top_k = " << cfg.top_k << '\n'
        << "similarity_sense = " << to_string(cfg.similarity_sense) << '\n'
        << "max_score = " << (cfg.max_score ? format_real(*cfg.max_score) : std::string("none")) << '\n';
    return out.str();
}

}  // namespace islrec
