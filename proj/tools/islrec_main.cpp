// islrec: enroll sign templates, recognize single frames or held signs in a
// frame sequence, and score a labeled test set.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "islrec/config.hpp"
#include "islrec/netpbm.hpp"
#include "islrec/pipeline.hpp"
#include "islrec/template_db.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kFormat = 2, kPipeline = 3 };

struct Options {
    std::string config_path;
    std::string db_path;
    std::optional<double> tau_hist;
    std::optional<int> n_trigger;
    std::string csv_path;
    std::string similarity_sense;

    std::string enroll_root;
    std::string image_path;
    bool details = false;
    std::string watch_dir;
    std::string eval_root;
};

islrec::PipelineConfig resolve_config(const Options& o) {
    islrec::PipelineConfig cfg;
    if (!o.config_path.empty()) cfg = islrec::load_config(o.config_path);
    if (o.tau_hist) cfg.tau_hist = *o.tau_hist;
    if (o.n_trigger) cfg.n_trigger = *o.n_trigger;
    if (!o.similarity_sense.empty()) cfg.similarity_sense = islrec::parse_similarity_sense(o.similarity_sense);
    cfg.validate();
    return cfg;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

islrec::TemplateDb require_db(const Options& o) {
    if (o.db_path.empty()) throw CLI::RequiredError("--db");
    return islrec::load_db(o.db_path);
}

int run_enroll(const Options& o) {
    if (o.db_path.empty()) throw CLI::RequiredError("--db");
    const islrec::PipelineConfig cfg = resolve_config(o);
    const islrec::TemplateDb db = islrec::enroll(islrec::labeled_sequences(o.enroll_root), cfg);
    islrec::save_db(db, o.db_path);
    std::cout << "enrolled " << db.size() << " templates into " << o.db_path << "\n";
    return kOk;
}

int run_recognize(const Options& o) {
    const islrec::PipelineConfig cfg = resolve_config(o);
    const islrec::TemplateDb db = require_db(o);
    const islrec::FeatureVector f = islrec::featurize(islrec::decode_image(o.image_path), cfg);
    const islrec::RecognitionResult r = islrec::classify(f, db, islrec::ClassifyOptions{cfg.max_score});

    if (o.details) {
        for (const auto& t : r.per_template) {
            std::cout << t.label;
            for (double term : t.terms) std::cout << '\t' << fixed(term, 4);
            std::cout << '\t' << fixed(t.score, 4) << '\t' << t.source_id << "\n";
        }
    }
    std::cout << "recognized " << r.label << " score " << fixed(r.best_score, 6)
              << (r.rejected ? " (rejected)" : "") << "\n";
    return kOk;
}

int run_watch(const Options& o) {
    const islrec::PipelineConfig cfg = resolve_config(o);
    const islrec::TemplateDb db = require_db(o);
    const auto events = islrec::watch(islrec::FrameSequence::from_directory(o.watch_dir), db, cfg);
    for (const auto& e : events)
        std::cout << "frame " << e.frame_index << " " << e.result.label << " score "
                  << fixed(e.result.best_score, 6) << (e.result.rejected ? " (rejected)" : "") << "\n";
    std::cout << "signs:";
    for (const auto& label : islrec::distinct_labels(events)) std::cout << ' ' << label;
    std::cout << "\n";
    return kOk;
}

int run_eval(const Options& o) {
    const islrec::PipelineConfig cfg = resolve_config(o);
    const islrec::TemplateDb db = require_db(o);
    const islrec::EvalReport report = islrec::evaluate(islrec::labeled_sequences(o.eval_root), db, cfg);
    std::cout << islrec::render_report(report);
    if (!o.csv_path.empty()) {
        const std::string csv = islrec::render_csv(report);
        islrec::write_file(o.csv_path, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
    }
    return kOk;
}

int run_db_info(const Options& o) {
    const islrec::TemplateDb db = require_db(o);
    std::map<std::string, std::size_t> per_label;
    for (const auto& t : db.templates) ++per_label[t.label];
    std::cout << "templates " << db.size() << "\nlabels " << per_label.size() << "\n";
    for (const auto& [label, n] : per_label) std::cout << "  " << label << ' ' << n << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static sign recognition from skin-filtered eigen features"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--config", o.config_path, "key = value pipeline configuration file");
    app.add_option("--db", o.db_path, "template database (SIGNDB)");
    app.add_option("--tau-hist", o.tau_hist, "histogram similarity threshold");
    app.add_option("--n-trigger", o.n_trigger, "similar frame pairs needed to declare a sign");
    app.add_option("--csv", o.csv_path, "also write the evaluation report as CSV");
    app.add_option("--similarity-sense", o.similarity_sense, "below|above")
        ->check(CLI::IsMember({"below", "above"}));

    auto* enroll = app.add_subcommand("enroll", "build a template database from <root>/<label>/*.ppm|pgm");
    enroll->add_option("root", o.enroll_root)->required()->check(CLI::ExistingDirectory);

    auto* recognize = app.add_subcommand("recognize", "classify one image");
    recognize->add_option("image", o.image_path)->required();
    recognize->add_flag("--details", o.details, "print per-template weighted terms");

    auto* watch = app.add_subcommand("watch", "recognize held signs in a frame directory");
    watch->add_option("dir", o.watch_dir)->required()->check(CLI::ExistingDirectory);

    auto* eval = app.add_subcommand("eval", "success rates over <root>/<label>/*.ppm|pgm");
    eval->add_option("root", o.eval_root)->required()->check(CLI::ExistingDirectory);

    auto* db_info = app.add_subcommand("db-info", "summarize a template database");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enroll) return run_enroll(o);
        if (*recognize) return run_recognize(o);
        if (*watch) return run_watch(o);
        if (*eval) return run_eval(o);
        if (*db_info) return run_db_info(o);
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: " << e.what() << " is required\n";
        return kUsage;
    } catch (const islrec::ImageParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const islrec::DbFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const islrec::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const islrec::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const islrec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPipeline;
    }
    return kUsage;
}
