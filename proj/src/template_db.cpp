#include "islrec/template_db.hpp"

#include <charconv>
#include <vector>

#include "islrec/netpbm.hpp"
#include "islrec/number_format.hpp"

namespace islrec {

namespace {

bool has_space(std::string_view s) {
    return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

void append_reals(std::string& out, std::span<const double> values) {
    for (double v : values) {
        out += ' ';
        out += format_real(v);
    }
}

}  // namespace

std::string serialize_db(const TemplateDb& db) {
    std::string out = "SIGNDB " + std::to_string(kSignDbVersion) + " " + std::to_string(db.size()) + "\n";
    for (const Template& t : db.templates) {
        if (t.label.empty() || has_space(t.label))
            throw InvalidArgument("template label must be non-empty and free of whitespace: '" + t.label + "'");
        if (t.source_id.find_first_of("\r\n") != std::string::npos)
            throw InvalidArgument("template source id must not contain line breaks");
        t.features.validate();
        if (t.features.count() != static_cast<std::size_t>(kTopEigenpairs))
            throw InvalidArgument("SIGNDB v1 stores exactly 5 eigenpairs per template");

        out += "T " + t.label + " " + t.source_id + "\n";
        out += "L";
        append_reals(out, t.features.eigenvalues);
        out += '\n';
        for (std::size_t i = 0; i < t.features.count(); ++i) {
            out += "V " + std::to_string(i + 1);
            append_reals(out, t.features.eigenvectors[i]);
            out += '\n';
        }
    }
    return out;
}

namespace {

using Kind = DbFormatError::Kind;

class LineCursor {
public:
    explicit LineCursor(std::string_view text) : text_(text) {}

    bool done() const noexcept { return text_.empty(); }
    std::size_t line_no() const noexcept { return line_no_; }

    std::string_view next(const char* expecting) {
        if (text_.empty())
            throw DbFormatError(Kind::CountMismatch, line_no_ + 1,
                                std::string("unexpected end of file, expected ") + expecting);
        const auto eol = text_.find('\n');
        std::string_view line = text_.substr(0, eol);
        text_ = eol == std::string_view::npos ? std::string_view{} : text_.substr(eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no_;
        return line;
    }

private:
    std::string_view text_;
    std::size_t line_no_ = 0;
};

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(' ', pos);
        if (start == std::string_view::npos) break;
        const auto end = line.find(' ', start);
        fields.push_back(line.substr(start, end - start));
        pos = end == std::string_view::npos ? line.size() : end;
    }
    return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char* what) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw DbFormatError(Kind::BadHeader, line, std::string("malformed ") + what + " '" + std::string(field) + "'");
    return out;
}

std::vector<double> parse_reals(std::span<const std::string_view> fields, std::size_t line) {
    std::vector<double> out;
    out.reserve(fields.size());
    for (std::string_view f : fields) {
        const auto v = parse_real(f);
        if (!v) throw DbFormatError(Kind::MalformedReal, line, "malformed real '" + std::string(f) + "'");
        out.push_back(*v);
    }
    return out;
}

}  // namespace

TemplateDb parse_db(std::string_view text) {
    LineCursor lines(text);
    const std::string_view header = lines.next("header");
    const auto head = split_fields(header);
    if (head.size() != 3 || head[0] != "SIGNDB")
        throw DbFormatError(Kind::BadHeader, 1, "expected 'SIGNDB <version> <count>'");
    const std::size_t version = parse_count(head[1], 1, "version");
    if (version != static_cast<std::size_t>(kSignDbVersion))
        throw DbFormatError(Kind::VersionMismatch, 1,
                            "unsupported SIGNDB version " + std::string(head[1]) + " (expected 1)");
    const std::size_t count = parse_count(head[2], 1, "template count");

    TemplateDb db;
    db.templates.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Template t;

        std::string_view tline = lines.next("template record");
        if (tline.size() < 2 || tline.substr(0, 2) != "T ")
            throw DbFormatError(Kind::MalformedRecord, lines.line_no(), "expected 'T <label> <sourceId>'");
        tline.remove_prefix(2);
        const auto sep = tline.find(' ');
        t.label = std::string(tline.substr(0, sep));
        t.source_id = sep == std::string_view::npos ? std::string{} : std::string(tline.substr(sep + 1));
        if (t.label.empty())
            throw DbFormatError(Kind::MalformedRecord, lines.line_no(), "empty template label");

        const auto lfields = split_fields(lines.next("eigenvalue line"));
        if (lfields.empty() || lfields[0] != "L")
            throw DbFormatError(Kind::MalformedRecord, lines.line_no(), "expected 'L' eigenvalue line");
        if (lfields.size() != 1 + kTopEigenpairs)
            throw DbFormatError(Kind::MalformedRecord, lines.line_no(), "expected 5 eigenvalues");
        t.features.eigenvalues = parse_reals(std::span(lfields).subspan(1), lines.line_no());

        for (int i = 1; i <= kTopEigenpairs; ++i) {
            const auto vfields = split_fields(lines.next("eigenvector line"));
            if (vfields.size() < 2 || vfields[0] != "V" || vfields[1] != std::to_string(i))
                throw DbFormatError(Kind::MalformedRecord, lines.line_no(),
                                    "expected 'V " + std::to_string(i) + "' eigenvector line");
            if (vfields.size() < 3)
                throw DbFormatError(Kind::MalformedRecord, lines.line_no(), "eigenvector has no components");
            t.features.eigenvectors.push_back(parse_reals(std::span(vfields).subspan(2), lines.line_no()));
        }
        try {
            t.features.validate();
        } catch (const InvalidArgument& e) {
            throw DbFormatError(Kind::MalformedRecord, lines.line_no(), e.what());
        }
        db.templates.push_back(std::move(t));
    }

    while (!lines.done()) {
        const std::string_view extra = lines.next("trailing content");
        if (!extra.empty())
            throw DbFormatError(Kind::CountMismatch, lines.line_no(),
                                "more template records than the header count " + std::to_string(count));
    }
    return db;
}

void save_db(const TemplateDb& db, const std::filesystem::path& path) {
    const std::string text = serialize_db(db);
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

TemplateDb load_db(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    try {
        return parse_db(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } catch (const DbFormatError& e) {
        throw DbFormatError(e.kind(), e.line(), path.string() + ": " + e.detail());
    }
}

}  // namespace islrec
