#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "islrec/template_db.hpp"

using namespace islrec;

namespace {

FeatureVector random_features(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FeatureVector f;
    double top = 10.0;
    for (int i = 0; i < 5; ++i) {
        top *= std::abs(u(rng));
        f.eigenvalues.push_back(top);
        std::vector<double> v(70);
        for (double& x : v) x = u(rng) / 7.0;
        f.eigenvectors.push_back(std::move(v));
    }
    return f;
}

TemplateDb random_db(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TemplateDb db;
    for (std::size_t i = 0; i < n; ++i)
        db.templates.push_back({std::string(1, static_cast<char>('A' + i % 24)), random_features(rng),
                                "people/p" + std::to_string(i / 24) + " sample.ppm"});
    return db;
}

DbFormatError::Kind kind_of(const std::string& text) {
    try {
        parse_db(text);
    } catch (const DbFormatError& e) {
        return e.kind();
    }
    FAIL("expected DbFormatError");
    return DbFormatError::Kind::BadHeader;
}

}  // namespace

TEST_CASE("empty database is a header-only file") {
    CHECK(serialize_db(TemplateDb{}) == "SIGNDB 1 0\n");
    CHECK(parse_db("SIGNDB 1 0\n").empty());
}

TEST_CASE("single template layout") {
    const TemplateDb db = random_db(1, 5);
    const std::string text = serialize_db(db);
    CHECK(std::count(text.begin(), text.end(), '\n') == 8);
    CHECK(text.rfind("SIGNDB 1 1\nT A people/p0 sample.ppm\nL ", 0) == 0);
    CHECK(text.find("\nV 1 ") != std::string::npos);
    CHECK(text.find("\nV 5 ") != std::string::npos);
    CHECK(parse_db(text) == db);
}

TEST_CASE("480-template round trip is exact") {
    const TemplateDb db = random_db(480, 6);
    const TemplateDb back = parse_db(serialize_db(db));
    REQUIRE(back.size() == 480);
    for (std::size_t i = 0; i < 480; ++i) {
        const Template& a = db.templates[i];
        const Template& b = back.templates[i];
        REQUIRE(a.label == b.label);
        REQUIRE(a.source_id == b.source_id);
        for (std::size_t k = 0; k < 5; ++k) {
            REQUIRE(std::bit_cast<std::uint64_t>(a.features.eigenvalues[k]) ==
                    std::bit_cast<std::uint64_t>(b.features.eigenvalues[k]));
            for (std::size_t j = 0; j < 70; ++j)
                REQUIRE(std::bit_cast<std::uint64_t>(a.features.eigenvectors[k][j]) ==
                        std::bit_cast<std::uint64_t>(b.features.eigenvectors[k][j]));
        }
    }
}

TEST_CASE("round trip holds for extreme reals") {
    TemplateDb db = random_db(1, 7);
    auto& f = db.templates[0].features;
    f.eigenvalues = {1.7976931348623157e308, 1e-300, 4.9406564584124654e-324, 0.0, 0.0};
    f.eigenvectors[0][0] = -0.0;
    f.eigenvectors[1][3] = 0.1 + 0.2;
    const TemplateDb back = parse_db(serialize_db(db));
    CHECK(back == db);
    CHECK(std::signbit(back.templates[0].features.eigenvectors[0][0]));
}

TEST_CASE("file save and load") {
    const auto path = std::filesystem::temp_directory_path() / "islrec_db_test.signdb";
    const TemplateDb db = random_db(30, 8);
    save_db(db, path);
    CHECK(load_db(path) == db);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_db(path), IoError);
}

TEST_CASE("format errors are distinct and carry line numbers") {
    using K = DbFormatError::Kind;
    const std::string good = serialize_db(random_db(2, 9));

    CHECK(kind_of("SIGNDB 2 0\n") == K::VersionMismatch);
    CHECK(kind_of("SIGNDX 1 0\n") == K::BadHeader);
    CHECK(kind_of("SIGNDB 1\n") == K::BadHeader);
    CHECK(kind_of("SIGNDB 1 3\n" + good.substr(good.find('\n') + 1)) == K::CountMismatch);
    CHECK(kind_of("SIGNDB 1 1\n" + good.substr(good.find('\n') + 1)) == K::CountMismatch);

    std::string bad_real = good;
    const auto l = bad_real.find("\nL ");
    bad_real.replace(l + 3, 0, "x");
    CHECK(kind_of(bad_real) == K::MalformedReal);
    try {
        parse_db(bad_real);
    } catch (const DbFormatError& e) {
        CHECK(e.line() == 3);
    }

    std::string bad_tag = good;
    bad_tag.replace(bad_tag.find("\nV 3 "), 5, "\nV 4 ");
    CHECK(kind_of(bad_tag) == K::MalformedRecord);
}

TEST_CASE("serialize refuses labels the format cannot carry") {
    TemplateDb db = random_db(1, 10);
    db.templates[0].label = "two words";
    CHECK_THROWS_AS(serialize_db(db), InvalidArgument);
}
