#include "bpl/error.hpp"
#include "bpl/report.hpp"

#include "doctest.h"

#include <filesystem>

using namespace bpl;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> json_files(const fs::path& dir) {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

ErrorKind kind_of(const Json& spec) {
    try {
        build_from_spec(spec);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("spec accepted");
    return ErrorKind::Setup;
}

std::string message_of(const Json& spec) {
    try {
        build_from_spec(spec);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("frozen corpus rebuilds byte for byte") {
    const fs::path root(BPL_CORPUS_DIR);
    const auto specs = json_files(root / "specs");
    REQUIRE(specs.size() >= 10);
    for (const auto& f : specs) {
        CAPTURE(f.string());
        const Construction c = build_from_spec(parse_json_text(read_file(f.string()), f.string()));
        CHECK(dump(to_json(c)) == read_file((root / "constructions" / f.filename()).string()));
    }
}

TEST_CASE("constructions round trip through JSON") {
    const fs::path root(BPL_CORPUS_DIR);
    for (const auto& f : json_files(root / "constructions")) {
        CAPTURE(f.string());
        const Json j = parse_json_text(read_file(f.string()), f.string());
        const Construction c = construction_from_json(j);
        CHECK(construction_from_json(to_json(c)) == c);
        CHECK(dump(to_json(c)) == dump(j));
    }
}

TEST_CASE("building twice is byte identical") {
    const Json spec = Json::parse(R"({"kind": "T", "params": {"k": 2, "l": 1, "m": 1}})");
    CHECK(dump(to_json(build_from_spec(spec))) == dump(to_json(build_from_spec(spec))));
    const Construction c = build_from_spec(spec);
    CHECK(dump(invariant_report(c)) == dump(invariant_report(c)));
}

TEST_CASE("SVG output is deterministic and well formed") {
    for (const char* s : {R"({"kind": "T", "params": {"k": 1, "l": 2, "m": 0}})",
                          R"({"kind": "gamma", "n": 2, "xi": {"kind": "Xi", "g": 1, "pieces": [[1,1,1],[2,1,1]]}})"}) {
        const Construction c = build_from_spec(Json::parse(s));
        const std::string a = render_svg(c), b = render_svg(c);
        CHECK(a == b);
        CHECK(a.rfind("<svg", 0) == 0);
        CHECK(a.find("</svg>") != std::string::npos);
    }
}

TEST_CASE("schema errors name the offending field") {
    CHECK(kind_of(Json::parse(R"({"kind": "T", "params": {"k": 1, "l": 2}})")) == ErrorKind::Schema);
    CHECK(message_of(Json::parse(R"({"kind": "T", "params": {"k": 1, "l": 2}})")).find("params.m") != std::string::npos);
    CHECK(kind_of(Json::parse(R"({"kind": "T", "params": {"k": 1, "l": 2, "m": 0, "z": 1}})")) == ErrorKind::Schema);
    CHECK(kind_of(Json::parse(R"({"kind": "Q"})")) == ErrorKind::Schema);
    CHECK(kind_of(Json::parse(R"({"kind": "T", "params": {"k": "one", "l": 2, "m": 0}})")) == ErrorKind::Schema);
    CHECK(kind_of(Json::parse(R"([1, 2])")) == ErrorKind::Schema);
}

TEST_CASE("malformed JSON reports line and column") {
    try {
        parse_json_text("{\n  \"kind\": ,\n}", "inline");
        FAIL("parsed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Schema);
        CHECK(std::string(e.what()).find("2:") != std::string::npos);
    }
}

TEST_CASE("family catalogs") {
    const Json slice = family_catalog(Json::parse(R"({"family": "T_slice", "c": 1, "m": 0, "k_min": 0, "k_max": 3})"));
    CHECK(discrepancy_count(slice) == 0);
    CHECK(slice["entries"].size() == 4);
    const Json bad = family_catalog(Json::parse(R"({"family": "Lambda_gcd", "diffs": [[2, 4], [4, 2]]})"));
    CHECK(discrepancy_count(bad) > 0);
    const Json empty = family_catalog(Json::parse(R"({"family": "T_slice", "c": 1, "m": 0, "k_min": 0, "k_max": -1})"));
    CHECK(empty["entries"].empty());
    CHECK(discrepancy_count(empty) == 0);
}

TEST_CASE("text rendering flattens every leaf") {
    const Json j = Json::parse(R"({"a": {"b": 1, "c": [2, 3]}})");
    const std::string t = render_text(j);
    CHECK(t.find("a.b: 1") != std::string::npos);
}
