#include "cli.hpp"

#include "qcgeo/corpus.hpp"
#include "qcgeo/lie_input.hpp"

#include <catch_amalgamated.hpp>
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qcgeo::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("qcgeo_cli_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

int count(const std::string& text, const std::string& needle) {
    int c = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("validate accepts the bundled models", "[cli]") {
    for (const char* name : {"heisenberg_n1", "cfs_solvable", "sphere_n2"}) {
        const Outcome r = run({"validate", name});
        INFO(name << ": " << r.err);
        CHECK(r.code == qcgeo::cli::kComputed);
        const json j = json::parse(r.out);
        CHECK(j["valid"] == true);
        CHECK(j["failures"].empty());
    }
}

TEST_CASE("validate reports the failing index", "[cli]") {
    TempDir dir;
    qcgeo::CoframeModel m = qcgeo::solvable_model();
    m.differentials[6] -= qcgeo::Rational(2) * qcgeo::basis_form(m.layout(), {4, 5});
    const fs::path file = dir.path() / "flipped.json";
    write_file(file, qcgeo::serialize_model(m));
    const Outcome r = run({"validate", file.string()});
    CHECK(r.code == qcgeo::cli::kFailed);
    const json j = json::parse(r.out);
    CHECK(j["valid"] == false);
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["index"] == 7);
}

TEST_CASE("validate on malformed input", "[cli]") {
    TempDir dir;
    const fs::path file = dir.path() / "broken.json";
    write_file(file, R"({"name":"x","n":1,"d":{"1":[{"c":"1/0","jk":[1,2]}]}})");
    const Outcome r = run({"validate", file.string()});
    CHECK(r.code == qcgeo::cli::kFailed);
    CHECK(json::parse(r.out)["stage"] == "parse");
    CHECK(run({"validate", (dir.path() / "missing.json").string()}).code == qcgeo::cli::kUsage);
}

TEST_CASE("report output is deterministic", "[cli]") {
    const Outcome a = run({"report", "cfs_solvable"});
    const Outcome b = run({"report", "cfs_solvable"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"report", "cfs_solvable", "--format", "text"}).out ==
          run({"report", "cfs_solvable", "--format", "text"}).out);
}

TEST_CASE("report fields", "[cli]") {
    const json h = json::parse(run({"report", "heisenberg_n1"}).out);
    CHECK(h["flat"] == true);
    CHECK(h["scalar_curvature"] == "0");
    CHECK(h["qc_connection"].empty());

    const json c = json::parse(run({"report", "cfs_solvable"}).out);
    CHECK(c["scalar_curvature"] == "-9");
    CHECK(c["chi_V"][0][0] == "3/4");
    CHECK(c["chi_V"][1][1] == "-1/4");
    CHECK(c["qc_einstein"] == false);
    CHECK(c["four_form_closed"] == true);

    const json s = json::parse(run({"report", "sphere_n1"}).out);
    CHECK(s["qc_einstein"] == true);
    CHECK(s["flat"] == false);
    CHECK(s["scalar_curvature"] == "36");
}

TEST_CASE("report writes to a file", "[cli]") {
    TempDir dir;
    const fs::path file = dir.path() / "out.json";
    const Outcome r = run({"report", "sphere_n1", "--out", file.string()});
    CHECK(r.code == 0);
    std::ifstream in(file);
    CHECK(json::parse(in)["name"] == "sphere_n1");
}

TEST_CASE("repdim", "[cli]") {
    CHECK(run({"repdim", "--n", "3", "--weights", "2,1,1"}).out == "70\n");
    CHECK(run({"repdim", "--n", "2", "--weights", "0"}).out == "1\n");
    CHECK(run({"repdim", "--n", "2", "--weights", "1,x"}).code == qcgeo::cli::kUsage);
    CHECK(run({"repdim", "--weights", "1"}).code == qcgeo::cli::kUsage);
}

TEST_CASE("repcheck reports the rank-one degeneracies", "[cli]") {
    const Outcome r = run({"repcheck", "--max-n", "3"});
    CHECK(r.code == qcgeo::cli::kFailed);
    CHECK(count(r.out, "FAIL") == 3);
    CHECK(run({"repcheck", "--max-n", "13"}).code == qcgeo::cli::kUsage);
}

TEST_CASE("hwv", "[cli]") {
    for (int n = 1; n <= 3; ++n) {
        const Outcome r = run({"hwv", "--n", std::to_string(n)});
        INFO(r.out);
        CHECK(r.code == 0);
        CHECK((r.out.find("note: n = 1") != std::string::npos) == (n == 1));
        CHECK(count(r.out, "FAIL") == 0);
    }
    CHECK(run({"hwv", "--n", "4"}).code == qcgeo::cli::kUsage);
}

TEST_CASE("batch processes a directory", "[cli]") {
    TempDir in, out;
    for (const auto& m : qcgeo::bundled_corpus())
        if (m.n == 1) write_file(in.path() / (m.name + ".json"), qcgeo::serialize_model(m));
    const Outcome r = run({"batch", in.path().string(), "--out", out.path().string()});
    CHECK(r.code == 0);
    for (const auto& entry : fs::directory_iterator(in.path())) {
        const fs::path produced = out.path() / entry.path().filename();
        CHECK(fs::exists(produced));
    }
    CHECK(run({"batch", (in.path() / "nowhere").string(), "--out", out.path().string()}).code == qcgeo::cli::kUsage);
}

TEST_CASE("bundled names resolve through the data directory override", "[cli]") {
    TempDir dir;
    qcgeo::CoframeModel m = qcgeo::heisenberg_model(1);
    m.name = "override_probe";
    write_file(dir.path() / "override_probe.json", qcgeo::serialize_model(m));
    ::setenv("QCGEO_DATA", dir.path().c_str(), 1);
    const Outcome r = run({"validate", "override_probe"});
    ::unsetenv("QCGEO_DATA");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["name"] == "override_probe");
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(run({}).code == qcgeo::cli::kUsage);
    CHECK(run({"frobnicate"}).code == qcgeo::cli::kUsage);
    CHECK(run({"report"}).code == qcgeo::cli::kUsage);
}
