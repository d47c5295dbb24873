#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "acv/lab.hpp"

using namespace acv;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an acv::Error");
    return ErrorCode::NotFound;
}

json without_wall_time(json j)
{
    j.erase("wall_time_ms");
    return j;
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("acv_lab_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter()
    {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const json& content) const
    {
        const fs::path p = path / name;
        std::ofstream(p) << content.dump(2);
        return p.string();
    }
};

int run(const std::string& args)
{
    const std::string cmd = std::string(ACV_LAB_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json borel_fixture()
{
    auto rng = trial_rng(3, 0);
    const ACVPoint pt = sample_point(2, random_sample_params(rng, 2));
    const BorelCertificate cert = symplectic_triangularize(pt.x, pt.y);
    json j = io::to_json(cert);
    j["x"] = io::to_json(pt.x);
    j["y"] = io::to_json(pt.y);
    return j;
}

} // namespace

TEST_CASE("suite examples", "[lab]")
{
    const auto yn = lab::run_suite("yn", {3, 42, 1, 6, "-"});
    CHECK(yn.pass());
    CHECK(yn.records.front().witness.at("components").size() == 8);

    const auto levi = lab::run_suite("levi", {6, 0, 1, 6, "-"});
    CHECK(levi.pass());
    // sum over m <= 6 of the number of (n0, partition of m - n0) pairs
    CHECK(levi.records.size() == 2 + 4 + 7 + 12 + 19 + 30);

    const auto smooth = lab::run_suite("smoothness", {2, 1, 50, 6, "-"});
    CHECK(smooth.pass());
    std::size_t certified = 0;
    for (const auto& r : smooth.records) {
        if (r.name.rfind("sample", 0) != 0) continue;
        CHECK(r.witness.at("jacobian_rank") == 10);
        CHECK(r.witness.at("variety_dim") == 14);
        certified += r.pass ? 1 : 0;
    }
    CHECK(certified == 50);
}

TEST_CASE("every suite passes at small scale", "[lab]")
{
    for (const auto& [name, fn] : lab::suite_table()) {
        (void)fn;
        for (std::size_t n = 1; n <= 2; ++n) {
            INFO(name << " n=" << n);
            const auto rep = lab::run_suite(name, {n, 5, 3, 4, "-"});
            CHECK(rep.pass());
            for (const auto& r : rep.records) CHECK_FALSE(r.anchor.empty());
        }
    }
}

TEST_CASE("reports are deterministic apart from wall time", "[lab][property]")
{
    for (const auto& name : {"smoothness", "triangularize", "quotient", "closed-orbits", "mn"}) {
        const lab::SuiteConfig cfg{2, 99, 3, 4, "-"};
        const json a = without_wall_time(lab::to_json(lab::run_suite(name, cfg)));
        const json b = without_wall_time(lab::to_json(lab::run_suite(name, cfg)));
        CHECK(a.dump() == b.dump());
        const json c = without_wall_time(lab::to_json(lab::run_suite(name, {2, 100, 3, 4, "-"})));
        CHECK(c.at("config").at("seed") == 100);
        CHECK(c.dump() != a.dump());
    }
}

TEST_CASE("aggregate pass iff every record passes", "[lab]")
{
    lab::SuiteReport rep;
    CHECK_FALSE(rep.pass());
    rep.add("a", lab::anchor::dimension, true);
    CHECK(rep.pass());
    rep.add("b", lab::anchor::dimension, false);
    CHECK_FALSE(rep.pass());
    CHECK(lab::to_json(rep).at("pass") == false);
    CHECK(lab::to_json(rep).at("records").at(1).at("verdict") == "fail");
}

TEST_CASE("suite errors", "[lab]")
{
    CHECK(code_of([] { lab::run_suite("nope", {1, 0, 1, 6, "-"}); }) == ErrorCode::UnknownSuite);
    CHECK(code_of([] { lab::run_suite("yn", {0, 0, 1, 6, "-"}); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { lab::run_suite("yn", {1, 0, 0, 6, "-"}); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("verify: valid and tampered Borel certificates", "[lab][fixture]")
{
    TempDir dir;
    const json good = borel_fixture();
    CHECK(lab::verify_fixture(dir.file("good.json", good)).pass());

    json bare = good;
    bare.erase("x");
    bare.erase("y");
    CHECK(lab::verify_fixture(dir.file("bare.json", bare)).pass());

    json tampered = good;
    tampered["g"]["entries"][1] = to_string(io::rational_from_json(good["g"]["entries"][1]) + 1);
    const auto rep = lab::verify_fixture(dir.file("tampered.json", tampered));
    CHECK_FALSE(rep.pass());
    const std::string violations = rep.records.front().witness.at("violations").dump();
    CHECK(violations.find("g is not symplectic") != std::string::npos);

    json wrong_x = good;
    wrong_x["x"] = good["y"];
    CHECK_FALSE(lab::verify_fixture(dir.file("wrong_x.json", wrong_x)).pass());
}

TEST_CASE("verify: points are checked against the defining equation", "[lab][fixture]")
{
    TempDir dir;
    const ACVPoint pt = witness_point(2, CartanPoint{ExactVector{1, 2}});
    CHECK(lab::verify_fixture(dir.file("pt.json", io::to_json(pt))).pass());

    json off = io::to_json(pt);
    off["i"]["q"][0] = "1";
    const auto rep = lab::verify_fixture(dir.file("off.json", off));
    CHECK_FALSE(rep.pass());
    bool cited = false;
    for (const auto& r : rep.records)
        if (!r.pass && r.anchor.find("[x,y]+i^2=0") != std::string::npos) cited = true;
    CHECK(cited);

    json not_sp = io::to_json(pt);
    not_sp["x"]["entries"][0] = "9";
    CHECK_FALSE(lab::verify_fixture(dir.file("not_sp.json", not_sp)).pass());
}

TEST_CASE("verify: dimension certificates are recomputed, not trusted", "[lab][fixture]")
{
    TempDir dir;
    const ACVPoint pt = witness_point(1, CartanPoint{ExactVector{3}});
    json cert = io::to_json(dimension_certificate(pt));
    cert["point"] = io::to_json(pt);
    CHECK(lab::verify_fixture(dir.file("cert.json", cert)).pass());

    json lie = cert;
    lie["jacobian_rank"] = 2;
    lie["verdict"] = "not-certified";
    CHECK_FALSE(lab::verify_fixture(dir.file("lie.json", lie)).pass());

    json origin = io::to_json(dimension_certificate(ACVPoint::origin(SymplecticSpace(1))));
    origin["point"] = io::to_json(ACVPoint::origin(SymplecticSpace(1)));
    origin["verdict"] = "smooth";
    CHECK_FALSE(lab::verify_fixture(dir.file("origin.json", origin)).pass());
}

TEST_CASE("verify: malformed fixtures", "[lab][fixture]")
{
    TempDir dir;
    const fs::path broken = dir.path / "broken.json";
    std::ofstream(broken) << "{ not json";
    CHECK(code_of([&] { lab::verify_fixture(broken.string()); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { lab::verify_fixture((dir.path / "missing.json").string()); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { lab::verify_fixture(dir.file("arr.json", json::array())); }) == ErrorCode::SchemaError);
    CHECK(code_of([&] { lab::verify_fixture(dir.file("obj.json", json{{"foo", 1}})); }) == ErrorCode::SchemaError);
    CHECK(code_of([&] { lab::verify_fixture(dir.file("badg.json", json{{"g", 1}, {"n", 1}})); }) ==
          ErrorCode::SchemaError);
}

TEST_CASE("CLI: suites, verify, sample", "[lab][cli]")
{
    TempDir dir;
    const fs::path report = dir.path / "yn.json";
    CHECK(run("suite yn --n 2 --seed 1 --trials 2 --out " + report.string()) == 0);
    const json j = json::parse(slurp(report));
    CHECK(j.at("suite") == "yn");
    CHECK(j.at("pass") == true);
    CHECK(j.at("config").contains("sampling_ranges"));

    const fs::path again = dir.path / "yn2.json";
    CHECK(run("suite yn --n 2 --seed 1 --trials 2 --out " + again.string()) == 0);
    CHECK(without_wall_time(json::parse(slurp(again))) == without_wall_time(j));

    CHECK(run("suite wallach --n 1 --seed 0 --trials 1 --degree 4 --out -") == 0);
    CHECK(run("suite bogus --n 1 --seed 0 --trials 1") == 2);
    CHECK(run("suite yn --n 0 --seed 0 --trials 1") == 2);
    CHECK(run("suite yn --seed 0 --trials 1") != 0);

    const fs::path sample = dir.path / "sample.json";
    CHECK(run("sample --n 2 --seed 7 --out " + sample.string()) == 0);
    CHECK(run("verify " + sample.string()) == 0);
    CHECK(lab::verify_fixture(sample.string()).pass());

    json bad = json::parse(slurp(sample));
    bad["i"]["p"][0] = "100";
    bad["i"]["q"][0] = "100";
    CHECK(run("verify " + dir.file("bad.json", bad)) == 1);

    json tampered = borel_fixture();
    tampered["g"]["entries"][0] = "12345";
    CHECK(run("verify " + dir.file("tampered.json", tampered)) == 1);
    CHECK(run("verify " + (dir.path / "nope.json").string()) == 2);
}
