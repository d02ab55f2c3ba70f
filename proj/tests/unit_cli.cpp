#include <doctest.h>

#include "operad_forge/commands.hpp"
#include "operad_forge/serialize.hpp"

#include <cstdlib>
#include <sstream>

using namespace operad_forge;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(OF_DATA_DIR) + "/" + f; }

} // namespace

TEST_CASE("show ass --dual") {
    Outcome o = call({"show", "ass", "--dual"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("R! = R: yes") != std::string::npos);
}

TEST_CASE("tilde leib prints the two relations") {
    Outcome o = call({"tilde", "leib", "--json"});
    REQUIRE(o.code == kExitOk);
    Json j = Json::parse(o.out);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    const auto& basis = j["sections"][1]["data"]["relations"]["basis"];
    CHECK(basis.size() == 9);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"show"}).code == kExitUsage);
    CHECK(call({"frobnicate"}).code == kExitUsage);
    CHECK(call({"show", "nonesuch"}).code == kExitUsage);
    CHECK(call({"show", data("bad_relation.txt")}).code == kExitUsage);
    CHECK(call({"verify", "theorem1", "--preset", "ass", "--all-presets"}).code == kExitUsage);
    CHECK(call({"search", "counterexample", "--p", "leib", "--q", "zinb", "--max-dim", "7"}).code == kExitUsage);
    CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("parse errors name the position") {
    Outcome o = call({"show", data("bad_relation.txt")});
    CHECK(o.err.find("line 2") != std::string::npos);
}

TEST_CASE("definition files") {
    CHECK(call({"show", data("leibniz.txt"), "--tilde"}).code == kExitOk);
    Outcome o = call({"show", data("lie.json"), "--tilde", "--json"});
    REQUIRE(o.code == kExitOk);
    CHECK(Json::parse(o.out)["sections"][1]["data"]["symmetry"] == "comm");
}

TEST_CASE("verify exit codes follow the verified field") {
    const std::vector<std::vector<std::string>> cmds = {
        {"verify", "theorem1", "--all-presets"},
        {"verify", "theorem1", "--preset", "poiss"},
        {"verify", "bracket-lie"},
        {"verify", "bracket-lie", "--preset", "g3ass"},
        {"verify", "twisted-poisson"},
        {"verify", "twisted-poisson", "--corrected"},
        {"verify", "negative", "--p", "leib", "--q", "zinb"},
        {"verify", "negative", "--p", "g2ass", "--q", "g2ass"},
    };
    for (auto args : cmds) {
        CAPTURE(args.back());
        args.push_back("--json");
        Outcome o = call(args);
        Json j = Json::parse(o.out);
        REQUIRE(j.contains("verified"));
        CHECK((o.code == kExitOk) == j["verified"].get<bool>());
        CHECK((o.code == kExitOk || o.code == kExitFailed));
    }
    CHECK(call({"verify", "twisted-poisson"}).code == kExitFailed);
    CHECK(call({"verify", "theorem1", "--all-presets"}).code == kExitOk);
    CHECK(call({"verify", "negative", "--p", "leib", "--q", "zinb"}).code == kExitOk);
}

TEST_CASE("instance commands") {
    CHECK(call({"instance", "check", data("leib_tilde_3d.json"), "--operad", "ass"}).code == kExitOk);
    CHECK(call({"instance", "check", "zinbiel_3d", "--operad", "leib"}).code == kExitFailed);
    Outcome sym = call({"instance", "check", data("not_leibniz.json"), "--operad", "com"});
    CHECK(sym.code == kExitFailed);
    CHECK(sym.out.find("not comm") != std::string::npos);
    CHECK(call({"instance", "tensor", "lie_2d", "comm_assoc_2d", "--check", "lie"}).code == kExitOk);
    CHECK(call({"instance", "tensor", "poisson_aff1", "poisson_aff1", "--twist", "poisson", "--check", "poiss"}).code ==
          kExitFailed);
    CHECK(call({"instance", "tensor", "poisson_aff1", "poisson_aff1", "--twist", "poisson-corrected", "--check",
                "poiss"})
              .code == kExitOk);
    CHECK(call({"instance", "tensor", "lie_2d", "lie_2d", "--twist", "sideways"}).code == kExitUsage);
}

TEST_CASE("companion and search") {
    CHECK(call({"companion", "leib"}).code == kExitOk);
    CHECK(call({"companion", "lie", "--class", "comm"}).code == kExitOk);
    Outcome o = call({"search", "counterexample", "--p", "leib", "--q", "zinb", "--max-dim", "4", "--seed", "0"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("witness") != std::string::npos);
}

TEST_CASE("seed from the environment") {
    setenv("OPERAD_FORGE_SEED", "17", 1);
    CHECK(default_seed() == 17);
    setenv("OPERAD_FORGE_SEED", "junk", 1);
    CHECK(default_seed() == 0);
    unsetenv("OPERAD_FORGE_SEED");
    CHECK(default_seed() == 0);
}

TEST_CASE("report tables are deterministic") {
    Outcome a = call({"report", "paper-tables", "--seed", "0"});
    Outcome b = call({"report", "paper-tables", "--seed", "0"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out == paper_tables_report(0).text());
}
