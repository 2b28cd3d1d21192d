#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>

#include "ceq/ceq.h"

static std::string fixture_path() {
    const char* dir = std::getenv("CEQ_FIXTURES");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/examples.ceq";
}

static int run(ceq_workspace* ws, std::vector<const char*> argv, std::string* text = nullptr) {
    char* out = nullptr;
    int code = ceq_run(ws, static_cast<int>(argv.size()), argv.data(), text ? &out : nullptr);
    if (text) {
        *text = out ? out : "";
        ceq_free_string(out);
    }
    return code;
}

TEST_CASE("version string") {
    CHECK(std::string(ceq_version()) == "0.1.0");
}

TEST_CASE("load and run through the shared library") {
    ceq_workspace* ws = ceq_workspace_new();
    REQUIRE(ws != nullptr);
    char err[256] = "";
    REQUIRE(ceq_load_file(ws, fixture_path().c_str(), err, sizeof err) == CEQ_OK);

    std::string text;
    CHECK(run(ws, {"validate"}, &text) == 0);
    CHECK(text.find("workspace ok") != std::string::npos);

    CHECK(run(ws, {"--format", "records", "weq", "u_c1_c11"}, &text) == 1);
    CHECK(text == "rec=weq value=false dopf=P_E lifts_source=2 lifts_target=4\n");
    CHECK(run(ws, {"weq", "r0_rel"}) == 0);
    CHECK(run(ws, {"initial", "R0"}) == 1);
    CHECK(run(ws, {"initial", "S0"}) == 0);
    CHECK(run(ws, {"--bound", "6", "--work-limit", "10", "weq-oracle", "r0_rel"}) == 3);
    CHECK(run(ws, {"frobnicate"}) == 2);

    // definitions can be added across multiple loads
    CHECK(ceq_load_string(ws, "diagram extra c1\n", err, sizeof err) == CEQ_OK);
    CHECK(run(ws, {"--format", "records", "factorize", "extra"}, &text) == 0);
    CHECK(text == "rec=factorization elements=1 p=0:0,1:1\n");

    ceq_workspace_free(ws);
}

TEST_CASE("load failures report a message and leave the workspace intact") {
    ceq_workspace* ws = ceq_workspace_new();
    char err[256] = "";
    CHECK(ceq_load_string(ws, "category X\n  objects A\nend\n", err, sizeof err) == CEQ_OK);

    CHECK(ceq_load_string(ws, "category Y\n  bogus\nend\n", err, sizeof err) == CEQ_ERR_PARSE);
    CHECK(err[0] != '\0');
    CHECK(ceq_load_string(ws, "functor F : X -> Z\nend\n", err, sizeof err) == CEQ_ERR_UNRESOLVED);
    CHECK(ceq_load_string(ws, "category C\n  objects A B C\n  mor f : A -> B\n  mor g : B -> C\nend\n", err,
                          sizeof err) == CEQ_ERR_VALIDATION);
    CHECK(ceq_load_file(ws, "/nonexistent/file.ceq", err, sizeof err) == CEQ_ERR_PARSE);

    // the failed loads above must not have registered anything
    std::string text;
    CHECK(run(ws, {"--format", "records", "validate"}, &text) == 0);
    CHECK(text == "rec=validate categories=1 functors=0 nats=0 diagrams=0 copresheaves=0 dmorphs=0\n");

    // truncation keeps the buffer terminated
    char tiny[8];
    CHECK(ceq_load_string(ws, "category Y\n  bogus\nend\n", tiny, sizeof tiny) == CEQ_ERR_PARSE);
    CHECK(tiny[7] == '\0');

    ceq_workspace_free(ws);
    ceq_workspace_free(nullptr);
}
