#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ceq/ceq.h"

int main(int argc, char** argv) {
    CLI::App app{"finite category computations: initiality, opfibrations, weak equivalence, localization"};
    app.allow_extras();

    std::vector<std::string> files;
    std::string format = "human";
    int bound = 2;
    long long work_limit = 10000000;
    bool witness = false;
    app.add_option("-f,--file", files, "workspace file (repeatable)")->allow_extra_args(false);
    app.add_option("--format", format, "output format: human or records")->check(CLI::IsMember({"human", "records"}));
    app.add_option("--bound", bound, "oracle fibre bound");
    app.add_option("--work-limit", work_limit, "oracle work limit");
    app.add_flag("--witness", witness, "force certificate emission");

    CLI11_PARSE(app, argc, argv);

    ceq_workspace* ws = ceq_workspace_new();
    if (!ws) return 2;
    char err[1024];
    for (const auto& path : files)
        if (ceq_load_file(ws, path.c_str(), err, sizeof err) != CEQ_OK) {
            std::fprintf(stderr, "%s\n", err);
            ceq_workspace_free(ws);
            return 2;
        }

    std::vector<std::string> args = app.remaining();
    args.push_back("--format");
    args.push_back(format);
    args.push_back("--bound");
    args.push_back(std::to_string(bound));
    args.push_back("--work-limit");
    args.push_back(std::to_string(work_limit));
    if (witness) args.push_back("--witness");

    std::vector<const char*> argp;
    for (const auto& a : args) argp.push_back(a.c_str());

    char* output = nullptr;
    int code = ceq_run(ws, static_cast<int>(argp.size()), argp.data(), &output);
    if (output) {
        std::fputs(output, code == 2 || code == 3 ? stderr : stdout);
        ceq_free_string(output);
    }
    ceq_workspace_free(ws);
    return code;
}
