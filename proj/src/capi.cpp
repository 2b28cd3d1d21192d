#include "ceq/ceq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"
#include "workspace.hpp"

struct ceq_workspace {
    ceq::ws::Bundle bundle;
};

namespace {

void copy_error(const std::string& msg, char* err, size_t errcap) {
    if (!err || errcap == 0) return;
    size_t n = msg.size() < errcap - 1 ? msg.size() : errcap - 1;
    std::memcpy(err, msg.data(), n);
    err[n] = '\0';
}

int status_for(const ceq::CeqError& e) {
    switch (e.code()) {
        case ceq::ErrorCode::ParseError:
            return CEQ_ERR_PARSE;
        case ceq::ErrorCode::UnresolvedReference:
            return CEQ_ERR_UNRESOLVED;
        default:
            return CEQ_ERR_VALIDATION;
    }
}

template <typename Load>
int load_guarded(ceq_workspace* ws, char* err, size_t errcap, Load&& load) {
    // Parse into a copy so a failing document leaves the workspace intact.
    ceq::ws::Bundle staged = ws->bundle;
    try {
        load(staged);
    } catch (const ceq::CeqError& e) {
        copy_error(e.what(), err, errcap);
        return status_for(e);
    } catch (const std::exception& e) {
        copy_error(e.what(), err, errcap);
        return CEQ_ERR_OTHER;
    }
    ws->bundle = std::move(staged);
    return CEQ_OK;
}

}  // namespace

extern "C" {

ceq_workspace* ceq_workspace_new(void) { return new (std::nothrow) ceq_workspace(); }

void ceq_workspace_free(ceq_workspace* ws) { delete ws; }

int ceq_load_file(ceq_workspace* ws, const char* path, char* err, size_t errcap) {
    return load_guarded(ws, err, errcap, [&](ceq::ws::Bundle& b) { ceq::ws::load_file(b, path); });
}

int ceq_load_string(ceq_workspace* ws, const char* text, char* err, size_t errcap) {
    return load_guarded(ws, err, errcap, [&](ceq::ws::Bundle& b) { ceq::ws::load_string(b, text, "<string>"); });
}

int ceq_run(ceq_workspace* ws, int argc, const char* const* argv, char** output) {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    ceq::cmd::RunResult r = ceq::cmd::run(ws->bundle, args);
    if (output) {
        *output = static_cast<char*>(std::malloc(r.output.size() + 1));
        if (*output) std::memcpy(*output, r.output.c_str(), r.output.size() + 1);
    }
    return r.exit_code;
}

void ceq_free_string(char* s) { std::free(s); }

const char* ceq_version(void) { return "0.1.0"; }

}  // extern "C"
