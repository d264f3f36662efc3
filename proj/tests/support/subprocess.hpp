#pragma once

// Runs the lgsim binary (path from $LGSIM_BIN) and captures stdout + exit code.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace cli {

struct Result {
    int exit_code = -1;
    std::string out;
};

inline std::string binary_path() {
    const char* path = std::getenv("LGSIM_BIN");
    if (!path || !*path) {
        throw std::runtime_error("LGSIM_BIN is not set; run through ctest");
    }
    return path;
}

/// `args` is everything after the binary name; stderr is folded into stdout.
/// `env_prefix` may hold VAR=value assignments for the child.
inline Result run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = (env_prefix.empty() ? "" : env_prefix + " ") + "'" +
                            binary_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    Result r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace cli
