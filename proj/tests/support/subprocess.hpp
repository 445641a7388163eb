#ifndef LINKRANK_TESTS_SUBPROCESS_HPP
#define LINKRANK_TESTS_SUBPROCESS_HPP

// Minimal popen wrapper for exercising the CLI binary from tests.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string out; // captured stdout
};

// Runs `command` through /bin/sh. stderr passes through unless the caller
// redirects it inside the command string.
inline RunResult run_command(const std::string& command) {
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + command);
    }
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testsupport

#endif
