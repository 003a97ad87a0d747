/** Shared helper for driving the built CLI binary from tests. */

#pragma once

#include <array>
#include <cstdio>
#include <string>

#include <doctest.h>

#ifndef STRINGCUBES_CLI_PATH
#error "STRINGCUBES_CLI_PATH must point at the built binary"
#endif

namespace cli {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run(const std::string& args)
{
    const std::string cmd = std::string(STRINGCUBES_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace cli
