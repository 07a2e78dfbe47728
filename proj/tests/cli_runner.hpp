#pragma once

// Subprocess helper for driving the installed CLI binary from tests.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace cli {

#ifndef USO_CLI_PATH
#error "USO_CLI_PATH must point at the uso binary"
#endif

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs `uso <args>` capturing stdout; stderr is dropped unless merge_stderr.
inline RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string{USO_CLI_PATH} + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed: " + cmd);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    const int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

// Per-process scratch directory, removed at exit.
inline std::filesystem::path scratch_dir() {
    static const struct Holder {
        std::filesystem::path dir;
        Holder()
            : dir(std::filesystem::temp_directory_path() /
                  ("uso_tests_" + std::to_string(::getpid()))) {
            std::filesystem::create_directories(dir);
        }
        ~Holder() {
            std::error_code ec;
            std::filesystem::remove_all(dir, ec);
        }
    } holder;
    return holder.dir;
}

inline std::string write_temp(const std::string& name, const std::string& text) {
    const std::filesystem::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out.good()) throw std::runtime_error("cannot write " + p.string());
    return p.string();
}

// First value of "key=..." in a line-oriented report, or empty.
inline std::string report_value(const std::string& out, const std::string& key) {
    const std::string needle = key + "=";
    std::size_t pos = 0;
    while (pos < out.size()) {
        const std::size_t eol = out.find('\n', pos);
        const std::string line = out.substr(pos, eol - pos);
        if (line.rfind(needle, 0) == 0) return line.substr(needle.size());
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    return {};
}

}  // namespace cli
