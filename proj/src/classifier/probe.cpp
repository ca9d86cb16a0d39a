// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mereoscan/classifier/probe.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <regex>

#include "mereoscan/error.hpp"

namespace mereoscan::classifier {

namespace {

constexpr const char* kModule = "classifier";
constexpr std::string_view kPlaceholder = "{workspace}";

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

}  // namespace

std::string_view to_string(SuccessCriterion c) noexcept {
    return c == SuccessCriterion::ExitZero ? "exit0" : "regex";
}

std::optional<SuccessCriterion> parse_success_criterion(std::string_view s) noexcept {
    if (s == "exit0") return SuccessCriterion::ExitZero;
    if (s == "regex") return SuccessCriterion::Regex;
    return std::nullopt;
}

std::string_view to_string(ProbeStatus s) noexcept {
    switch (s) {
        case ProbeStatus::Pass: return "pass";
        case ProbeStatus::Fail: return "fail";
        case ProbeStatus::Timeout: return "timeout";
    }
    return "fail";
}

void ProbeSpec::validate() const {
    if (command.empty()) throw ConfigError(kModule, "probe command is empty");
    if (!(timeout_s > 0) || !std::isfinite(timeout_s)) {
        throw ConfigError(kModule, "probe timeout must be a positive number of seconds");
    }
    if (jobs < 1) throw ConfigError(kModule, "probe jobs must be at least 1");
    if (success == SuccessCriterion::Regex) {
        if (pattern.empty()) throw ConfigError(kModule, "regex success criterion needs a pattern");
        try {
            std::regex re(pattern);
        } catch (const std::regex_error& e) {
            throw ConfigError(kModule, "invalid success pattern: " + std::string(e.what()));
        }
    }
}

std::string ProbeSpec::render(const std::filesystem::path& workspace) const {
    std::string out;
    const std::string ws = shell_quote(workspace.string());
    std::size_t pos = 0;
    while (pos < command.size()) {
        if (command.compare(pos, kPlaceholder.size(), kPlaceholder) == 0) {
            out += ws;
            pos += kPlaceholder.size();
            continue;
        }
        if (command[pos] == '{' && (pos == 0 || command[pos - 1] != '$')) {
            auto close = command.find('}', pos);
            if (close != std::string::npos && close > pos + 1) {
                auto name = command.substr(pos + 1, close - pos - 1);
                bool ident = !std::isdigit(static_cast<unsigned char>(name[0])) &&
                             std::all_of(name.begin(), name.end(), [](unsigned char c) {
                                 return std::isalnum(c) || c == '_';
                             });
                if (ident) {
                    throw ConfigError(kModule, "unresolved placeholder {" + name + "} in probe command");
                }
            }
        }
        out += command[pos++];
    }
    return out;
}

ProbeOutcome run_probe(const ProbeSpec& spec, const std::filesystem::path& staged_root) {
    spec.validate();
    const std::string cmd = spec.render(staged_root);
    ProbeOutcome out;

    int fds[2];
    if (pipe(fds) != 0) {
        out.diagnostic = std::string("cannot create pipe: ") + std::strerror(errno);
        return out;
    }
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        out.diagnostic = std::string("cannot fork: ") + std::strerror(errno);
        return out;
    }
    if (pid == 0) {
        setpgid(0, 0);
        dup2(fds[1], STDOUT_FILENO);
        dup2(fds[1], STDERR_FILENO);
        close(fds[0]);
        close(fds[1]);
        int devnull = open("/dev/null", O_RDONLY);
        if (devnull >= 0) dup2(devnull, STDIN_FILENO);
        if (chdir(staged_root.c_str()) != 0) _exit(126);
        execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    setpgid(pid, pid);
    close(fds[1]);
    fcntl(fds[0], F_SETFL, fcntl(fds[0], F_GETFL) | O_NONBLOCK);

    using clock = std::chrono::steady_clock;
    const auto deadline =
        clock::now() + std::chrono::duration_cast<clock::duration>(
                           std::chrono::duration<double>(spec.timeout_s));
    bool exited = false;
    bool timed_out = false;
    bool eof = false;
    int status = 0;
    char buf[4096];

    auto drain = [&] {
        for (;;) {
            ssize_t n = read(fds[0], buf, sizeof buf);
            if (n > 0) {
                auto room = kTranscriptCap - out.transcript.size();
                if (static_cast<std::size_t>(n) > room) out.truncated = true;
                out.transcript.append(buf, std::min<std::size_t>(room, n));
                continue;
            }
            if (n == 0) eof = true;
            return;
        }
    };

    while (!exited) {
        auto now = clock::now();
        if (now >= deadline) {
            timed_out = true;
            break;
        }
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
        pollfd p{fds[0], POLLIN, 0};
        int wait_ms = static_cast<int>(std::min<long long>(left + 1, 50));
        if (!eof && poll(&p, 1, wait_ms) > 0) {
            drain();
        } else if (eof) {
            usleep(static_cast<useconds_t>(wait_ms) * 1000);
        }
        pid_t r = waitpid(pid, &status, WNOHANG);
        if (r == pid) exited = true;
    }

    // Stray background children of the probe go with the process group.
    kill(-pid, SIGKILL);
    if (timed_out) {
        waitpid(pid, &status, 0);
    } else {
        drain();
    }
    close(fds[0]);

    if (timed_out) {
        out.status = ProbeStatus::Timeout;
        out.diagnostic = "timed out after " + std::to_string(spec.timeout_s) + " s";
        return out;
    }
    if (WIFEXITED(status)) {
        out.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        out.diagnostic = "terminated by signal " + std::to_string(WTERMSIG(status));
    }
    if (out.exit_code == 127) out.diagnostic = "command not found (exit 127)";
    if (out.exit_code == 126 && out.diagnostic.empty()) out.diagnostic = "command not executable (exit 126)";

    bool passed = false;
    if (spec.success == SuccessCriterion::ExitZero) {
        passed = out.exit_code == 0;
    } else {
        passed = std::regex_search(out.transcript, std::regex(spec.pattern));
    }
    out.status = passed ? ProbeStatus::Pass : ProbeStatus::Fail;
    return out;
}

}  // namespace mereoscan::classifier
