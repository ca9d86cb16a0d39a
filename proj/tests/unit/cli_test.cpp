// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "mereoscan/cli/app.hpp"
#include "mereoscan/cli/config.hpp"
#include "mereoscan/error.hpp"
#include "mereoscan/version.hpp"
#include "support.hpp"

using namespace mereoscan;
namespace fs = std::filesystem;

namespace {

const fs::path kFix = support::fixture_dir();
const fs::path kIvo = kFix / "ivo";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell.
Result run_binary(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" + support::tool_path().string() + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::string ivo_config() { return (kIvo / "mereoscan.json").string(); }

// Restores an environment variable on scope exit.
class EnvGuard {
public:
    explicit EnvGuard(const char* name) : name_(name) {
        if (const char* v = std::getenv(name)) old_ = v;
    }
    ~EnvGuard() {
        if (old_) setenv(name_, old_->c_str(), 1);
        else unsetenv(name_);
    }

private:
    const char* name_;
    std::optional<std::string> old_;
};

}  // namespace

TEST(Cli, HelpAndVersion) {
    auto h = run({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_EQ(h.out, cli::help_text());
    auto v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find(std::string(kVersion)), std::string::npos);
    for (const char* sub : {"scan", "classify", "verdict", "check-model"}) {
        auto r = run({sub, "--help"});
        EXPECT_EQ(r.code, 0) << sub;
        EXPECT_FALSE(r.out.empty()) << sub;
    }
}

TEST(Cli, EveryConfigKeyHasAFlag) {
    const std::string help = cli::help_text();
    const std::vector<std::pair<std::string, std::string>> keys{
        {"grammars", "--grammar"},
        {"manifest", "--manifest"},
        {"entries", "--entry"},
        {"mode", "--mode"},
        {"include_loose", "--include-loose"},
        {"orphans_standalone", "--orphans-standalone"},
        {"cycle_cap", "--cycle-cap"},
        {"format", "--format"},
        {"probe.command", "--probe-command"},
        {"probe.timeout_s", "--probe-timeout"},
        {"probe.success", "--probe-success"},
        {"probe.pattern", "--probe-pattern"},
        {"probe.replace", "--replace"},
        {"probe.staging_prefix", "--staging-prefix"},
        {"probe.jobs", "--jobs"},
    };
    for (const auto& [key, flag] : keys) {
        EXPECT_NE(help.find(flag + " "), std::string::npos) << key;
        // The key is accepted by the config parser.
        const auto dot = key.find('.');
        std::string body = dot == std::string::npos ? "\"" + key + "\": null"
                                                    : "\"probe\": {\"" + key.substr(dot + 1) + "\": null}";
        try {
            cli::parse_config("{\"schema\": \"config/v1\", " + body + "}");
        } catch (const SchemaError& e) {
            EXPECT_EQ(std::string(e.what()).find("unknown"), std::string::npos) << key << ": " << e.what();
        } catch (const Error&) {
        }
    }
    EXPECT_THROW(cli::parse_config(R"({"schema": "config/v1", "colour": true})"), SchemaError);
}

TEST(Cli, ExitCodesAcrossTheCorpus) {
    EXPECT_EQ(run({"verdict", (kIvo / "tree").string(), "--config", ivo_config()}).code, 0);
    EXPECT_EQ(run({"verdict", (kFix / "two_programs" / "tree").string()}).code, 0);
    EXPECT_EQ(run({"verdict", (kFix / "compiled" / "tree").string(), "--config",
                   (kFix / "compiled" / "mereoscan.json").string()})
                  .code,
              0);
    support::TempDir tmp;
    support::make_stripped_tree(tmp.path() / "s");
    EXPECT_EQ(run({"verdict", (tmp.path() / "s").string(), "--config", ivo_config()}).code, 2);
    EXPECT_EQ(run({"scan", (tmp.path() / "s").string()}).code, 0);
    EXPECT_EQ(run({"verdict", (tmp.path() / "missing").string()}).code, 3);
    EXPECT_EQ(run({"verdict", (kIvo / "tree").string(), "--entry", "ghost.py"}).code, 3);
    EXPECT_EQ(run({"verdict", (kIvo / "tree").string(), "--mode", "binary"}).code, 3);
    EXPECT_EQ(run({"verdict", (kIvo / "tree").string(), "--format", "xml"}).code, 3);
    EXPECT_EQ(run({"verdict"}).code, 3);
    EXPECT_EQ(run({"frobnicate"}).code, 3);
}

TEST(Cli, BadManifestNamesTheLine) {
    support::TempDir tmp;
    support::write(tmp.path() / "t" / "a.py", "x = 1\n");
    support::write(tmp.path() / "e.jsonl",
                   "{\"schema\":\"edges/v1\"}\n{\"from\":\"a.py\",\"to\":\"b.py\",\"mechanism\":\"import\"}\n{\"from\":\n");
    auto r = run({"scan", (tmp.path() / "t").string(), "--manifest", (tmp.path() / "e.jsonl").string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    EXPECT_EQ(r.err.rfind("mereoscan: error: ", 0), 0u);
}

TEST(Cli, CheckModel) {
    const auto dir = support::model_dir();
    auto e = run({"check-model", (dir / "electorate.json").string()});
    EXPECT_EQ(e.code, 2);
    EXPECT_NE(e.out.find("unity (parthood, binding): sat"), std::string::npos);
    EXPECT_NE(e.out.find("non-contingency (parthood, binding): unsat"), std::string::npos);
    auto u = run({"check-model", (dir / "electorate.json").string(), "--check", "unity"});
    EXPECT_EQ(u.code, 0);
    EXPECT_EQ(u.out.find("non-contingency"), std::string::npos);
    // The repository is a counterexample model: its unbound members break unity.
    auto m = run({"check-model", (dir / "module_repository.json").string(), "--format", "structured"});
    EXPECT_EQ(m.code, 2) << m.err;
    EXPECT_NE(m.out.find("\"sat\": false"), std::string::npos);
    EXPECT_NE(m.out.find("\"schema\": \"checks/v1\""), std::string::npos);
    auto s = run({"check-model", (dir / "single_proper_part.json").string(), "--check", "supplementation"});
    EXPECT_EQ(s.code, 2);
    EXPECT_EQ(run({"check-model", (dir / "electorate.json").string(), "--check", "everything"}).code, 3);
    EXPECT_EQ(run({"check-model", (dir / "electorate.json").string(), "--parthood", "friendship"}).code, 3);

    support::TempDir tmp;
    support::write(tmp.path() / "bad.json", "{\"schema\": \"model/v1\",\n\"entities\": [\n");
    auto b = run({"check-model", (tmp.path() / "bad.json").string()});
    EXPECT_EQ(b.code, 3);
    EXPECT_NE(b.err.find("line"), std::string::npos) << b.err;
    EXPECT_EQ(run({"check-model", (tmp.path() / "none.json").string()}).code, 3);
}

TEST(Cli, ConfigFromEnvironmentAndFlagOverride) {
    EnvGuard guard("MEREOSCAN_CONFIG");
    setenv("MEREOSCAN_CONFIG", ivo_config().c_str(), 1);
    auto r = run({"verdict", (kIvo / "tree").string(), "--format", "structured"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"entries\": [\n    \"main.py\"\n  ]"), std::string::npos);
    // Flags win over the file.
    auto o = run({"verdict", (kIvo / "tree").string(), "--entry", "owlready/instance_editor.py"});
    EXPECT_NE(o.out.find("entries: owlready/instance_editor.py"), std::string::npos) << o.out;
    // An explicit --config wins over the environment.
    setenv("MEREOSCAN_CONFIG", (kIvo / "absent.json").string().c_str(), 1);
    EXPECT_EQ(run({"verdict", (kIvo / "tree").string()}).code, 3);
    EXPECT_EQ(run({"verdict", (kIvo / "tree").string(), "--config", ivo_config()}).code, 0);
}

TEST(Cli, OutWritesAFile) {
    support::TempDir tmp;
    const auto file = tmp.path() / "report.json";
    auto r = run({"verdict", (kIvo / "tree").string(), "--config", ivo_config(), "--format", "structured", "--out",
                  file.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(support::read(file).find("\"schema\": \"report/v1\""), std::string::npos);
}

TEST(Cli, ClassifyWithProbe) {
    auto r = run({"classify", (kIvo / "tree").string(), "--config", ivo_config(), "--probe-command",
                  "sh '" + (kIvo / "probe.sh").string() + "' {workspace}", "--replace",
                  "nncPairs.txt=" + (kIvo / "stubs" / "nncPairs.txt").string(), "--replace",
                  "Tkinter.py=" + (kIvo / "stubs" / "Tkinter.py").string(), "--jobs", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"schema\": \"classify/v1\""), std::string::npos);
    EXPECT_NE(r.out.find("\"basis\": \"probe\""), std::string::npos);
    EXPECT_NE(r.err.find("self-consistency"), std::string::npos) << r.err;
    EXPECT_EQ(run({"classify", (kIvo / "tree").string(), "--replace", "no-equals-sign"}).code, 3);
}

TEST(Cli, GrammarNoneLeavesOnlyManifestEdges) {
    auto r = run({"scan", (kIvo / "tree").string(), "--config", ivo_config(), "--grammar", "none"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.find("\"mechanism\": \"import\""), std::string::npos);
    EXPECT_NE(r.out.find("\"mechanism\": \"data-read\""), std::string::npos);
}

TEST(Binary, EndToEnd) {
    const std::string ivo = "verdict '" + (kIvo / "tree").string() + "'";
    EXPECT_EQ(run_binary(ivo + " --config '" + ivo_config() + "'").code, 0);
    EXPECT_EQ(run_binary(ivo, "MEREOSCAN_CONFIG='" + ivo_config() + "'").code, 0);
    EXPECT_EQ(run_binary("--version").out, "mereoscan " + std::string(kVersion) + "\n");
    EXPECT_EQ(run_binary("check-model '" + (support::model_dir() / "electorate.json").string() + "'").code, 2);
    EXPECT_EQ(run_binary("scan /nonexistent/mereoscan").code, 3);
}
