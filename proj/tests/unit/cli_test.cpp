/*
 * Copyright 2026 The besgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace bg = besgraph;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "besgraph");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = bg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string &text) {
        path_ = std::filesystem::temp_directory_path() /
                ("besgraph_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".bes");
        std::ofstream(path_) << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::size_t count_lines(const std::string &s, const std::string &prefix) {
    std::istringstream in(s);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
    return n;
}

TEST(CliCheck, Application) {
    const auto r = run({"check", "--fixture", "paper-application"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("equations: 9\n"), std::string::npos);
    EXPECT_NE(r.out.find("size: 26\n"), std::string::npos);
    EXPECT_NE(r.out.find("alternation hierarchy: 2\n"), std::string::npos);
}

TEST(CliCheck, Mutex) {
    const auto r = run({"check", "--fixture", "mutex"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("equations: 8\n"), std::string::npos);
    EXPECT_NE(r.out.find("closed: yes\n"), std::string::npos);
}

TEST(CliCheck, EmptyFile) {
    TempFile f("");
    const auto r = run({"check", f.path()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "empty system\n");
}

TEST(CliCheck, ParseAndValidationErrors) {
    TempFile bad("mu X = ;");
    EXPECT_EQ(run({"check", bad.path()}).code, 1);
    TempFile dup("mu X = X; nu X = X;");
    EXPECT_EQ(run({"check", dup.path()}).code, 1);
    EXPECT_EQ(run({"check", "--fixture", "nosuch"}).code, 1);
    EXPECT_EQ(run({"check", "/nonexistent/file.bes"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(CliSolve, Application) {
    for (const char *method : {"oracle", "gauss"}) {
        const auto r = run({"solve", "--fixture", "paper-application", "--method", method});
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(count_lines(r.out, ""), 9u);
        EXPECT_EQ(r.out.find("false"), std::string::npos);
        EXPECT_EQ(r.out.rfind("X_s0 = true\n", 0), 0u);
    }
}

TEST(CliSolve, OrderSensitivity) {
    TempFile a("mu X = Y; nu Y = X;"), b("nu Y = X; mu X = Y;");
    EXPECT_EQ(run({"solve", a.path(), "--method", "oracle"}).out, "X = false\nY = false\n");
    EXPECT_EQ(run({"solve", a.path(), "--method=gauss"}).out, "X = false\nY = false\n");
    EXPECT_EQ(run({"solve", b.path()}).out, "Y = true\nX = true\n");
}

TEST(CliSolve, OpenSystem) {
    TempFile open("mu X = Y;");
    EXPECT_EQ(run({"solve", open.path()}).code, 2);
}

TEST(CliGraph, ExampleSystem) {
    const auto r = run({"graph", "--fixture", "example-structure-graph"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out, "node "), 5u);
    EXPECT_EQ(count_lines(r.out, "edge "), 9u);
    const auto n = run({"graph", "--fixture", "example-structure-graph", "--normalise"});
    EXPECT_EQ(count_lines(n.out, "node "), 5u);
    EXPECT_EQ(n.out.find("ranks=-"), std::string::npos);
    EXPECT_NE(n.out.find("op=and ranks=2 label=\"X && Y\""), std::string::npos);
}

TEST(CliGraph, ApplicationAndOptions) {
    EXPECT_EQ(count_lines(run({"graph", "--fixture", "paper-application"}).out, "node "), 12u);
    const auto dot = run({"graph", "--fixture", "paper-application", "--out", "dot"});
    EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
    const auto f = run({"graph", "--fixture", "paper-application", "--formula", "X_s1 && Z_s0"});
    EXPECT_EQ(f.code, 0);
    EXPECT_NE(f.out.find("label=\"X_s1 && Z_s0\""), std::string::npos);
    EXPECT_EQ(run({"graph", "--fixture", "paper-application", "--srf"}).code, 2);
    EXPECT_EQ(run({"graph", "--fixture", "paper-application", "--formula", "Q"}).code, 2);
    EXPECT_EQ(run({"graph", "--fixture", "paper-application", "--reduce"}).out.find("op=top"), std::string::npos);
}

TEST(CliMinimize, Application) {
    const auto g = run({"minimize", "--fixture", "paper-application", "--emit", "graph"});
    EXPECT_EQ(count_lines(g.out, "node "), 7u);
    const auto b = run({"minimize", "--fixture", "paper-application", "--emit=bes"});
    EXPECT_EQ(b.code, 0);
    const auto sep = b.out.find("---\n");
    ASSERT_NE(sep, std::string::npos);
    const std::string bes = b.out.substr(0, sep), legend = b.out.substr(sep + 4);
    EXPECT_EQ(count_lines(bes, "mu ") + count_lines(bes, "nu "), 5u);
    EXPECT_EQ(bg::size(bg::parse_bes(bes)), 14u);
    EXPECT_NE(legend.find("X_Z_s0 <= {Z_s0, Z_s1, Z_s2}\n"), std::string::npos);
    EXPECT_EQ(count_lines(legend, "X_"), 5u);
}

TEST(CliMinimize, SingleEquation) {
    TempFile f("nu A = A;");
    const auto r = run({"minimize", f.path()});
    const auto bes = bg::parse_bes(r.out.substr(0, r.out.find("---")));
    ASSERT_EQ(bes.size(), 1u);
    EXPECT_EQ(bes[0].sign, bg::Fixpoint::nu);
    EXPECT_EQ(bes[0].rhs, bg::Formula::variable(bes[0].lhs));
}

TEST(CliVerify, Fixtures) {
    const auto app = run({"verify", "--fixture", "paper-application"});
    EXPECT_EQ(app.code, 0);
    EXPECT_NE(app.out.find("PASS: 9 variables verified"), std::string::npos);
    EXPECT_EQ(run({"verify", "--fixture", "mutex"}).code, 0);
    EXPECT_EQ(run({"verify", "--fixture", "example-structure-graph"}).code, 0);
}

TEST(CliGenerate, SeedReplay) {
    const auto a = run({"generate", "--seed", "17", "--variables", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run({"generate", "--seed", "17", "--variables", "5"}).out);
    EXPECT_EQ(bg::parse_bes(a.out).size(), 5u);
    EXPECT_TRUE(bg::is_srf(bg::parse_bes(run({"generate", "--seed", "3", "--srf"}).out)));
}

TEST(Cli, OutputIsDeterministic) {
    for (const char *cmd : {"check", "solve", "graph", "minimize", "verify"})
        EXPECT_EQ(run({cmd, "--fixture", "paper-application"}).out, run({cmd, "--fixture", "paper-application"}).out);
}

} // namespace
