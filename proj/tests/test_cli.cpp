//
// Copyright (c) 2026 The hasp authors
//
// This file is part of hasp.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hasp/cli.hpp"

using namespace hasp;
namespace fs = std::filesystem;

namespace {

const std::string kDir = HASP_PROGRAMS_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> files(const std::string& cmd, const std::string& prog, const std::string& init,
                               const std::string& horizon) {
    return {cmd, "--program", kDir + "/" + prog, "--init", kDir + "/" + init, "--horizon", horizon};
}

std::vector<std::string> operator+(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("solve on the tick program") {
    auto r = cli(files("solve", "e1.hasp", "e1.init", "2"));
    CHECK(r.code == exit_ok);
    CHECK(r.out ==
          "fact a @ step=0\nfact b @ step=1\nfact c @ step=1\n"
          "layer 0: frontier 1, facts 1\nlayer 1: frontier 1, facts 2\nlayer 2: frontier 0, facts 0\n"
          "validated: true\n");
    CHECK(r.err.empty());
}

TEST_CASE("solve keeping nothing") {
    auto r = cli(files("solve", "e1.hasp", "e1.init", "2") + std::vector<std::string>{"--f", "select_none"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("fact a @ step=0\nlayer 0:", 0) == 0);
}

TEST_CASE("a run without an answer set exits 3") {
    auto r = cli(files("solve", "odd.hasp", "e1.init", "1"));
    CHECK(r.code == exit_not_answer_set);
    CHECK(r.out.find("validated: false") != std::string::npos);
}

TEST_CASE("enumerate") {
    auto e1 = cli(files("enumerate", "e1.hasp", "e1.init", "2"));
    CHECK(e1.code == exit_ok);
    CHECK(e1.out ==
          "answer set 1\nfact a @ step=0\n"
          "answer set 2\nfact a @ step=0\nfact b @ step=1\nfact c @ step=1\n"
          "answer sets: 2\n");
    CHECK(cli(files("enumerate", "odd.hasp", "e1.init", "2")).out == "answer sets: 0\n");
    CHECK(cli(files("enumerate", "empty.hasp", "e1.init", "2")).out == "answer set 1\nanswer sets: 1\n");
}

TEST_CASE("verify") {
    auto r = cli(files("verify", "e1.hasp", "e1.init", "2"));
    CHECK(r.code == exit_ok);
    CHECK(r.out == "incremental: 2, oracle: 2, diff: 0\n");
    auto fan = cli(files("verify", "fanout.hasp", "fanout.init", "2"));
    CHECK(fan.code == exit_ok);
    CHECK(fan.out == "incremental: 13, oracle: 13, diff: 0\n");
}

TEST_CASE("check-splitting") {
    auto ok = cli(files("check-splitting", "e1.hasp", "e1.init", "2"));
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.find("PASS theorem2 assemble 2 of 2\n") != std::string::npos);
    auto bad = cli(files("check-splitting", "e1.hasp", "e1.init", "2") + std::vector<std::string>{"--corrupt-bottom"});
    CHECK(bad.code == exit_check_failed);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
    auto missing = cli(files("solve", "nope.hasp", "e1.init", "1"));
    CHECK(missing.code == exit_input);
    CHECK(missing.out.empty());
    CHECK_FALSE(missing.err.empty());
    CHECK(cli(files("solve", "fanout.hasp", "fanout.init", "1") + std::vector<std::string>{"--f", "random"}).code ==
          exit_input);
    CHECK(cli(files("solve", "e1.hasp", "e1.init", "-1")).code == exit_input);
    CHECK(cli({"solve"}).code == exit_input);
    CHECK(cli({"frobnicate"}).code == exit_input);

    fs::path bad = fs::temp_directory_path() / "hasp_cli_bad.hasp";
    std::ofstream(bad) << "a :- : cs nosuch, bool true.\n";
    auto r = cli({"solve", "--program", bad.string(), "--init", kDir + "/e1.init", "--horizon", "1"});
    CHECK(r.code == exit_input);
    CHECK(r.err.find("hasp_cli_bad.hasp:1:") != std::string::npos);
    fs::remove(bad);
}

TEST_CASE("guards exit 2") {
    auto r = cli(files("enumerate", "fanout.hasp", "fanout.init", "3") +
                 std::vector<std::string>{"--max-branches", "5"});
    CHECK(r.code == exit_guard);
    CHECK(r.out.empty());
    CHECK(cli(files("verify", "fanout.hasp", "fanout.init", "3") + std::vector<std::string>{"--max-facts", "3"})
              .code == exit_guard);
}

TEST_CASE("seeded runs are reproducible and --out writes the same bytes") {
    auto args = files("solve", "fanout.hasp", "fanout.init", "3") +
                std::vector<std::string>{"--f", "random", "--d", "random", "--seed", "9", "--trace"};
    auto a = cli(args), b = cli(args);
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);

    fs::path out = fs::temp_directory_path() / "hasp_cli_out.txt";
    auto c = cli(args + std::vector<std::string>{"--out", out.string()});
    CHECK(c.code == exit_ok);
    CHECK(c.out.empty());
    std::ifstream in(out);
    std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == a.out);
    fs::remove(out);
}
