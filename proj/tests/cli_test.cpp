// Copyright 2026 The CodeAlike Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>
#include <stdlib.h>

#include <sstream>

#include "test_util.hpp"

namespace codealike::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ::unsetenv("CODEALIKE_STORE");
    hello_ = (testing::TestDataDir() / "Hello.java").string();
    again_ = (testing::TestDataDir() / "HelloAgain.java").string();
  }

  std::string Store() const { return (dir_.path() / "store").string(); }

  testing::ScratchDir dir_;
  std::string hello_;
  std::string again_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  const Outcome none = Invoke({});
  EXPECT_NE(none.err.find("index"), std::string::npos);
  EXPECT_NE(none.err.find("check"), std::string::npos);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"compare", hello_}).code, kExitUsage);
  EXPECT_EQ(Invoke({"check", "--primary", hello_}).code, kExitUsage);
  EXPECT_EQ(Invoke({"compare", hello_, again_, "--lang", "java", "--format", "pdf"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"params", "-k", "9"}).code, kExitUsage);  // t < k
}

TEST_F(CliTest, Help) {
  const Outcome help = Invoke({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("compare"), std::string::npos);
}

TEST_F(CliTest, Params) {
  const Outcome o = Invoke({"params"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("k = 5 (default)"), std::string::npos);
  EXPECT_NE(o.out.find("t = 8 (default)"), std::string::npos);
  EXPECT_NE(o.out.find("q = 10001 (default)"), std::string::npos);
  EXPECT_NE(o.out.find("w = 4"), std::string::npos);
  const Outcome custom = Invoke({"params", "-t", "12"});
  EXPECT_NE(custom.out.find("t = 12 (override)"), std::string::npos);
  EXPECT_NE(custom.out.find("w = 8"), std::string::npos);
}

TEST_F(CliTest, CompareSelf) {
  const Outcome o = Invoke({"compare", hello_, hello_, "--lang", "java"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("containment: 1.0000"), std::string::npos);
  EXPECT_NE(o.out.find("jaccard: 1.0000"), std::string::npos);
}

TEST_F(CliTest, CompareErrors) {
  EXPECT_EQ(Invoke({"compare", hello_, again_, "--lang", "cobol"}).code, kExitIo);
  EXPECT_EQ(Invoke({"compare", hello_, "/nonexistent/x.java", "--lang", "java"}).code,
            kExitIo);
}

TEST_F(CliTest, CompareToFile) {
  const std::string path = (dir_.path() / "r.json").string();
  const Outcome o = Invoke({"compare", hello_, again_, "--lang", "java", "--format",
                            "json", "--out", path, "--no-timestamps"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(o.out.empty());
  const std::string json = testing::ReadAll(path);
  EXPECT_NE(json.find("\"generated_at\":null"), std::string::npos);
  EXPECT_NE(json.find("\"containment\":0.5294"), std::string::npos);
}

TEST_F(CliTest, IndexListCheck) {
  Outcome o = Invoke({"index", hello_, again_, "--class", "cs101", "--assignment",
                      "hw1", "--lang", "java", "--store", Store()});
  ASSERT_EQ(o.code, kExitOk) << o.err;

  o = Invoke({"list", "--store", Store()});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("cs101/hw1/Hello.java\tjava"), std::string::npos);
  EXPECT_NE(o.out.find("cs101/hw1/HelloAgain.java\tjava"), std::string::npos);
  EXPECT_TRUE(Invoke({"list", "--store", Store(), "--class", "other"}).out.empty());

  o = Invoke({"check", "--primary", hello_, "--class", "cs101", "--assignment", "hw1",
              "--store", Store(), "--no-timestamps"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("primary: cs101/hw1/Hello.java"), std::string::npos);
  EXPECT_NE(o.out.find("k=5 t=8 q=10001"), std::string::npos);
  EXPECT_NE(o.out.find("#1 cs101/hw1/HelloAgain.java"), std::string::npos);
  EXPECT_EQ(o.out.find("generated_at"), std::string::npos);

  const Outcome again = Invoke({"check", "--primary", hello_, "--class", "cs101",
                                "--assignment", "hw1", "--store", Store(),
                                "--no-timestamps"});
  EXPECT_EQ(again.out, o.out);

  const Outcome stamped = Invoke({"check", "--primary", hello_, "--class", "cs101",
                                  "--assignment", "hw1", "--store", Store()});
  EXPECT_NE(stamped.out.find("generated_at: 20"), std::string::npos);
}

TEST_F(CliTest, CheckEmptyAssignment) {
  const Outcome o = Invoke({"check", "--primary", hello_, "--class", "cs101",
                            "--assignment", "solo", "--store", Store()});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("no matches"), std::string::npos);
}

TEST_F(CliTest, ParamsMismatchExitCode) {
  ASSERT_EQ(Invoke({"index", hello_, "--class", "c", "--assignment", "a", "--lang",
                    "java", "--store", Store()})
                .code,
            kExitOk);
  const Outcome o = Invoke({"index", again_, "--class", "c", "--assignment", "a",
                            "--lang", "java", "--store", Store(), "-k", "6", "-t",
                            "9"});
  EXPECT_EQ(o.code, kExitParamsMismatch);
  EXPECT_NE(o.err.find("k=5"), std::string::npos);
  EXPECT_EQ(Invoke({"check", "--primary", again_, "--class", "c", "--assignment", "a",
                    "--store", Store(), "-q", "65521"})
                .code,
            kExitParamsMismatch);
}

TEST_F(CliTest, StoreErrors) {
  EXPECT_EQ(Invoke({"list", "--store", Store()}).code, kExitIo);
  EXPECT_EQ(Invoke({"index", "/nonexistent/x.java", "--class", "c", "--assignment",
                    "a", "--lang", "java", "--store", Store()})
                .code,
            kExitIo);
  EXPECT_EQ(Invoke({"check", "--primary", (dir_.path() / "notes.xyz").string(),
                    "--class", "c", "--assignment", "a", "--store", Store()})
                .code,
            kExitIo);
}

TEST_F(CliTest, StoreFromEnvironment) {
  ::setenv("CODEALIKE_STORE", Store().c_str(), 1);
  ASSERT_EQ(Invoke({"index", hello_, "--class", "c", "--assignment", "a", "--lang",
                    "java"})
                .code,
            kExitOk);
  ::unsetenv("CODEALIKE_STORE");
  const Outcome o = Invoke({"list", "--store", Store()});
  EXPECT_NE(o.out.find("c/a/Hello.java"), std::string::npos);
}

TEST_F(CliTest, HtmlCheck) {
  ASSERT_EQ(Invoke({"index", again_, "--class", "c", "--assignment", "a", "--lang",
                    "java", "--store", Store()})
                .code,
            kExitOk);
  const Outcome o = Invoke({"check", "--primary", hello_, "--class", "c",
                            "--assignment", "a", "--store", Store(), "--format",
                            "html"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("Lines which Appeared to be Plagiarised :"), std::string::npos);
  EXPECT_NE(o.out.find("File: c/a/HelloAgain.java"), std::string::npos);
}

}  // namespace
}  // namespace codealike::cli
