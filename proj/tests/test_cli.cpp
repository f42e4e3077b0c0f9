#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using errlingo::test::cli_binary;
using errlingo::test::Exec;
using errlingo::test::fixture;
using errlingo::test::fixture_dir;
using errlingo::test::quote;
using errlingo::test::sh;
using errlingo::test::slurp;

namespace fs = std::filesystem;

namespace {

// Runs errlingo from the fixture directory so relative names match the paper's.
Exec errlingo_in_fixtures(const std::string& args, const std::string& stdin_file = "/dev/null") {
    return sh("cd " + quote(fixture_dir) + " && unset ERRLINGO_DICT && " + quote(cli_binary) + " " + args +
              " < " + quote(stdin_file));
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("errlingo-test-" + std::to_string(::getpid()) + "-" +
                                             std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string str() const { return path_.string(); }

private:
    fs::path path_;
    static inline int counter_ = 0;
};

void write(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST(CliRun, BashFixtureMatchesGoldenFile) {
    auto r = errlingo_in_fixtures("run --dict dico.txt -- ./testerr.sh");
    EXPECT_EQ(r.status, 2);
    EXPECT_EQ(r.out, slurp(fixture("testerr_run.golden")));
}

TEST(CliRun, OutputFileEqualsStdoutAndIsOverwritten) {
    TempDir tmp;
    auto out = tmp.file("erf");
    write(out, "stale content that must disappear\n");
    auto to_file = errlingo_in_fixtures("run --dict dico.txt --output " + quote(out) + " -- ./testerr.sh");
    EXPECT_EQ(to_file.status, 2);
    EXPECT_EQ(to_file.out, "Bonjour\n");  // passthrough still reaches the terminal
    auto to_stdout = errlingo_in_fixtures("run --dict dico.txt -- ./testerr.sh");
    EXPECT_EQ(slurp(out), to_stdout.out);

    auto again = errlingo_in_fixtures("run --dict dico.txt --output " + quote(out) + " -- ./testerr.sh");
    EXPECT_EQ(again.status, 2);
    EXPECT_EQ(slurp(out), to_stdout.out);
}

TEST(CliRun, CleanCommand) {
    auto r = errlingo_in_fixtures("run --dict dico.txt -- /bin/echo hello");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "           RESULTATS\nhello\n           ERREURS\n\n");
}

TEST(CliRun, PassthroughWithoutFinalNewline) {
    auto r = errlingo_in_fixtures("run --dict dico.txt -- /usr/bin/printf Bonjour");
    EXPECT_EQ(r.out, "           RESULTATS\nBonjour\n           ERREURS\n\n");
}

TEST(CliRun, SpawnFailure) {
    auto r = errlingo_in_fixtures("run --dict dico.txt -- ./no-such-program");
    EXPECT_EQ(r.status, 127);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("cannot execute './no-such-program'"), std::string::npos);
}

TEST(CliRun, MissingDictionary) {
    auto r = errlingo_in_fixtures("run --dict missing.txt -- /bin/true");
    EXPECT_EQ(r.status, 2);
    EXPECT_EQ(r.out, "");
}

TEST(CliRun, SeparatorIsMandatory) {
    EXPECT_EQ(errlingo_in_fixtures("run --dict dico.txt ./testerr.sh").status, 2);
    EXPECT_EQ(errlingo_in_fixtures("run --dict dico.txt --").status, 2);
    EXPECT_EQ(errlingo_in_fixtures("translate --dict dico.txt -- x").status, 2);
}

TEST(CliRun, MaxLinesAndGuardFlags) {
    auto r = errlingo_in_fixtures("run --dict dico.txt --max-lines 1 -- ./testerr.sh");
    EXPECT_EQ(r.out.find("LIGNE 2"), std::string::npos);
    EXPECT_NE(r.out.find("LIGNE 1"), std::string::npos);
    EXPECT_EQ(errlingo_in_fixtures("run --dict dico.txt --max-lines 0 -- ./testerr.sh").status, 2);
}

TEST(CliRun, ExitStatusPropagates) {
    for (int code : {0, 1, 2, 77}) {
        auto r = errlingo_in_fixtures("run --dict dico.txt -- " + quote(errlingo::test::stream_fixture) +
                                      " exit " + std::to_string(code));
        EXPECT_EQ(r.status, code);
    }
}

TEST(CliTranslate, PythonTraceback) {
    auto r = errlingo_in_fixtures("translate --dict dico.txt", fixture("python_stderr.txt"));
    EXPECT_EQ(r.status, 0);
    for (auto pair : {"(most=le plus", "call=appel (par ex. appel a une instruction)",
                      "last):=en dernier lieu, a la fin", "TypeError:=type de l'erreur",
                      "unsupported=non reconnu, incompatible avec le systeme",
                      "operand=operande (3+5: 3 et 5 sont deux operandes)"})
        EXPECT_NE(r.out.find(std::string("\n") + pair + "\n"), std::string::npos) << pair;
    EXPECT_TRUE(r.out.starts_with("           ERREURS\n"));
}

TEST(CliTranslate, FortranDedup) {
    auto r = errlingo_in_fixtures("translate --dict dico.txt", fixture("fortran_stderr.txt"));
    EXPECT_NE(r.out.find("           TRADUCTION 4\n"
                         "Error:=erreur\n"
                         "in=dans\n"
                         "statement=instruction, commande\n"
                         "at=a l'endroit indique\n"),
              std::string::npos)
        << r.out;
    EXPECT_EQ(r.out.find("WRITE="), std::string::npos);
}

TEST(CliTranslate, EmptyInput) {
    auto r = errlingo_in_fixtures("translate --dict dico.txt");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "           ERREURS\n\n");
}

TEST(CliTranslate, MissingDictionary) {
    EXPECT_EQ(errlingo_in_fixtures("translate --dict nope.txt").status, 2);
}

TEST(CliTranslate, InvalidInputEncoding) {
    TempDir tmp;
    write(tmp.file("bad.txt"), "error \xff\n");
    EXPECT_EQ(errlingo_in_fixtures("translate --dict dico.txt", tmp.file("bad.txt")).status, 2);
}

TEST(CliTranslate, LabelOverrides) {
    auto r = errlingo_in_fixtures(
        "translate --dict dico.txt --label-errors ERRORS --label-translation TRANSLATION --label-line LINE",
        fixture("c_stderr.txt"));
    EXPECT_TRUE(r.out.starts_with("           ERRORS\n\nLINE 1\n")) << r.out;
    EXPECT_NE(r.out.find("           TRANSLATION 2\n"), std::string::npos);
    EXPECT_EQ(errlingo_in_fixtures("translate --dict dico.txt --label-line ''").status, 2);
}

TEST(CliTranslate, DictionaryFromEnvironmentFlagWins) {
    TempDir tmp;
    write(tmp.file("alt.txt"), "error=Fehler\n");
    auto base = "cd " + quote(fixture_dir) + " && echo error | ERRLINGO_DICT=" + quote(tmp.file("alt.txt")) +
                " " + quote(cli_binary) + " translate";
    auto from_env = sh(base);
    EXPECT_NE(from_env.out.find("error=Fehler"), std::string::npos);
    auto from_flag = sh(base + " --dict dico.txt");
    EXPECT_NE(from_flag.out.find("error=erreur"), std::string::npos);
}

TEST(CliTranslate, DefaultDictionaryIsDicoTxtInWorkingDirectory) {
    auto r = sh("cd " + quote(fixture_dir) + " && unset ERRLINGO_DICT && echo near | " + quote(cli_binary) +
                " translate");
    EXPECT_NE(r.out.find("near=pres de"), std::string::npos);
}

TEST(CliDictValidate, AppendixDictionary) {
    auto r = errlingo_in_fixtures("dict validate --dict dico.txt");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("header lines skipped: 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("duplicate keys: 0\n"), std::string::npos);
}

TEST(CliDictValidate, DuplicateKey) {
    TempDir tmp;
    write(tmp.file("dup.txt"), "error=erreur\nline=ligne\nError=faute\n");
    auto r = errlingo_in_fixtures("dict validate --dict " + quote(tmp.file("dup.txt")));
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("duplicate key 'error'"), std::string::npos);
}

TEST(CliDictValidate, UnreadablePath) {
    EXPECT_EQ(errlingo_in_fixtures("dict validate --dict does-not-exist.txt").status, 2);
    EXPECT_EQ(errlingo_in_fixtures("dict validate --dict corpus").status, 2);
}

TEST(CliRate, FixtureCorpusIsZero) {
    auto r = errlingo_in_fixtures("rate --dict dico.txt corpus");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0.0%\n");
}

TEST(CliRate, LeakageCorpusWithoutGuard) {
    auto r = errlingo_in_fixtures("rate --dict leak_dico.txt --no-guard leak_corpus");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "14.3%\n");
    EXPECT_EQ(errlingo_in_fixtures("rate --dict leak_dico.txt leak_corpus").out, "0.0%\n");
}

TEST(CliRate, NoAnnotationsIsEmptyCorpus) {
    TempDir tmp;
    write(tmp.file("msg.txt"), "error: expected token\n");
    auto r = errlingo_in_fixtures("rate --dict dico.txt " + quote(tmp.str()));
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("no annotated code words"), std::string::npos);
    EXPECT_EQ(errlingo_in_fixtures("rate --dict dico.txt no-such-dir").status, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(errlingo_in_fixtures("").status, 2);
    EXPECT_EQ(errlingo_in_fixtures("frobnicate").status, 2);
    EXPECT_EQ(errlingo_in_fixtures("dict").status, 2);
    EXPECT_EQ(errlingo_in_fixtures("--help").status, 0);
}
