// errlingo: run a compiler or interpreter and translate its diagnostics word
// by word.
//
//   errlingo run [flags] -- <command...>
//   errlingo translate [flags] < captured-stderr.txt
//   errlingo dict validate [--dict PATH]
//   errlingo rate [flags] <corpus-dir>
//
// Exit codes: the child's code (run), 0 success, 1 validation findings,
// 2 usage or I/O error, 127 spawn failure.

#include <errlingo/errlingo.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int exit_findings = 1;
constexpr int exit_usage = 2;
constexpr int exit_spawn = 127;

struct Config {
    std::string dictionary_path = "dico.txt";
    std::size_t max_lines = errlingo::default_max_lines;
    bool guard = true;
    std::string output_path;  // empty: standard output
    errlingo::ReportLabels labels;
};

void error(const std::string& msg) { std::cerr << "errlingo: " << msg << '\n'; }

std::optional<errlingo::Lexicon> load_dictionary(const Config& cfg) {
    try {
        std::vector<errlingo::LexiconFinding> warnings;
        auto lex = errlingo::load_lexicon(cfg.dictionary_path, &warnings);
        for (const auto& w : warnings) error("warning: " + cfg.dictionary_path + ": " + w.message());
        return lex;
    } catch (const errlingo::FileError& e) {
        error(e.what());
    } catch (const errlingo::EncodingError& e) {
        error(cfg.dictionary_path + ": " + e.what());
    }
    return std::nullopt;
}

void write_stdout(std::string_view s) {
    std::fwrite(s.data(), 1, s.size(), stdout);
    std::fflush(stdout);
}

int cmd_run(const Config& cfg, const std::vector<std::string>& command) {
    auto lex = load_dictionary(cfg);
    if (!lex) return exit_usage;

    std::ofstream file;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            error("cannot write '" + cfg.output_path + "'");
            return exit_usage;
        }
    }
    const bool to_stdout = cfg.output_path.empty();

    errlingo::RunResult result;
    try {
        // Writing straight to stdout, the report is produced in order: header,
        // live passthrough, then the translated diagnostics.
        result = errlingo::run_command(
            {command}, write_stdout,
            [&] { if (to_stdout) write_stdout(errlingo::render_header(cfg.labels.results)); });
    } catch (const errlingo::SpawnError& e) {
        error(e.what());
        return exit_spawn;
    } catch (const std::system_error& e) {
        error(e.what());
        return exit_usage;
    }

    auto report = errlingo::build_report(result.stderr_lines, *lex, cfg.max_lines, cfg.guard);
    if (to_stdout) {
        if (!result.stdout_text.empty() && result.stdout_text.back() != '\n') write_stdout("\n");
        write_stdout(errlingo::render_errors(report, cfg.labels));
    } else {
        file << errlingo::render(report, result.stdout_text, cfg.labels);
        file.close();
        if (!file) {
            error("error writing '" + cfg.output_path + "'");
            return exit_usage;
        }
    }
    return result.exit_status;
}

int emit(const Config& cfg, const std::string& doc) {
    if (cfg.output_path.empty()) {
        write_stdout(doc);
        return 0;
    }
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    file << doc;
    file.close();
    if (!file) {
        error("cannot write '" + cfg.output_path + "'");
        return exit_usage;
    }
    return 0;
}

int cmd_translate(const Config& cfg, std::istream& in) {
    auto lex = load_dictionary(cfg);
    if (!lex) return exit_usage;
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (auto bad = errlingo::find_invalid_utf8(text)) {
        error(std::string("input: ") + errlingo::EncodingError(*bad).what());
        return exit_usage;
    }
    auto report = errlingo::build_report(errlingo::split_lines(text), *lex, cfg.max_lines, cfg.guard);
    return emit(cfg, errlingo::render_errors(report, cfg.labels));
}

int cmd_dict_validate(const Config& cfg) {
    std::string text;
    errlingo::ValidationReport v;
    try {
        text = errlingo::read_file(cfg.dictionary_path);
        v = errlingo::validate_lexicon(text);
    } catch (const errlingo::FileError& e) {
        error(e.what());
        return exit_usage;
    } catch (const errlingo::EncodingError& e) {
        error(cfg.dictionary_path + ": " + e.what());
        return exit_usage;
    }
    for (const auto& f : v.findings) std::cout << cfg.dictionary_path << ": " << f.message() << '\n';
    std::cout << "entries: " << v.entries << '\n'
              << "header lines skipped: " << v.header_lines << '\n'
              << "duplicate keys: " << v.duplicate_keys << '\n'
              << "empty keys: " << v.empty_keys << '\n'
              << "invalid keys: " << v.invalid_keys << '\n'
              << "empty glosses: " << v.empty_glosses << '\n';
    return v.clean() ? 0 : exit_findings;
}

int cmd_rate(const Config& cfg, const std::string& corpus_dir) {
    auto lex = load_dictionary(cfg);
    if (!lex) return exit_usage;
    try {
        auto corpus = errlingo::load_corpus(corpus_dir);
        auto rate = errlingo::code_word_translation_rate(corpus, errlingo::pipeline_backend(*lex, cfg.guard));
        std::printf("%.1f%%\n", rate);
        return 0;
    } catch (const errlingo::EmptyCorpusError& e) {
        error(e.what());
    } catch (const errlingo::FileError& e) {
        error(e.what());
    } catch (const errlingo::EncodingError& e) {
        error(corpus_dir + ": " + e.what());
    }
    return exit_usage;
}

void add_dict_option(CLI::App& app, Config& cfg) {
    app.add_option("--dict", cfg.dictionary_path, "Lexicon file (key=gloss per line)")
        ->envname("ERRLINGO_DICT")
        ->capture_default_str();
}

void add_report_options(CLI::App& app, Config& cfg) {
    add_dict_option(app, cfg);
    app.add_option("--max-lines", cfg.max_lines, "Translate at most N diagnostic lines")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--no-guard", [&cfg](std::int64_t) { cfg.guard = false; },
                 "Also look up quoted, location and ALL-CAPS tokens");
    app.add_option("--output", cfg.output_path, "Write the report to PATH (overwritten)");
    app.add_option("--label-results", cfg.labels.results, "Results section label")->capture_default_str();
    app.add_option("--label-errors", cfg.labels.errors, "Errors section label")->capture_default_str();
    app.add_option("--label-translation", cfg.labels.translation, "Translation block label")
        ->capture_default_str();
    app.add_option("--label-line", cfg.labels.line, "Line block label")->capture_default_str();
}

bool labels_valid(const errlingo::ReportLabels& l) {
    return !l.results.empty() && !l.errors.empty() && !l.translation.empty() && !l.line.empty();
}

}  // namespace

int main(int argc, char** argv) {
    // Everything after the first "--" is the wrapped command, untouched.
    std::vector<std::string> args;
    std::vector<std::string> command;
    bool saw_separator = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (!saw_separator && a == "--") {
            saw_separator = true;
            continue;
        }
        (saw_separator ? command : args).push_back(std::move(a));
    }

    CLI::App app{"Run a compiler or interpreter and translate its error messages word by word"};
    app.require_subcommand(1);

    Config cfg;
    std::string corpus_dir;

    auto* run = app.add_subcommand("run", "Run a command and translate its error stream");
    add_report_options(*run, cfg);
    run->footer("Usage: errlingo run [flags] -- <command> [args...]");

    auto* translate = app.add_subcommand("translate", "Translate diagnostics read from standard input");
    add_report_options(*translate, cfg);

    auto* dict = app.add_subcommand("dict", "Lexicon utilities");
    dict->require_subcommand(1);
    auto* validate = dict->add_subcommand("validate", "Check a lexicon file for malformed or duplicate entries");
    add_dict_option(*validate, cfg);

    auto* rate = app.add_subcommand("rate", "Percentage of annotated code words that get translated");
    add_report_options(*rate, cfg);
    rate->add_option("corpus-dir", corpus_dir, "Directory of annotated messages")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    if (!labels_valid(cfg.labels)) {
        error("labels must not be empty");
        return exit_usage;
    }
    if (saw_separator && !run->parsed()) {
        error("'--' is only accepted by 'run'");
        return exit_usage;
    }

    if (run->parsed()) {
        if (!saw_separator || command.empty()) {
            error("run: expected '-- <command> [args...]'");
            return exit_usage;
        }
        return cmd_run(cfg, command);
    }
    if (translate->parsed()) return cmd_translate(cfg, std::cin);
    if (validate->parsed()) return cmd_dict_validate(cfg);
    if (rate->parsed()) return cmd_rate(cfg, corpus_dir);
    return exit_usage;
}
