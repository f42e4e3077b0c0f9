#pragma once

// Code-word translation rate: the share of annotated code-word occurrences
// that a translator backend translated. 0% means every code word was left
// alone.
//
// Corpus layout: one UTF-8 file per message. The first line lists the code
// words occurring in the message, written exactly as they appear:
//
//     #code: WRITE (1)
//     Error: Syntax error in WRITE statement at (1)
//
// A file whose first line is not a `#code:` line has no annotations.

#include <errlingo/dictionary.hpp>
#include <errlingo/pipeline.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace errlingo {

struct AnnotatedMessage {
    std::string name;
    std::vector<std::string> code_words;
    std::string text;
};

/// Maps a message to the source words it translated.
using TranslatorBackend = std::function<std::vector<std::string>(std::string_view message)>;

class EmptyCorpusError : public std::runtime_error {
public:
    EmptyCorpusError() : std::runtime_error("corpus has no annotated code words") {}
};

struct RateResult {
    std::size_t translated = 0;
    std::size_t total = 0;

    double percent() const { return 100.0 * static_cast<double>(translated) / static_cast<double>(total); }
};

inline constexpr std::string_view code_marker = "#code:";

inline AnnotatedMessage parse_annotated_message(std::string_view text, std::string name = {}) {
    require_utf8(text);
    AnnotatedMessage msg{std::move(name), {}, {}};
    if (!text.starts_with(code_marker)) {
        msg.text = std::string(text);
        return msg;
    }
    auto nl = text.find('\n');
    auto header = text.substr(code_marker.size(), nl == std::string_view::npos ? std::string_view::npos
                                                                               : nl - code_marker.size());
    for (const auto& tok : split_line(header)) msg.code_words.push_back(tok.raw);
    msg.text = nl == std::string_view::npos ? std::string() : std::string(text.substr(nl + 1));
    return msg;
}

/// Loads every regular file in `dir`, in file-name order.
inline std::vector<AnnotatedMessage> load_corpus(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw FileError("'" + dir.string() + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<AnnotatedMessage> corpus;
    for (const auto& f : files)
        corpus.push_back(parse_annotated_message(read_file(f.string()), f.filename().string()));
    return corpus;
}

/// An annotated occurrence counts as translated when the backend reports the
/// identical word among its translated sources for that message.
inline RateResult code_word_translation_count(const std::vector<AnnotatedMessage>& corpus,
                                              const TranslatorBackend& backend) {
    RateResult r;
    for (const auto& msg : corpus) {
        if (msg.code_words.empty()) continue;
        auto out = backend(msg.text);
        std::set<std::string, std::less<>> translated(out.begin(), out.end());
        for (const auto& w : msg.code_words) {
            ++r.total;
            if (translated.contains(w)) ++r.translated;
        }
    }
    if (r.total == 0) throw EmptyCorpusError();
    return r;
}

inline double code_word_translation_rate(const std::vector<AnnotatedMessage>& corpus,
                                         const TranslatorBackend& backend) {
    return code_word_translation_count(corpus, backend).percent();
}

/// The word-by-word pipeline as a backend: every source word that received
/// a gloss.
inline TranslatorBackend pipeline_backend(const Lexicon& lex, bool guard = true) {
    return [&lex, guard](std::string_view message) {
        auto lines = split_lines(message);
        std::vector<std::string> sources;
        if (lines.empty()) return sources;
        for (const auto& tl : build_report(lines, lex, lines.size(), guard).lines)
            for (const auto& p : tl.pairs) sources.push_back(p.source);
        return sources;
    };
}

struct ReferenceLeakage {
    std::string_view language;
    int percent;
};

/// Published code-word translation rates of an online machine translator,
/// kept for comparison only.
inline constexpr std::array<ReferenceLeakage, 7> reference_mt_leakage{{
    {"German", 9}, {"Japanese", 18}, {"French", 23}, {"Chinese", 41},
    {"Korean", 50}, {"Russian", 55}, {"Hindi", 68},
}};

}  // namespace errlingo
