#pragma once

// Captured diagnostic lines -> per-line word-by-word translations.

#include <errlingo/dictionary.hpp>
#include <errlingo/tokenizer.hpp>

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace errlingo {

struct DiagnosticLine {
    std::size_t index = 0;  // 1-based
    std::string raw;
    std::vector<Token> tokens;

    bool operator==(const DiagnosticLine&) const = default;
};

struct TranslationPair {
    std::string source;  // token as it appeared in the line
    std::string gloss;

    bool operator==(const TranslationPair&) const = default;
};

struct TranslatedLine {
    DiagnosticLine line;
    std::vector<TranslationPair> pairs;

    bool operator==(const TranslatedLine&) const = default;
};

struct TranslationReport {
    std::vector<TranslatedLine> lines;
    bool truncated = false;
    std::size_t max_lines = 10;

    bool operator==(const TranslationReport&) const = default;
};

inline constexpr std::size_t default_max_lines = 10;

inline DiagnosticLine make_line(std::size_t index, std::string raw) {
    DiagnosticLine line{index, std::move(raw), {}};
    line.tokens = split_line(line.raw);
    return line;
}

/// With `guard` on, only natural tokens reach the lexicon. A word repeated
/// within the line (same normalized form) is translated once, at its first
/// occurrence.
inline std::vector<TranslationPair> translate_line(const DiagnosticLine& line, const Lexicon& lex,
                                                   bool guard = true) {
    std::vector<TranslationPair> pairs;
    std::set<std::string, std::less<>> seen;
    for (const auto& tok : line.tokens) {
        if (guard && tok.kind != TokenKind::natural) continue;
        const auto* entry = lex.lookup(tok.raw);
        if (!entry) continue;
        const std::string& dedup_key = tok.normalized.empty() ? entry->key : tok.normalized;
        if (!seen.insert(dedup_key).second) continue;
        pairs.push_back({tok.raw, entry->gloss});
    }
    return pairs;
}

inline TranslationReport build_report(const std::vector<std::string>& lines, const Lexicon& lex,
                                      std::size_t max_lines = default_max_lines, bool guard = true) {
    if (max_lines == 0) throw std::invalid_argument("max_lines must be at least 1");
    TranslationReport report;
    report.max_lines = max_lines;
    report.truncated = lines.size() > max_lines;
    const std::size_t kept = report.truncated ? max_lines : lines.size();
    report.lines.reserve(kept);
    for (std::size_t i = 0; i < kept; ++i) {
        auto line = make_line(i + 1, lines[i]);
        auto pairs = translate_line(line, lex, guard);
        report.lines.push_back({std::move(line), std::move(pairs)});
    }
    return report;
}

}  // namespace errlingo
