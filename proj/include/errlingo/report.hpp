#pragma once

// Text layout of a translation report:
//
//                RESULTATS
//     <passthrough stdout>
//                ERREURS
//
//     LIGNE 1
//     <diagnostic line>
//                TRADUCTION 1
//     source=gloss
//     ...
//     <blank line>

#include <errlingo/dictionary.hpp>
#include <errlingo/pipeline.hpp>

#include <string>
#include <string_view>

namespace errlingo {

inline constexpr std::string_view label_indent = "           ";  // 11 spaces

inline std::string render_header(std::string_view label) {
    std::string s(label_indent);
    s += label;
    s += '\n';
    return s;
}

/// The results label followed by the passthrough output, newline-terminated.
inline std::string render_results(std::string_view stdout_text, const ReportLabels& labels) {
    std::string doc = render_header(labels.results);
    doc += stdout_text;
    if (!stdout_text.empty() && stdout_text.back() != '\n') doc += '\n';
    return doc;
}

/// The errors label, one block per diagnostic line, and the closing blank line.
inline std::string render_errors(const TranslationReport& report, const ReportLabels& labels) {
    std::string doc = render_header(labels.errors);
    for (const auto& tl : report.lines) {
        const auto idx = std::to_string(tl.line.index);
        doc += '\n';
        doc += labels.line + ' ' + idx + '\n';
        doc += tl.line.raw + '\n';
        doc += render_header(labels.translation + ' ' + idx);
        for (const auto& p : tl.pairs) doc += p.source + '=' + p.gloss + '\n';
    }
    doc += '\n';
    return doc;
}

inline std::string render(const TranslationReport& report, std::string_view stdout_text,
                          const ReportLabels& labels = {}) {
    return render_results(stdout_text, labels) + render_errors(report, labels);
}

}  // namespace errlingo
