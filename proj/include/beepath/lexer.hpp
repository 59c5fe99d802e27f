#ifndef BEEPATH_LEXER_HPP
#define BEEPATH_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "beepath/diagnostic.hpp"

namespace beepath {

enum class TokenKind {
    Keyword,       // After, ends, immediately, start, either, or, and, ...
    Activity,      // "take sample"  (value holds the unquoted name)
    SubprocessId,  // (s1)           (value holds the bare identifier)
    LeadingText,   // the closed-world disclaimer sentence
    Punct,         // ':'
};

struct Token {
    TokenKind kind = TokenKind::Keyword;
    std::string lexeme;  // raw source text, quotes/parens included
    std::string value;   // unquoted activity name, bare subprocess id, keyword text
    int line = 1;
    int column = 1;
};

struct LexOptions {
    /// Accept any leading text ending in the word "impossible" instead of
    /// requiring the exact disclaimer sentence.
    bool lenient_leading_text = false;
};

struct LexResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return !has_errors(diagnostics); }
};

bool is_keyword(std::string_view word);

/// Tokenize BeePath source text. Spaces, tabs, newlines, periods and commas
/// are skipped outside of activity literals. The leading disclaimer, when
/// present at the start of the input, becomes a single LeadingText token.
LexResult tokenize(std::string_view source, const LexOptions& options = {});

}  // namespace beepath

#endif
