//! Reserved-word tables used when extracting identifiers.

use crate::corpus::Language;

/// C11 keywords plus the common standard type aliases that behave like
/// keywords in practice.
pub const C: &[&str] = &[
    "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else",
    "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long", "register",
    "restrict", "return", "short", "signed", "sizeof", "static", "struct", "switch", "typedef",
    "union", "unsigned", "void", "volatile", "while", "_Bool", "_Complex", "_Generic",
    "_Noreturn", "_Static_assert", "_Thread_local", "bool", "true", "false", "NULL", "size_t",
];

pub const GO: &[&str] = &[
    "break", "case", "chan", "const", "continue", "default", "defer", "else", "fallthrough",
    "for", "func", "go", "goto", "if", "import", "interface", "map", "package", "range",
    "return", "select", "struct", "switch", "type", "var", "nil", "true", "false", "iota",
];

pub const JAVA: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally",
    "float", "for", "goto", "if", "implements", "import", "instanceof", "int", "interface",
    "long", "native", "new", "package", "private", "protected", "public", "return", "short",
    "static", "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while", "var", "record", "true", "false", "null",
];

pub const PYTHON: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class",
    "continue", "def", "del", "elif", "else", "except", "finally", "for", "from", "global",
    "if", "import", "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return",
    "try", "while", "with", "yield", "match", "case",
];

/// Reserved words for `lang`.
pub fn for_language(lang: Language) -> &'static [&'static str] {
    match lang {
        Language::C => C,
        Language::Go => GO,
        Language::Java => JAVA,
        Language::Python => PYTHON,
    }
}

/// True if `word` is reserved in `lang`.
pub fn is_keyword(lang: Language, word: &str) -> bool {
    for_language(lang).contains(&word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_checks() {
        assert!(is_keyword(Language::C, "int"));
        assert!(is_keyword(Language::Go, "func"));
        assert!(is_keyword(Language::Java, "synchronized"));
        assert!(is_keyword(Language::Python, "lambda"));
        assert!(!is_keyword(Language::C, "my_var"));
        assert!(!is_keyword(Language::Python, "self")); // soft name, not reserved
    }
}
