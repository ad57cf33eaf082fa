#pragma once

// Recursive-descent ECMAScript parser producing the normalized AST.
// Accepts modern scripts and modules: classes (fields, private names,
// static blocks), async/await, generators, optional chaining, nullish
// coalescing, template literals, destructuring, spread/rest.
//
// Structural wrappers with no construct value (blocks, expression
// statements, parentheses) are spliced away: their contents hang directly
// off the enclosing node.

#include <optional>
#include <string>

#include "jscefr/ast.hpp"

namespace jscefr {

struct ParseResult {
    std::optional<ParsedUnit> unit;
    std::optional<ParseError> error;

    bool ok() const { return unit.has_value(); }
};

/// Per-file isolation: syntax errors come back as a ParseError, never throw.
ParseResult parse_source(SourceFile file);

/// Test convenience; throws std::runtime_error on syntax errors.
ParsedUnit parse_or_throw(std::string text, std::string path = "test/test.js");

}  // namespace jscefr
