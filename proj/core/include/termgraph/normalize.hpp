#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace termgraph {

using Words = std::vector<std::string>;

// Rule-based plural stripping, iterated to a fixed point so that
// lemmatize(lemmatize(w)) == lemmatize(w). Expects a case-folded word.
std::string lemmatize(std::string_view word);

// ASCII case folding; bytes outside A-Z are left untouched.
std::string fold_case(std::string_view text);

// Case-folds, splits on '-' and '/', lemmatizes each piece. May be empty.
Words normalize_word(std::string_view raw);

// Normalizes a whole sequence. Throws Error(empty_after_normalization) when
// nothing survives.
Words normalize(std::span<const std::string> raw);

// Splits on ASCII whitespace, then normalizes. Same failure mode.
Words normalize_text(std::string_view text);

std::string join_words(std::span<const std::string> words, std::string_view sep = " ");

}  // namespace termgraph
