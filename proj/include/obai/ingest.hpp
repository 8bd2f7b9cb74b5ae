#pragma once

#include <string>
#include <vector>

#include "obai/corpus.hpp"

namespace obai {

struct IngestConfig {
  bool clitic_splitting = true;
  bool normalize_unicode = true;  // compose Latin-1 accents, fold curly quotes
};

// Compose common combining accents into precomposed Latin-1 letters and
// fold curly quotes/dashes to their ASCII equivalents. Covers the Latin
// range that turns up in edited English text; not a full NFC pass.
std::string normalize_text(const std::string& raw);

// Rule-based tokenizer and sentence splitter for English text.
// Splits punctuation from words, keeps hyphenated words whole, splits
// common clitics ('s n't 're 've 'll 'd 'm) when configured, and keeps
// known abbreviations (Mr. Dr. e.g. i.e. etc. vs. U.S.) as one token.
// Byte offsets address the text as normalized by `cfg`.
// Throws InputError on empty or whitespace-only input.
std::vector<Sentence> tokenize(const std::string& raw, const IngestConfig& cfg);

// Builds a Document from raw text: normalizes (per cfg), tokenizes, and
// stores the normalized text as raw_text so offsets stay consistent.
Document document_from_text(const std::string& id, const std::string& text,
                            const IngestConfig& cfg,
                            SourceLabel label = SourceLabel::kUnknown);

// Reads a CoNLL-U file. Multiword range lines (ID "3-4") and empty nodes
// (ID "5.1") are skipped. `# newdoc` comments start a new document.
// Offsets are synthesized by joining forms with single spaces.
// Throws ParseError naming the line on malformed input.
Corpus read_conllu(const std::string& path);
Corpus read_conllu_string(const std::string& content, const std::string& name);

// Writes 10-column CoNLL-U with LF line endings; unannotated columns are
// written as `_`. Every token must carry a UPOS tag.
void write_conllu(const Document& doc, const std::string& path);
std::string to_conllu(const Document& doc);

// Loads every .txt (tokenized) and .conllu (pre-annotated) file under the
// given paths; directories are walked non-recursively and documents are
// ordered by filename. Throws InputError when nothing was loaded.
Corpus load_corpus(const std::vector<std::string>& paths,
                   const std::string& label, const IngestConfig& cfg);

}  // namespace obai
