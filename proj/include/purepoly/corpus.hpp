#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "purepoly/commands.hpp"

namespace purepoly {

/// One runnable example: an operation, its arguments and the expected JSON fragment (or the
/// kind of error it must raise).
struct CorpusCase {
    std::string id;
    std::string op;
    Args args;
    std::optional<Json> expect;
    std::optional<std::string> expect_error;
    std::string provenance;
    std::string file;
    std::size_t line = 0;
};

/// Parses a corpus file: blank-line separated blocks of "key: value" lines, '#' comments.
/// Throws UsageError on malformed blocks.
std::vector<CorpusCase> load_corpus_file(const std::filesystem::path& path);
/// Every *.corpus file in dir, in file-name order. Throws UsageError if there are none.
std::vector<CorpusCase> load_corpus_dir(const std::filesystem::path& dir);
std::filesystem::path default_corpus_dir();

/// Empty when every key of `expected` is present in `actual` with a matching value (objects
/// recursively, arrays element by element with equal length); a description of the first
/// difference otherwise.
std::string match_expected(const Json& expected, const Json& actual, const std::string& path = "$");

/// '*' wildcards when present, substring match otherwise.
bool matches_filter(const std::string& id, const std::string& filter);

struct CaseResult {
    std::string id;
    bool passed = false;
    std::string message;
    double millis = 0;
};

CaseResult run_case(const CorpusCase& c);

struct CorpusSummary {
    std::vector<CaseResult> results;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// Runs the selected cases on up to `jobs` worker threads; results keep corpus order.
CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter = "", unsigned jobs = 0);

}  // namespace purepoly
