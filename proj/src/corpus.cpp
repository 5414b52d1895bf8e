#include "purepoly/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <thread>

namespace purepoly {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string where(const std::filesystem::path& path, std::size_t line) {
    return path.string() + ":" + std::to_string(line);
}

CorpusCase finish(std::vector<std::pair<std::string, std::string>> fields, const std::filesystem::path& path,
                  std::size_t line) {
    CorpusCase c;
    c.file = path.string();
    c.line = line;
    for (auto& [key, value] : fields) {
        if (key == "case") {
            c.id = value;
        } else if (key == "op") {
            c.op = value;
        } else if (key == "provenance") {
            c.provenance = value;
        } else if (key == "expect") {
            try {
                c.expect = Json::parse(value);
            } catch (const nlohmann::json::parse_error& e) {
                throw UsageError(where(path, line) + ": expect is not valid JSON: " + e.what());
            }
        } else if (key == "expect-error") {
            c.expect_error = value;
        } else {
            std::replace(key.begin(), key.end(), '-', '_');
            if (c.args.contains(key)) throw UsageError(where(path, line) + ": duplicate key " + key);
            c.args[key] = value;
        }
    }
    if (c.id.empty()) throw UsageError(where(path, line) + ": case without an id");
    if (c.op.empty()) throw UsageError(where(path, line) + ": case " + c.id + " has no op");
    if (c.provenance.empty()) throw UsageError(where(path, line) + ": case " + c.id + " has no provenance");
    if (c.expect.has_value() == c.expect_error.has_value())
        throw UsageError(where(path, line) + ": case " + c.id + " needs exactly one of expect / expect-error");
    return c;
}

bool glob_match(const char* pattern, const char* text) {
    if (*pattern == '\0') return *text == '\0';
    if (*pattern == '*') return glob_match(pattern + 1, text) || (*text != '\0' && glob_match(pattern, text + 1));
    return *text == *pattern && glob_match(pattern + 1, text + 1);
}

}  // namespace

std::vector<CorpusCase> load_corpus_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open corpus file " + path.string());
    std::vector<CorpusCase> out;
    std::vector<std::pair<std::string, std::string>> fields;
    std::size_t start = 0;
    std::size_t number = 0;
    std::string line;
    auto flush = [&] {
        if (!fields.empty()) out.push_back(finish(std::move(fields), path, start));
        fields.clear();
    };
    while (std::getline(in, line)) {
        ++number;
        const std::string text = trim(line);
        if (text.empty()) {
            flush();
            continue;
        }
        if (text[0] == '#') continue;
        const auto colon = text.find(':');
        if (colon == std::string::npos) throw UsageError(where(path, number) + ": expected 'key: value'");
        if (fields.empty()) start = number;
        fields.emplace_back(trim(text.substr(0, colon)), trim(text.substr(colon + 1)));
    }
    flush();
    return out;
}

std::vector<CorpusCase> load_corpus_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw UsageError("corpus directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".corpus") files.push_back(entry.path());
    if (files.empty()) throw UsageError("no .corpus files in " + dir.string());
    std::sort(files.begin(), files.end());
    std::vector<CorpusCase> out;
    std::set<std::string> ids;
    for (const auto& f : files) {
        for (auto& c : load_corpus_file(f)) {
            if (!ids.insert(c.id).second) throw UsageError(where(c.file, c.line) + ": duplicate case id " + c.id);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::filesystem::path default_corpus_dir() {
#ifdef PUREPOLY_CORPUS_DIR
    return PUREPOLY_CORPUS_DIR;
#else
    return "corpus";
#endif
}

std::string match_expected(const Json& expected, const Json& actual, const std::string& path) {
    if (expected.is_object()) {
        if (!actual.is_object()) return path + ": expected an object, got " + actual.dump();
        for (const auto& [key, value] : expected.items()) {
            if (!actual.contains(key)) return path + "." + key + ": missing";
            auto diff = match_expected(value, actual[key], path + "." + key);
            if (!diff.empty()) return diff;
        }
        return "";
    }
    if (expected.is_array()) {
        if (!actual.is_array()) return path + ": expected an array, got " + actual.dump();
        if (expected.size() != actual.size())
            return path + ": expected " + std::to_string(expected.size()) + " elements, got " +
                   std::to_string(actual.size()) + " " + actual.dump();
        for (std::size_t i = 0; i < expected.size(); ++i) {
            auto diff = match_expected(expected[i], actual[i], path + "[" + std::to_string(i) + "]");
            if (!diff.empty()) return diff;
        }
        return "";
    }
    if (expected != actual) return path + ": expected " + expected.dump() + ", got " + actual.dump();
    return "";
}

bool matches_filter(const std::string& id, const std::string& filter) {
    if (filter.empty()) return true;
    if (filter.find('*') != std::string::npos) return glob_match(filter.c_str(), id.c_str());
    return id.find(filter) != std::string::npos;
}

CaseResult run_case(const CorpusCase& c) {
    CaseResult result{c.id, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        const Json actual = run_operation(c.op, c.args);
        if (c.expect_error) {
            result.message = "expected error " + *c.expect_error + ", got " + actual.dump();
        } else {
            result.message = match_expected(*c.expect, actual);
            result.passed = result.message.empty();
        }
    } catch (const Error& e) {
        if (c.expect_error && *c.expect_error == e.kind()) {
            result.passed = true;
        } else {
            result.message = std::string(e.kind()) + ": " + e.what();
        }
    } catch (const std::exception& e) {
        result.message = std::string("unexpected exception: ") + e.what();
    }
    result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter, unsigned jobs) {
    std::vector<const CorpusCase*> selected;
    for (const auto& c : cases)
        if (matches_filter(c.id, filter)) selected.push_back(&c);
    CorpusSummary summary;
    summary.results.resize(selected.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(selected.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) summary.results[i] = run_case(*selected[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    pool.clear();
    for (const auto& r : summary.results) (r.passed ? summary.passed : summary.failed)++;
    return summary;
}

}  // namespace purepoly
