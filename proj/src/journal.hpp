#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "invaut/census.hpp"
#include "invaut/verifier.hpp"

namespace invaut {

// One completed unit of a journaled search.
struct JournalRecord {
    std::string theorem_id;
    std::size_t n = 0;
    std::size_t k = 0;
    Partition unit;
    std::uint64_t scanned = 0;
    std::vector<Counterexample> counterexamples;
};

// Newline-delimited JSON, one record per line. Lines that do not parse
// (a write cut short by a crash) are ignored on load.
class Journal {
public:
    explicit Journal(std::filesystem::path path) : path_(std::move(path)) {}

    std::vector<JournalRecord> load() const;
    /// Appends one line and fsyncs before returning.
    void append(const JournalRecord& record);

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace invaut
