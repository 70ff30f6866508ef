#include "journal.hpp"

#include <cstdio>
#include <fstream>

#include <unistd.h>

#include "invaut/error.hpp"
#include "invaut/report_json.hpp"

namespace invaut {

namespace {

Json encode(const JournalRecord& record) {
    Json out;
    out["theorem_id"] = record.theorem_id;
    out["n"] = record.n;
    out["k"] = record.k;
    out["unit"] = Json{{"index", record.unit.index}, {"total", record.unit.total}};
    out["scanned"] = record.scanned;
    Json list = Json::array();
    for (const auto& ce : record.counterexamples) list.push_back(to_json(ce));
    out["counterexamples"] = std::move(list);
    return out;
}

JournalRecord decode(const Json& in) {
    JournalRecord rec;
    rec.theorem_id = in.at("theorem_id").get<std::string>();
    rec.n = in.at("n").get<std::size_t>();
    rec.k = in.at("k").get<std::size_t>();
    rec.unit.index = in.at("unit").at("index").get<std::size_t>();
    rec.unit.total = in.at("unit").at("total").get<std::size_t>();
    rec.scanned = in.at("scanned").get<std::uint64_t>();
    for (const auto& ce : in.at("counterexamples")) {
        std::vector<Word> rows;
        for (const auto& r : ce.at("generators")) rows.push_back(Word::from_string(r.get<std::string>()));
        rec.counterexamples.push_back({rref(rec.n, rows), ce.at("reason").get<std::string>(), std::nullopt});
    }
    return rec;
}

}  // namespace

std::vector<JournalRecord> Journal::load() const {
    std::vector<JournalRecord> out;
    std::ifstream in(path_);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(decode(Json::parse(line)));
        } catch (const std::exception&) {
            // torn write
        }
    }
    return out;
}

void Journal::append(const JournalRecord& record) {
    std::string line = encode(record).dump() + "\n";
    {
        // Start on a fresh line if the previous run died mid-write.
        std::ifstream tail(path_, std::ios::binary | std::ios::ate);
        if (tail && tail.tellg() > 0) {
            tail.seekg(-1, std::ios::end);
            if (tail.get() != '\n') line.insert(line.begin(), '\n');
        }
    }
    std::FILE* f = std::fopen(path_.c_str(), "ab");
    if (f == nullptr) throw InvalidInput("cannot open journal " + path_.string());
    const bool ok = std::fwrite(line.data(), 1, line.size(), f) == line.size() && std::fflush(f) == 0 &&
                    ::fsync(::fileno(f)) == 0;
    std::fclose(f);
    if (!ok) throw InvalidInput("cannot write journal " + path_.string());
}

}  // namespace invaut
