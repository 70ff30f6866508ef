#include "invaut/report_json.hpp"

namespace invaut {

Json code_rows(const LinearCode& code) {
    Json rows = Json::array();
    for (const auto& g : code.generators()) rows.push_back(g.to_string());
    return rows;
}

Json to_json(const Counterexample& counterexample) {
    Json out;
    out["generators"] = code_rows(counterexample.code);
    out["reason"] = counterexample.reason;
    return out;
}

Json to_json(const VerifyReport& report, bool stable) {
    Json out;
    out["theorem_id"] = report.theorem_id;
    out["n"] = report.n;
    out["k_range"] = Json::array({report.k_lo, report.k_hi});
    out["scanned"] = report.scanned;
    Json list = Json::array();
    for (const auto& ce : report.counterexamples) list.push_back(to_json(ce));
    out["counterexamples"] = std::move(list);
    out["witnesses_checked"] = report.witnesses_checked;
    out["elapsed_ms"] = stable ? 0 : report.elapsed_ms;
    out["slice"] = Json{{"index", report.slice.index}, {"total", report.slice.total}};
    return out;
}

std::string dump_report(const VerifyReport& report, bool stable) { return to_json(report, stable).dump(2) + "\n"; }

}  // namespace invaut
