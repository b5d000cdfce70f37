#include "signvec/report.hpp"

#include "signvec/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace signvec {

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::PaperFormula: return "paper-formula";
    case Provenance::Oracle: return "oracle";
    case Provenance::Construction: return "construction";
    }
    return "oracle";
}

ReportFormat parse_report_format(const std::string& text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    throw InputError("unknown report format \"" + text + "\" (expected json or csv)");
}

ReportCase& VerificationReport::add(std::string id, std::string inputs, std::string expected, std::string actual,
                                    Provenance provenance, bool required) {
    const bool pass = expected == actual;
    return add_check(std::move(id), std::move(inputs), std::move(expected), std::move(actual), pass, provenance,
                     required);
}

ReportCase& VerificationReport::add_check(std::string id, std::string inputs, std::string expected,
                                          std::string actual, bool pass, Provenance provenance, bool required) {
    cases_.push_back(ReportCase{std::move(id), std::move(inputs), std::move(expected), std::move(actual), pass,
                                provenance, required, false});
    return cases_.back();
}

void VerificationReport::merge(const VerificationReport& other) {
    for (auto c : other.cases_) {
        c.id = other.suite_ + "/" + c.id;
        cases_.push_back(std::move(c));
    }
}

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    s.total = cases_.size();
    for (const auto& c : cases_) {
        if (c.pass) ++s.passed;
        if (!c.required) ++s.informational;
        else if (!c.pass) ++s.failed_required;
        if (c.timed_out) ++s.timed_out;
    }
    return s;
}

bool VerificationReport::ok() const {
    return std::all_of(cases_.begin(), cases_.end(), [](const ReportCase& c) { return !c.required || c.pass; });
}

int VerificationReport::exit_code() const {
    if (ok()) return 0;
    for (const auto& c : cases_)
        if (c.required && !c.pass && !c.timed_out) return 1;
    return 2;
}

void VerificationReport::sort_cases() {
    std::stable_sort(cases_.begin(), cases_.end(), [](const ReportCase& a, const ReportCase& b) { return a.id < b.id; });
}

std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite();
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : report.cases()) {
        nlohmann::ordered_json row;
        row["id"] = c.id;
        row["inputs"] = c.inputs;
        row["expected"] = c.expected;
        row["actual"] = c.actual;
        row["pass"] = c.pass;
        row["provenance"] = to_string(c.provenance);
        row["required"] = c.required;
        if (c.timed_out) row["timed_out"] = true;
        cases.push_back(std::move(row));
    }
    doc["cases"] = std::move(cases);
    const auto s = report.summary();
    doc["summary"] = {{"total", s.total},
                      {"passed", s.passed},
                      {"failed_required", s.failed_required},
                      {"informational", s.informational},
                      {"timed_out", s.timed_out}};
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const VerificationReport& report) {
    std::string out = "suite,case,expected,actual,pass,provenance\n";
    for (const auto& c : report.cases()) {
        out += csv_field(report.suite()) + "," + csv_field(c.id) + "," + csv_field(c.expected) + "," +
               csv_field(c.actual) + "," + (c.pass ? "true" : "false") + "," + to_string(c.provenance) + "\n";
    }
    return out;
}

void emit_report(std::ostream& out, const VerificationReport& report, ReportFormat format) {
    out << (format == ReportFormat::Json ? to_json(report) : to_csv(report));
}

void emit_report_file(const std::string& path, const VerificationReport& report, ReportFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write report file " + path);
    emit_report(out, report, format);
    if (!out) throw InputError("error while writing report file " + path);
}

} // namespace signvec
