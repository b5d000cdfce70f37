#pragma once

// Verification reports: one row per checked case, emitted as JSON or CSV.
// Exact quantities are carried as decimal or p/q text, never as floating point.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace signvec {

enum class Provenance { PaperFormula, Oracle, Construction };

[[nodiscard]] std::string to_string(Provenance p);

struct ReportCase {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
    Provenance provenance = Provenance::Oracle;
    /// Informational cases are listed but never fail the suite.
    bool required = true;
    /// Set when the actual value came from a search that hit its budget.
    bool timed_out = false;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed_required = 0;
    std::size_t informational = 0;
    std::size_t timed_out = 0;
};

enum class ReportFormat { Json, Csv };

/// Throws InputError for anything but "json" or "csv".
[[nodiscard]] ReportFormat parse_report_format(const std::string& text);

class VerificationReport {
public:
    VerificationReport() = default;
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    /// pass is expected == actual.
    ReportCase& add(std::string id, std::string inputs, std::string expected, std::string actual,
                    Provenance provenance, bool required = true);
    /// A case whose pass/fail is decided by the caller (inequalities, aggregate sweeps).
    ReportCase& add_check(std::string id, std::string inputs, std::string expected, std::string actual, bool pass,
                          Provenance provenance, bool required = true);
    /// Appends the cases of another report, prefixing their ids with its suite name.
    void merge(const VerificationReport& other);

    [[nodiscard]] const std::string& suite() const noexcept { return suite_; }
    [[nodiscard]] const std::vector<ReportCase>& cases() const noexcept { return cases_; }
    [[nodiscard]] ReportSummary summary() const;
    /// True when every required case passed.
    [[nodiscard]] bool ok() const;
    /// 0 all required cases pass, 2 failures are all timeouts, 1 otherwise.
    [[nodiscard]] int exit_code() const;

    /// Cases sorted by id; ties keep insertion order.
    void sort_cases();

private:
    std::string suite_;
    std::vector<ReportCase> cases_;
};

[[nodiscard]] std::string to_json(const VerificationReport& report);
/// Columns: suite,case,expected,actual,pass,provenance.
[[nodiscard]] std::string to_csv(const VerificationReport& report);
void emit_report(std::ostream& out, const VerificationReport& report, ReportFormat format);
/// Throws InputError if the file cannot be written.
void emit_report_file(const std::string& path, const VerificationReport& report, ReportFormat format);

} // namespace signvec
