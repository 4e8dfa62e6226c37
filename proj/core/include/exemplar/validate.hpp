#pragma once

#include <set>
#include <string>
#include <vector>

#include "exemplar/domain.hpp"
#include "exemplar/error.hpp"

namespace exemplar {

struct ValidationIssue {
    std::string locator;  // e.g. "profiles[3] m0003"
    std::string message;

    friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;

    bool accepted() const { return errors.empty(); }
    bool has(const std::string& message) const;
    std::string to_string() const;

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Checks every domain invariant over raw decoded records. Never throws; the report carries failures.
/// `extra_companies` extends the set of companies a co-view may reference beyond those held in positions.
ValidationReport validate_corpus(const std::vector<MemberProfile>& profiles,
                                 const SkillTaxonomy& taxonomy,
                                 const EndorsementGraph& endorsements,
                                 const CoViewLog& coviews,
                                 const std::set<CompanyId>& extra_companies = {});

/// Raised when a corpus fails validation at load time.
class CorpusRejected : public InvalidArgument {
public:
    explicit CorpusRejected(ValidationReport report)
        : InvalidArgument("corpus rejected:\n" + report.to_string()), report_(std::move(report)) {}

    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

}  // namespace exemplar
