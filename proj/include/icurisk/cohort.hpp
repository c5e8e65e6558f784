#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace icurisk {

enum class FeatureKind { numeric, binary, categorical };

enum class DomainTag {
    chartevents,
    labevents,
    procedureevents,
    comorbidities,
    admission_demographics
};

std::string to_string(FeatureKind kind);
std::string to_string(DomainTag tag);
FeatureKind feature_kind_from_string(const std::string& s);
DomainTag domain_tag_from_string(const std::string& s);

struct FeatureSpec {
    std::string name;
    FeatureKind kind = FeatureKind::numeric;
    DomainTag domain_tag = DomainTag::chartevents;
    std::string unit;
};

nlohmann::json schema_to_json(const std::vector<FeatureSpec>& schema);
std::vector<FeatureSpec> schema_from_json(const nlohmann::json& j);

// One-stay-per-patient rectangular table. Immutable by convention after load;
// all pipeline stages copy rather than mutate, so frames are safe to share
// across parallel workers.
struct CohortFrame {
    std::vector<FeatureSpec> schema;
    std::size_t n_rows = 0;
    // [feature][row]. Numeric/binary features hold values directly;
    // categorical features hold indices into `levels[feature]`.
    std::vector<std::vector<double>> columns;
    std::vector<std::vector<std::string>> levels;
    std::vector<std::vector<std::uint8_t>> missing;
    std::vector<int> outcome; // 1 = died within 28 days
    std::vector<std::string> row_ids;
    // Empty until a split assigns it; 0 = train, 1 = test.
    std::vector<std::uint8_t> partition;

    std::size_t feature_index(const std::string& name) const;
    std::optional<std::size_t> find_feature(const std::string& name) const;
    double missing_fraction(std::size_t feature) const;
    bool is_constant(std::size_t feature) const;
    std::vector<double> non_missing_values(std::size_t feature) const;
    CohortFrame select_rows(const std::vector<std::size_t>& rows) const;
    CohortFrame drop_features(const std::vector<std::string>& names) const;
    void check_invariants() const;
};

struct LoadOptions {
    std::vector<std::string> missing_sentinels = {"", "NA"};
    std::string row_id_column = "row_id";
};

struct LoadResult {
    CohortFrame frame;
    std::vector<std::string> warnings; // e.g. ignored extra columns
};

LoadResult load_csv(const std::string& path, const std::vector<FeatureSpec>& schema,
                    const std::string& outcome_column, const LoadOptions& opts = {});

// Missing cells are written as the empty string; doubles carry 17 significant
// digits so a write/load cycle reproduces every non-missing cell bit-exactly.
void write_csv(const std::string& path, const CohortFrame& frame,
               const std::string& outcome_column = "outcome");

struct ValidationReport {
    struct FeatureCheck {
        std::string name;
        double missing_fraction = 0.0;
        bool constant = false;
        std::size_t n_non_missing = 0;
    };
    std::size_t n_rows = 0;
    std::vector<FeatureCheck> features;
    std::map<int, std::size_t> outcome_counts;

    nlohmann::json to_json() const;
    std::string render_text() const;
};

// Report-only; never mutates the frame.
ValidationReport validate(const CohortFrame& frame);

enum class Grouping { by_outcome, by_partition };

struct GroupSummary {
    struct FeatureSummary {
        std::string name;
        double mean = 0.0;
        double sd = 0.0;
        bool is_binary = false;
        double prevalence = 0.0; // binary features only
        std::size_t n_non_missing = 0;
        bool degenerate = false; // single-observation group
    };
    std::string group_label;
    std::size_t n = 0;
    std::vector<FeatureSummary> features;
};

// Mean and sample SD (divisor n-1) per numeric feature per group, prevalence
// per binary feature, over non-missing cells only. A single-row group reports
// sd = 0 with the degenerate flag set.
std::vector<GroupSummary> summarize_by_group(const CohortFrame& frame, Grouping grouping);

nlohmann::json group_summaries_to_json(const std::vector<GroupSummary>& groups);
std::string render_group_table(const CohortFrame& frame, const std::vector<GroupSummary>& groups);

} // namespace icurisk
