#pragma once
#include "operadlab/s3module.hpp"
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace operadlab {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct PipelineReport {
    std::string pipeline;
    std::vector<std::pair<std::string, Matrix>> matrices;  // named intermediates, in order
    std::vector<Relation> relations;                       // extracted relations
    std::vector<Check> checks;
    long long elapsed_ms = 0;

    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text(bool unicode = false) const;
    std::string to_csv() const;
};

struct PipelineOptions {
    // LLL parameter; pipelines fall back to their own default when unset
    // (3/4 in general, 9/10 for polarize-assoc).
    bool delta_set = false;
    Rational delta = make_rational(3, 4);
    // membership test used by generator extraction in the deformation
    // pipelines; FIELD reproduces the reference generator counts, the RING
    // variant is always reported alongside.
    Membership membership = Membership::FIELD;
};

PipelineReport run_dias_from_dend(const PipelineOptions& opts = {});
PipelineReport run_polarize_assoc(const PipelineOptions& opts = {});
PipelineReport run_deform_hnf(const PipelineOptions& opts = {});
PipelineReport run_dend_deform(const PipelineOptions& opts = {});
PipelineReport run_dias_deform(const PipelineOptions& opts = {});

// Specializes the deformed modules at q0 and compares against the expected
// targets (q0 = 0: Poisson; q0 = 1: symmetrized dendriform/diassociative);
// other q0 report ranks informationally.
PipelineReport verify_specialization(const Rational& q0, const PipelineOptions& opts = {});

// All five pipelines in their canonical order.
std::vector<PipelineReport> run_all(const PipelineOptions& opts = {});

PipelineReport run_pipeline(const std::string& name, const PipelineOptions& opts = {});
std::vector<std::string> pipeline_names();

} // namespace operadlab
