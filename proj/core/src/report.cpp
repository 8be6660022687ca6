#include "symdecomp/report.hpp"

#include <map>

namespace symdecomp {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

json oracle_json(const GroupSpec& spec, int n, int d,
                 const std::vector<BasisColumnRange>& ranges) {
    json out;
    out["burnside_orbit_count"] = burnside_orbit_count(spec, d * d);
    out["trace_oracle"] = commutant_dim_trace_oracle(spec, d);
    // Copies within a class share one block, so d^2 counts once per class.
    std::map<int, std::uint64_t> class_dim;
    for (const auto& r : ranges)
        if (r.dim > 0) class_dim[r.class_id] = static_cast<std::uint64_t>(r.dim);
    std::uint64_t sum_d2 = 0;
    for (const auto& [cid, bd] : class_dim) sum_d2 += bd * bd;
    out["sum_block_dim_squared"] = sum_d2;
    std::int64_t dim = tensor_dimension(n, d);
    if (dim <= 64) out["nullspace_oracle"] = commutant_nullspace_oracle(spec, n, d);
    bool agree = out["burnside_orbit_count"] == out["trace_oracle"] &&
                 out["trace_oracle"] == out["sum_block_dim_squared"];
    if (out.contains("nullspace_oracle"))
        agree = agree && out["nullspace_oracle"] == out["trace_oracle"];
    out["agree"] = agree;
    return out;
}

json report_to_json(const ControllabilityReport& report, const json& config_echo,
                    bool emit_basis) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["config"] = config_echo;
    out["group"] = report.family.group.name();

    json family = json::array();
    for (const auto& rec : report.family.records)
        family.push_back({{"label", rec.label},
                          {"class", report.family.class_labels[rec.class_id]}});
    out["family"] = family;

    out["verification"] = {{"completeness", report.verification.completeness},
                           {"orthogonality", report.verification.orthogonality},
                           {"primitivity", report.verification.primitivity},
                           {"hermiticity", report.verification.hermiticity},
                           {"sampled_primitivity", report.verification.sampled_primitivity},
                           {"passes", report.verification.passes()}};

    json ranges = json::array();
    for (const auto& r : report.basis.ranges)
        ranges.push_back({{"class", report.family.class_labels[r.class_id]},
                          {"copy_of", report.family.records[r.record_index].label},
                          {"first_column", r.first},
                          {"dim", r.dim}});
    out["column_ranges"] = ranges;

    // Class table: block dimension d and multiplicity m per class.
    std::map<int, std::pair<int, int>> class_dm;
    for (const auto& r : report.basis.ranges) {
        auto& [bd, mult] = class_dm[r.class_id];
        bd = std::max(bd, r.dim);
        if (r.dim > 0) ++mult;
    }
    json classes = json::array();
    for (const auto& [cid, dm] : class_dm)
        classes.push_back({{"class", report.family.class_labels[cid]},
                           {"d", dm.first},
                           {"m", dm.second}});
    out["classes"] = classes;

    json operators = json::array();
    for (const auto& op : report.blocks.operators) {
        json entry;
        entry["label"] = op.label;
        entry["off_block"] = op.off_block;
        entry["copy_mismatch"] = op.copy_mismatch;
        json blocks = json::array();
        for (const auto& b : op.class_blocks) blocks.push_back(matrix_to_json(b));
        entry["class_blocks"] = blocks;
        operators.push_back(std::move(entry));
    }
    out["operators"] = operators;

    if (report.closure.block_dimensions.size()) {
        json closure;
        closure["per_block_dimensions"] = report.closure.block_dimensions;
        closure["block_full_unitary"] = report.closure.block_full_unitary;
        closure["sum_per_block"] = report.closure.dimension;
        closure["global_dimension"] = report.global_closure.dimension;
        out["lie_closure"] = closure;
    }

    if (emit_basis) out["change_of_basis"] = matrix_to_json(report.basis.unitary);
    return out;
}

}  // namespace symdecomp
