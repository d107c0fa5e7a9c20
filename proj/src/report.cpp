#include "comack/report.hpp"

#include <json.hpp>

#include <sstream>

namespace comack::report {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json ddim_json(const ddim::DdimValue& v) {
    ordered_json j;
    switch (v.kind) {
        case ddim::DdimValue::Kind::Exact:
            j["kind"] = "exact";
            j["value"] = v.value;
            break;
        case ddim::DdimValue::Kind::AtLeast:
            j["kind"] = "at_least";
            j["value"] = v.value;
            break;
        case ddim::DdimValue::Kind::Infinite:
            j["kind"] = "infinite";
            break;
    }
    return j;
}

}  // namespace

std::string to_json(const ddim::DdimReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = ordered_json{{"spec", r.group_spec},
                              {"order", r.group_order},
                              {"sylow_order", r.sylow_order},
                              {"scope", r.scope}};
    j["p"] = r.p;
    j["subgroups"] = r.subgroup_count;
    j["dim_V"] = r.dim_v;
    j["dim_F"] = r.dim_f;
    ordered_json hom = ordered_json::array();
    for (const auto& e : r.hom_dims)
        hom.push_back(ordered_json{
            {"q", e.q}, {"r", e.r}, {"dim", e.dim}, {"double_cosets", e.double_cosets}});
    j["hom_dims"] = hom;
    ordered_json ext = ordered_json::array();
    for (size_t i = 0; i < r.ext.size(); ++i)
        ext.push_back(ordered_json{{"i", i + 1}, {"dim", r.ext[i]}});
    j["ext"] = ext;
    j["ddim"] = ddim_json(r.ddim);
    j["witnesses"] = ordered_json{
        {"coresolution_ranks",
         ordered_json::array({r.witness_dim_f, r.witness_dim_j0, r.witness_dim_j1})},
        {"exact", r.witness_ok}};

    ordered_json checks;
    {
        ordered_json c;
        c["status"] = to_string(r.check_double_cosets.status);
        if (r.check_double_cosets.status != ddim::CheckStatus::NotRun)
            c["pairs_checked"] = r.check_double_cosets.pairs_checked;
        checks["double_cosets"] = c;
    }
    {
        ordered_json c;
        c["status"] = to_string(r.check_theorem2.status);
        if (r.check_theorem2.status != ddim::CheckStatus::NotRun) {
            c["ddim_group_algebra"] = ddim_json(r.check_theorem2.ddim_group);
            c["ddim_sylow_algebra"] = ddim_json(r.check_theorem2.ddim_sylow);
            c["induction_in_add_U"] = r.check_theorem2.induction_in_add_u;
            c["restriction_in_add_V"] = r.check_theorem2.restriction_in_add_v;
            c["stabilizers_checked"] = r.check_theorem2.stabilizers_checked;
        }
        checks["theorem2"] = c;
    }
    {
        ordered_json c;
        c["status"] = to_string(r.check_remark.status);
        if (r.check_remark.status != ddim::CheckStatus::NotRun) {
            c["ext1_group_algebra"] = r.check_remark.ext1_group;
            c["ext1_sylow_trivial"] = r.check_remark.ext1_sylow;
        }
        checks["remark"] = c;
    }
    {
        ordered_json c;
        c["status"] = to_string(r.check_oracle.status);
        if (r.check_oracle.status != ddim::CheckStatus::NotRun) {
            c["brute"] = ddim_json(r.check_oracle.brute);
            c["mueller"] = ddim_json(r.check_oracle.mueller);
        }
        checks["oracle"] = c;
    }
    j["checks"] = checks;

    ordered_json flags = ordered_json::array();
    if (r.trivial_defect) flags.push_back("trivial-defect");
    j["flags"] = flags;
    j["verified"] = r.verified;
    j["timing_ms"] = r.emit_timing ? r.timing_ms : 0;
    return j.dump(2) + "\n";
}

std::string summary_line(const ddim::DdimReport& r) {
    std::ostringstream os;
    os << r.group_spec << " p=" << r.p << " |G|=" << r.group_order << " |P|=" << r.sylow_order
       << " dimV=" << r.dim_v << " dimF=" << r.dim_f << " ddim=" << r.ddim.to_string()
       << (r.verified ? " [verified]" : " [FAILED]");
    return os.str();
}

}  // namespace comack::report
