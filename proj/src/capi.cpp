#include "comack/comack.h"

#include "comack/ddim.hpp"
#include "comack/report.hpp"

#include <string>

struct cmk_config {
    comack::ddim::RunConfig cfg;
};

struct cmk_report {
    comack::ddim::DdimReport report;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

int code_of(const comack::Error& e) {
    switch (e.kind()) {
        case comack::ErrorKind::Usage: return CMK_ERR_USAGE;
        case comack::ErrorKind::Resource: return CMK_ERR_RESOURCE;
        case comack::ErrorKind::Internal: return CMK_ERR_INTERNAL;
    }
    return CMK_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const comack::Error& e) {
        g_last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CMK_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* cmk_version(void) { return comack::report::kArtifactVersion; }

int cmk_schema_version(void) { return comack::report::kSchemaVersion; }

const char* cmk_last_error(void) { return g_last_error.c_str(); }

cmk_config* cmk_config_new(void) { return new cmk_config(); }

void cmk_config_free(cmk_config* cfg) { delete cfg; }

int cmk_config_set_group(cmk_config* cfg, const char* spec) {
    if (!cfg || !spec) {
        g_last_error = "null argument";
        return CMK_ERR_USAGE;
    }
    cfg->cfg.group_spec = spec;
    return CMK_OK;
}

int cmk_config_set_prime(cmk_config* cfg, unsigned prime) {
    if (!cfg) {
        g_last_error = "null config";
        return CMK_ERR_USAGE;
    }
    if (!comack::gf::is_prime(prime)) {
        g_last_error = "p = " + std::to_string(prime) + " is not prime";
        return CMK_ERR_USAGE;
    }
    cfg->cfg.p = prime;
    return CMK_OK;
}

int cmk_config_set_ext_cutoff(cmk_config* cfg, unsigned cutoff) {
    if (!cfg || cutoff < 1) {
        g_last_error = "ext cutoff must be >= 1";
        return CMK_ERR_USAGE;
    }
    cfg->cfg.ext_cutoff = cutoff;
    return CMK_OK;
}

int cmk_config_set_order_bound(cmk_config* cfg, unsigned bound) {
    if (!cfg || bound < 1 || bound > 64) {
        g_last_error = "order bound must be between 1 and 64";
        return CMK_ERR_USAGE;
    }
    cfg->cfg.order_bound = bound;
    return CMK_OK;
}

int cmk_config_set_term_ceiling(cmk_config* cfg, unsigned ceiling) {
    if (!cfg || ceiling < 1) {
        g_last_error = "term ceiling must be >= 1";
        return CMK_ERR_USAGE;
    }
    cfg->cfg.term_ceiling = ceiling;
    return CMK_OK;
}

int cmk_config_set_checks(cmk_config* cfg, unsigned mask) {
    if (!cfg) {
        g_last_error = "null config";
        return CMK_ERR_USAGE;
    }
    cfg->cfg.check_double_cosets = mask & CMK_CHECK_DOUBLE_COSETS;
    cfg->cfg.check_theorem2 = mask & CMK_CHECK_THEOREM2;
    cfg->cfg.check_remark = mask & CMK_CHECK_REMARK;
    cfg->cfg.check_oracle = mask & CMK_CHECK_ORACLE;
    return CMK_OK;
}

int cmk_config_set_emit_timing(cmk_config* cfg, int enabled) {
    if (!cfg) {
        g_last_error = "null config";
        return CMK_ERR_USAGE;
    }
    cfg->cfg.emit_timing = enabled != 0;
    return CMK_OK;
}

int cmk_run(const cmk_config* cfg, cmk_report** out_report) {
    if (out_report) *out_report = nullptr;
    if (!cfg || !out_report) {
        g_last_error = "null argument";
        return CMK_ERR_USAGE;
    }
    if (cfg->cfg.group_spec.empty()) {
        g_last_error = "no group spec configured";
        return CMK_ERR_USAGE;
    }
    return guarded([&] {
        auto rep = std::make_unique<cmk_report>();
        rep->report = comack::ddim::comack_ddim(cfg->cfg);
        rep->json = comack::report::to_json(rep->report);
        bool verified = rep->report.verified;
        *out_report = rep.release();
        if (!verified) {
            g_last_error = "verification failed";
            return CMK_ERR_VERIFY;
        }
        return CMK_OK;
    });
}

const char* cmk_report_json(const cmk_report* rep) { return rep ? rep->json.c_str() : ""; }

int cmk_report_verified(const cmk_report* rep) {
    return rep && rep->report.verified ? 1 : 0;
}

int cmk_report_ddim_kind(const cmk_report* rep) {
    if (!rep) return CMK_DDIM_INFINITE;
    switch (rep->report.ddim.kind) {
        case comack::ddim::DdimValue::Kind::Exact: return CMK_DDIM_EXACT;
        case comack::ddim::DdimValue::Kind::AtLeast: return CMK_DDIM_AT_LEAST;
        case comack::ddim::DdimValue::Kind::Infinite: return CMK_DDIM_INFINITE;
    }
    return CMK_DDIM_INFINITE;
}

long cmk_report_ddim_value(const cmk_report* rep) {
    if (!rep || rep->report.ddim.kind == comack::ddim::DdimValue::Kind::Infinite) return -1;
    return long(rep->report.ddim.value);
}

const char* cmk_report_algebra_dump(const cmk_report* rep) {
    return rep ? rep->report.algebra_dump.c_str() : "";
}

void cmk_report_free(cmk_report* rep) { delete rep; }

}  // extern "C"
