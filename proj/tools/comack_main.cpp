// comack CLI: computes dominant-dimension reports for cohomological Mackey
// endomorphism algebras and verifies them, with JSON output, batch mode and
// a content-addressed report cache. Talks to the core library exclusively
// through the C API in comack/comack.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "comack/comack.h"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string group;
    unsigned p = 0;
    unsigned max_ext = 3;
    unsigned order_bound = 64;
    unsigned max_term = 5000;
    std::string report_path;
    std::string cache_dir;
    std::string batch_path;
    std::string dump_algebra_path;
    bool verify_double_cosets = false;
    bool theorem2 = false;
    bool remark = false;
    bool oracle = false;
    bool timing = false;

    unsigned check_mask() const {
        unsigned m = 0;
        if (verify_double_cosets) m |= CMK_CHECK_DOUBLE_COSETS;
        if (theorem2) m |= CMK_CHECK_THEOREM2;
        if (remark) m |= CMK_CHECK_REMARK;
        if (oracle) m |= CMK_CHECK_ORACLE;
        return m;
    }
};

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_key(const Options& opt, const std::string& group, unsigned p) {
    std::ostringstream os;
    os << "comack|" << cmk_version() << "|schema" << cmk_schema_version() << "|group=" << group
       << "|p=" << p << "|cutoff=" << opt.max_ext << "|bound=" << opt.order_bound
       << "|ceiling=" << opt.max_term << "|checks=" << opt.check_mask();
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(os.str()));
    return buf;
}

bool write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return false;
        out << content;
        if (!out) return false;
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    return !ec;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct RunResult {
    int status = kExitInternal;
    std::string json;
    std::string error;
    bool verified = false;
    std::string algebra_dump;
};

// One pipeline run through the C API.
RunResult run_once(const Options& opt, const std::string& group, unsigned p) {
    RunResult res;
    cmk_config* cfg = cmk_config_new();
    int rc = CMK_OK;
    auto step = [&](int code) {
        if (rc == CMK_OK) rc = code;
    };
    step(cmk_config_set_group(cfg, group.c_str()));
    step(cmk_config_set_prime(cfg, p));
    step(cmk_config_set_ext_cutoff(cfg, opt.max_ext));
    step(cmk_config_set_order_bound(cfg, opt.order_bound));
    step(cmk_config_set_term_ceiling(cfg, opt.max_term));
    step(cmk_config_set_checks(cfg, opt.check_mask()));
    step(cmk_config_set_emit_timing(cfg, opt.timing ? 1 : 0));
    if (rc != CMK_OK) {
        res.status = rc;
        res.error = cmk_last_error();
        cmk_config_free(cfg);
        return res;
    }
    cmk_report* rep = nullptr;
    rc = cmk_run(cfg, &rep);
    cmk_config_free(cfg);
    res.status = rc;
    if (rep) {
        res.json = cmk_report_json(rep);
        res.verified = cmk_report_verified(rep) != 0;
        res.algebra_dump = cmk_report_algebra_dump(rep);
        cmk_report_free(rep);
    } else {
        res.error = cmk_last_error();
    }
    return res;
}

// Cache-aware run; --timing bypasses the cache entirely (timed reports are
// not reproducible byte-for-byte).
RunResult run_cached(const Options& opt, const std::string& group, unsigned p) {
    if (opt.cache_dir.empty() || opt.timing || !opt.dump_algebra_path.empty())
        return run_once(opt, group, p);
    fs::path dir(opt.cache_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path file = dir / (cache_key(opt, group, p) + ".json");
    if (auto cached = read_file(file.string())) {
        ordered_json parsed = ordered_json::parse(*cached, nullptr, false);
        if (!parsed.is_discarded() && parsed.contains("schema_version") &&
            parsed.contains("verified")) {
            RunResult res;
            res.json = *cached;
            res.verified = parsed["verified"].get<bool>();
            res.status = res.verified ? kExitVerified : kExitVerifyFailed;
            return res;
        }
        std::cerr << "comack: warning: corrupt cache entry " << file.string()
                  << ", recomputing\n";
    }
    RunResult res = run_once(opt, group, p);
    if (res.status == kExitVerified || res.status == kExitVerifyFailed)
        if (!write_file_atomic(file.string(), res.json))
            std::cerr << "comack: warning: could not write cache entry " << file.string()
                      << "\n";
    return res;
}

int run_single(const Options& opt) {
    RunResult res = run_cached(opt, opt.group, opt.p);
    if (res.status == kExitUsage || res.status == kExitResource ||
        res.status == kExitInternal) {
        std::cerr << "comack: error: " << res.error << "\n";
        return res.status;
    }
    if (!opt.dump_algebra_path.empty()) {
        if (!write_file_atomic(opt.dump_algebra_path, res.algebra_dump)) {
            std::cerr << "comack: error: cannot write " << opt.dump_algebra_path << "\n";
            return kExitInternal;
        }
    }
    if (!opt.report_path.empty()) {
        if (!write_file_atomic(opt.report_path, res.json)) {
            std::cerr << "comack: error: cannot write " << opt.report_path << "\n";
            return kExitInternal;
        }
    } else {
        std::cout << res.json;
    }
    return res.status;
}

struct BatchLine {
    std::string spec;
    unsigned p = 0;
};

std::optional<std::vector<BatchLine>> parse_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::vector<BatchLine> lines;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && isspace((unsigned char)line.back())) line.pop_back();
        size_t start = 0;
        while (start < line.size() && isspace((unsigned char)line[start])) ++start;
        line = line.substr(start);
        if (line.empty()) continue;
        // the prime is the last whitespace-separated token; the spec may
        // contain spaces (perm:"(1 2 3)")
        size_t ws = line.find_last_of(" \t");
        if (ws == std::string::npos) {
            std::cerr << "comack: batch line " << lineno << ": expected '<spec> <p>'\n";
            return std::nullopt;
        }
        BatchLine bl;
        bl.spec = line.substr(0, ws);
        while (!bl.spec.empty() && isspace((unsigned char)bl.spec.back())) bl.spec.pop_back();
        try {
            bl.p = unsigned(std::stoul(line.substr(ws + 1)));
        } catch (...) {
            std::cerr << "comack: batch line " << lineno << ": bad prime\n";
            return std::nullopt;
        }
        lines.push_back(std::move(bl));
    }
    return lines;
}

int run_batch(const Options& opt) {
    auto lines = parse_batch(opt.batch_path);
    if (!lines) {
        if (!std::ifstream(opt.batch_path))
            std::cerr << "comack: error: cannot read batch file " << opt.batch_path << "\n";
        return kExitUsage;
    }
    ordered_json all = ordered_json::array();
    int worst = kExitVerified;
    auto bump = [&](int status) {
        // usage/resource/internal dominate verification failures
        if (status == kExitVerified) return;
        if (worst == kExitVerified || (worst == kExitVerifyFailed && status > worst))
            worst = status;
    };
    std::printf("%-28s %4s %8s %8s %s\n", "group", "p", "dim_F", "ddim", "status");
    for (const auto& bl : *lines) {
        RunResult res = run_cached(opt, bl.spec, bl.p);
        bump(res.status);
        if (res.status == kExitVerified || res.status == kExitVerifyFailed) {
            ordered_json parsed = ordered_json::parse(res.json);
            all.push_back(parsed);
            std::string ddim =
                parsed["ddim"]["kind"] == "infinite"
                    ? std::string("inf")
                    : (parsed["ddim"]["kind"] == "at_least" ? ">=" : "") +
                          std::to_string(parsed["ddim"].value("value", 0));
            std::printf("%-28s %4u %8llu %8s %s\n", bl.spec.c_str(), bl.p,
                        (unsigned long long)parsed.value("dim_F", 0), ddim.c_str(),
                        res.verified ? "ok" : "FAILED");
        } else {
            std::printf("%-28s %4u %8s %8s error: %s\n", bl.spec.c_str(), bl.p, "-", "-",
                        res.error.c_str());
        }
    }
    if (!opt.report_path.empty()) {
        if (!write_file_atomic(opt.report_path, all.dump(2) + "\n")) {
            std::cerr << "comack: error: cannot write " << opt.report_path << "\n";
            return kExitInternal;
        }
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"dominant dimension of cohomological Mackey endomorphism algebras over GF(p)"};
    app.add_option("--group", opt.group,
                   "group spec: cyclic:N | elemab:p:r | dihedral:N | quaternion:8 | sym:3 | "
                   "product:<spec>,<spec> | perm:\"<cycles>[;<cycles>...]\"");
    app.add_option("--p", opt.p, "field characteristic (prime)");
    app.add_option("--max-ext", opt.max_ext, "Ext cutoff (default 3)");
    app.add_option("--order-bound", opt.order_bound, "group order bound (max 64)");
    app.add_option("--max-term", opt.max_term, "resolution term ceiling (default 5000)");
    app.add_option("--report", opt.report_path, "write the JSON report here");
    app.add_option("--cache", opt.cache_dir, "report cache directory");
    app.add_option("--batch", opt.batch_path, "batch file: one '<spec> <p>' per line");
    app.add_option("--dump-algebra", opt.dump_algebra_path,
                   "write the structure-constant dump of F here");
    app.add_flag("--verify-double-cosets", opt.verify_double_cosets,
                 "check dim Hom(k[G/Q],k[G/R]) = |Q\\G/R| for all subgroup pairs");
    app.add_flag("--theorem2", opt.theorem2,
                 "verify the separable-equivalence instance over (kG, kP)");
    app.add_flag("--remark", opt.remark, "check dim Ext^1(U,U) >= dim Ext^1_kP(k,k) >= 1");
    app.add_flag("--oracle", opt.oracle,
                 "cross-check against the brute-force oracle (p = 2, dim F <= 6)");
    app.add_flag("--timing", opt.timing,
                 "emit real timing in reports (disables the cache)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "comack: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!opt.batch_path.empty()) {
        if (!opt.group.empty() || opt.p != 0) {
            std::cerr << "comack: --batch cannot be combined with --group/--p\n";
            return kExitUsage;
        }
        return run_batch(opt);
    }
    if (opt.group.empty() || opt.p == 0) {
        std::cerr << "comack: --group and --p are required (or use --batch); see --help\n";
        return kExitUsage;
    }
    return run_single(opt);
}
