// dblcov CLI: thin driver over the C API. Flags are assembled into a params
// JSON object; reports and bundles pass through untouched so output stays
// byte-stable.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dblcov.h"

using nlohmann::json;

namespace {

struct CommonFlags {
    std::string field = "Fp:101";
    std::uint64_t seed = 0;
    std::string out_format = "json";
    std::string out_file;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--field", f.field, "coefficient field: Q or Fp:<prime>")
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "PRNG seed")->capture_default_str();
    cmd->add_option("--out", f.out_format, "output format: json or csv (csv: tabular commands)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", f.out_file, "write output to a file instead of stdout");
}

json field_json(const std::string& s) {
    if (s == "Q") return json("Q");
    if (s.rfind("Fp:", 0) == 0) {
        try {
            return json{{"p", std::stoull(s.substr(3))}};
        } catch (const std::exception&) {
        }
    }
    std::fprintf(stderr, "error: bad --field value '%s' (expected Q or Fp:<prime>)\n", s.c_str());
    std::exit(DC_BAD_ARGUMENT);
}

int emit(dc_status st, char* out, const CommonFlags& f) {
    std::string text = out ? out : "";
    dc_string_free(out);
    if (st == DC_OK || st == DC_CHECK_FAILED) {
        if (!f.out_file.empty()) {
            std::ofstream os(f.out_file, std::ios::binary);
            if (!os) {
                std::fprintf(stderr, "error: cannot write %s\n", f.out_file.c_str());
                return DC_BAD_ARGUMENT;
            }
            os << text;
        } else {
            std::cout << text;
        }
    } else {
        if (!text.empty()) std::cerr << text;
        std::fprintf(stderr, "error [%s]: %s\n", dc_status_name(st), dc_last_error());
    }
    return int(st);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
        std::exit(DC_PARSE_ERROR);
    }
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("dblcov ") + dc_version() +
                 " - exact double-cover lifting and invariant census"};
    app.require_subcommand(1);

    // lift
    auto* lift = app.add_subcommand("lift", "lift an image hypersurface to branch data");
    CommonFlags lf;
    std::string lift_input, lift_canned;
    int lift_samples = 20;
    bool lift_verify = false;
    lift->add_option("--input", lift_input, "bundle JSON file (roles g2d/fk/fkd or g/fk/fkd)");
    lift->add_option("--canned", lift_canned, "use a canned bundle by name");
    lift->add_option("--samples", lift_samples, "random family members to verify")
        ->capture_default_str();
    lift->add_flag("--verify", lift_verify, "accepted for uniformity; lift always verifies");
    add_common(lift, lf);

    // census
    auto* census = app.add_subcommand("census", "dimension, genus and corank tables");
    CommonFlags cf;
    int c_n = 2, c_d = 3, c_kmin = 3, c_kmax = 8;
    bool c_verify = false;
    census->add_option("--n", c_n)->capture_default_str();
    census->add_option("--d", c_d)->capture_default_str();
    census->add_option("--k-min", c_kmin)->capture_default_str();
    census->add_option("--k-max", c_kmax)->capture_default_str();
    census->add_flag("--verify", c_verify, "run the brute-force rank oracles");
    add_common(census, cf);

    // roundtrip
    auto* rt = app.add_subcommand("roundtrip", "random cover/divisor push-forward and lift");
    CommonFlags rf;
    int r_n = 2, r_d = 3, r_k = 6, r_samples = 20;
    bool rt_verify = false;
    rt->add_option("--n", r_n)->capture_default_str();
    rt->add_option("--d", r_d)->capture_default_str();
    rt->add_option("--k", r_k)->capture_default_str();
    rt->add_option("--samples", r_samples)->capture_default_str();
    rt->add_flag("--verify", rt_verify, "accepted for uniformity; roundtrip always verifies");
    add_common(rt, rf);

    // hilbert
    auto* hil = app.add_subcommand("hilbert", "graded dimension formula/oracle table");
    CommonFlags hf;
    int h_n = 2, h_amax = 3, h_bmax = 3;
    long h_mmax = 10;
    bool h_verify = false;
    hil->add_option("--n", h_n)->capture_default_str();
    hil->add_option("--a-max", h_amax)->capture_default_str();
    hil->add_option("--b-max", h_bmax)->capture_default_str();
    hil->add_option("--m-max", h_mmax)->capture_default_str();
    hil->add_flag("--verify", h_verify, "run the brute-force rank oracles");
    add_common(hil, hf);

    // gen
    auto* gen = app.add_subcommand("gen", "emit canned or random instance bundles");
    CommonFlags gf;
    std::string g_name;
    int g_n = 2, g_d = 3, g_k = 6;
    bool g_verify = false;
    gen->add_option("--name", g_name, "canned bundle name");
    gen->add_option("--n", g_n)->capture_default_str();
    gen->add_option("--d", g_d)->capture_default_str();
    gen->add_option("--k", g_k)->capture_default_str();
    gen->add_flag("--verify", g_verify, "validate the bundle by an immediate lift");
    add_common(gen, gf);

    CLI11_PARSE(app, argc, argv);

    if (lift->parsed()) {
        dc_bundle* b = nullptr;
        dc_status st;
        if (!lift_canned.empty())
            st = dc_bundle_canned(lift_canned.c_str(), &b);
        else if (!lift_input.empty())
            st = dc_bundle_parse(read_file(lift_input).c_str(), &b);
        else {
            std::fprintf(stderr, "error: lift needs --input FILE or --canned NAME\n");
            return DC_BAD_ARGUMENT;
        }
        if (st != DC_OK) {
            std::fprintf(stderr, "error [%s]: %s\n", dc_status_name(st), dc_last_error());
            return int(st);
        }
        json params{{"seed", lf.seed}, {"samples", lift_samples}, {"format", lf.out_format}};
        if (lift->count("--field") > 0) params["field"] = field_json(lf.field);
        char* out = nullptr;
        st = dc_run_lift(b, params.dump().c_str(), &out);
        dc_bundle_free(b);
        return emit(st, out, lf);
    }
    if (census->parsed()) {
        json params{{"n", c_n},           {"d", c_d},       {"k_min", c_kmin},
                    {"k_max", c_kmax},    {"seed", cf.seed}, {"verify", c_verify},
                    {"field", field_json(cf.field)}, {"format", cf.out_format}};
        char* out = nullptr;
        dc_status st = dc_run_census(params.dump().c_str(), &out);
        return emit(st, out, cf);
    }
    if (rt->parsed()) {
        json params{{"n", r_n},           {"d", r_d},
                    {"k", r_k},           {"samples", r_samples},
                    {"seed", rf.seed},    {"field", field_json(rf.field)},
                    {"format", rf.out_format}};
        char* out = nullptr;
        dc_status st = dc_run_roundtrip(params.dump().c_str(), &out);
        return emit(st, out, rf);
    }
    if (hil->parsed()) {
        json params{{"n", h_n},          {"a_max", h_amax},  {"b_max", h_bmax},
                    {"m_max", h_mmax},   {"verify", h_verify}, {"seed", hf.seed},
                    {"field", field_json(hf.field)}, {"format", hf.out_format}};
        char* out = nullptr;
        dc_status st = dc_run_hilbert(params.dump().c_str(), &out);
        return emit(st, out, hf);
    }
    if (gen->parsed()) {
        json params;
        if (!g_name.empty())
            params = json{{"name", g_name}};
        else
            params = json{{"n", g_n}, {"d", g_d}, {"k", g_k}, {"seed", gf.seed},
                          {"field", field_json(gf.field)}};
        params["verify"] = g_verify;
        params["format"] = gf.out_format;
        char* out = nullptr;
        dc_status st = dc_run_gen(params.dump().c_str(), &out);
        return emit(st, out, gf);
    }
    return 0;
}
