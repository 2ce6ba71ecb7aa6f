#include "dblcov.h"

#include <cstring>
#include <new>
#include <string>

#include "dcov/gen.hpp"
#include "dcov/json_io.hpp"
#include "dcov/pipeline.hpp"
#include "dcov/version.hpp"

using namespace dcov;

struct dc_bundle {
    AnyBundle value;
    std::string digest;
};

namespace {

thread_local std::string g_last_error;

dc_status to_status(ErrorCode c) { return static_cast<dc_status>(static_cast<int>(c)); }

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
dc_status guard(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return DC_PARSE_ERROR;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return DC_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DC_INTERNAL_ERROR;
    }
}

json parse_params(const char* params_json) {
    if (!params_json || !*params_json) return json::object();
    return parse_json_text(params_json);
}

dc_status finish_run(const pipeline::RunResult& r, char** out) {
    if (out) {
        *out = dup_string(r.output);
        if (!*out) {
            g_last_error = "out of memory";
            return DC_INTERNAL_ERROR;
        }
    }
    if (r.status != ErrorCode::ok && r.status != ErrorCode::check_failed)
        g_last_error = r.output;
    return to_status(r.status);
}

} // namespace

extern "C" {

const char* dc_version(void) { return artifact_version; }

const char* dc_status_name(dc_status s) {
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(s)));
}

const char* dc_last_error(void) { return g_last_error.c_str(); }

void dc_string_free(char* s) { delete[] s; }

dc_status dc_bundle_parse(const char* json_text, dc_bundle** out) {
    return guard([&]() -> dc_status {
        if (!json_text || !out) fail(ErrorCode::bad_argument, "null argument");
        std::string text(json_text);
        auto b = bundle_from_json(parse_json_text(text));
        *out = new dc_bundle{std::move(b), pipeline::fnv1a64_hex(text)};
        return DC_OK;
    });
}

dc_status dc_bundle_canned(const char* name, dc_bundle** out) {
    return guard([&]() -> dc_status {
        if (!name || !out) fail(ErrorCode::bad_argument, "null argument");
        *out = new dc_bundle{canned(name), pipeline::fnv1a64_hex(std::string("canned:") + name)};
        return DC_OK;
    });
}

dc_status dc_bundle_random(const char* params_json, dc_bundle** out) {
    return guard([&]() -> dc_status {
        if (!out) fail(ErrorCode::bad_argument, "null argument");
        json params = parse_params(params_json);
        FieldDesc fd = params.contains("field") ? field_from_json(params["field"]) : prime_field(101);
        int n = params.value("n", 2);
        int d = params.value("d", 3);
        int k = params.value("k", 6);
        GenConfig cfg;
        cfg.seed = params.value("seed", std::uint64_t(0));
        cfg.field = fd;
        cfg.coeff_bound = params.value("coeff_bound", 10L);
        AnyBundle b = fd.kind == FieldKind::rational
                          ? AnyBundle(random_divisor_bundle<QField>(n, d, k, cfg))
                          : AnyBundle(random_divisor_bundle<ZpField>(n, d, k, cfg));
        *out = new dc_bundle{std::move(b), pipeline::fnv1a64_hex(params.dump())};
        return DC_OK;
    });
}

dc_status dc_bundle_to_json(const dc_bundle* b, char** out) {
    return guard([&]() -> dc_status {
        if (!b || !out) fail(ErrorCode::bad_argument, "null argument");
        *out = dup_string(any_bundle_to_json(b->value).dump(2) + "\n");
        return *out ? DC_OK : DC_INTERNAL_ERROR;
    });
}

void dc_bundle_free(dc_bundle* b) { delete b; }

dc_status dc_run_lift(const dc_bundle* input, const char* params_json, char** out) {
    return guard([&]() -> dc_status {
        if (!input) fail(ErrorCode::bad_argument, "null input bundle");
        auto r = pipeline::run_lift(input->value, input->digest, parse_params(params_json));
        return finish_run(r, out);
    });
}

dc_status dc_run_census(const char* params_json, char** out) {
    return guard([&]() -> dc_status {
        return finish_run(pipeline::run_census(parse_params(params_json)), out);
    });
}

dc_status dc_run_roundtrip(const char* params_json, char** out) {
    return guard([&]() -> dc_status {
        return finish_run(pipeline::run_roundtrip(parse_params(params_json)), out);
    });
}

dc_status dc_run_hilbert(const char* params_json, char** out) {
    return guard([&]() -> dc_status {
        return finish_run(pipeline::run_hilbert(parse_params(params_json)), out);
    });
}

dc_status dc_run_gen(const char* params_json, char** out) {
    return guard([&]() -> dc_status {
        return finish_run(pipeline::run_gen(parse_params(params_json)), out);
    });
}

} // extern "C"
