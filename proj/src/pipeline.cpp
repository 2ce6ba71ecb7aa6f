#include "dcov/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "dcov/census.hpp"
#include "dcov/cover.hpp"
#include "dcov/gen.hpp"
#include "dcov/lift.hpp"
#include "dcov/version.hpp"

namespace dcov::pipeline {

namespace {

using clock = std::chrono::steady_clock;

// Report skeleton shared by all commands. Everything except the timings
// object is a deterministic function of the inputs, so re-running with the
// embedded seed reproduces the payload byte-for-byte.
class Report {
  public:
    Report(std::string command, const json& params, const FieldDesc& field, std::uint64_t seed,
           std::string input_digest)
        : t0_(clock::now()) {
        j_["artifact"] = json{{"name", artifact_name},
                              {"version", artifact_version},
                              {"prng", SplitMix64::name()}};
        j_["command"] = std::move(command);
        j_["params"] = params;
        j_["field"] = field_name(field);
        j_["seed"] = seed;
        j_["input_digest"] = std::move(input_digest);
        j_["results"] = json::object();
    }

    void check(const std::string& name, bool pass, const std::string& reason = "") {
        json c{{"name", name}, {"pass", pass}};
        if (!pass) c["reason"] = reason.empty() ? "check failed" : reason;
        checks_.push_back(std::move(c));
        ok_ = ok_ && pass;
    }

    json& results() { return j_["results"]; }
    bool ok() const { return ok_; }

    RunResult finish() {
        j_["checks"] = checks_;
        j_["ok"] = ok_;
        j_["timings"] = json{
            {"total_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0_).count()}};
        return RunResult{ok_ ? ErrorCode::ok : ErrorCode::check_failed, j_.dump(2) + "\n"};
    }

  private:
    json j_;
    json checks_ = json::array();
    bool ok_ = true;
    clock::time_point t0_;
};

template <class Fn>
RunResult guarded(const std::string& command, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        json err{{"command", command},
                 {"ok", false},
                 {"error", json{{"code", error_code_name(e.code())}, {"message", e.what()}}}};
        return RunResult{e.code(), err.dump(2) + "\n"};
    } catch (const json::exception& e) {
        json err{{"command", command},
                 {"ok", false},
                 {"error", json{{"code", error_code_name(ErrorCode::parse_error)}, {"message", e.what()}}}};
        return RunResult{ErrorCode::parse_error, err.dump(2) + "\n"};
    } catch (const std::exception& e) {
        json err{{"command", command},
                 {"ok", false},
                 {"error", json{{"code", error_code_name(ErrorCode::internal)}, {"message", e.what()}}}};
        return RunResult{ErrorCode::internal, err.dump(2) + "\n"};
    }
}

FieldDesc field_from_params(const json& params) {
    if (params.contains("field")) return field_from_json(params["field"]);
    return prime_field(101);
}

void require_cap(const char* what, long value, long cap) {
    if (value > cap)
        fail(ErrorCode::cap_exceeded, std::string(what) + " = " + std::to_string(value) +
                                          " exceeds the cap " + std::to_string(cap));
}

GenConfig config_from_params(const json& params, const FieldDesc& field) {
    GenConfig cfg;
    cfg.seed = params.value("seed", std::uint64_t(0));
    cfg.field = field;
    cfg.coeff_bound = params.value("coeff_bound", 10L);
    cfg.smooth_prime = field.kind == FieldKind::prime
                           ? field.p
                           : params.value("smooth_prime", std::uint64_t(101));
    cfg.trials = params.value("trials", 24L);
    cfg.retry_cap = params.value("retry_cap", 64);
    return cfg;
}

template <class F>
json smoothness_json(const std::string& label, const PolyT<F>& p, std::uint64_t prime, long trials,
                     std::uint64_t seed) {
    auto rep = smoothness_sample(p, prime, trials, seed);
    json out{{"poly", label},
             {"prime", prime},
             {"verdict", verdict_name(rep.verdict)},
             {"points_on_variety", rep.points_on_variety},
             {"exhaustive", rep.exhaustive}};
    if (rep.witness) out["witness"] = *rep.witness;
    return out;
}

// Shared lift verification block: identity at a = 0, identity and contact
// membership at sampled parameters, injectivity, and smoothness verdicts.
template <class F>
void lift_checks(Report& rep, const LiftFamily<F>& fam, const PolyT<F>& g, int samples,
                 std::uint64_t seed, std::uint64_t smooth_prime, long trials) {
    const CompleteIntersection<F>& ci = fam.ci;
    auto base = family_member(fam, PolyT<F>::zero(ci.ring));
    rep.check("identity-a0", verify_lift(g, ci, base, fam.scalar));
    rep.check("contact-in-ideal-a0", contact_contains_ci(ci, base.f_hat));

    SplitMix64 rng(seed + 1);
    bool ids = true, contact = true;
    int drawn = 0;
    if (!fam.param_basis.empty()) {
        long deg = 2L * fam.d - fam.k;
        for (int s = 0; s < samples; ++s) {
            auto a = random_poly<F>(ci.ring, deg, rng, 10);
            auto m = family_member(fam, a);
            ids = ids && verify_lift(g, ci, m, fam.scalar);
            contact = contact && contact_contains_ci(ci, m.f_hat);
            ++drawn;
        }
    }
    rep.check("identity-random-members", ids,
              "identity failed on a sampled family member");
    rep.check("contact-in-ideal-members", contact,
              "sampled contact hypersurface not through the double locus");
    rep.check("family-injectivity", family_injectivity_check(fam, samples, seed + 2),
              "two sampled parameters gave proportional branch equations");

    rep.results()["family_dim"] = fam.param_basis.size();
    rep.results()["members_sampled"] = drawn;
    rep.results()["scalar"] = fam.ci.fa.field().to_string(fam.scalar);
    rep.results()["f_tilde"] = poly_to_json(fam.f_tilde);
    rep.results()["g_tilde"] = poly_to_json(fam.g_tilde);

    json smooth = json::array();
    smooth.push_back(smoothness_json("g_tilde", fam.g_tilde, smooth_prime, trials, seed + 3));
    if (!fam.param_basis.empty()) {
        SplitMix64 rng2(seed + 4);
        auto a = random_poly<F>(ci.ring, 2L * fam.d - fam.k, rng2, 10);
        auto m = family_member(fam, a);
        smooth.push_back(smoothness_json("g_hat-sample", m.g_hat, smooth_prime, trials, seed + 5));
    }
    rep.results()["smoothness"] = std::move(smooth);
}

void require_json_format(const json& params, const char* command) {
    if (params.value("format", "json") != "json")
        fail(ErrorCode::bad_argument,
             std::string(command) + " emits JSON reports only; csv applies to tabular commands");
}

template <class F>
RunResult lift_impl(const Bundle<F>& b, const std::string& digest, const json& params) {
    if (b.polys.empty()) fail(ErrorCode::bad_argument, "lift input bundle is empty");
    require_json_format(params, "lift");
    FieldDesc fd = b.polys.begin()->second.ring().field;
    if (params.contains("field") && !(field_from_json(params["field"]) == fd))
        fail(ErrorCode::ring_mismatch, "requested field differs from the input bundle's field");
    std::uint64_t seed = params.value("seed", std::uint64_t(0));
    int samples = params.value("samples", 20);
    long trials = params.value("trials", 24L);
    std::uint64_t smooth_prime =
        fd.kind == FieldKind::prime ? fd.p : params.value("smooth_prime", std::uint64_t(101));
    Report rep("lift", params, fd, seed, digest);

    PolyT<F> g = PolyT<F>::zero(b.polys.begin()->second.ring());
    std::optional<CompleteIntersection<F>> ci;
    std::optional<PolyT<F>> original_branch;

    if (b.has("g2d") && b.has("fk") && b.has("fkd")) {
        const PolyT<F>& g2d = b.at("g2d");
        const PolyT<F>& fk = b.at("fk");
        int d = int(g2d.degree() / 2);
        int n = g2d.ring().nvars - 1;
        int k = int(fk.degree());
        DoubleCover<F> cover(n, d, g2d);
        CoverDivisor<F> w(cover, fk, b.at("fkd"), k);
        auto img = divisor_image(w);
        g = img.g;
        ci.emplace(std::move(img.ci));
        original_branch = g2d;
        rep.check("pullback-splits", pullback_splits(w),
                  "weighted-ring splitting identity failed");
    } else if (b.has("g") && b.has("fk") && b.has("fkd")) {
        g = b.at("g");
        ci.emplace(b.at("fkd"), b.at("fk"));
    } else {
        fail(ErrorCode::bad_argument,
             "lift input needs roles (g2d, fk, fkd) or (g, fk, fkd)");
    }

    auto fam = lift_branch(g, *ci);
    lift_checks(rep, fam, g, samples, seed, smooth_prime, trials);
    if (original_branch)
        rep.check("branch-recovery", recovers_branch_class(fam, *original_branch),
                  "family does not contain the original branch class");
    rep.results()["k"] = fam.k;
    rep.results()["d"] = fam.d;
    rep.results()["n"] = ci->n();
    return rep.finish();
}

template <class F>
RunResult roundtrip_impl(const FieldDesc& fd, const json& params) {
    require_json_format(params, "roundtrip");
    int n = params.value("n", 2);
    int d = params.value("d", 3);
    int k = params.value("k", 6);
    require_cap("n", n, cap_n);
    require_cap("d", d, cap_base_degree);
    require_cap("k", k, cap_base_degree);
    if (k < d || d < 1) fail(ErrorCode::bad_argument, "roundtrip needs k >= d >= 1");
    std::uint64_t seed = params.value("seed", std::uint64_t(0));
    int samples = params.value("samples", 20);
    GenConfig cfg = config_from_params(params, fd);

    Report rep("roundtrip", params, fd, seed, fnv1a64_hex(params.dump()));
    auto bundle = random_divisor_bundle<F>(n, d, k, cfg);
    DoubleCover<F> cover(n, d, bundle.at("g2d"));
    CoverDivisor<F> w(cover, bundle.at("fk"), bundle.at("fkd"), k);
    auto img = divisor_image(w);
    rep.check("pullback-splits", pullback_splits(w));

    auto fam = lift_branch(img.g, img.ci);
    lift_checks(rep, fam, img.g, samples, seed, cfg.smooth_prime, cfg.trials);
    rep.check("branch-recovery", recovers_branch_class(fam, cover.g2d),
              "family does not contain the original branch class");

    long long kernel = decomposition_kernel_dim(img.ci, 2L * k);
    long long measured = kernel - (k == d ? 1 : 0);
    long long expected = dim_report(n, k, d).fiber_dim;
    rep.check("fiber-dimension", measured == expected,
              "measured " + std::to_string(measured) + ", census " + std::to_string(expected));
    rep.results()["kernel_dim"] = kernel;
    rep.results()["measured_family_dim"] = measured;
    rep.results()["census_fiber_dim"] = expected;
    rep.results()["dimension"] = measured;
    rep.results()["smoothness_branch"] =
        smoothness_json("g2d", cover.g2d, cfg.smooth_prime, cfg.trials, seed + 7);
    return rep.finish();
}

json dim_row_json(const DimReport& r) {
    return json{{"n", r.n},         {"k", r.k},           {"d", r.d},
                {"dim_Vd", r.dim_Vd}, {"dim_VW", r.dim_VW}, {"dim_Z", r.dim_Z},
                {"dim_W", r.dim_W},   {"fiber_dim", r.fiber_dim}};
}

json severi_row_json(const SeveriReport& r) {
    return json{{"k", r.k},
                {"d", r.d},
                {"genus", r.genus},
                {"contact_points", r.contact_points},
                {"family_dim", r.family_dim},
                {"expected_dim", r.expected_dim},
                {"excess", r.excess}};
}

json corank_row_json(const CorankReport& r) {
    return json{{"k", r.k},
                {"genus", r.genus},
                {"cork_phi", r.cork_phi},
                {"nu2", r.nu2},
                {"fiber_dim_reported", r.fiber_dim_reported},
                {"source", r.tabulated ? "tabulated" : "formula"}};
}

std::string census_csv(const json& tables) {
    std::ostringstream os;
    os << "# table=dim\n";
    os << "n,k,d,dim_Vd,dim_VW,dim_Z,dim_W,fiber_dim\n";
    for (const auto& r : tables["dim"])
        os << r["n"] << "," << r["k"] << "," << r["d"] << "," << r["dim_Vd"] << "," << r["dim_VW"]
           << "," << r["dim_Z"] << "," << r["dim_W"] << "," << r["fiber_dim"] << "\n";
    os << "# table=severi\n";
    os << "k,d,genus,contact_points,family_dim,expected_dim,excess\n";
    for (const auto& r : tables["severi"])
        os << r["k"] << "," << r["d"] << "," << r["genus"] << "," << r["contact_points"] << ","
           << r["family_dim"] << "," << r["expected_dim"] << "," << r["excess"] << "\n";
    os << "# table=corank\n";
    os << "k,genus,cork_phi,nu2,fiber_dim_reported,source\n";
    for (const auto& r : tables["corank"])
        os << r["k"] << "," << r["genus"] << "," << r["cork_phi"] << "," << r["nu2"] << ","
           << r["fiber_dim_reported"] << "," << r["source"].get<std::string>() << "\n";
    return os.str();
}

template <class F>
void census_verify(Report& rep, int n, int d, int kmin, int kmax, const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    for (int k = std::max(kmin, d); k <= kmax; ++k) {
        auto ci = random_smooth_ci<F>(n, k - d, k, cfg, rng);
        long long kernel = decomposition_kernel_dim(ci, 2L * k);
        long long fiber = dim_report(n, k, d).fiber_dim;
        rep.check("kernel-vs-fiber-k" + std::to_string(k),
                  kernel - (k == d ? 1 : 0) == fiber,
                  "kernel " + std::to_string(kernel) + " vs fiber " + std::to_string(fiber));
        if (k > d) {
            long long formula = i2_dim_formula(n, k - d, k, 2L * k);
            long long oracle = i2_dim_oracle(ci, 2L * k);
            rep.check("i2-formula-vs-oracle-k" + std::to_string(k), formula == oracle,
                      "formula " + std::to_string(formula) + " vs oracle " + std::to_string(oracle));
        }
    }
    if (n == 2 && d == 3) {
        for (int k = std::max(kmin, 4); k <= std::min(kmax, 7); ++k) {
            auto ci = random_smooth_ci<F>(2, k - 3, k, cfg, rng);
            rep.check("cubics-through-nodes-k" + std::to_string(k),
                      cubics_through_nodes(ci) == h(2, 6 - k));
        }
    }
    RingCtx p3 = projective_ring(3, cfg.field);
    auto quadric = random_poly<F>(p3, 2, rng, cfg.coeff_bound);
    auto quartic = random_poly<F>(p3, 4, rng, cfg.coeff_bound);
    auto counts = quartic_extension_oracle(quadric, quartic);
    rep.check("quartic-counts-oracle", counts == quartic_extension_counts(),
              "oracle (" + std::to_string(counts.first) + ", " + std::to_string(counts.second) +
                  ")");
}

RunResult census_impl(const json& params) {
    FieldDesc fd = field_from_params(params);
    int n = params.value("n", 2);
    int d = params.value("d", 3);
    int kmin = params.value("k_min", 3);
    int kmax = params.value("k_max", 8);
    bool verify = params.value("verify", false);
    std::string format = params.value("format", "json");
    require_cap("n", n, cap_n);
    require_cap("d", d, cap_base_degree);
    require_cap("k_max", kmax, cap_base_degree);
    if (d < 1 || kmin > kmax) fail(ErrorCode::bad_argument, "census needs d >= 1 and k_min <= k_max");
    std::uint64_t seed = params.value("seed", std::uint64_t(0));

    Report rep("census", params, fd, seed, fnv1a64_hex(params.dump()));
    json tables;
    tables["dim"] = json::array();
    tables["severi"] = json::array();
    tables["corank"] = json::array();
    for (int k = std::max(kmin, d); k <= kmax; ++k) {
        tables["dim"].push_back(dim_row_json(dim_report(n, k, d)));
        if (n == 2) tables["severi"].push_back(severi_row_json(severi_report(k, d)));
    }
    if (n == 2 && d == 3)
        for (int k = std::max(kmin, 1); k <= kmax; ++k)
            tables["corank"].push_back(corank_row_json(corank_report(k)));

    auto counts = quartic_extension_counts();
    rep.results()["quartic_extension_counts"] = json::array({counts.first, counts.second});
    // sextic double solids in P^3 lift uniquely: the (n,d,k) = (3,1,3) fiber
    // is h(-1) = 0, emitted as a consistency row
    rep.results()["unique_lift_consistency"] =
        json{{"n", 3}, {"d", 1}, {"k", 3}, {"fiber_dim", dim_report(3, 3, 1).fiber_dim}};
    auto ledger = normal_bundle_ledger();
    rep.results()["normal_bundle_ledger"] =
        json{{"row_y", ledger.row_y}, {"row_s", ledger.row_s}, {"row_c", ledger.row_c}};
    rep.check("ledger-rows", ledger.consistent);
    rep.check("quartic-extension-counts", counts.first == 10 && counts.second == 1);

    bool genus_ok = true;
    for (int k = 3; k <= 20; ++k)
        genus_ok = genus_ok && severi_report(k, 3).genus == 1LL * k * k + 1;
    rep.check("genus-identity-d3", genus_ok);

    bool excess_ok = true;
    for (int dd = 1; dd <= 6; ++dd)
        for (int k = dd; k <= 10; ++k)
            excess_ok = excess_ok && severi_report(k, dd).excess == 1LL * (dd - 1) * (dd - 2) / 2;
    rep.check("severi-excess-grid", excess_ok);

    bool cork_fiber_ok = true;
    for (int k = 4; k <= 12; ++k)
        cork_fiber_ok =
            cork_fiber_ok && corank_report(k).cork_phi - 1 == dim_report(2, k, 3).fiber_dim;
    rep.check("corank-vs-fiber", cork_fiber_ok);

    if (verify) {
        GenConfig cfg = config_from_params(params, fd);
        if (fd.kind == FieldKind::rational)
            census_verify<QField>(rep, n, d, kmin, kmax, cfg);
        else
            census_verify<ZpField>(rep, n, d, kmin, kmax, cfg);
    }

    rep.results()["tables"] = tables;
    RunResult out = rep.finish();
    if (format == "csv") out.output = census_csv(tables);
    return out;
}

template <class F>
RunResult hilbert_impl(const FieldDesc& fd, const json& params) {
    int n = params.value("n", 2);
    int amax = params.value("a_max", 3);
    int bmax = params.value("b_max", 3);
    long mmax = params.value("m_max", 10L);
    bool verify = params.value("verify", false);
    require_cap("n", n, cap_n);
    require_cap("a_max", amax, cap_base_degree);
    require_cap("b_max", bmax, cap_base_degree);
    require_cap("m_max", mmax, cap_base_degree);
    std::uint64_t seed = params.value("seed", std::uint64_t(0));
    GenConfig cfg = config_from_params(params, fd);

    Report rep("hilbert", params, fd, seed, fnv1a64_hex(params.dump()));
    json table = json::array();
    SplitMix64 rng(seed);
    bool agree = true;
    for (int a = 1; a <= amax; ++a) {
        for (int b = a; b <= bmax; ++b) {
            std::optional<CompleteIntersection<F>> ci;
            if (verify) ci.emplace(random_smooth_ci<F>(n, a, b, cfg, rng));
            for (long m = 2L * a; m <= mmax; ++m) {
                json row{{"n", n}, {"a", a}, {"b", b}, {"m", m},
                         {"dim_formula", i2_dim_formula(n, a, b, m)},
                         {"kernel_formula", h(n, m - 2 * a - b) + h(n, m - a - 2 * b)}};
                if (verify) {
                    long long oracle = i2_dim_oracle(*ci, m);
                    long long kernel = decomposition_kernel_dim(*ci, m);
                    row["dim_oracle"] = oracle;
                    row["kernel_measured"] = kernel;
                    bool match = oracle == row["dim_formula"].get<long long>() &&
                                 kernel == row["kernel_formula"].get<long long>();
                    row["agree"] = match;
                    agree = agree && match;
                }
                table.push_back(std::move(row));
            }
        }
    }
    if (verify) rep.check("formula-vs-oracle", agree, "a cell disagreed with the rank oracle");
    rep.results()["table"] = table;
    RunResult out = rep.finish();
    if (params.value("format", "json") == "csv") {
        std::ostringstream os;
        os << "# table=hilbert\n";
        os << "n,a,b,m,dim_formula,kernel_formula";
        if (verify) os << ",dim_oracle,kernel_measured,agree";
        os << "\n";
        for (const auto& row : table) {
            os << row["n"] << "," << row["a"] << "," << row["b"] << "," << row["m"] << ","
               << row["dim_formula"] << "," << row["kernel_formula"];
            if (verify)
                os << "," << row["dim_oracle"] << "," << row["kernel_measured"] << ","
                   << (row["agree"].get<bool>() ? 1 : 0);
            os << "\n";
        }
        out.output = os.str();
    }
    return out;
}

// Optional --verify on gen: a divisor bundle must push forward and lift with
// the identity holding at a = 0; an equation bundle must be weighted degree 6.
template <class F>
void validate_bundle(const Bundle<F>& b) {
    if (b.has("equation")) {
        if (b.at("equation").degree() != 6)
            fail(ErrorCode::check_failed, "equation bundle is not weighted-homogeneous of degree 6");
        return;
    }
    DoubleCover<F> cover(b.n, b.d, b.at("g2d"));
    CoverDivisor<F> w(cover, b.at("fk"), b.at("fkd"), b.k);
    auto img = divisor_image(w);
    auto fam = lift_branch(img.g, img.ci);
    auto base = family_member(fam, PolyT<F>::zero(img.ci.ring));
    if (!verify_lift(img.g, img.ci, base, fam.scalar))
        fail(ErrorCode::check_failed, "generated bundle fails the lift identity");
}

RunResult gen_impl(const json& params) {
    require_json_format(params, "gen");
    bool verify = params.value("verify", false);
    if (params.contains("name")) {
        AnyBundle b = canned(params["name"].get<std::string>());
        if (verify) std::visit([](const auto& bb) { validate_bundle(bb); }, b);
        return RunResult{ErrorCode::ok, any_bundle_to_json(b).dump(2) + "\n"};
    }
    FieldDesc fd = field_from_params(params);
    int n = params.value("n", 2);
    int d = params.value("d", 3);
    int k = params.value("k", 6);
    require_cap("n", n, cap_n);
    require_cap("d", d, cap_base_degree);
    require_cap("k", k, cap_base_degree);
    GenConfig cfg = config_from_params(params, fd);
    AnyBundle b = fd.kind == FieldKind::rational
                      ? AnyBundle(random_divisor_bundle<QField>(n, d, k, cfg))
                      : AnyBundle(random_divisor_bundle<ZpField>(n, d, k, cfg));
    if (verify) std::visit([](const auto& bb) { validate_bundle(bb); }, b);
    return RunResult{ErrorCode::ok, any_bundle_to_json(b).dump(2) + "\n"};
}

} // namespace

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunResult run_lift(const AnyBundle& input, const std::string& input_digest, const json& params) {
    return guarded("lift", [&] {
        return std::visit([&](const auto& b) { return lift_impl(b, input_digest, params); }, input);
    });
}

RunResult run_census(const json& params) {
    return guarded("census", [&] { return census_impl(params); });
}

RunResult run_roundtrip(const json& params) {
    return guarded("roundtrip", [&] {
        FieldDesc fd = field_from_params(params);
        if (fd.kind == FieldKind::rational) return roundtrip_impl<QField>(fd, params);
        return roundtrip_impl<ZpField>(fd, params);
    });
}

RunResult run_hilbert(const json& params) {
    return guarded("hilbert", [&] {
        FieldDesc fd = field_from_params(params);
        if (fd.kind == FieldKind::rational) return hilbert_impl<QField>(fd, params);
        return hilbert_impl<ZpField>(fd, params);
    });
}

RunResult run_gen(const json& params) {
    return guarded("gen", [&] { return gen_impl(params); });
}

} // namespace dcov::pipeline
