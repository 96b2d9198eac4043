// Command-line front end for the gws library. Talks to the computation core
// exclusively through the C interface in gws.h.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gws.h"

namespace {

using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kDomainError = 2,
    kVerifyMismatch = 3,
    kCapExceeded = 4,
};

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(code);
}

int exit_code_for(gws_status s) {
    switch (s) {
        case GWS_OK: return kOk;
        case GWS_ERROR_DOMAIN: return kDomainError;
        case GWS_ERROR_OVERFLOW: return kDomainError;
        case GWS_ERROR_CAP_EXCEEDED: return kCapExceeded;
        case GWS_ERROR_INVALID_ARGUMENT:
        default: return kUsageError;
    }
}

void require_ok(gws_status s) {
    if (s != GWS_OK) die(exit_code_for(s), gws_last_error());
}

int64_t parse_int(const std::string& tok, const char* what) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        die(kUsageError, std::string("cannot parse ") + what + " from '" + tok + "'");
    return value;
}

std::vector<int64_t> parse_alpha(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    std::vector<int64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
        out.push_back(parse_int(tok, "alpha coordinate"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct Request {
    std::vector<std::string> preset;
    int64_t a = 0, b = 0, m = 0, q = 0;
    std::string alpha_text;
    int64_t point_i = 0, point_j = 0;
    std::string format = "text";
    bool verify = false;
    std::uint64_t cap = 0;
    bool cap_given = false;
};

// Owns the curve handle for the lifetime of the request.
struct Curve {
    gws_curve* handle = nullptr;
    ~Curve() { gws_curve_free(handle); }
    Curve() = default;
    Curve(const Curve&) = delete;
    Curve& operator=(const Curve&) = delete;
};

void make_curve(const Request& req, Curve& curve) {
    if (!req.preset.empty()) {
        if (req.a != 0 || req.b != 0)
            die(kUsageError, "--preset conflicts with --a/--b");
        if (req.m == 0) die(kUsageError, "--m is required with --preset");
        const std::string& name = req.preset[0];
        int64_t x = parse_int(req.preset[1], "preset parameter");
        int64_t y = parse_int(req.preset[2], "preset parameter");
        if (name == "hermitian") {
            require_ok(gws_curve_hermitian(x, y, req.m, &curve.handle));
        } else if (name == "raw") {
            require_ok(gws_curve_new(x, y, req.m, req.q, &curve.handle));
        } else {
            die(kUsageError, "unknown preset '" + name + "' (expected hermitian or raw)");
        }
        return;
    }
    if (req.a == 0 || req.b == 0 || req.m == 0)
        die(kUsageError, "specify a curve with --preset NAME X Y or --a/--b/--m");
    require_ok(gws_curve_new(req.a, req.b, req.m, req.q, &curve.handle));
}

std::vector<std::vector<int64_t>> read_list(const gws_vec_list* list) {
    std::vector<std::vector<int64_t>> out(gws_vec_list_size(list));
    const std::size_t dim = gws_vec_list_dim(list);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].resize(dim);
        require_ok(gws_vec_list_get(list, k, out[k].data(), dim));
    }
    return out;
}

std::string tuple_str(const std::vector<int64_t>& v) {
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ", ";
        s += std::to_string(v[j]);
    }
    return s + ")";
}

std::string csv_str(const std::vector<int64_t>& v) {
    std::string s;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(v[j]);
    }
    return s;
}

std::string monomial_str(int64_t h_exp, const std::vector<int64_t>& g_exp) {
    std::string s;
    auto factor = [&s](const std::string& name, int64_t e) {
        if (e == 0) return;
        if (!s.empty()) s += ' ';
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    };
    factor("h", h_exp);
    for (std::size_t j = 0; j < g_exp.size(); ++j)
        factor("g" + std::to_string(j + 2), g_exp[j]);
    return s.empty() ? "1" : s;
}

json curve_json(const gws_curve* c) {
    json out;
    out["a"] = gws_curve_a(c);
    out["b"] = gws_curve_b(c);
    out["m"] = gws_curve_m(c);
    out["genus"] = gws_curve_genus(c);
    if (gws_curve_q(c) != 0)
        out["q"] = gws_curve_q(c);
    else
        out["q"] = nullptr;
    return out;
}

struct VerifyFailure {
    std::string check;
    std::string expected;
    std::string actual;
};

// One command's primary output plus any verification mismatches.
struct Outcome {
    std::string text;
    json result;
    std::optional<json> breakdown;
    std::vector<VerifyFailure> failures;
};

std::vector<int64_t> alpha_or_die(const Request& req, const gws_curve* c) {
    if (req.alpha_text.empty())
        die(kUsageError, "this command requires --alpha");
    std::vector<int64_t> alpha = parse_alpha(req.alpha_text);
    if (alpha.size() != static_cast<std::size_t>(gws_curve_m(c)))
        die(kUsageError, "alpha must have exactly m coordinates");
    return alpha;
}

void check_eq_vec(Outcome& out, const std::string& check, const std::vector<int64_t>& expected,
                  const std::vector<int64_t>& actual) {
    if (expected != actual)
        out.failures.push_back({check, tuple_str(expected), tuple_str(actual)});
}

void check_eq_int(Outcome& out, const std::string& check, int64_t expected, int64_t actual) {
    if (expected != actual)
        out.failures.push_back({check, std::to_string(expected), std::to_string(actual)});
}

std::vector<int64_t> lub_of(const std::vector<std::vector<int64_t>>& vecs) {
    std::vector<int64_t> top = vecs.front();
    for (const auto& v : vecs)
        for (std::size_t j = 0; j < top.size(); ++j) top[j] = std::max(top[j], v[j]);
    return top;
}

json breakdown_json(const gws_curve* c, const std::vector<int64_t>& alpha) {
    std::vector<int64_t> terms(static_cast<std::size_t>(gws_curve_b(c)));
    int64_t total = 0;
    require_ok(gws_dimension_breakdown(c, alpha.data(), alpha.size(), terms.data(),
                                       terms.size(), &total));
    return json(terms);
}

Outcome run_generators(const Request& req, const gws_curve* c) {
    Outcome out;
    gws_vec_list* s_m = nullptr;
    gws_vec_list* etas = nullptr;
    require_ok(gws_generators(c, &s_m, &etas));
    auto s_vecs = read_list(s_m);
    auto eta_vecs = read_list(etas);
    gws_vec_list_free(s_m);
    gws_vec_list_free(etas);

    for (const auto& v : s_vecs) out.text += tuple_str(v) + "\n";
    for (const auto& v : eta_vecs) out.text += tuple_str(v) + "\n";
    out.result = json{{"s_m", s_vecs}, {"etas", eta_vecs}};

    if (req.verify) {
        const int64_t b = gws_curve_b(c);
        check_eq_int(out, "window element count", b, static_cast<int64_t>(s_vecs.size()));
        auto verify_maximal = [&](const std::vector<int64_t>& v) {
            int flag = 0;
            require_ok(gws_oracle_is_absolute_maximal(c, v.data(), v.size(), req.cap, &flag));
            check_eq_int(out, "absolute maximality of " + tuple_str(v), 1, flag);
        };
        for (const auto& v : s_vecs) {
            verify_maximal(v);
            bool zero = std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
            for (std::size_t j = 1; !zero && j < v.size(); ++j)
                if (v[j] < 0 || v[j] >= b)
                    out.failures.push_back({"window bounds of " + tuple_str(v),
                                            "coordinates 2..m in [0, b)", tuple_str(v)});
        }
        for (const auto& v : eta_vecs) verify_maximal(v);
    }
    return out;
}

Outcome run_dimension(const Request& req, const gws_curve* c) {
    Outcome out;
    std::vector<int64_t> alpha = alpha_or_die(req, c);
    int64_t total = 0;
    require_ok(gws_dimension(c, alpha.data(), alpha.size(), &total));
    out.text = std::to_string(total) + "\n";
    out.result = total;
    out.breakdown = breakdown_json(c, alpha);

    if (req.verify) {
        for (int64_t j = 1; j <= gws_curve_m(c); ++j) {
            int64_t counted = 0;
            require_ok(gws_oracle_dimension(c, alpha.data(), alpha.size(), j, req.cap, &counted));
            check_eq_int(out, "class count at coordinate " + std::to_string(j), total, counted);
        }
    }
    return out;
}

Outcome run_basis(const Request& req, const gws_curve* c) {
    Outcome out;
    std::vector<int64_t> alpha = alpha_or_die(req, c);
    gws_monomial_list* list = nullptr;
    require_ok(gws_basis(c, alpha.data(), alpha.size(), &list));

    const std::size_t count = gws_monomial_list_size(list);
    const std::size_t g_len = alpha.size() - 1;
    json items = json::array();
    std::vector<std::vector<int64_t>> pole_vectors;
    for (std::size_t k = 0; k < count; ++k) {
        int64_t h_exp = 0;
        std::vector<int64_t> g_exp(g_len);
        require_ok(gws_monomial_list_get(list, k, &h_exp, g_exp.data(), g_len));
        std::vector<int64_t> rho(alpha.size());
        require_ok(gws_pole_vector(c, h_exp, g_exp.data(), g_len, rho.data(), rho.size()));
        out.text += monomial_str(h_exp, g_exp) + "\n";
        items.push_back(json{{"h_exp", h_exp}, {"g_exp", g_exp}, {"pole_vector", rho}});
        pole_vectors.push_back(std::move(rho));
    }
    gws_monomial_list_free(list);
    out.result = items;

    if (req.verify) {
        int64_t total = 0;
        require_ok(gws_dimension(c, alpha.data(), alpha.size(), &total));
        check_eq_int(out, "basis size equals dimension", total, static_cast<int64_t>(count));
        std::vector<int64_t> leading;
        for (const auto& rho : pole_vectors) {
            leading.push_back(rho[0]);
            for (std::size_t j = 0; j < rho.size(); ++j)
                if (rho[j] > alpha[j]) {
                    out.failures.push_back({"pole vector below alpha", "<= alpha", tuple_str(rho)});
                    break;
                }
            int member = 0;
            require_ok(gws_oracle_is_member(c, rho.data(), rho.size(), req.cap, &member));
            check_eq_int(out, "membership of pole vector " + tuple_str(rho), 1, member);
        }
        std::sort(leading.begin(), leading.end());
        if (std::adjacent_find(leading.begin(), leading.end()) != leading.end())
            out.failures.push_back({"distinct leading pole orders", "all distinct", "duplicate"});
    }
    return out;
}

Outcome run_predicate(const Request& req, const gws_curve* c, const std::string& command) {
    Outcome out;
    std::vector<int64_t> alpha = alpha_or_die(req, c);
    int flag = 0;
    if (command == "member")
        require_ok(gws_is_member(c, alpha.data(), alpha.size(), &flag));
    else
        require_ok(gws_is_absolute_maximal(c, alpha.data(), alpha.size(), &flag));
    out.text = flag ? "true\n" : "false\n";
    out.result = static_cast<bool>(flag);

    if (req.verify) {
        int oracle_flag = 0;
        if (command == "member")
            require_ok(gws_oracle_is_member(c, alpha.data(), alpha.size(), req.cap, &oracle_flag));
        else
            require_ok(gws_oracle_is_absolute_maximal(c, alpha.data(), alpha.size(), req.cap,
                                                      &oracle_flag));
        check_eq_int(out, "enumeration-based " + command, flag, oracle_flag);
    }
    return out;
}

Outcome run_discrepancy(const Request& req, const gws_curve* c) {
    Outcome out;
    std::vector<int64_t> alpha = alpha_or_die(req, c);
    if (req.point_i == 0 || req.point_j == 0)
        die(kUsageError, "discrepancy requires --i and --j");
    int flag = 0;
    require_ok(gws_is_discrepancy(c, alpha.data(), alpha.size(), req.point_i, req.point_j,
                                  &flag));
    out.text = flag ? "true\n" : "false\n";
    out.result = static_cast<bool>(flag);

    if (req.verify) {
        // Recompute the four dimensions by class counting.
        auto counted = [&](std::vector<int64_t> v) {
            int64_t value = 0;
            require_ok(gws_oracle_dimension(c, v.data(), v.size(), 1, req.cap, &value));
            return value;
        };
        std::vector<int64_t> minus_j = alpha;
        minus_j[static_cast<std::size_t>(req.point_j - 1)] -= 1;
        std::vector<int64_t> minus_i = alpha;
        minus_i[static_cast<std::size_t>(req.point_i - 1)] -= 1;
        std::vector<int64_t> minus_ij = minus_i;
        minus_ij[static_cast<std::size_t>(req.point_j - 1)] -= 1;
        bool oracle_flag = counted(alpha) != counted(minus_j) &&
                           counted(minus_i) == counted(minus_ij);
        check_eq_int(out, "enumeration-based discrepancy", flag, oracle_flag ? 1 : 0);
    }
    return out;
}

Outcome run_floor(const Request& req, const gws_curve* c, const std::string& command) {
    Outcome out;
    std::vector<int64_t> alpha = alpha_or_die(req, c);
    std::vector<int64_t> floor_vec(alpha.size());
    if (command == "supported-floor")
        require_ok(gws_supported_floor(c, alpha.data(), alpha.size(), floor_vec.data(),
                                       floor_vec.size()));
    else
        require_ok(gws_full_floor(c, alpha.data(), alpha.size(), floor_vec.data(),
                                  floor_vec.size()));
    out.text = csv_str(floor_vec) + "\n";
    out.result = floor_vec;
    out.breakdown = breakdown_json(c, alpha);

    if (req.verify) {
        gws_vec_list* below = nullptr;
        require_ok(gws_gamma_below(c, alpha.data(), alpha.size(), req.cap, &below));
        auto below_vecs = read_list(below);
        gws_vec_list_free(below);
        if (below_vecs.empty())
            out.failures.push_back({"elements below alpha", "nonempty", "empty"});
        else
            check_eq_vec(out, "least upper bound of elements below alpha", floor_vec,
                         lub_of(below_vecs));

        if (command == "supported-floor") {
            std::vector<int64_t> searched(alpha.size());
            require_ok(gws_oracle_floor(c, alpha.data(), alpha.size(),
                                        req.cap_given ? req.cap : 0, searched.data(),
                                        searched.size()));
            check_eq_vec(out, "exhaustive minimum-norm search", floor_vec, searched);
        } else {
            std::vector<int64_t> supported(alpha.size());
            require_ok(gws_supported_floor(c, alpha.data(), alpha.size(), supported.data(),
                                           supported.size()));
            check_eq_vec(out, "supported floor at full support", floor_vec, supported);
        }
    }
    return out;
}

Outcome run_gamma_below(const Request& req, const gws_curve* c) {
    Outcome out;
    std::vector<int64_t> alpha = alpha_or_die(req, c);
    gws_vec_list* below = nullptr;
    require_ok(gws_gamma_below(c, alpha.data(), alpha.size(), req.cap, &below));
    auto vecs = read_list(below);
    gws_vec_list_free(below);
    for (const auto& v : vecs) out.text += tuple_str(v) + "\n";
    out.result = vecs;

    if (req.verify) {
        gws_vec_list* scanned = nullptr;
        require_ok(gws_oracle_gamma_below(c, alpha.data(), alpha.size(), req.cap, &scanned));
        auto scan_vecs = read_list(scanned);
        gws_vec_list_free(scanned);
        check_eq_int(out, "scan enumeration size", static_cast<int64_t>(vecs.size()),
                     static_cast<int64_t>(scan_vecs.size()));
        if (vecs.size() == scan_vecs.size())
            for (std::size_t k = 0; k < vecs.size(); ++k)
                check_eq_vec(out, "scan enumeration element " + std::to_string(k), vecs[k],
                             scan_vecs[k]);
    }
    return out;
}

int emit(const Request& req, const gws_curve* c, const std::string& command, Outcome out) {
    if (gws_curve_q_warning(c))
        std::cerr << "warning: q is below a+1; the geometric interpretation assumes q >= a+1\n";

    if (req.format == "json") {
        json doc;
        doc["command"] = command;
        doc["curve"] = curve_json(c);
        doc["result"] = out.result;
        if (out.breakdown) doc["breakdown"] = *out.breakdown;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << out.text;
    }

    if (!out.failures.empty()) {
        if (req.format == "json") {
            json diff = json::array();
            for (const auto& f : out.failures)
                diff.push_back(json{{"check", f.check}, {"expected", f.expected},
                                    {"actual", f.actual}});
            std::cerr << json{{"verify_failures", diff}}.dump(2) << "\n";
        } else {
            for (const auto& f : out.failures)
                std::cerr << "verify mismatch: " << f.check << ": expected " << f.expected
                          << ", actual " << f.actual << "\n";
        }
        return kVerifyMismatch;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Weierstrass semigroups on curves f(y) = g(x)"};
    app.require_subcommand(1);

    Request req;
    const char* env_cap = std::getenv("GWS_ENUM_CAP");

    const std::vector<std::string> commands = {
        "generators",     "dimension", "basis",       "member",     "absmax",
        "discrepancy",    "supported-floor", "floor", "gamma-below"};
    const std::vector<std::string> descriptions = {
        "finite generating data of the semigroup",
        "Riemann-Roch dimension of D_alpha",
        "monomial basis of L(D_alpha)",
        "semigroup membership of alpha",
        "absolute maximality of alpha",
        "discrepancy of D_alpha with respect to (P_i, P_j)",
        "supported floor of D_alpha",
        "divisor floor of D_alpha (requires m = a+1)",
        "all generating-set elements below alpha"};

    for (std::size_t k = 0; k < commands.size(); ++k) {
        CLI::App* sub = app.add_subcommand(commands[k], descriptions[k]);
        sub->add_option("--preset", req.preset,
                        "curve preset: 'hermitian ELL R' or 'raw A B'")
            ->expected(3);
        sub->add_option("--a", req.a, "degree of f");
        sub->add_option("--b", req.b, "degree of g");
        sub->add_option("--m", req.m, "number of tracked points (2..a+1)");
        sub->add_option("--q", req.q, "field size (informational)");
        sub->add_option("--alpha", req.alpha_text,
                        "divisor coefficients, comma-separated (use --alpha=-1,0,0 "
                        "for a leading minus)");
        if (commands[k] == "discrepancy") {
            sub->add_option("--i", req.point_i, "first point index (1-based)");
            sub->add_option("--j", req.point_j, "second point index (1-based)");
        }
        sub->add_option("--format", req.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--verify", req.verify,
                      "cross-check the result against the brute-force validators");
        sub->add_option("--cap", req.cap,
                        "enumeration budget (default from GWS_ENUM_CAP or 10^7)")
            ->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    req.cap_given = sub->count("--cap") > 0;
    if (!req.cap_given && env_cap != nullptr)
        req.cap = static_cast<std::uint64_t>(parse_int(env_cap, "GWS_ENUM_CAP"));

    Curve curve;
    make_curve(req, curve);

    Outcome out;
    if (command == "generators") out = run_generators(req, curve.handle);
    else if (command == "dimension") out = run_dimension(req, curve.handle);
    else if (command == "basis") out = run_basis(req, curve.handle);
    else if (command == "member" || command == "absmax")
        out = run_predicate(req, curve.handle, command);
    else if (command == "discrepancy") out = run_discrepancy(req, curve.handle);
    else if (command == "supported-floor" || command == "floor")
        out = run_floor(req, curve.handle, command);
    else out = run_gamma_below(req, curve.handle);

    return emit(req, curve.handle, command, std::move(out));
}
