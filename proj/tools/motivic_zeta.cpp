// motivic-zeta: JSON front end to the motivic library.
//
// Every command prints {"status": ..., "payload": ...}. Exit codes:
// 0 ok, 1 validation/precondition, 2 resource, 3 numeric.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "motivic/json_io.hpp"

using namespace motivic;
using json_io::json;
using json_io::to_json;

namespace {

struct Options {
    std::string in;
    std::string out;
    int precision = default_precision;
    int nmax = 8;
    std::uint64_t budget = 0;
    int threads = 1;
    std::int64_t q = 0;
    int dim = -1;
    std::uint64_t seed = 1;
    int n = -1;
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::string s = "2";
    double im_lo = -10;
    double im_hi = 10;
    std::string window = "principal";
    int samples = 20;
};

struct Failure {
    std::string status;
    int exit_code;
    json payload;
};

json read_input(const Options& o) {
    if (o.in.empty()) throw ValidationError("this command needs --in <file.json>", "missing_input");
    std::ifstream f(o.in);
    if (!f) throw ValidationError("cannot open " + o.in, "io");
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what(), "json_parse");
    }
}

CountingContext context(const Options& o) {
    CountingContext ctx;
    if (o.budget) ctx.budget = o.budget;
    ctx.threads = std::max(o.threads, 1);
    return ctx;
}

std::int64_t need_q(const Options& o) {
    if (o.q <= 0) throw ValidationError("this command needs --q", "missing_q");
    require_prime_power(o.q);
    return o.q;
}

int need_n(const Options& o, const char* flag) {
    if (o.n < 0) throw ValidationError(std::string("this command needs ") + flag, "missing_n");
    return o.n;
}

BranchWindow window_of(const Options& o) {
    if (o.window == "principal") return BranchWindow::principal;
    if (o.window == "lower_closed") return BranchWindow::lower_closed;
    throw ValidationError("--window must be principal or lower_closed", "bad_window");
}

/* "2", "2,0.5" or "2+0.5i" */
Complex parse_complex(const std::string& text) {
    std::string t = text;
    for (auto& c : t)
        if (c == ',') c = ' ';
    if (!t.empty() && t.back() == 'i') {
        auto pos = t.find_last_of("+-", t.size() - 2);
        if (pos != std::string::npos && pos > 0) t = t.substr(0, pos) + " " + t.substr(pos, t.size() - pos - 1);
    }
    std::istringstream is(t);
    long double re = 0, im = 0;
    if (!(is >> re)) throw ValidationError("cannot parse complex number \"" + text + "\"", "bad_complex");
    is >> im;
    return {re, im};
}

std::vector<Rational> sequence_from(const json& j, const char* key) {
    if (j.is_array()) return json_io::rationals_from(j, "$");
    if (j.is_object() && j.contains(key)) return json_io::rationals_from(j[key], std::string("$.") + key);
    throw json_io::InputError("$", std::string("expected an array or {\"") + key + "\": [...]}");
}

json growth_payload(const TracedMotive& m, int n_max) {
    const auto radii = spectral_radius(m);
    json out = {{"spectral_radius", {{"plus", json_io::number(radii.plus)},
                                     {"minus", json_io::number(radii.minus)},
                                     {"rho", json_io::number(radii.rho)}}},
                {"bound_holds", growth_bound_check(m, n_max)},
                {"nmax", n_max},
                {"rate_estimate", json_io::number(rate_estimate(trace_sequence(m, n_max), n_max))}};
    auto exact = rate_exact(m);
    if (auto* v = std::get_if<long double>(&exact)) {
        out["rate_exact"] = json_io::number(*v);
    } else {
        out["rate_exact"] = nullptr;
        out["inapplicable"] = std::get<Inapplicable>(exact).reason;
    }
    return out;
}

json measure_payload(const MeasureClass& c, std::int64_t q) {
    const auto nc = mu_nc_composite(c);
    json out = {{"class", to_json(c)},
                {"str", c.str()},
                {"counting_polynomial", json::array()},
                {"rig", to_json(mu_rig(c))},
                {"nc", to_json(nc.value)},
                {"nc_collapsed", to_json(nc.value.collapse())},
                {"extended_by_linearity", nc.extended_by_linearity},
                {"effective", c.effective()}};
    for (const auto& x : c.counting_polynomial()) out["counting_polynomial"].push_back(to_json(x));
    if (q > 0) {
        out["q"] = q;
        out["count"] = to_json(mu_count(c, q));
        out["scissor_consistent"] = scissor_consistent(c, q);
    }
    return out;
}

using Handler = std::function<json(const Options&)>;

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;

    h["motive zeta"] = [](const Options& o) {
        return to_json(zeta_series(json_io::motive_from(read_input(o)), o.precision).series());
    };
    h["motive feq"] = [](const Options& o) {
        return to_json(check_functional_equation(json_io::motive_from(read_input(o))));
    };
    h["motive traces"] = [](const Options& o) {
        json out = json::array();
        for (const auto& t : trace_sequence(json_io::motive_from(read_input(o)), o.nmax)) out.push_back(to_json(t));
        return json{{"nmax", o.nmax}, {"traces", out}};
    };
    h["motive det"] = [](const Options& o) {
        return json{{"determinant", to_json(determinant(json_io::motive_from(read_input(o))))}};
    };
    h["motive growth"] = [](const Options& o) { return growth_payload(json_io::motive_from(read_input(o)), o.nmax); };

    h["witt add"] = [](const Options& o) {
        auto j = read_input(o);
        WittElement a(json_io::series_from(j.at("a"), "$.a")), b(json_io::series_from(j.at("b"), "$.b"));
        return to_json(witt_add(a, b).series());
    };
    h["witt mul"] = [](const Options& o) {
        auto j = read_input(o);
        WittElement a(json_io::series_from(j.at("a"), "$.a")), b(json_io::series_from(j.at("b"), "$.b"));
        return to_json(witt_mul(a, b).series());
    };
    h["witt ghost"] = [](const Options& o) {
        auto j = read_input(o);
        const json& s = j.is_object() && j.contains("a") ? j["a"] : j;
        WittElement a(json_io::series_from(s, "$"));
        const int n = std::min(o.nmax, a.precision());
        json out = json::array();
        for (const auto& g : ghost_components(a, n)) out.push_back(to_json(g));
        return json{{"ghost", out}};
    };

    h["reconstruct bm"] = [](const Options& o) { return to_json(berlekamp_massey(sequence_from(read_input(o), "sequence"))); };
    h["reconstruct traces"] = [](const Options& o) { return to_json(traces_to_zeta(sequence_from(read_input(o), "traces"))); };

    h["variety count"] = [](const Options& o) {
        auto v = json_io::variety_from(read_input(o));
        const int n = o.n < 0 ? 1 : o.n;
        if (n < 1) throw ValidationError("--n must be at least 1", "bad_n");
        return json{{"n", n}, {"q", v.q()}, {"count", to_json(count_points(v, n, context(o)))}};
    };
    h["variety zeta"] = [](const Options& o) {
        auto v = json_io::variety_from(read_input(o));
        auto z = zeta_from_counts(v, o.nmax, context(o));
        std::vector<Rational> traces;
        for (int n = 1; n <= o.nmax; ++n) traces.push_back(count_points(v, n, context(o)));
        return json{{"series", to_json(z.series())}, {"reconstruction", to_json(traces_to_zeta(traces))}};
    };
    h["variety weil"] = [](const Options& o) {
        auto v = json_io::variety_from(read_input(o));
        if (o.dim < 0) throw ValidationError("variety weil needs --dim", "missing_dim");
        return to_json(weil_check(v, o.dim, o.nmax, context(o)));
    };
    h["variety closed-points"] = [](const Options& o) {
        auto v = json_io::variety_from(read_input(o));
        json out = json::array();
        for (const auto& b : closed_points(v, o.nmax, context(o))) out.push_back(to_json(b));
        return json{{"closed_points", out}};
    };

    h["lfun"] = [](const Options& o) {
        auto j = read_input(o);
        auto v = json_io::variety_from(j.at("variety"), "$.variety");
        GroupAction g(v, json_io::group_from(j.at("group"), "$.group"), context(o));
        auto chi = j.contains("character") ? json_io::character_from(j["character"], g, "$.character")
                                           : CharacterTable::trivial(g);
        return to_json(l_function(v, g, chi, o.nmax, context(o)));
    };
    h["orbifold"] = [](const Options& o) {
        auto j = read_input(o);
        auto v = json_io::variety_from(j.at("variety"), "$.variety");
        GroupAction g(v, json_io::group_from(j.at("group"), "$.group"), context(o));
        return to_json(orbifold_zeta(v, g, o.nmax, context(o)));
    };
    h["artin-mazur"] = [](const Options& o) {
        if (o.p <= 0 || o.m <= 0) throw ValidationError("artin-mazur needs --p and --m", "missing_argument");
        auto traces = artin_mazur_traces(o.p, o.m, o.nmax);
        std::vector<Rational> seq(traces.begin(), traces.end());
        json t = json::array();
        for (const auto& x : traces) t.push_back(to_json(x));
        return json{{"p", o.p},
                    {"m", o.m},
                    {"traces", t},
                    {"profile", linear_complexity_profile(seq)},
                    {"reconstruction", to_json(traces_to_zeta(seq))}};
    };

    h["hw eval"] = [](const Options& o) {
        auto m = json_io::motive_from(read_input(o));
        const auto s = parse_complex(o.s);
        return json{{"q", need_q(o)}, {"s", to_json(s)}, {"value", to_json(hasse_weil_eval(m, o.q, s))}};
    };
    h["hw poles"] = [](const Options& o) {
        auto m = json_io::motive_from(read_input(o));
        return to_json(poles_and_zeros(m, need_q(o), o.im_lo, o.im_hi));
    };
    h["hw abscissa"] = [](const Options& o) {
        auto m = json_io::motive_from(read_input(o));
        return json{{"q", need_q(o)}, {"abscissa", json_io::number(convergence_abscissa(m, o.q))}};
    };
    h["theta"] = [](const Options& o) {
        auto m = json_io::motive_from(read_input(o));
        return to_json(theta_construction(m, need_q(o), window_of(o)));
    };
    h["regdet-check"] = [](const Options& o) {
        auto m = json_io::motive_from(read_input(o));
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> re(-2.0, 3.0), im(-6.0, 6.0);
        std::vector<Complex> samples;
        for (int i = 0; i < o.samples; ++i) samples.emplace_back(re(rng), im(rng));
        return to_json(regularized_det_check(m, need_q(o), samples, window_of(o)));
    };

    h["numk0 compute"] = [](const Options& o) { return to_json(num_grothendieck(json_io::gram_from(read_input(o)))); };
    h["numk0 beilinson"] = [](const Options& o) {
        auto g = beilinson_gram(need_n(o, "--n"));
        return json{{"gram", to_json(g)}, {"report", to_json(num_grothendieck(g))}};
    };
    h["numk0 quiver"] = [](const Options& o) {
        auto j = read_input(o);
        const int vertices = j.at("vertices").get<int>();
        std::vector<std::pair<int, int>> arrows;
        for (const auto& a : j.at("arrows")) arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        auto g = quiver_gram(vertices, arrows);
        return json{{"gram", to_json(g)}, {"report", to_json(num_grothendieck(g))}};
    };

    h["measure eval"] = [](const Options& o) {
        auto j = read_input(o);
        if (j.is_array()) {
            json out = json::array();
            for (std::size_t i = 0; i < j.size(); ++i) {
                // entries may be bare class trees or {"class": tree, ...}
                const bool wrapped = j[i].is_object() && j[i].contains("class");
                const std::string path = "$[" + std::to_string(i) + "]" + (wrapped ? ".class" : "");
                out.push_back(measure_payload(json_io::measure_from(wrapped ? j[i]["class"] : j[i], path), o.q));
            }
            return json{{"classes", out}};
        }
        return measure_payload(json_io::measure_from(j), o.q);
    };
    h["measure witness"] = [](const Options& o) {
        const int n = o.n >= 0 ? o.n : o.dim;
        if (n < 0) throw ValidationError("measure witness needs --n", "missing_n");
        if (o.q <= 0) throw ValidationError("measure witness needs --q", "missing_q");
        return to_json(non_factoring_witness(n, o.q));
    };
    return h;
}

Failure failure_of(const Error& e, const Options& o) {
    static const char* names[] = {"validation_error", "precondition_error", "resource_error", "numeric_error"};
    static const int codes[] = {1, 1, 2, 3};
    const auto k = static_cast<int>(e.kind());
    json payload = {{"reason", e.code()}, {"message", e.what()}, {"input", o.in.empty() ? "" : o.in}};
    if (const auto* ie = dynamic_cast<const json_io::InputError*>(&e)) payload["input"] = o.in + ":" + ie->path;
    if (const auto* pe = dynamic_cast<const PoleError*>(&e))
        payload["nearest_pole"] = {{"re", json_io::number(pe->re)}, {"im", json_io::number(pe->im)}};
    if (const auto* re = dynamic_cast<const ResourceError*>(&e)) payload["required"] = json_io::number(re->required);
    return {names[k], codes[k], payload};
}

int emit(const Options& o, const std::string& status, const json& payload, int code) {
    const std::string text = json_io::dump({{"status", status}, {"payload", payload}});
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot write " << o.out << "\n";
            return 1;
        }
        f << text;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeta functions of endomorphisms, point counts and motivic measures"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--in", o.in, "input JSON file");
    app.add_option("--out", o.out, "write the result here instead of stdout");
    app.add_option("--precision", o.precision, "series precision")->check(CLI::Range(0, 4096));
    app.add_option("--nmax", o.nmax, "number of terms, traces or extension degrees")->check(CLI::Range(1, 4096));
    app.add_option("--budget", o.budget, "enumeration budget (default 1e7 or MOTIVIC_ZETA_BUDGET)");
    app.add_option("--threads", o.threads, "enumeration threads")->check(CLI::Range(1, 256));
    app.add_option("--q", o.q, "prime power q");
    app.add_option("--dim", o.dim, "dimension");
    app.add_option("--seed", o.seed, "random seed for sampled checks");
    app.add_option("--n", o.n, "integer parameter (degree, extension index)");
    app.add_option("--p", o.p, "prime p");
    app.add_option("--m", o.m, "multiplier m");
    app.add_option("--s", o.s, "complex argument as re, re,im or re+imi");
    app.add_option("--im-lo", o.im_lo, "lower end of the imaginary strip");
    app.add_option("--im-hi", o.im_hi, "upper end of the imaginary strip");
    app.add_option("--window", o.window, "branch window: principal or lower_closed");
    app.add_option("--samples", o.samples, "number of random sample points")->check(CLI::Range(1, 10000));

    const std::map<std::string, std::vector<std::string>> groups = {
        {"motive", {"zeta", "feq", "traces", "det", "growth"}},
        {"witt", {"add", "mul", "ghost"}},
        {"reconstruct", {"bm", "traces"}},
        {"variety", {"count", "zeta", "weil", "closed-points"}},
        {"lfun", {}},
        {"orbifold", {}},
        {"artin-mazur", {}},
        {"hw", {"eval", "poles", "abscissa"}},
        {"theta", {}},
        {"regdet-check", {}},
        {"numk0", {"compute", "beilinson", "quiver"}},
        {"measure", {"eval", "witness"}},
    };
    const std::map<std::string, std::string> about = {
        {"motive", "zeta series, functional equation, traces, determinant, growth of a graded motive"},
        {"witt", "big Witt vector arithmetic on truncated series"},
        {"reconstruct", "rational zeta from a series or a trace sequence"},
        {"variety", "point counts and zeta of a variety over a finite field"},
        {"lfun", "twisted L-function of a finite group action"},
        {"orbifold", "orbifold zeta of a group action"},
        {"artin-mazur", "Artin-Mazur zeta of z -> z^m on P^1"},
        {"hw", "Hasse-Weil zeta: values, poles, abscissa"},
        {"theta", "nilpotent log and q^z exponentials of the Frobenius"},
        {"regdet-check", "regularized determinant against the closed form"},
        {"numk0", "numerical Grothendieck group of an Euler form"},
        {"measure", "motivic measures of classes and the non-factoring witness"},
    };
    std::string command;
    for (const auto& [name, subs] : groups) {
        auto* g = app.add_subcommand(name, about.at(name));
        g->fallthrough();
        if (subs.empty()) {
            g->callback([&command, name = name] { command = name; });
            continue;
        }
        g->require_subcommand(1);
        for (const auto& s : subs) {
            auto* leaf = g->add_subcommand(s);
            leaf->fallthrough();
            leaf->callback([&command, full = name + " " + s] { command = full; });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit(o, "validation_error", {{"reason", "usage"}, {"message", e.what()}, {"input", o.in}}, 1);
    }

    const auto table = handlers();
    try {
        return emit(o, "ok", table.at(command)(o), 0);
    } catch (const Error& e) {
        auto f = failure_of(e, o);
        return emit(o, f.status, f.payload, f.exit_code);
    } catch (const json::exception& e) {
        return emit(o, "validation_error", {{"reason", "bad_input"}, {"message", e.what()}, {"input", o.in}}, 1);
    }
}
