#include "suboplex/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "suboplex/betti.hpp"
#include "suboplex/io.hpp"
#include "suboplex/oracles.hpp"

namespace suboplex {
namespace {

struct Options {
    std::string input;
    std::string build;
    std::string field;
    std::string format = "m2";
    std::string method = "auto";
    unsigned threads = 1;
    bool exhaustive = false;
    std::string lower;
    std::string upper;
    std::string set;
    bool want_interval_cm = false;
    bool want_cm = false;
    bool want_closed = false;
    bool want_acyclic = false;
};

void add_common(CLI::App* cmd, Options& o) {
    auto* in = cmd->add_option("--input", o.input, "JSON file with a poset, class, matroid, formula or cell complex");
    auto* build = cmd->add_option("--build", o.build, "matroid:<json> | formula:<json> | cells:<json> | cube:<d>");
    in->excludes(build);
    build->excludes(in);
    cmd->add_option("--field", o.field, "prime p or Q (default from $SUBOPLEX_FIELD, else 2)");
    cmd->add_option("--format", o.format, "m2 or json")->check(CLI::IsMember({"m2", "json"}));
    cmd->add_option("--method", o.method, "brute|closure for shattering, intervals|mobius|oracle for Betti data");
    cmd->add_option("--threads", o.threads, "worker threads for interval homology")->check(CLI::Range(1U, 256U));
}

FieldSpec resolve_field(const Options& o) {
    if (!o.field.empty()) return FieldSpec::parse(o.field);
    if (const char* env = std::getenv(kFieldEnvVar); env != nullptr && *env != '\0') return FieldSpec::parse(env);
    return gf2();
}

LoadedInput load(const Options& o) {
    if (o.input.empty() == o.build.empty()) throw ValidationError("exactly one of --input and --build is required");
    return o.input.empty() ? build_input(o.build) : load_input_file(o.input);
}

const SubsetPoset& require_poset(const LoadedInput& in, const char* verb) {
    if (!in.poset) {
        throw ValidationError(std::string(verb) + " needs an intersection-closed poset input; the class's support family is not");
    }
    return *in.poset;
}

std::optional<ShatterMethod> shatter_method(const std::string& m) {
    if (m == "auto") return std::nullopt;
    if (m == "brute") return ShatterMethod::kBrute;
    if (m == "closure") return ShatterMethod::kClosure;
    throw ValidationError("unknown shattering method \"" + m + "\" (expected brute or closure)");
}

void print_number(std::ostream& out, const Options& o, const char* key, std::int64_t value) {
    if (o.format == "json") {
        out << Json{{key, value}}.dump() << '\n';
    } else {
        out << value << '\n';
    }
}

void print_table(std::ostream& out, const Options& o, const BettiTable& t) {
    if (o.format == "json") {
        out << betti_to_json(t).dump() << '\n';
    } else {
        out << render_m2(t);
    }
}

BettiTable betti_by_method(const LoadedInput& in, const Options& o, std::ostream& err) {
    const FieldSpec field = resolve_field(o);
    if (o.method == "oracle" || (o.method == "auto" && !in.poset)) return betti_oracle(dual_ideal(in.cls), field);
    const SubsetPoset& p = require_poset(in, "betti");
    if (o.method == "mobius") {
        MobiusBetti r = betti_via_mobius(p, field);
        if (!r.verified) err << "warning: interval Cohen-Macaulay property not verified\n";
        return std::move(r.table);
    }
    if (o.method != "auto" && o.method != "intervals") {
        throw ValidationError("unknown Betti method \"" + o.method + "\" (expected intervals, mobius or oracle)");
    }
    return betti_via_intervals(p, field, IntervalOptions{o.threads});
}

int cmd_vcdim(const Options& o, std::ostream& out) {
    const LoadedInput in = load(o);
    print_number(out, o, "vcdim", vc_dimension(in.cls, shatter_method(o.method)));
    return kExitOk;
}

int cmd_hdim(const Options& o, std::ostream& out, std::ostream& err) {
    const LoadedInput in = load(o);
    int value = 0;
    if (o.method == "auto") {
        value = homological_dimension(in.cls, resolve_field(o));
    } else if (o.method == "intervals") {
        value = homological_dimension(require_poset(in, "hdim"), resolve_field(o));
    } else {
        value = betti_by_method(in, o, err).projective_dimension();
    }
    print_number(out, o, "hdim", value);
    return kExitOk;
}

int cmd_betti(const Options& o, std::ostream& out, std::ostream& err) {
    const LoadedInput in = load(o);
    print_table(out, o, betti_by_method(in, o, err));
    return kExitOk;
}

int cmd_mobius(const Options& o, std::ostream& out) {
    const LoadedInput in = load(o);
    const SubsetPoset& p = require_poset(in, "mobius");
    if (!o.lower.empty() || !o.upper.empty()) {
        if (o.lower.empty() || o.upper.empty()) throw ValidationError("mobius needs both --lower and --upper");
        const Subset a = parse_bitstring(o.lower, p.ground());
        const Subset b = parse_bitstring(o.upper, p.ground());
        print_number(out, o, "mobius", mobius(p, a, b));
        return kExitOk;
    }
    Json rows = Json::array();
    for (std::size_t lo = 0; lo < p.size(); ++lo) {
        for (std::size_t hi = lo; hi < p.size(); ++hi) {
            if (!p.leq(lo, hi)) continue;
            const std::string a = to_bitstring(p.element(lo), p.ground());
            const std::string b = to_bitstring(p.element(hi), p.ground());
            const std::int64_t mu = p.mobius_index(lo, hi);
            if (o.format == "json") {
                rows.push_back(Json{{"lower", a}, {"upper", b}, {"mobius", mu}});
            } else {
                out << a << ' ' << b << ' ' << mu << '\n';
            }
        }
    }
    if (o.format == "json") out << Json{{"intervals", rows}}.dump() << '\n';
    return kExitOk;
}

int cmd_extentures(const Options& o, std::ostream& out) {
    const LoadedInput in = load(o);
    const auto ext = extentures(in.cls);
    if (o.format == "json") {
        Json list = Json::array();
        for (const auto& f : ext) list.push_back(to_pattern(f, in.cls.ground()));
        out << Json{{"extentures", list}}.dump() << '\n';
    } else {
        for (const auto& f : ext) out << to_pattern(f, in.cls.ground()) << '\n';
    }
    return kExitOk;
}

int cmd_shatter(const Options& o, std::ostream& out) {
    const LoadedInput in = load(o);
    const GroundSpec& g = in.cls.ground();
    if (!o.set.empty()) {
        const Subset u = parse_bitstring(o.set, g);
        const auto method = shatter_method(o.method);
        const bool closed = in.poset && is_intersection_closed(*in.poset);
        const bool yes = is_shattered(in.cls, u, method.value_or(closed ? ShatterMethod::kClosure : ShatterMethod::kBrute));
        if (o.format == "json") {
            out << Json{{"set", o.set}, {"shattered", yes}}.dump() << '\n';
        } else {
            out << (yes ? "shattered" : "not shattered") << '\n';
        }
        return kExitOk;
    }
    // Maximal shattered sets.
    Json list = Json::array();
    for (const Face& f : shatter_complex(in.cls).facets()) {
        Subset s;
        for (std::uint32_t v : f) s = s.with(static_cast<int>(v));
        if (o.format == "json") {
            list.push_back(to_bitstring(s, g));
        } else {
            out << to_bitstring(s, g) << '\n';
        }
    }
    if (o.format == "json") out << Json{{"maximal_shattered", list}}.dump() << '\n';
    return kExitOk;
}

int check_complex(const SimplicialComplex& k, const Options& o, std::ostream& out) {
    if (o.want_closed || o.want_acyclic) throw ValidationError("a simplicial complex supports only --cm and --interval-cm");
    const FieldSpec field = resolve_field(o);
    const HomologyProfile h = reduced_homology(k, field);
    const bool cm = is_cohen_macaulay(k, field);
    const bool all = !o.want_interval_cm && !o.want_cm;
    if (o.format == "json") {
        Json report = Json::object();
        if (all) {
            Json dims = Json::array();
            for (int i = -1; i <= h.top_degree(); ++i) dims.push_back(h[i]);
            report["homology"] = dims;
        }
        report["cm"] = cm;
        out << report.dump() << '\n';
    } else {
        if (all) out << "homology: " << h.to_string() << '\n';
        out << "CM: " << (cm ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    if (!o.input.empty() && o.build.empty()) {
        const Json j = read_json_file(o.input);
        if (j.is_object() && j.contains("facets")) return check_complex(complex_from_json(j), o, out);
    }
    const LoadedInput in = load(o);
    const FieldSpec field = resolve_field(o);
    const SubsetPoset p = in.poset ? *in.poset : in.cls.support_poset();
    const bool all = !o.want_interval_cm && !o.want_cm && !o.want_closed && !o.want_acyclic;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    Json report = Json::object();
    std::vector<std::string> lines;
    const bool closed = is_intersection_closed(p);
    if (all || o.want_closed) {
        report["intersection_closed"] = closed;
        lines.push_back(std::string("intersection-closed: ") + yn(closed));
    }
    if (all || o.want_interval_cm || o.want_cm) {
        const bool icm = is_interval_cm(p, field);
        const bool cm = is_cohen_macaulay(order_complex(p), field);
        report["interval_cm"] = icm;
        report["cm"] = cm;
        lines.push_back(std::string("interval-CM: ") + yn(icm) + "; CM: " + yn(cm));
    }
    if (all || o.want_acyclic) {
        if (!closed) throw ValidationError("acyclicity check needs an intersection-closed poset");
        const bool ok = verify_acyclic(cellular_resolution(p), field, o.exhaustive);
        report["acyclic"] = ok;
        lines.push_back(std::string("acyclic: ") + yn(ok));
    }
    if (o.format == "json") {
        out << report.dump() << '\n';
    } else {
        for (const auto& line : lines) out << line << '\n';
    }
    return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out) {
    const LoadedInput in = load(o);
    out << (in.poset ? poset_to_json(*in.poset) : class_to_json(in.cls)).dump() << '\n';
    return kExitOk;
}

int cmd_oracle(const std::string& what, const Options& o, std::ostream& out) {
    const LoadedInput in = load(o);
    if (what == "betti") {
        print_table(out, o, betti_oracle(dual_ideal(in.cls), resolve_field(o)));
    } else if (what == "reg") {
        print_number(out, o, "reg", regularity_oracle(suboplex_ideal(in.cls), resolve_field(o)));
    } else {
        print_number(out, o, "vcdim", vc_oracle(in.cls));
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of Boolean function classes and their dual ideals", "suboplex"};
    app.require_subcommand(1);
    Options o;

    auto* vcdim = app.add_subcommand("vcdim", "VC dimension");
    auto* hdim = app.add_subcommand("hdim", "homological dimension");
    auto* betti = app.add_subcommand("betti", "multigraded Betti numbers of the dual ideal");
    auto* mob = app.add_subcommand("mobius", "Moebius function");
    auto* ext = app.add_subcommand("extentures", "minimal non-extendable partial functions");
    auto* shat = app.add_subcommand("shatter", "shattering test or maximal shattered sets");
    auto* check = app.add_subcommand("check", "structural checks");
    auto* build = app.add_subcommand("build", "print the built poset or class as JSON");
    auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
    for (auto* cmd : {vcdim, hdim, betti, mob, ext, shat, check, build}) add_common(cmd, o);

    mob->add_option("--lower", o.lower, "lower endpoint bitstring");
    mob->add_option("--upper", o.upper, "upper endpoint bitstring");
    shat->add_option("--set", o.set, "bitstring of the set to test");
    check->add_flag("--interval-cm", o.want_interval_cm, "interval Cohen-Macaulay and Cohen-Macaulay");
    check->add_flag("--cm", o.want_cm, "same report as --interval-cm");
    check->add_flag("--intersection-closed", o.want_closed, "closure under intersection");
    check->add_flag("--acyclic", o.want_acyclic, "acyclicity of the labeled order complex");
    check->add_flag("--exhaustive", o.exhaustive, "check every squarefree degree (n <= 6)");

    oracle->require_subcommand(1);
    std::string oracle_what;
    for (const char* name : {"betti", "reg", "vcdim"}) {
        auto* sub = oracle->add_subcommand(name, std::string("oracle ") + name);
        add_common(sub, o);
        sub->callback([&oracle_what, name] { oracle_what = name; });
    }

    std::vector<const char*> argv{"suboplex"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*vcdim) return cmd_vcdim(o, out);
        if (*hdim) return cmd_hdim(o, out, err);
        if (*betti) return cmd_betti(o, out, err);
        if (*mob) return cmd_mobius(o, out);
        if (*ext) return cmd_extentures(o, out);
        if (*shat) return cmd_shatter(o, out);
        if (*check) return cmd_check(o, out);
        if (*build) return cmd_build(o, out);
        if (*oracle) return cmd_oracle(oracle_what, o, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace suboplex
